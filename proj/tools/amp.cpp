#include "amp/cli.hpp"

int main(int argc, char** argv) { return amp::run_cli(argc, argv); }
