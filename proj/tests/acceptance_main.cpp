#include <cstdio>
#include <cstdlib>
#include <exception>

#include "amp/checks.hpp"

// Acceptance runner: with an argument it runs that one criterion, without it
// runs all nine. Exit 0 only if everything that ran passed.
int main(int argc, char** argv) {
    try {
        bool all_pass = true;
        if (argc > 1) {
            char* end = nullptr;
            const long id = std::strtol(argv[1], &end, 10);
            if (end == argv[1] || *end != '\0' || id < 1 || id > amp::criterion_count) {
                std::fprintf(stderr, "usage: acceptance [1-%d]\n", amp::criterion_count);
                return 2;
            }
            const amp::CriterionResult r = amp::run_criterion(static_cast<int>(id));
            std::printf("criterion %d: %s (%s)\n", r.id, r.pass ? "PASS" : "FAIL",
                        r.detail.c_str());
            all_pass = r.pass;
        } else {
            for (const amp::CriterionResult& r : amp::run_all_criteria()) {
                std::printf("criterion %d: %s (%s)\n", r.id, r.pass ? "PASS" : "FAIL",
                            r.detail.c_str());
                all_pass = all_pass && r.pass;
            }
        }
        return all_pass ? 0 : 1;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
