#include "amp/config.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <initializer_list>
#include <vector>

namespace amp {

using nlohmann::json;

namespace {

std::string trimmed(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

bool valid_key(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '-') return false;
    return true;
}

json parse_toml_scalar(const std::string& text, const std::function<void(const std::string&)>& fail) {
    if (text.empty()) fail("missing value");
    if (text.front() == '"') {
        if (text.size() < 2 || text.back() != '"') fail("unterminated string");
        const std::string body = text.substr(1, text.size() - 2);
        if (body.find('"') != std::string::npos) fail("embedded quotes are not supported");
        return body;
    }
    if (text == "true") return true;
    if (text == "false") return false;
    // integer or float
    bool integral = !text.empty();
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if ((c == '+' || c == '-') && i == 0) continue;
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            integral = false;
            break;
        }
    }
    const char* begin = text.c_str();
    char* end = nullptr;
    if (integral) {
        const long long v = std::strtoll(begin, &end, 10);
        if (end == begin + text.size()) return v;
    }
    const double v = std::strtod(begin, &end);
    if (end != begin + text.size()) fail("malformed value '" + text + "'");
    return v;
}

json parse_toml_value(const std::string& text, const std::function<void(const std::string&)>& fail) {
    if (!text.empty() && text.front() == '[') {
        if (text.back() != ']') fail("unterminated array");
        json arr = json::array();
        const std::string body = trimmed(text.substr(1, text.size() - 2));
        if (body.empty()) return arr;
        std::size_t start = 0;
        bool in_str = false;
        for (std::size_t i = 0; i <= body.size(); ++i) {
            if (i < body.size() && body[i] == '"') in_str = !in_str;
            if (i == body.size() || (body[i] == ',' && !in_str)) {
                const std::string item = trimmed(body.substr(start, i - start));
                if (item.empty()) fail("empty array element");
                arr.push_back(parse_toml_scalar(item, fail));
                start = i + 1;
            }
        }
        return arr;
    }
    return parse_toml_scalar(text, fail);
}

}  // namespace

json parse_toml_subset(std::istream& in, const std::string& filename) {
    json root = json::object();
    json* current = &root;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto fail = [&](const std::string& msg) {
            throw ConfigError(filename + ":" + std::to_string(lineno) + ": " + msg);
        };
        std::string s;
        bool in_str = false;
        for (char c : line) {
            if (c == '"') in_str = !in_str;
            if (c == '#' && !in_str) break;
            s += c;
        }
        s = trimmed(s);
        if (s.empty()) continue;

        if (s.front() == '[') {
            if (s.size() >= 2 && s[1] == '[') fail("arrays of tables are not supported");
            if (s.back() != ']') fail("unterminated section header");
            const std::string path = s.substr(1, s.size() - 2);
            current = &root;
            std::size_t start = 0;
            while (true) {
                const std::size_t dot = path.find('.', start);
                const std::string part =
                    trimmed(path.substr(start, dot == std::string::npos ? dot : dot - start));
                if (!valid_key(part)) fail("malformed section name '" + path + "'");
                json& next = (*current)[part];
                if (next.is_null()) next = json::object();
                if (!next.is_object()) fail("section '" + part + "' collides with a value");
                current = &next;
                if (dot == std::string::npos) break;
                start = dot + 1;
            }
            continue;
        }

        const std::size_t eq = s.find('=');
        if (eq == std::string::npos) fail("expected `key = value` or `[section]`");
        const std::string key = trimmed(s.substr(0, eq));
        const std::string value = trimmed(s.substr(eq + 1));
        if (!valid_key(key)) fail("malformed key '" + key + "'");
        if (current->contains(key)) fail("duplicate key '" + key + "'");
        (*current)[key] = parse_toml_value(value, fail);
    }
    return root;
}

json load_config_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open " + path.string());
    if (path.extension() == ".json") {
        try {
            return json::parse(in);
        } catch (const json::parse_error& e) {
            throw ConfigError(path.string() + ": " + e.what());
        }
    }
    return parse_toml_subset(in, path.string());
}

// ---------------------------------------------------------------------------
// Schema
// ---------------------------------------------------------------------------

namespace {

constexpr double mhz = two_pi * 1e6;
constexpr double ghz = two_pi * 1e9;

struct QuantityGroup {
    const char* section;
    const char* quantity;
    std::vector<const char*> spellings;
};

const std::vector<QuantityGroup>& quantity_groups() {
    static const std::vector<QuantityGroup> groups = {
        {"atom", "Gamma10", {"Gamma10", "Gamma10_mhz"}},
        {"atom", "Gamma21", {"Gamma21", "Gamma21_mhz", "Gamma21_over_Gamma10"}},
        {"atom", "Gphi10", {"Gphi10", "Gphi10_mhz"}},
        {"atom", "Gphi21", {"Gphi21", "Gphi21_mhz"}},
        {"atom", "Gphi20", {"Gphi20", "Gphi20_mhz"}},
        {"atom", "omega10", {"omega10_ghz"}},
        {"atom", "alpha", {"alpha_mhz"}},
        {"drive", "Omega_d",
         {"Omega_d", "Omega_d_mhz", "Omega_d_ghz", "Omega_d_over_Gamma10",
          "Omega_d_over_Gamma21"}},
        {"drive", "omega_d", {"omega_d_ghz"}},
        {"drive", "d10", {"d10_mhz", "d10_over_Gamma10"}},
        {"drive", "d20", {"d20_mhz", "d20_over_Gamma10"}},
        {"drive", "dw20", {"dw20_mhz", "dw20_over_Gamma21"}},
        {"probe", "dw10", {"dw10_mhz", "dw10_over_Gamma21"}},
        {"probe", "delta", {"delta", "delta_mhz", "delta_over_Gamma10"}},
        {"probe", "omega_p", {"omega_p_ghz"}},
        {"probe", "Omega_p", {"Omega_p_over_Gamma10"}},
    };
    return groups;
}

const QuantityGroup* find_group(const std::string& section, const std::string& key) {
    for (const QuantityGroup& g : quantity_groups()) {
        if (section != g.section) continue;
        for (const char* sp : g.spellings)
            if (key == sp) return &g;
    }
    return nullptr;
}

double require_number(const json& j, const std::string& where) {
    if (!j.is_number()) throw ConfigError(where + " must be a number");
    return j.get<double>();
}

// Spelling present for a quantity group, or nullptr.
const char* present_spelling(const json& raw, const QuantityGroup& g) {
    const char* found = nullptr;
    if (!raw.contains(g.section)) return nullptr;
    const json& sec = raw.at(g.section);
    for (const char* sp : g.spellings) {
        if (!sec.contains(sp)) continue;
        if (found)
            throw ConfigError(std::string(g.section) + "." + g.quantity +
                              " given in conflicting spellings ('" + found + "' and '" + sp +
                              "')");
        found = sp;
    }
    return found;
}

// Resolves a group whose spellings are absolute frequencies (suffix _mhz,
// _ghz, or bare rad/s). Returns nullopt when absent.
std::optional<double> absolute_freq(const json& raw, const std::string& section,
                                    const std::string& quantity) {
    const QuantityGroup* g = nullptr;
    for (const QuantityGroup& q : quantity_groups())
        if (section == q.section && quantity == q.quantity) g = &q;
    if (!g) throw ConfigError("unknown quantity " + section + "." + quantity);
    const char* sp = present_spelling(raw, *g);
    if (!sp) return std::nullopt;
    const std::string key = sp;
    const double v = require_number(raw.at(section).at(key), section + "." + key);
    if (key.size() > 4 && key.ends_with("_mhz")) return v * mhz;
    if (key.size() > 4 && key.ends_with("_ghz")) return v * ghz;
    if (key.ends_with("_over_Gamma10") || key.ends_with("_over_Gamma21"))
        throw ConfigError(section + "." + key + " is relative; resolve it against the rates");
    return v;
}

struct KnownKeys {
    const char* section;
    std::vector<const char*> keys;
};

void check_known_keys(const json& doc, const std::string& origin) {
    static const std::vector<KnownKeys> known = {
        {"run", {"scheme", "geometry", "path"}},
        {"atom",
         {"levels", "Gamma10", "Gamma10_mhz", "Gamma21", "Gamma21_mhz", "Gamma21_over_Gamma10",
          "Gphi10", "Gphi10_mhz", "Gphi21", "Gphi21_mhz", "Gphi20", "Gphi20_mhz", "omega10_ghz",
          "alpha_mhz"}},
        {"mirror", {"L_mm", "v_m_per_s", "Gamma10_TL_mhz", "Gamma21_TL_mhz"}},
        {"drive",
         {"Omega_d", "Omega_d_mhz", "Omega_d_ghz", "Omega_d_over_Gamma10", "Omega_d_over_Gamma21",
          "omega_d_ghz", "d10_mhz", "d10_over_Gamma10", "d20_mhz", "d20_over_Gamma10", "dw20_mhz",
          "dw20_over_Gamma21"}},
        {"probe",
         {"dw10_mhz", "dw10_over_Gamma21", "delta", "delta_mhz", "delta_over_Gamma10",
          "omega_p_ghz", "Omega_p_over_Gamma10"}},
        {"output", {"path"}},
    };
    if (!doc.is_object()) throw ConfigError(origin + ": config root must be a table");
    for (const auto& [section, value] : doc.items()) {
        if (section == "sweep") continue;  // validated separately
        const auto it = std::find_if(known.begin(), known.end(),
                                     [&](const KnownKeys& k) { return section == k.section; });
        if (it == known.end()) throw ConfigError(origin + ": unknown section [" + section + "]");
        if (!value.is_object())
            throw ConfigError(origin + ": [" + section + "] must be a table");
        for (const auto& [key, _] : value.items())
            if (std::find_if(it->keys.begin(), it->keys.end(),
                             [&](const char* k) { return key == k; }) == it->keys.end())
                throw ConfigError(origin + ": unknown key " + section + "." + key);
    }
}

Scheme parse_scheme(const std::string& s, const std::string& origin) {
    if (s == "ThreeLevelPumped") return Scheme::ThreeLevelPumped;
    if (s == "TwoLevelResonant") return Scheme::TwoLevelResonant;
    if (s == "ThreeLevelTwoPhoton") return Scheme::ThreeLevelTwoPhoton;
    throw ConfigError(origin + ": unknown scheme '" + s + "'");
}

Geometry parse_geometry(const std::string& s, const std::string& origin) {
    if (s == "mirror") return Geometry::MirrorTerminated;
    if (s == "open") return Geometry::OpenWaveguide;
    throw ConfigError(origin + ": geometry must be \"mirror\" or \"open\"");
}

int scheme_levels(Scheme s) { return s == Scheme::TwoLevelResonant ? 2 : 3; }

int level_index(const std::string& label, int dim) {
    if (label == "g") return 0;
    if (label == "e") return dim - 1;
    if (label == "m" && dim == 3) return 1;
    throw ConfigError("unknown dressed level '" + label + "' for a " + std::to_string(dim) +
                      "-level atom");
}

struct BranchLabels {
    std::string mu, nu;
};

std::optional<BranchLabels> parse_branch_objective(const std::string& objective) {
    const std::string prefix = "branch_gain:";
    if (objective.rfind(prefix, 0) != 0) return std::nullopt;
    const std::string rest = objective.substr(prefix.size());
    const std::size_t comma = rest.find(',');
    if (comma == std::string::npos)
        throw ConfigError("branch_gain objective needs two levels, e.g. branch_gain:g,m");
    return BranchLabels{trimmed(rest.substr(0, comma)), trimmed(rest.substr(comma + 1))};
}

void forbid(const json& raw, const std::string& origin, const std::string& section,
            std::initializer_list<const char*> quantities, const std::string& why) {
    if (!raw.contains(section)) return;
    for (const char* q : quantities)
        for (const QuantityGroup& g : quantity_groups())
            if (section == g.section && std::string(q) == g.quantity)
                for (const char* sp : g.spellings)
                    if (raw.at(section).contains(sp))
                        throw ConfigError(origin + ": " + section + "." + sp + " " + why);
}

SweepSpec parse_sweep(const json& sweep, const std::string& origin, std::string& objective) {
    if (!sweep.is_object()) throw ConfigError(origin + ": [sweep] must be a table");
    for (const auto& [key, _] : sweep.items())
        if (key != "objective" && key != "axis1" && key != "axis2")
            throw ConfigError(origin + ": unknown key sweep." + key);
    if (sweep.contains("objective")) {
        if (!sweep.at("objective").is_string())
            throw ConfigError(origin + ": sweep.objective must be a string");
        objective = sweep.at("objective").get<std::string>();
    }
    SweepSpec spec;
    for (const char* name : {"axis1", "axis2"}) {
        if (!sweep.contains(name)) {
            if (std::string(name) == "axis1")
                throw ConfigError(origin + ": [sweep] needs [sweep.axis1]");
            continue;
        }
        const json& ax = sweep.at(name);
        if (!ax.is_object()) throw ConfigError(origin + ": [sweep." + name + "] must be a table");
        for (const auto& [key, _] : ax.items())
            if (std::string(key) != "param" && key != "min" && key != "max" && key != "n")
                throw ConfigError(origin + ": unknown key sweep." + std::string(name) + "." + key);
        Axis axis;
        if (!ax.contains("param") || !ax.at("param").is_string())
            throw ConfigError(origin + ": sweep." + std::string(name) + ".param must be a string");
        axis.param = ax.at("param").get<std::string>();
        for (const char* req : {"min", "max", "n"})
            if (!ax.contains(req))
                throw ConfigError(origin + ": sweep." + std::string(name) + " needs '" + req + "'");
        axis.lo = require_number(ax.at("min"), "sweep." + std::string(name) + ".min");
        axis.hi = require_number(ax.at("max"), "sweep." + std::string(name) + ".max");
        if (!ax.at("n").is_number_integer())
            throw ConfigError(origin + ": sweep." + std::string(name) + ".n must be an integer");
        axis.n = ax.at("n").get<int>();
        spec.axes.push_back(std::move(axis));
    }
    try {
        spec.validate();
    } catch (const std::exception& e) {
        throw ConfigError(origin + ": " + e.what());
    }
    return spec;
}

}  // namespace

RunConfig run_config_from_json(const json& doc, const std::string& origin) {
    check_known_keys(doc, origin);

    RunConfig cfg;
    cfg.raw = doc;
    cfg.raw.erase("sweep");
    cfg.raw.erase("output");

    if (!doc.contains("run") || !doc.at("run").is_object() || !doc.at("run").contains("scheme"))
        throw ConfigError(origin + ": [run] with run.scheme is required");
    const json& run = doc.at("run");
    if (!run.at("scheme").is_string())
        throw ConfigError(origin + ": run.scheme must be a string");
    cfg.scheme = parse_scheme(run.at("scheme").get<std::string>(), origin);
    if (run.contains("geometry")) {
        if (!run.at("geometry").is_string())
            throw ConfigError(origin + ": run.geometry must be a string");
        cfg.geometry = parse_geometry(run.at("geometry").get<std::string>(), origin);
    }
    if (run.contains("path")) {
        const json& p = run.at("path");
        if (!p.is_string() || (p != "full" && p != "first_order"))
            throw ConfigError(origin + ": run.path must be \"full\" or \"first_order\"");
        if (cfg.scheme != Scheme::ThreeLevelPumped)
            throw ConfigError(origin + ": run.path applies only to ThreeLevelPumped");
    }

    // one spelling per quantity in the static config
    for (const QuantityGroup& g : quantity_groups()) present_spelling(cfg.raw, g);

    // objective + sweep
    if (doc.contains("sweep")) cfg.sweep = parse_sweep(doc.at("sweep"), origin, cfg.objective);
    if (const auto branch = parse_branch_objective(cfg.objective)) {
        if (cfg.scheme == Scheme::ThreeLevelPumped)
            throw ConfigError(origin + ": branch_gain needs a strong-drive scheme");
        const int dim = scheme_levels(cfg.scheme);
        if (level_index(branch->mu, dim) == level_index(branch->nu, dim))
            throw ConfigError(origin + ": branch_gain needs two distinct levels");
    } else if (cfg.objective != "abs_reflection" && cfg.objective != "gain_percent") {
        throw ConfigError(origin + ": unknown objective '" + cfg.objective + "'");
    }

    // presence checks run against the tree with sweep-axis keys applied, so
    // scheme-mismatched axis paths fail here rather than mid-sweep
    json effective = cfg.raw;
    if (cfg.sweep)
        for (const Axis& ax : cfg.sweep->axes)
            apply_parameter(effective, ax.param, 0.5 * (ax.lo + ax.hi));

    if (effective.contains("atom") && effective.at("atom").contains("levels")) {
        const json& lv = effective.at("atom").at("levels");
        if (!lv.is_number_integer() || lv.get<int>() != scheme_levels(cfg.scheme))
            throw ConfigError(origin + ": atom.levels contradicts the scheme");
    }
    if (cfg.scheme == Scheme::TwoLevelResonant) {
        forbid(effective, origin, "atom", {"Gamma21", "Gphi21", "Gphi20", "alpha"},
               "is not a two-level quantity");
        forbid(effective, origin, "drive", {"d10", "d20", "dw20"},
               "is fixed by the resonant-drive frame");
        forbid(effective, origin, "probe", {"dw10", "Omega_p"},
               "does not apply to the resonantly driven scheme (use probe.delta)");
    } else if (cfg.scheme == Scheme::ThreeLevelPumped) {
        forbid(effective, origin, "drive", {"d10", "d20", "omega_d"},
               "belongs to the two-photon drive frame");
        forbid(effective, origin, "probe", {"delta", "omega_p"},
               "belongs to the strong-drive schemes (use probe.dw10)");
    } else {
        forbid(effective, origin, "drive", {"dw20"}, "belongs to the pumped scheme");
        forbid(effective, origin, "probe", {"dw10", "Omega_p"}, "belongs to the pumped scheme");
    }

    if (effective.contains("mirror")) {
        if (cfg.geometry == Geometry::OpenWaveguide)
            throw ConfigError(origin +
                              ": [mirror] requires geometry = \"mirror\"; an open waveguide keeps "
                              "the bare rates");
        for (const char* req : {"L_mm", "v_m_per_s", "Gamma10_TL_mhz", "Gamma21_TL_mhz"})
            if (!effective.at("mirror").contains(req))
                throw ConfigError(origin + ": [mirror] needs mirror." + std::string(req));
        forbid(effective, origin, "atom", {"Gamma10", "Gamma21"},
               "is derived from omega10 when [mirror] is present");
        if (!effective.contains("atom") || !effective.at("atom").contains("omega10_ghz"))
            throw ConfigError(origin + ": [mirror] needs atom.omega10_ghz");
    }
    if (effective.contains("probe") && effective.at("probe").contains("omega_p_ghz")) {
        if (!effective.contains("drive") || !effective.at("drive").contains("omega_d_ghz"))
            throw ConfigError(origin + ": probe.omega_p_ghz needs drive.omega_d_ghz");
        for (const char* sp : {"delta", "delta_mhz", "delta_over_Gamma10"})
            if (effective.at("probe").contains(sp))
                throw ConfigError(origin + ": probe.omega_p_ghz conflicts with probe." +
                                  std::string(sp));
    }
    if (effective.contains("drive") &&
        (effective.at("drive").contains("d10_mhz") ||
         effective.at("drive").contains("d10_over_Gamma10")) &&
        effective.contains("atom") && effective.at("atom").contains("omega10_ghz") &&
        effective.at("drive").contains("omega_d_ghz"))
        throw ConfigError(origin + ": drive.d10 given both directly and via omega10/omega_d");

    if (doc.contains("output")) {
        const json& out = doc.at("output");
        if (out.contains("path")) {
            if (!out.at("path").is_string())
                throw ConfigError(origin + ": output.path must be a string");
            cfg.output_path = out.at("path").get<std::string>();
        }
    }

    // fail early on unresolvable configs
    try {
        resolve_point(cfg, effective);
    } catch (const ConfigError&) {
        throw;
    } catch (const std::exception& e) {
        throw ConfigError(origin + ": " + e.what());
    }
    return cfg;
}

RunConfig load_run_config(const std::filesystem::path& path) {
    return run_config_from_json(load_config_file(path), path.string());
}

void apply_parameter(json& raw, const std::string& path, double value) {
    const std::size_t dot = path.find('.');
    if (dot == std::string::npos)
        throw ConfigError("unresolvable parameter path '" + path + "' (expected section.key)");
    const std::string section = path.substr(0, dot);
    const std::string key = path.substr(dot + 1);
    const QuantityGroup* g = find_group(section, key);
    if (!g) throw ConfigError("unresolvable parameter path '" + path + "'");
    if (raw.contains(section))
        for (const char* sp : g->spellings) raw[section].erase(sp);
    raw[section][key] = value;
}

ResolvedPoint resolve_point(const RunConfig& cfg, const json& raw) {
    ResolvedPoint pt;
    pt.atom.n_levels = scheme_levels(cfg.scheme);

    const auto section = [&](const char* name) -> const json& {
        static const json empty = json::object();
        return raw.contains(name) ? raw.at(name) : empty;
    };
    const json& atom = section("atom");
    const json& drive = section("drive");
    const json& probe = section("probe");

    // --- rates ---
    if (raw.contains("mirror")) {
        const json& m = raw.at("mirror");
        MirrorSetup setup;
        setup.L = require_number(m.at("L_mm"), "mirror.L_mm") * 1e-3;
        setup.v = require_number(m.at("v_m_per_s"), "mirror.v_m_per_s");
        setup.Gamma10_TL = require_number(m.at("Gamma10_TL_mhz"), "mirror.Gamma10_TL_mhz") * mhz;
        setup.Gamma21_TL = require_number(m.at("Gamma21_TL_mhz"), "mirror.Gamma21_TL_mhz") * mhz;
        const auto omega10 = absolute_freq(raw, "atom", "omega10");
        if (!omega10) throw ConfigError("[mirror] needs atom.omega10_ghz");
        const auto alpha = absolute_freq(raw, "atom", "alpha");
        if (pt.atom.n_levels == 3 && !alpha) throw ConfigError("[mirror] needs atom.alpha_mhz");
        const MirrorRates rates =
            rates_at(setup, Geometry::MirrorTerminated, *omega10, alpha.value_or(0.0));
        pt.atom.Gamma10 = rates.Gamma10;
        if (pt.atom.n_levels == 3) pt.atom.Gamma21 = rates.Gamma21;
        pt.atom.omega10 = *omega10;
        if (alpha && pt.atom.n_levels == 3) pt.atom.alpha = *alpha;
    } else {
        const auto g10 = absolute_freq(raw, "atom", "Gamma10");
        if (!g10) throw ConfigError("atom.Gamma10 (or atom.Gamma10_mhz) is required");
        pt.atom.Gamma10 = *g10;
        if (pt.atom.n_levels == 3) {
            if (atom.contains("Gamma21_over_Gamma10"))
                pt.atom.Gamma21 =
                    require_number(atom.at("Gamma21_over_Gamma10"), "atom.Gamma21_over_Gamma10") *
                    pt.atom.Gamma10;
            else if (const auto g21 = absolute_freq(raw, "atom", "Gamma21"))
                pt.atom.Gamma21 = *g21;
            else
                throw ConfigError("atom.Gamma21 (or a relative spelling) is required");
        }
        if (const auto omega10 = absolute_freq(raw, "atom", "omega10")) pt.atom.omega10 = *omega10;
        if (pt.atom.n_levels == 3)
            if (const auto alpha = absolute_freq(raw, "atom", "alpha")) pt.atom.alpha = *alpha;
    }
    pt.atom.Gphi10 = absolute_freq(raw, "atom", "Gphi10").value_or(0.0);
    if (pt.atom.n_levels == 3) {
        pt.atom.Gphi21 = absolute_freq(raw, "atom", "Gphi21").value_or(0.0);
        pt.atom.Gphi20 = absolute_freq(raw, "atom", "Gphi20").value_or(0.0);
    }
    pt.atom.validate();

    // --- drive ---
    if (drive.contains("Omega_d_over_Gamma10"))
        pt.Omega_d = require_number(drive.at("Omega_d_over_Gamma10"), "drive.Omega_d_over_Gamma10") *
                     pt.atom.Gamma10;
    else if (drive.contains("Omega_d_over_Gamma21")) {
        if (pt.atom.n_levels != 3)
            throw ConfigError("drive.Omega_d_over_Gamma21 needs a three-level atom");
        pt.Omega_d = require_number(drive.at("Omega_d_over_Gamma21"), "drive.Omega_d_over_Gamma21") *
                     *pt.atom.Gamma21;
    } else {
        pt.Omega_d = absolute_freq(raw, "drive", "Omega_d").value_or(0.0);
    }
    if (const auto od = absolute_freq(raw, "drive", "omega_d")) pt.omega_d = *od;

    if (cfg.scheme == Scheme::ThreeLevelTwoPhoton) {
        if (drive.contains("d10_over_Gamma10"))
            pt.d10 = require_number(drive.at("d10_over_Gamma10"), "drive.d10_over_Gamma10") *
                     pt.atom.Gamma10;
        else if (const auto d10 = absolute_freq(raw, "drive", "d10"))
            pt.d10 = *d10;
        else if (pt.atom.omega10 && drive.contains("omega_d_ghz"))
            pt.d10 = *pt.atom.omega10 - pt.omega_d;
        else
            throw ConfigError(
                "two-photon scheme needs drive.d10 (or atom.omega10_ghz with drive.omega_d_ghz)");
        if (drive.contains("d20_over_Gamma10"))
            pt.d20 = require_number(drive.at("d20_over_Gamma10"), "drive.d20_over_Gamma10") *
                     pt.atom.Gamma10;
        else
            pt.d20 = absolute_freq(raw, "drive", "d20").value_or(0.0);
    }
    if (cfg.scheme == Scheme::ThreeLevelPumped) {
        if (drive.contains("dw20_over_Gamma21"))
            pt.dw20 = require_number(drive.at("dw20_over_Gamma21"), "drive.dw20_over_Gamma21") *
                      *pt.atom.Gamma21;
        else
            pt.dw20 = absolute_freq(raw, "drive", "dw20").value_or(0.0);
    }

    // --- probe ---
    if (cfg.scheme == Scheme::ThreeLevelPumped) {
        if (probe.contains("dw10_over_Gamma21"))
            pt.dw10 = require_number(probe.at("dw10_over_Gamma21"), "probe.dw10_over_Gamma21") *
                      *pt.atom.Gamma21;
        else
            pt.dw10 = absolute_freq(raw, "probe", "dw10").value_or(0.0);
        if (probe.contains("Omega_p_over_Gamma10"))
            pt.Omega_p = require_number(probe.at("Omega_p_over_Gamma10"),
                                        "probe.Omega_p_over_Gamma10") *
                         pt.atom.Gamma10;
    } else {
        if (probe.contains("omega_p_ghz")) {
            if (!drive.contains("omega_d_ghz"))
                throw ConfigError("probe.omega_p_ghz needs drive.omega_d_ghz");
            pt.delta = require_number(probe.at("omega_p_ghz"), "probe.omega_p_ghz") * ghz -
                       pt.omega_d;
        } else if (probe.contains("delta_over_Gamma10")) {
            pt.delta = require_number(probe.at("delta_over_Gamma10"), "probe.delta_over_Gamma10") *
                       pt.atom.Gamma10;
        } else {
            pt.delta = absolute_freq(raw, "probe", "delta").value_or(0.0);
        }
    }

    if (raw.contains("run") && raw.at("run").contains("path") &&
        raw.at("run").at("path") == "first_order")
        pt.path = CoherencePath::FirstOrder;

    return pt;
}

double evaluate_objective(const RunConfig& cfg, const ResolvedPoint& pt) {
    const auto branch = parse_branch_objective(cfg.objective);

    if (cfg.scheme == Scheme::ThreeLevelPumped) {
        if (branch) throw ConfigError("branch_gain needs a strong-drive scheme");
        cxd r;
        if (pt.Omega_d == 0.0) {
            // undriven limit: the atom sits in its ground state and the probe
            // sees a plain (mirror-enhanced) absorber
            const double f = cfg.geometry == Geometry::MirrorTerminated ? 2.0 : 1.0;
            const Dephasings g = total_dephasings(pt.atom);
            r = 1.0 - f * pt.atom.Gamma10 / (2.0 * cxd(g.gamma10, pt.dw10));
        } else {
            DriveProbe d;
            d.Omega_d = pt.Omega_d;
            d.Omega_p = pt.Omega_p;
            d.dw10 = pt.dw10;
            d.dw20 = pt.dw20;
            r = reflection_3lvl(pt.atom, d, cfg.geometry, pt.path);
        }
        return cfg.objective == "gain_percent" ? 100.0 * (std::abs(r) - 1.0) : std::abs(r);
    }

    const StrongDrive drv{pt.Omega_d, pt.d10, pt.d20};
    if (branch) {
        const DressedSystem ds = dress(pt.atom, drv, cfg.scheme, cfg.geometry);
        const Superoperators so = superoperators(ds);
        const VecX sS = steady_state_dressed(so);
        const int mu = level_index(branch->mu, ds.dim);
        const int nu = level_index(branch->nu, ds.dim);
        return 100.0 * resonant_branch_gain(ds, so, sS, mu, nu);
    }
    const cxd r = reflection_strong(pt.atom, drv, cfg.scheme, cfg.geometry, pt.delta);
    return cfg.objective == "gain_percent" ? 100.0 * (std::abs(r) - 1.0) : std::abs(r);
}

double evaluate_objective(const RunConfig& cfg) {
    return evaluate_objective(cfg, resolve_point(cfg));
}

Objective bind_objective(const RunConfig& cfg) {
    if (!cfg.sweep) throw ConfigError("config has no [sweep] section");
    return [cfg](const std::vector<double>& x) {
        json raw = cfg.raw;
        const auto& axes = cfg.sweep->axes;
        // atom paths first so relative drive/probe spellings see updated rates
        for (int pass = 0; pass < 2; ++pass)
            for (std::size_t i = 0; i < axes.size(); ++i) {
                const bool is_atom = axes[i].param.rfind("atom.", 0) == 0;
                if (is_atom == (pass == 0)) apply_parameter(raw, axes[i].param, x[i]);
            }
        return evaluate_objective(cfg, resolve_point(cfg, raw));
    };
}

SweepOutcome run_config_sweep(const RunConfig& cfg) {
    if (!cfg.sweep) throw ConfigError("config has no [sweep] section");
    const Objective f = bind_objective(cfg);
    SweepOutcome out;
    out.grid = run_sweep(*cfg.sweep, f);
    out.refined = refine_max(out.grid, f);
    return out;
}

}  // namespace amp
