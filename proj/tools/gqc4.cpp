// gqc4 command-line tool: normalize | dual | distance | verify | search.
//
// Exit status: 0 success, 1 a check failed (or the library rejected the
// input), 2 usage or parse error.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "gqc4/codespec.hpp"
#include "gqc4/dual.hpp"
#include "gqc4/error.hpp"
#include "gqc4/gray.hpp"
#include "gqc4/search.hpp"
#include "gqc4/verify.hpp"
#include "json.hpp"

using namespace gqc4;
using ojson = nlohmann::ordered_json;

namespace {

constexpr int kOk = 0, kCheckFailed = 1, kUsage = 2;

ojson element_json(const ModuleElement& e) {
    ojson a = ojson::array();
    for (const auto& b : e.blocks) a.push_back(b.to_string());
    return a;
}

ojson checks_json(const std::vector<CheckResult>& checks) {
    ojson a = ojson::array();
    for (const auto& c : checks)
        a.push_back({{"name", c.name},
                     {"status", !c.applicable ? "n/a" : (c.passed ? "pass" : "fail")},
                     {"detail", c.detail}});
    return a;
}

void print_checks(std::ostream& os, const std::vector<CheckResult>& checks) {
    for (const auto& c : checks) {
        os << "  " << (!c.applicable ? "n/a " : (c.passed ? "pass" : "FAIL")) << "  " << c.name;
        if (!c.detail.empty()) os << " — " << c.detail;
        os << "\n";
    }
}

int cmd_normalize(const std::string& path, bool as_json) {
    const CodeSpec spec = load_code_spec(path);
    const NormalizedGenSet ngs = normalize(spec.code);
    const ModuleType t = cardinality(ngs);
    if (as_json) {
        ojson out;
        out["block_lengths"] = ngs.lengths.values();
        out["k1"] = t.k1;
        out["k2"] = t.k2;
        ojson rows = ojson::array();
        for (int i = 0; i < ngs.lengths.index(); ++i)
            rows.push_back({{"row", element_json(ngs.rows[i])},
                            {"f", ngs.f[i].to_string()},
                            {"g", ngs.g[i].to_string()},
                            {"t", ngs.t(i)},
                            {"k", ngs.k(i)}});
        out["rows"] = rows;
        out["diagnostics"] = ngs.diagnostics;
        std::cout << out.dump(2) << "\n";
        return kOk;
    }
    std::cout << "block lengths: " << ngs.lengths.to_string() << "\n";
    std::cout << "type: 4^" << t.k1 << " 2^" << t.k2 << "  (|C| = 2^" << t.log2_size() << ")\n";
    for (int i = 0; i < ngs.lengths.index(); ++i) {
        std::cout << "a" << i + 1 << " = " << to_string(ngs.rows[i]) << "\n";
        std::cout << "    f = " << ngs.f[i].to_string() << ", g = " << ngs.g[i].to_string() << ", t = " << ngs.t(i)
                  << ", k = " << ngs.k(i) << "\n";
    }
    for (const auto& d : ngs.diagnostics) std::cout << "note: " << d << "\n";
    return kOk;
}

int cmd_dual(const std::string& path, bool as_json) {
    const CodeSpec spec = load_code_spec(path);
    const DualReport rep = dual_report(spec.code);
    const bool failed = !all_passed(rep.checks) || rep.closed_form.status == ClosedFormStatus::mismatch;
    if (as_json) {
        ojson out;
        out["block_lengths"] = spec.code.lengths.values();
        const ModuleType dt = cardinality(rep.oracle);
        out["dual"] = {{"k1", dt.k1}, {"k2", dt.k2}};
        ojson rows = ojson::array();
        for (const auto& r : rep.oracle.rows) rows.push_back(element_json(r));
        out["dual"]["rows"] = rows;
        ojson cf;
        cf["status"] = to_string(rep.closed_form.status);
        ojson cfrows = ojson::array();
        for (std::size_t i = 0; i < rep.closed_form.rows.size(); ++i)
            cfrows.push_back({{"row", element_json(rep.closed_form.rows[i])}, {"status", to_string(rep.closed_form.row_status[i])}});
        cf["rows"] = cfrows;
        cf["notes"] = rep.closed_form.notes;
        cf["matches_oracle"] = rep.spans_match;
        out["closed_form"] = cf;
        out["checks"] = checks_json(rep.checks);
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << rep.to_text();
    }
    return failed ? kCheckFailed : kOk;
}

int cmd_distance(const std::string& path, bool as_json, std::uint64_t cap, int workers) {
    const CodeSpec spec = load_code_spec(path);
    const ModuleType t = cardinality(spec.code);
    const int d = min_lee_distance(spec.code, {cap, workers});
    const bool lin = is_linear_image(spec.code);
    const int n = spec.code.lengths.total();
    if (as_json) {
        ojson out{{"n", n}, {"k1", t.k1}, {"k2", t.k2}, {"dL", d}, {"N2", 2 * n}, {"log2size", t.log2_size()}, {"dH", d}, {"linear", lin}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "n = " << n << ", type 4^" << t.k1 << " 2^" << t.k2 << "\n";
        std::cout << "minimum Lee distance: " << d << "\n";
        std::cout << "Gray image: (" << 2 * n << ", 2^" << t.log2_size() << ", " << d << ") binary code, "
                  << (lin ? "linear" : "nonlinear") << "\n";
    }
    return kOk;
}

int cmd_verify(const std::string& path, bool as_json, std::uint64_t seed) {
    const CodeSpec spec = load_code_spec(path);
    VerifyOptions opt;
    opt.seed = seed;
    const auto checks = verify_code(spec, opt);
    const bool ok = all_passed(checks);
    if (as_json) {
        ojson out{{"passed", ok}, {"checks", checks_json(checks)}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "verify " << path << ": " << (ok ? "all checks passed" : "CHECK FAILURES") << "\n";
        print_checks(std::cout, checks);
    }
    return ok ? kOk : kCheckFailed;
}

std::vector<int> parse_lengths(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw ParseError("--lengths: \"" + item + "\" is not an integer");
        }
    }
    return out;
}

int cmd_search(const SearchConfig& cfg, const std::string& format, const std::string& out_path, bool all) {
    auto records = evaluate_all(search_candidates(cfg), cfg);
    const auto rows = all ? records : best_table(records);
    std::string text;
    if (format == "csv")
        text = format_csv(rows);
    else if (format == "json")
        text = format_json(rows);
    else
        text = format_table(rows);
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(out_path, std::ios::binary);
        if (!f) throw ParseError("cannot write " + out_path);
        f << text;
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Generalized quasi-cyclic codes over Z4"};
    app.require_subcommand(1);

    std::string spec_path;
    bool as_json = false;
    std::uint64_t cap = std::uint64_t{1} << 24;
    std::uint64_t seed = 1;
    int workers = 0;

    auto* norm = app.add_subcommand("normalize", "Normalized generating set of a code");
    auto* dual = app.add_subcommand("dual", "Dual code: oracle, closed form and its consistency checks");
    auto* dist = app.add_subcommand("distance", "Minimum Lee distance and Gray image parameters");
    auto* ver = app.add_subcommand("verify", "Run the invariant suite on a code");
    for (auto* sc : {norm, dual, dist, ver}) {
        sc->add_option("spec", spec_path, "JSON spec file")->required();
        sc->add_flag("--json", as_json, "Machine-readable output");
    }
    dist->add_option("--cap", cap, "Refuse codes with more codewords");
    dist->add_option("--workers", workers, "Threads (0 = all cores)");
    ver->add_option("--seed", seed, "Seed for sampled checks");

    auto* search = app.add_subcommand("search", "Search diagonal / sampled GQC codes");
    std::string lengths_text, mode = "diagonal", format = "table", out_path;
    SearchConfig cfg;
    bool all = false;
    search->add_option("--lengths", lengths_text, "Block lengths, e.g. 3,7,7")->required();
    search->add_option("--mode", mode, "diagonal | sampled")->check(CLI::IsMember({"diagonal", "sampled"}));
    search->add_option("--samples", cfg.samples, "Random triangular codes (sampled mode)")->check(CLI::NonNegativeNumber);
    search->add_option("--cap", cfg.cap, "Skip candidates with more codewords");
    search->add_option("--seed", cfg.seed, "Sampling seed");
    search->add_option("--workers", cfg.workers, "Threads (0 = all cores)");
    search->add_option("--format", format, "table | csv | json")->check(CLI::IsMember({"table", "csv", "json"}));
    search->add_option("--out", out_path, "Write to file instead of stdout");
    search->add_flag("--all", all, "List every candidate instead of the best-per-type table");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*norm) return cmd_normalize(spec_path, as_json);
        if (*dual) return cmd_dual(spec_path, as_json);
        if (*dist) return cmd_distance(spec_path, as_json, cap, workers);
        if (*ver) return cmd_verify(spec_path, as_json, seed);
        if (*search) {
            cfg.lengths = parse_lengths(lengths_text);
            cfg.mode = mode == "sampled" ? SearchConfig::Mode::sampled : SearchConfig::Mode::diagonal;
            BlockLengths check_lengths(cfg.lengths);
            return cmd_search(cfg, format, out_path, all);
        }
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const ArgumentError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return *search ? kUsage : kCheckFailed;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kCheckFailed;
    }
    return kUsage;
}
