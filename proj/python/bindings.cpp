// Thin Python bindings: polynomials and codes cross the boundary as text.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gqc4/codespec.hpp"
#include "gqc4/dual.hpp"
#include "gqc4/error.hpp"
#include "gqc4/gray.hpp"
#include "gqc4/polytext.hpp"
#include "gqc4/search.hpp"
#include "gqc4/verify.hpp"

namespace py = pybind11;
using namespace gqc4;

namespace {

GqcCode make_code(const std::vector<int>& lengths, const std::vector<std::vector<std::string>>& gens) {
    BlockLengths L(lengths);
    GqcCode code{L, {}};
    for (const auto& g : gens) {
        if (static_cast<int>(g.size()) != L.index()) throw ArgumentError("generator needs one block per length");
        std::vector<QuadPoly> blocks;
        for (const auto& s : g) blocks.push_back(parse_quad(s));
        code.generators.push_back(make_element(L, blocks));
    }
    return code;
}

std::vector<std::string> blocks_of(const ModuleElement& e) {
    std::vector<std::string> out;
    for (const auto& b : e.blocks) out.push_back(b.to_string());
    return out;
}

py::dict check_dict(const CheckResult& c) {
    py::dict d;
    d["name"] = c.name;
    d["status"] = !c.applicable ? "n/a" : (c.passed ? "pass" : "fail");
    d["detail"] = c.detail;
    return d;
}

}  // namespace

PYBIND11_MODULE(_gqc4, m) {
    m.doc() = "GQC codes over Z4";

    auto base = py::register_exception<Error>(m, "Error");
    py::register_exception<ParseError>(m, "ParseError", base.ptr());
    py::register_exception<ArgumentError>(m, "ArgumentError", base.ptr());
    py::register_exception<HypothesisError>(m, "HypothesisError", base.ptr());
    py::register_exception<CapExceededError>(m, "CapExceededError", base.ptr());
    py::register_exception<DivisionError>(m, "DivisionError", base.ptr());

    py::class_<QuadPoly>(m, "QuadPoly")
        .def(py::init([](const std::string& s) { return parse_quad(s); }))
        .def_property_readonly("degree", &QuadPoly::degree)
        .def_property_readonly("coeffs", [](const QuadPoly& p) {
            return std::vector<int>(p.coeffs().begin(), p.coeffs().end());
        })
        .def("__str__", &QuadPoly::to_string)
        .def("__repr__", [](const QuadPoly& p) { return "QuadPoly('" + p.to_string() + "')"; })
        .def("__eq__", [](const QuadPoly& a, const QuadPoly& b) { return a == b; })
        .def("__add__", [](const QuadPoly& a, const QuadPoly& b) { return a + b; })
        .def("__sub__", [](const QuadPoly& a, const QuadPoly& b) { return a - b; })
        .def("__mul__", [](const QuadPoly& a, const QuadPoly& b) { return a * b; })
        .def("mod_xn1", &QuadPoly::mod_xn1);

    m.def("factor_xn1", &factor_xn1_z4, py::arg("n"), "Basic irreducible factors of x^n - 1 over Z4 (n odd).");
    m.def("hensel_lift", [](const std::string& t, int n) { return hensel_lift(parse_bin(t), n); }, py::arg("t"),
          py::arg("n"));
    m.def("gcd4", &gcd4);
    m.def("poly_divmod", [](const QuadPoly& f, const QuadPoly& d) {
        auto r = quad_divmod(f, d);
        return py::make_tuple(r.quotient, r.remainder);
    });

    py::class_<GqcCode>(m, "Code")
        .def(py::init(&make_code), py::arg("lengths"), py::arg("generators"))
        .def_static("from_json", [](const std::string& text) { return parse_code_spec(text).code; })
        .def_static("load", [](const std::string& path) { return load_code_spec(path).code; })
        .def_property_readonly("lengths", [](const GqcCode& c) { return c.lengths.values(); })
        .def_property_readonly("generators", [](const GqcCode& c) {
            std::vector<std::vector<std::string>> out;
            for (const auto& g : c.generators) out.push_back(blocks_of(g));
            return out;
        })
        .def("__repr__", [](const GqcCode& c) {
            return "Code(" + c.lengths.to_string() + ", '" + describe_generators(c) + "')";
        })
        .def("type", [](const GqcCode& c) {
            auto t = cardinality(c);
            return py::make_tuple(t.k1, t.k2);
        })
        .def("normalize", [](const GqcCode& c) {
            const auto ngs = normalize(c);
            py::list rows;
            for (int i = 0; i < ngs.lengths.index(); ++i) {
                py::dict r;
                r["row"] = blocks_of(ngs.rows[i]);
                r["f"] = ngs.f[i].to_string();
                r["g"] = ngs.g[i].to_string();
                rows.append(r);
            }
            return rows;
        })
        .def("normalized", [](const GqcCode& c) { return as_code(normalize(c)); })
        .def("min_lee_distance",
             [](const GqcCode& c, std::uint64_t cap, int workers) {
                 py::gil_scoped_release release;
                 return min_lee_distance(c, {cap, workers});
             },
             py::arg("cap") = std::uint64_t{1} << 24, py::arg("workers") = 0)
        .def("is_linear_image", &is_linear_image)
        .def("dual", [](const GqcCode& c) { return dual_oracle(c); })
        .def("dual_closed_form", [](const GqcCode& c) {
            const auto cf = dual_closed_form(c);
            py::dict d;
            d["status"] = to_string(cf.status);
            std::vector<std::vector<std::string>> rows;
            for (const auto& r : cf.rows) rows.push_back(blocks_of(r));
            d["rows"] = rows;
            d["notes"] = cf.notes;
            return d;
        })
        .def("contains", [](const GqcCode& c, const std::vector<std::string>& blocks) {
            std::vector<QuadPoly> b;
            for (const auto& s : blocks) b.push_back(parse_quad(s));
            return membership(normalize(c), make_element(c.lengths, b));
        })
        .def("codewords", [](const GqcCode& c, std::uint64_t cap) {
            std::vector<std::vector<int>> out;
            for_each_codeword(c, [&](const Z4Vector& v) { out.emplace_back(v.begin(), v.end()); }, cap);
            return out;
        }, py::arg("cap") = std::uint64_t{1} << 16);

    m.def("verify", [](const std::string& spec_json, std::uint64_t seed) {
        VerifyOptions opt;
        opt.seed = seed;
        py::list out;
        for (const auto& c : verify_code(parse_code_spec(spec_json), opt)) out.append(check_dict(c));
        return out;
    }, py::arg("spec_json"), py::arg("seed") = 1);

    m.def("gray_map", [](const std::vector<int>& v) {
        Z4Vector z(v.begin(), v.end());
        for (auto& x : z) x &= 3u;
        auto w = gray_map(z);
        return std::vector<int>(w.begin(), w.end());
    });
    m.def("lee_weight", [](const std::vector<int>& v) {
        Z4Vector z(v.begin(), v.end());
        for (auto& x : z) x &= 3u;
        return lee_weight(z);
    });

    m.def("search", [](const std::vector<int>& lengths, const std::string& mode, int samples, std::uint64_t seed,
                       std::uint64_t cap, int workers, const std::string& fmt, bool all) {
        SearchConfig cfg;
        cfg.lengths = lengths;
        if (mode != "diagonal" && mode != "sampled") throw ArgumentError("mode must be diagonal or sampled");
        cfg.mode = mode == "sampled" ? SearchConfig::Mode::sampled : SearchConfig::Mode::diagonal;
        cfg.samples = samples;
        cfg.seed = seed;
        cfg.cap = cap;
        cfg.workers = workers;
        std::vector<ResultRecord> rows;
        {
            py::gil_scoped_release release;
            auto recs = evaluate_all(search_candidates(cfg), cfg);
            rows = all ? recs : best_table(recs);
        }
        if (fmt == "csv") return format_csv(rows);
        if (fmt == "table") return format_table(rows);
        if (fmt == "json") return format_json(rows);
        throw ArgumentError("format must be csv, table or json");
    }, py::arg("lengths"), py::arg("mode") = "diagonal", py::arg("samples") = 0, py::arg("seed") = 1,
       py::arg("cap") = std::uint64_t{1} << 24, py::arg("workers") = 0, py::arg("format") = "json",
       py::arg("all") = false);
}
