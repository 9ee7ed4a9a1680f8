#include "gqc4/verify.hpp"

#include <random>

#include "gqc4/error.hpp"
#include "gqc4/gray.hpp"

namespace gqc4 {

namespace {

CheckResult check(std::string name, bool ok, std::string detail = {}) { return {std::move(name), true, ok, std::move(detail)}; }

CheckResult skip(std::string name, std::string why) { return {std::move(name), false, false, std::move(why)}; }

bool orthogonal_to_shifts(const ModuleElement& d, ModuleElement c, const BlockLengths& L) {
    const auto dv = to_vector(d, L);
    for (long u = 0; u < L.lcm(); ++u, c = cyclic_shift(c, L))
        if (dot(dv, to_vector(c, L)) != 0) return false;
    return true;
}

std::string type_text(const ModuleType& t) { return "4^" + std::to_string(t.k1) + " 2^" + std::to_string(t.k2); }

}  // namespace

std::vector<CheckResult> verify_code(const CodeSpec& spec, const VerifyOptions& opt) {
    const GqcCode& code = spec.code;
    const BlockLengths& L = code.lengths;
    std::vector<CheckResult> out;

    const Z4Matrix shifts = shift_span_matrix(code);
    const NormalizedGenSet ngs = normalize(code);
    const ModuleType type = cardinality(ngs);

    // Span preserved: the normalized rows and every generator shift agree.
    {
        const RowSpace span(shifts);
        bool ok = span.type().k1 == type.k1 && span.type().k2 == type.k2;
        for (const auto& r : ngs.rows) ok = ok && span.contains(to_vector(r, L));
        for (const auto& g : code.generators) {
            ModuleElement c = g;
            for (long u = 0; u < L.lcm() && ok; ++u, c = cyclic_shift(c, L)) ok = membership(ngs, c);
        }
        out.push_back(check("normalize preserves span and shift closure", ok, type_text(type)));
    }
    {
        const auto problems = check_normalized(ngs);
        out.push_back(check("normalized set structure", problems.empty(), problems.empty() ? "" : problems.front()));
        std::vector<std::string> exempt;
        const auto chain = degree_chain_violations(ngs, &exempt);
        out.push_back(check("degree chain", chain.empty(),
                            chain.empty() ? std::to_string(exempt.size()) + " non-monic exemption(s)" : chain.front()));
    }
    {
        const MinGenSet mgs = min_gen_set(ngs);
        const auto elems = mgs.elements();
        const Z4Matrix G = generator_matrix(mgs, L);
        const std::uint64_t size = span_size(G);
        bool ok = span_size(shifts) == size && module_type(G).k1 == type.k1 && module_type(G).k2 == type.k2;
        out.push_back(check("min gen set cardinality", ok, type_text(type)));
        bool minimal = true;
        for (std::size_t drop = 0; drop < elems.size() && minimal; ++drop) {
            Z4Matrix rest(0, L.total());
            for (std::size_t j = 0; j < elems.size(); ++j)
                if (j != drop) rest.append_row(to_vector(elems[j], L));
            minimal = span_size(rest) < size;
        }
        out.push_back(check("min gen set minimality", minimal, std::to_string(elems.size()) + " elements"));
    }
    {
        std::mt19937_64 rng(opt.seed);
        bool ok = true;
        const auto& gens = code.generators;
        const auto du = dual_oracle(code).generators;
        for (int s = 0; s < opt.orthogonality_samples && ok; ++s) {
            Z4Vector dv(static_cast<std::size_t>(L.total()));
            for (auto& x : dv) x = static_cast<std::uint8_t>(rng() & 3u);
            const ModuleElement d = from_vector(dv, L);
            ModuleElement c = gens[rng() % gens.size()];
            if (rng() & 1u) {
                // Sometimes test a genuine dual word.
                const ModuleElement e = du[rng() % du.size()];
                ok = is_orthogonal(e, c, L) == orthogonal_to_shifts(e, c, L);
            }
            ok = ok && is_orthogonal(d, c, L) == orthogonal_to_shifts(d, c, L);
        }
        out.push_back(check("conj product vs shift orthogonality (sampled)", ok, std::to_string(opt.orthogonality_samples) + " samples"));
    }
    const GqcCode dual = dual_oracle(code);
    const ModuleType dtype = cardinality(dual);
    out.push_back(check("size duality |C||C^perp| = 4^n", type.log2_size() + dtype.log2_size() == 2 * L.total(),
                        "dual " + type_text(dtype)));
    out.push_back(check("double dual equals C", same_span(generator_matrix(dual_oracle(dual)), generator_matrix(ngs))));

    const DualGenSet cf = dual_closed_form(code);
    switch (cf.status) {
        case ClosedFormStatus::applied: out.push_back(check("closed-form dual matches oracle", true, "applied")); break;
        case ClosedFormStatus::mismatch:
            out.push_back(check("closed-form dual matches oracle", false, cf.notes.empty() ? "mismatch" : cf.notes.front()));
            break;
        default:
            out.push_back(skip("closed-form dual matches oracle",
                               std::string(to_string(cf.status)) + (cf.notes.empty() ? "" : ": " + cf.notes.front())));
    }
    for (auto* f : {&verify_dual_annihilation, &verify_dual_degrees, &verify_dual_diagonal}) {
        auto part = (*f)(code);
        out.insert(out.end(), part.begin(), part.end());
    }

    const Expectations& x = spec.expect;
    if (x.k1) out.push_back(check("expect k1", *x.k1 == type.k1, "actual " + std::to_string(type.k1)));
    if (x.k2) out.push_back(check("expect k2", *x.k2 == type.k2, "actual " + std::to_string(type.k2)));
    if (x.dual_k1) out.push_back(check("expect dual_k1", *x.dual_k1 == dtype.k1, "actual " + std::to_string(dtype.k1)));
    if (x.dual_k2) out.push_back(check("expect dual_k2", *x.dual_k2 == dtype.k2, "actual " + std::to_string(dtype.k2)));
    if (x.min_lee_distance || x.linear_image) {
        if (type.log2_size() == 0) {
            out.push_back(check("expect on zero code", false, "distance and linearity are undefined for the zero code"));
        } else {
            try {
                if (x.min_lee_distance) {
                    const int d = min_lee_distance(code, {opt.distance_cap, 0});
                    out.push_back(check("expect min_lee_distance", d == *x.min_lee_distance, "actual " + std::to_string(d)));
                }
                if (x.linear_image) {
                    const bool lin = is_linear_image(code);
                    out.push_back(check("expect linear_image", lin == *x.linear_image, std::string("actual ") + (lin ? "true" : "false")));
                }
            } catch (const CapExceededError& e) {
                out.push_back(skip("expect min_lee_distance", e.what()));
            }
        }
    }
    return out;
}

bool all_passed(const std::vector<CheckResult>& checks) {
    for (const auto& c : checks)
        if (c.applicable && !c.passed) return false;
    return true;
}

}  // namespace gqc4
