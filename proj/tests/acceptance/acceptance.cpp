// Acceptance run: prints one PASS/FAIL line per criterion and exits nonzero
// if any fails.

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "gqc4/codespec.hpp"
#include "gqc4/dual.hpp"
#include "gqc4/error.hpp"
#include "gqc4/gqc.hpp"
#include "gqc4/gray.hpp"
#include "gqc4/poly4.hpp"
#include "gqc4/search.hpp"
#include "oracles.hpp"

using namespace gqc4;

namespace {

struct Outcome {
    bool ok = true;
    std::ostringstream detail;
    std::string first_failure;
    void fail(const std::string& what) {
        if (ok) first_failure = what;
        ok = false;
    }
};

QuadPoly random_quad(std::mt19937_64& rng, int m) {
    std::vector<std::uint8_t> c(static_cast<std::size_t>(m));
    for (auto& x : c) x = static_cast<std::uint8_t>(rng() & 3u);
    return QuadPoly(c);
}

bool divides(const QuadPoly& d, const QuadPoly& f) { return quad_divmod(f, d).remainder.is_zero(); }

const std::vector<std::vector<int>>& corpus_shapes() {
    static const std::vector<std::vector<int>> s{{3}, {7}, {3, 3}, {3, 7}, {3, 3, 3}};
    return s;
}

std::vector<GqcCode> main_corpus() {
    std::mt19937_64 rng(7001);
    std::vector<GqcCode> out;
    for (int k = 0; k < 250; ++k) out.push_back(corpus::random_code(rng, corpus_shapes()[k % corpus_shapes().size()]));
    return out;
}

// ---------------------------------------------------------------------------

void factorization(Outcome& o) {
    int ns = 0, lifts = 0, divisors = 0;
    for (int n = 1; n <= 31; n += 2, ++ns) {
        const auto lifted = factor_xn1_z4(n);
        const auto bin = factor_xn_minus_1(n);
        QuadPoly prod{1};
        for (const auto& f : lifted) prod = prod * f;
        if (prod != QuadPoly::xn_minus_one(n)) o.fail("product n=" + std::to_string(n));
        if (lifted.size() != bin.size()) {
            o.fail("factor count n=" + std::to_string(n));
            continue;
        }
        for (std::size_t k = 0; k < lifted.size(); ++k)
            if (!lifted[k].is_monic() || reduce_mod2(lifted[k]) != bin[k]) o.fail("reduction n=" + std::to_string(n));
        // Every monic divisor is a product of a subset of lifts; each lift
        // must be the only one among them with its reduction.
        const std::size_t r = lifted.size();
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << r); ++mask) {
            QuadPoly d{1};
            for (std::size_t k = 0; k < r; ++k)
                if (mask >> k & 1u) d = d * lifted[k];
            ++divisors;
            if (!divides(d, QuadPoly::xn_minus_one(n))) o.fail("subset product does not divide, n=" + std::to_string(n));
            for (std::size_t k = 0; k < r; ++k)
                if (reduce_mod2(d) == bin[k] && mask != (std::uint64_t{1} << k))
                    o.fail("second divisor with reduction of factor " + std::to_string(k) + ", n=" + std::to_string(n));
        }
        lifts += static_cast<int>(r);
    }
    o.detail << ns << " odd n <= 31, " << lifts << " lifts, " << divisors << " divisors enumerated";
}

// Cyclic shifts of f, g as rows of a Z4 matrix over Z4[x]/(x^n - 1).
Z4Matrix ideal_matrix(const std::vector<QuadPoly>& gens, int n) {
    Z4Matrix m(0, n);
    for (const auto& g : gens)
        for (int u = 0; u < n; ++u) {
            const auto s = g.shifted(u).mod_xn1(n);
            Z4Vector row(static_cast<std::size_t>(n));
            for (int k = 0; k < n; ++k) row[k] = s[k];
            m.append_row(row);
        }
    return m;
}

Z4Vector as_vector(const QuadPoly& p, int n) {
    Z4Vector v(static_cast<std::size_t>(n));
    const auto r = p.mod_xn1(n);
    for (int k = 0; k < n; ++k) v[k] = r[k];
    return v;
}

void gcd_suite(Outcome& o) {
    std::mt19937_64 rng(31337);
    const int ns[] = {3, 7, 9, 15};
    int pairs = 0, members = 0;
    for (int trial = 0; trial < 520; ++trial) {
        const int n = ns[trial % 4];
        const auto fac = factor_xn1_z4(n);
        auto pick = [&] {
            QuadPoly p{1};
            for (const auto& f : fac)
                if (rng() & 1u) p = p * f;
            return p;
        };
        const QuadPoly f = pick(), g = pick();
        const auto b = gcd4_bezout(f, g);
        if (gcd4(f, g) != b.gcd) o.fail("gcd4 and gcd4_bezout disagree");
        if (!b.gcd.is_monic() || !divides(b.gcd, f) || !divides(b.gcd, g)) o.fail("gcd does not divide");
        if (b.u * f + b.v * g != b.gcd) o.fail("u f + v g != gcd");
        // Ideal <f, g> versus <gcd> in Z4[x]/(x^n - 1), both directions.
        const RowSpace fg(ideal_matrix({f, g}, n)), d(ideal_matrix({b.gcd}, n));
        for (int k = 0; k < 50; ++k, members += 2) {
            const QuadPoly in_fg = random_quad(rng, n) * f + random_quad(rng, n) * g;
            if (!d.contains(as_vector(in_fg, n))) o.fail("element of <f,g> outside <gcd>");
            const QuadPoly in_d = random_quad(rng, n) * b.gcd;
            if (!fg.contains(as_vector(in_d, n))) o.fail("element of <gcd> outside <f,g>");
        }
        ++pairs;
    }
    o.detail << pairs << " pairs, " << members << " ideal elements";
}

void normalize_suite(Outcome& o, const std::vector<GqcCode>& codes) {
    int exempt_total = 0, unresolved = 0;
    for (std::size_t idx = 0; idx < codes.size(); ++idx) {
        const auto& code = codes[idx];
        const std::string tag = "code " + std::to_string(idx);
        const auto ngs = normalize(code);
        const Z4Matrix orig = shift_span_matrix(code);
        const Z4Matrix norm = shift_span_matrix(as_code(ngs));
        if (span_size(orig) != span_size(norm)) o.fail(tag + ": cardinality");
        const RowSpace ro(orig), rn(norm);
        for (int r = 0; r < norm.rows(); ++r)
            if (!ro.contains(norm.row(r))) o.fail(tag + ": normalized row outside C");
        for (int r = 0; r < orig.rows(); ++r)
            if (!membership(ngs, from_vector(orig.row(r), code.lengths))) o.fail(tag + ": codeword not a member");
        const int l = code.lengths.index();
        for (int i = 0; i < l; ++i) {
            for (int j = i + 1; j < l; ++j)
                if (!ngs.rows[i].blocks[j].is_zero()) o.fail(tag + ": not lower triangular");
            const int m = code.lengths[i];
            if (!ngs.f[i].is_monic() || !ngs.g[i].is_monic() || !divides(ngs.g[i], ngs.f[i]) ||
                !divides(ngs.f[i], QuadPoly::xn_minus_one(m)))
                o.fail(tag + ": g | f | x^m - 1");
            const QuadPoly diag = ngs.rows[i].blocks[i];
            if (!ngs.is_zero_column(i) && diag != ngs.diagonal(i).mod_xn1(m) && diag != (3 * ngs.f[i]).mod_xn1(m))
                o.fail(tag + ": diagonal entry");
        }
        if (!check_normalized(ngs).empty()) o.fail(tag + ": " + check_normalized(ngs).front());
        std::vector<std::string> exempt;
        const auto chain = degree_chain_violations(ngs, &exempt);
        if (!chain.empty()) {
            o.fail(tag + ": " + chain.front());
            ++unresolved;
        }
        exempt_total += static_cast<int>(exempt.size());
    }
    o.detail << codes.size() << " codes, " << exempt_total << " non-monic entries exempt from the degree chain, "
             << unresolved << " codes with an unresolved chain";
}

std::uint64_t words_of(const std::vector<ModuleElement>& elems, const BlockLengths& L) {
    Z4Matrix m(0, L.total());
    for (const auto& e : elems) m.append_row(to_vector(e, L));
    return m.rows() ? span_size(m) : std::uint64_t{1};
}

void cardinality_suite(Outcome& o, const std::vector<GqcCode>& codes) {
    int removals = 0, enumerated = 0, not_minimal = 0, explained = 0;
    for (std::size_t idx = 0; idx < codes.size(); ++idx) {
        const auto& code = codes[idx];
        const std::string tag = "code " + std::to_string(idx);
        const auto ngs = normalize(code);
        int e4 = 0, e2 = 0;
        for (int i = 0; i < code.lengths.index(); ++i) {
            e4 += code.lengths[i] - ngs.t(i);
            e2 += ngs.t(i) - ngs.k(i);
        }
        const std::uint64_t formula = std::uint64_t{1} << (2 * e4 + e2);
        const std::uint64_t actual = span_size(shift_span_matrix(code));
        if (formula != actual) o.fail(tag + ": formula " + std::to_string(formula) + " vs " + std::to_string(actual));
        const auto elems = min_gen_set(ngs).elements();
        if (words_of(elems, code.lengths) != actual) o.fail(tag + ": min-gen-set span");
        bool redundant = false;
        for (std::size_t drop = 0; drop < elems.size(); ++drop, ++removals) {
            auto rest = elems;
            rest.erase(rest.begin() + static_cast<long>(drop));
            if (words_of(rest, code.lengths) >= actual) {
                o.fail(tag + ": element " + std::to_string(drop) + " redundant");
                redundant = true;
            }
        }
        if (redundant) {
            ++not_minimal;
            // An s2 element h_i a_i that still has order 4 (odd entries in an
            // earlier block): twice it lands in the span of the earlier rows.
            bool order4 = false;
            for (const auto& fam : min_gen_set(ngs).s2)
                for (const auto& e : fam)
                    if (!scale(2, e, code.lengths).is_zero()) order4 = true;
            explained += order4;
        }
        if (code.lengths.total() <= 6) {
            std::set<std::uint64_t> seen;
            for_each_codeword(code, [&](const Z4Vector& v) { seen.insert(oracle::pack(v)); });
            if (seen != oracle::shift_closure(code)) o.fail(tag + ": enumeration differs from closure");
            ++enumerated;
        }
    }
    o.detail << codes.size() << " codes, " << removals << " single removals, " << enumerated
             << " codes enumerated exhaustively; not Z4-minimal: " << not_minimal << " (" << explained
             << " with an order-4 element among the 2-torsion generators)";
}

// All-shifts orthogonality computed directly on vectors.
bool orthogonal_to_all_shifts(const ModuleElement& d, const ModuleElement& c, const BlockLengths& L) {
    const auto dv = to_vector(d, L);
    auto cur = c;
    for (long u = 0; u < L.lcm(); ++u) {
        if (oracle::dot(dv, to_vector(cur, L))) return false;
        cur = cyclic_shift(cur, L);
    }
    return true;
}

ModuleElement random_element(std::mt19937_64& rng, const BlockLengths& L) {
    std::vector<QuadPoly> b;
    for (int i = 0; i < L.index(); ++i) b.push_back(random_quad(rng, L[i]));
    return make_element(L, b);
}

void orthogonality_suite(Outcome& o) {
    std::mt19937_64 rng(404);
    long pairs = 0, orth = 0;
    auto one = [&](const ModuleElement& d, const ModuleElement& c, const BlockLengths& L) {
        const bool a = conj_product(d, c, L).is_zero();
        const bool b = orthogonal_to_all_shifts(d, c, L);
        if (a != b) o.fail("mismatch at lengths " + L.to_string() + ": " + to_string(d) + " / " + to_string(c));
        ++pairs;
        orth += b;
    };
    for (const std::vector<int>& shape : {std::vector<int>{3}, std::vector<int>{1, 3}, std::vector<int>{3, 3}}) {
        const BlockLengths L(shape);
        const int n = L.total();
        for (int s = 0; s < 100000 / 3; ++s) {
            const auto c = random_element(rng, L);
            ModuleElement d;
            if (s % 2) {
                d = random_element(rng, L);
            } else {
                // Draw half the d's from the dual of <c> so both outcomes occur.
                const Z4Matrix ker = kernel(shift_span_matrix(GqcCode{L, {c}}));
                Z4Vector v(static_cast<std::size_t>(n), 0);
                for (int r = 0; r < ker.rows(); ++r) {
                    const unsigned k = rng() & 3u;
                    for (int j = 0; j < n; ++j) v[j] = static_cast<std::uint8_t>((v[j] + k * ker.at(r, j)) & 3u);
                }
                d = from_vector(v, L);
            }
            one(d, c, L);
        }
    }
    const long sampled = pairs;
    const BlockLengths L({1, 3});
    for (std::uint64_t dk = 0; dk < 256; ++dk)
        for (std::uint64_t ck = 0; ck < 256; ++ck)
            one(from_vector(oracle::unpack(dk, 4), L), from_vector(oracle::unpack(ck, 4), L), L);
    o.detail << sampled << " sampled pairs on (3),(1,3),(3,3) + " << pairs - sampled
             << " exhaustive pairs on (1,3); " << orth << " orthogonal";
}

void duality_suite(Outcome& o, const std::vector<GqcCode>& random_codes) {
    auto codes = random_codes;
    const auto structured = corpus::make_structured(300);
    codes.insert(codes.end(), structured.begin(), structured.end());
    int applied = 0, violated = 0, inapplicable = 0, dual_checks = 0;
    for (std::size_t idx = 0; idx < codes.size(); ++idx) {
        const auto& code = codes[idx];
        const std::string tag = (idx < random_codes.size() ? "random " : "structured ") +
                                std::to_string(idx < random_codes.size() ? idx : idx - random_codes.size());
        const int n = code.lengths.total();
        const GqcCode dual = dual_oracle(code);
        const auto gm = shift_span_matrix(code);
        const auto dm = shift_span_matrix(dual);
        if (cardinality(code).log2_size() + cardinality(dual).log2_size() != 2 * n) o.fail(tag + ": |C||C^perp| != 4^n");
        for (int a = 0; a < dm.rows(); ++a)
            for (int b = 0; b < gm.rows(); ++b)
                if (dot(dm.row(a), gm.row(b))) {
                    o.fail(tag + ": dual not orthogonal");
                    a = dm.rows();
                    break;
                }
        if (!same_span(shift_span_matrix(dual_oracle(dual)), gm)) o.fail(tag + ": double dual");

        const DualGenSet cf = dual_closed_form(code);
        switch (cf.status) {
            case ClosedFormStatus::applied: {
                ++applied;
                if (!same_span(shift_span_matrix(GqcCode{code.lengths, cf.rows}), dm)) o.fail(tag + ": closed form span");
                break;
            }
            case ClosedFormStatus::hypothesis_violated: ++violated; break;
            case ClosedFormStatus::inapplicable: ++inapplicable; break;
            case ClosedFormStatus::mismatch: o.fail(tag + ": closed form mismatch"); break;
        }
        for (const auto& checks : {verify_dual_annihilation(code), verify_dual_degrees(code), verify_dual_diagonal(code)})
            for (const auto& c : checks) {
                if (!c.applicable) continue;
                ++dual_checks;
                if (!c.passed) o.fail(tag + ": " + c.name + " " + c.detail);
            }
    }
    o.detail << codes.size() << " codes; closed form applied " << applied << ", hypotheses violated " << violated
             << ", inapplicable " << inapplicable << "; " << dual_checks << " closed-form checks";
}

// Gray image of a packed Z4 word as a 2n-bit integer (b-half low, (a+b)-half high).
std::uint64_t image_bits(std::uint64_t key, int n) {
    std::uint64_t w = 0;
    for (int k = 0; k < n; ++k) {
        const unsigned s = (key >> (2 * k)) & 3u;
        const unsigned a = s & 1u, b = s >> 1;
        w |= static_cast<std::uint64_t>(b) << k;
        w |= static_cast<std::uint64_t>(a ^ b) << (n + k);
    }
    return w;
}

void gray_suite(Outcome& o, const std::vector<GqcCode>& codes) {
    std::mt19937_64 rng(9);
    for (int s = 0; s < 10000; ++s) {
        const int n = 1 + static_cast<int>(rng() % 32);
        Z4Vector v(static_cast<std::size_t>(n));
        for (auto& x : v) x = static_cast<std::uint8_t>(rng() & 3u);
        const int ww = std::popcount(image_bits(oracle::pack(v), n));
        if (lee_weight(v) != oracle::lee(v) || hamming_weight(gray_map(v)) != ww || ww != oracle::lee(v))
            o.fail("isometry at sample " + std::to_string(s));
    }
    int checked = 0, pairwise = 0;
    for (std::size_t idx = 0; idx < codes.size(); ++idx) {
        const auto& code = codes[idx];
        const auto t = cardinality(code);
        if (t.log2_size() == 0 || t.log2_size() > 16) continue;
        const int n = code.lengths.total();
        std::vector<std::uint64_t> img;
        for (auto key : oracle::shift_closure(code)) img.push_back(image_bits(key, n));
        int best = 1 << 20;
        if (img.size() <= (1u << 13)) {
            ++pairwise;
            for (std::size_t a = 0; a < img.size(); ++a)
                for (std::size_t b = a + 1; b < img.size(); ++b)
                    best = std::min(best, std::popcount(img[a] ^ img[b]));
        } else {
            // Distance to the zero word's image suffices once distances are
            // translation invariant (isometry above).
            for (auto w : img)
                if (w) best = std::min(best, std::popcount(w));
        }
        if (min_lee_distance(code) != best) o.fail("code " + std::to_string(idx) + ": distance");
        ++checked;
    }
    o.detail << "10^4 isometry samples; " << checked << " codes with |C| <= 2^16 (" << pairwise << " pairwise)";
}

void search_suite(Outcome& o) {
    SearchConfig cfg;
    cfg.lengths = {3};
    cfg.workers = 1;
    const auto cands = search_candidates(cfg);
    if (cands.size() != 9) o.fail("expected 9 candidates, got " + std::to_string(cands.size()));
    const QuadPoly target{1, 1, 1};
    bool found = false;
    for (const auto& r : evaluate_all(cands, cfg)) {
        if (r.status != ResultRecord::Status::ok || r.n != 3 || r.k1 != 1 || r.k2 != 0 || r.dL != 3) continue;
        const GqcCode back = parse_generators(BlockLengths({3}), r.generators);
        const GqcCode want{BlockLengths({3}), {make_element(BlockLengths({3}), {target})}};
        if (same_span(shift_span_matrix(back), shift_span_matrix(want))) found = true;
    }
    if (!found) o.fail("<x^2+x+1> with dL 3 not found");

    auto render = [](const SearchConfig& c) {
        const auto all = evaluate_all(search_candidates(c), c);
        const auto best = best_table(all);
        return format_table(best) + format_csv(best) + format_json(best) + format_csv(all);
    };
    int runs = 0;
    for (const std::vector<int>& shape : {std::vector<int>{3}, std::vector<int>{3, 7}}) {
        SearchConfig c;
        c.lengths = shape;
        c.mode = SearchConfig::Mode::sampled;
        c.samples = 40;
        c.seed = 99;
        std::string first;
        for (int w : {1, 1, 2, 4, 0}) {
            c.workers = w;
            const auto text = render(c);
            if (first.empty()) first = text;
            else if (text != first) o.fail("output differs, lengths " + BlockLengths(shape).to_string());
            ++runs;
        }
    }
    o.detail << cands.size() << " diagonal candidates on (3); " << runs << " runs byte-identical across worker counts";
}

}  // namespace

int main() {
    const auto codes = main_corpus();
    struct Item {
        int id;
        const char* name;
        std::function<void(Outcome&)> run;
    };
    const std::vector<Item> items{
        {1, "factorization of x^n - 1 over Z4", factorization},
        {2, "gcd over Z4", gcd_suite},
        {3, "normalized generating sets", [&](Outcome& o) { normalize_suite(o, codes); }},
        {4, "cardinality and minimal generating sets", [&](Outcome& o) { cardinality_suite(o, codes); }},
        {5, "conjugate product vs shift orthogonality", orthogonality_suite},
        {6, "duality", [&](Outcome& o) { duality_suite(o, codes); }},
        {7, "Gray map and Lee distance", [&](Outcome& o) { gray_suite(o, codes); }},
        {8, "search harness", search_suite},
    };
    int failed = 0;
    for (const auto& it : items) {
        Outcome o;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            it.run(o);
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("%s %d %s: %s%s%s (%.1fs)\n", o.ok ? "PASS" : "FAIL", it.id, it.name, o.detail.str().c_str(),
                    o.ok ? "" : " -- first failure: ", o.first_failure.c_str(), secs);
        std::fflush(stdout);
        failed += !o.ok;
    }
    return failed ? 1 : 0;
}
