#include "corpus.hpp"
#include "doctest.h"
#include "gqc4/dual.hpp"
#include "gqc4/error.hpp"
#include "gqc4/polytext.hpp"
#include "oracles.hpp"

using namespace gqc4;

namespace {
QuadPoly Q(const char* s) { return parse_quad(s); }
ModuleElement E(const BlockLengths& L, std::vector<const char*> blocks) {
    std::vector<QuadPoly> b;
    for (auto s : blocks) b.push_back(Q(s));
    return make_element(L, b);
}

// d against every simultaneous shift of c, by Euclidean dot products.
bool orthogonal_to_shifts(const ModuleElement& d, ModuleElement c, const BlockLengths& L) {
    const auto dv = to_vector(d, L);
    for (long u = 0; u < L.lcm(); ++u, c = cyclic_shift(c, L))
        if (oracle::dot(dv, to_vector(c, L))) return false;
    return true;
}
}  // namespace

TEST_CASE("conj_product examples") {
    BlockLengths L3({3});
    CHECK(conj_product(E(L3, {"1"}), E(L3, {"1"}), L3) == Q("x^2"));
    CHECK(conj_product(E(L3, {"x+1"}), E(L3, {"0"}), L3).is_zero());
    CHECK(is_orthogonal(E(L3, {"3x+1"}), E(L3, {"x^2+x+1"}), L3));
    CHECK_FALSE(is_orthogonal(E(L3, {"1"}), E(L3, {"1"}), L3));
    BlockLengths L13({1, 3});
    CHECK(conj_product(E(L13, {"3", "0"}), E(L13, {"1", "0"}), L13) == Q("3x^2+3x+3"));
    CHECK_THROWS_AS(conj_product(E(L3, {"1"}), E(L13, {"1", "0"}), L3), ArgumentError);
}

TEST_CASE("conj_product vanishes exactly when d is orthogonal to every shift (exhaustive, lengths (1,3))") {
    BlockLengths L({1, 3});
    const int n = L.total();
    for (std::uint64_t a = 0; a < (1u << (2 * n)); ++a) {
        const auto d = from_vector(oracle::unpack(a, n), L);
        for (std::uint64_t b = 0; b < (1u << (2 * n)); ++b) {
            const auto c = from_vector(oracle::unpack(b, n), L);
            if (is_orthogonal(d, c, L) != orthogonal_to_shifts(d, c, L)) {
                FAIL("disagreement at d=" << to_string(d) << " c=" << to_string(c));
            }
        }
    }
}

TEST_CASE("truncate") {
    BlockLengths L({3, 3});
    GqcCode c{L, {E(L, {"x-1", "1"})}};
    auto t = truncate(c, 1);
    CHECK(t.lengths == BlockLengths({3}));
    CHECK(t.generators[0].blocks.size() == 1);
    CHECK(t.generators[0].blocks[0] == Q("x-1"));
    CHECK(truncate(c, 2).generators[0] == c.generators[0]);
    CHECK_THROWS_AS(truncate(c, 0), ArgumentError);
    CHECK_THROWS_AS(truncate(c, 3), ArgumentError);
}

TEST_CASE("eliminate worked example") {
    BlockLengths L({3, 3});
    auto tr = eliminate(L, {E(L, {"x-1", "0"}), E(L, {"1", "x-1"})});
    CHECK(tr.steps[1][1].A == Q("x-1"));
    CHECK(tr.steps[1][1].B == QuadPoly::constant(1));
    CHECK(tr.rows[1][1] == E(L, {"0", "x^2-2x+1"}));
    CHECK(tr.final_diagonal(1) == Q("x-1") * Q("x-1"));

    // Nothing to eliminate.
    auto d = eliminate(L, {E(L, {"x-1", "0"}), E(L, {"0", "x-1"})});
    CHECK(d.steps[1][1].skipped);
    CHECK(d.rows[1][1] == E(L, {"0", "x-1"}));

    CHECK_THROWS_AS(eliminate(L, {E(L, {"x-1", "0"}), E(L, {"3x+1", "x-1"})}), HypothesisError);
    CHECK_THROWS_AS(eliminate(L, {E(L, {"2", "0"}), E(L, {"1", "x-1"})}), HypothesisError);
}

TEST_CASE("dual oracle examples") {
    BlockLengths L3({3});
    auto d = normalize(dual_oracle(GqcCode{L3, {E(L3, {"x-1"})}}));
    CHECK(d.f[0] == Q("x^2+x+1"));
    CHECK(d.is_free_column(0));
    CHECK(cardinality(d).size() == 4);
    CHECK(cardinality(dual_oracle(GqcCode::zero(L3))).size() == 64);
    CHECK(cardinality(dual_oracle(GqcCode::whole_space(L3))).size() == 1);
}

TEST_CASE("size duality and double dual on a corpus") {
    for (const auto& code : corpus::make(60, 7)) {
        const auto d = dual_oracle(code);
        CHECK(cardinality(code).log2_size() + cardinality(d).log2_size() == 2 * code.lengths.total());
        CHECK(oracle::shift_closure(dual_oracle(d)) == oracle::shift_closure(code));
        for (const auto& e : d.generators)
            for (const auto& g : code.generators) CHECK(is_orthogonal(e, g, code.lengths));
    }
}

TEST_CASE("closed form on small examples") {
    BlockLengths L3({3});
    auto c1 = dual_closed_form(GqcCode{L3, {E(L3, {"x-1"})}});
    CHECK(c1.status == ClosedFormStatus::applied);
    CHECK(c1.u[0] == Q("x^2+x+1"));

    BlockLengths L1({1});
    auto c2 = dual_closed_form(GqcCode::whole_space(L1));
    CHECK(c2.status == ClosedFormStatus::applied);
    CHECK(c2.u[0] == Q("x-1"));
    CHECK(c2.rows[0].is_zero());

    BlockLengths L({3, 3});
    auto c3 = dual_closed_form(GqcCode{L, {E(L, {"x-1", "0"}), E(L, {"0", "x-1"})}});
    CHECK(c3.status == ClosedFormStatus::applied);
    CHECK(c3.rows[0] == E(L, {"x^2+x+1", "0"}));
    CHECK(c3.rows[1].blocks[1] == Q("x^2+x+1"));

    auto c4 = dual_closed_form(GqcCode{L, {E(L, {"1", "1"})}});
    CHECK(c4.status == ClosedFormStatus::applied);

    auto c5 = dual_closed_form(GqcCode{L3, {E(L3, {"2"})}});
    CHECK(c5.status == ClosedFormStatus::hypothesis_violated);
}

TEST_CASE("closed-form consistency checks on the diagonal example") {
    BlockLengths L({3, 3});
    GqcCode c{L, {E(L, {"x-1", "0"}), E(L, {"0", "x-1"})}};
    auto l5 = verify_dual_annihilation(c);
    CHECK(l5.size() == 4);
    for (const auto& r : l5) {
        CHECK(r.applicable);
        CHECK(r.passed);
    }
    for (const auto& r : verify_dual_degrees(c)) CHECK(r.passed);
    for (const auto& r : verify_dual_diagonal(c)) CHECK(r.passed);
    for (const auto& r : verify_dual_annihilation(GqcCode::zero(L))) CHECK(r.passed);
}
