#include <random>

#include "doctest.h"
#include "gqc4/error.hpp"
#include "gqc4/poly2.hpp"
#include "gqc4/polytext.hpp"

using namespace gqc4;

namespace {
BinPoly P(const char* s) { return parse_bin(s); }

BinPoly random_bin(std::mt19937_64& rng, int max_degree) {
    std::uniform_int_distribution<int> deg(-1, max_degree);
    const int d = deg(rng);
    std::vector<std::uint8_t> c(static_cast<std::size_t>(d + 1));
    for (auto& x : c) x = static_cast<std::uint8_t>(rng() & 1u);
    return BinPoly(c);
}
}  // namespace

TEST_CASE("bin_add") {
    CHECK(bin_add(P("x+1"), P("x+1")).is_zero());
    CHECK(bin_add(P("x^3+x"), BinPoly{}) == P("x^3+x"));
    CHECK(bin_add(P("x^2+1"), P("x^2+x")) == P("x+1"));
}

TEST_CASE("canonical zero and degree sentinel") {
    BinPoly z;
    CHECK(z.degree() == BinPoly::kZeroDegree);
    CHECK(BinPoly{0, 0, 0}.is_zero());
    CHECK((z * P("x+1")).is_zero());
    CHECK((P("x^2+1") * P("x^3+x+1")).degree() == 5);
}

TEST_CASE("bin_divmod") {
    auto [q, r] = bin_divmod(P("x^3+1"), P("x+1"));
    CHECK(q == P("x^2+x+1"));
    CHECK(r.is_zero());
    CHECK(q * P("x+1") == P("x^3+1"));

    auto [q1, r1] = bin_divmod(P("x^5+x^2+1"), BinPoly::one());
    CHECK(q1 == P("x^5+x^2+1"));
    CHECK(r1.is_zero());

    auto [q2, r2] = bin_divmod(P("x^2+x+1"), P("x^3+1"));
    CHECK(q2.is_zero());
    CHECK(r2 == P("x^2+x+1"));

    CHECK_THROWS_AS(bin_divmod(P("x"), BinPoly{}), ArgumentError);
}

TEST_CASE("bin_divmod reconstruction on random inputs") {
    std::mt19937_64 rng(7);
    for (int it = 0; it < 500; ++it) {
        BinPoly f = random_bin(rng, 64), d = random_bin(rng, 40);
        if (d.is_zero()) continue;
        auto [q, r] = bin_divmod(f, d);
        CHECK(q * d + r == f);
        CHECK(r.degree() < d.degree());
    }
}

TEST_CASE("bin_gcd and extended witness") {
    CHECK(bin_gcd(P("x^3+1"), P("x+1")) == P("x+1"));
    CHECK(bin_gcd(P("x^4+x+1"), P("x^4+x+1")) == P("x^4+x+1"));
    CHECK(bin_gcd(P("x^2+x+1"), P("x+1")).is_one());
    CHECK_THROWS_AS(bin_gcd(BinPoly{}, BinPoly{}), ArgumentError);

    std::mt19937_64 rng(11);
    for (int it = 0; it < 300; ++it) {
        BinPoly f = random_bin(rng, 30), g = random_bin(rng, 30);
        if (f.is_zero() && g.is_zero()) continue;
        auto x = bin_xgcd(f, g);
        CHECK(x.u * f + x.v * g == x.gcd);
        CHECK(bin_divides(x.gcd, f));
        CHECK(bin_divides(x.gcd, g));
    }
}

TEST_CASE("factor_xn_minus_1 small cases") {
    auto f1 = factor_xn_minus_1(1);
    REQUIRE(f1.size() == 1);
    CHECK(f1[0] == P("x+1"));

    auto f3 = factor_xn_minus_1(3);
    REQUIRE(f3.size() == 2);
    CHECK(f3[0] == P("x+1"));
    CHECK(f3[1] == P("x^2+x+1"));

    auto f7 = factor_xn_minus_1(7);
    REQUIRE(f7.size() == 3);
    CHECK(f7[0] == P("x+1"));
    CHECK(f7[1] == P("x^3+x+1"));
    CHECK(f7[2] == P("x^3+x^2+1"));

    CHECK_THROWS_AS(factor_xn_minus_1(4), ArgumentError);
    CHECK_THROWS_AS(factor_xn_minus_1(0), ArgumentError);
    CHECK_THROWS_AS(factor_xn_minus_1(-3), ArgumentError);
}

TEST_CASE("factor_xn_minus_1 for odd n <= 63") {
    for (int n = 1; n <= 63; n += 2) {
        CAPTURE(n);
        auto fac = factor_xn_minus_1(n);
        BinPoly prod = BinPoly::one();
        for (const auto& t : fac) prod = prod * t;
        CHECK(prod == BinPoly::xn_plus_one(n));
        for (std::size_t a = 0; a < fac.size(); ++a) {
            if (fac[a].degree() <= 12) CHECK(is_irreducible_trial(fac[a]));
            if (a) CHECK(canonical_less(fac[a - 1], fac[a]));
            for (std::size_t b = a + 1; b < fac.size(); ++b) CHECK(bin_gcd(fac[a], fac[b]).is_one());
        }
    }
}

TEST_CASE("text format") {
    CHECK(P("x^3+x+1") == BinPoly{1, 1, 0, 1});
    CHECK(P("[1,1,0,1]") == BinPoly{1, 1, 0, 1});
    CHECK(P("x^3+x+1").to_string() == "x^3+x+1");
    CHECK(BinPoly{}.to_string() == "0");
    CHECK_THROWS_AS(parse_bin("x^2+3"), ParseError);
    CHECK_THROWS_AS(parse_bin("x^^2"), ParseError);
}
