#include "gqc4/poly4.hpp"

#include <algorithm>

#include "gqc4/error.hpp"

namespace gqc4 {

namespace {
std::uint8_t m4(int c) { return static_cast<std::uint8_t>(((c % 4) + 4) % 4); }
}  // namespace

QuadPoly::QuadPoly(std::vector<std::uint8_t> coeffs) : coeffs_(std::move(coeffs)) {
    for (auto& c : coeffs_) c &= 3u;
    trim();
}

QuadPoly::QuadPoly(std::initializer_list<int> coeffs) {
    for (int c : coeffs) coeffs_.push_back(m4(c));
    trim();
}

QuadPoly QuadPoly::constant(int c) { return QuadPoly({c}); }

QuadPoly QuadPoly::monomial(int degree, int coeff) {
    if (degree < 0) throw ArgumentError("monomial degree must be non-negative");
    std::vector<std::uint8_t> c(static_cast<std::size_t>(degree) + 1, 0);
    c.back() = m4(coeff);
    return QuadPoly(std::move(c));
}

QuadPoly QuadPoly::xn_minus_one(int n) {
    if (n <= 0) throw ArgumentError("x^n-1 needs n >= 1");
    std::vector<std::uint8_t> c(static_cast<std::size_t>(n) + 1, 0);
    c.front() = 3;
    c.back() = 1;
    return QuadPoly(std::move(c));
}

QuadPoly QuadPoly::lift(const BinPoly& p) { return QuadPoly(p.coeffs()); }

void QuadPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

bool QuadPoly::is_even() const noexcept {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](std::uint8_t c) { return (c & 1u) == 0; });
}

BinPoly QuadPoly::half() const {
    std::vector<std::uint8_t> c(coeffs_.size());
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = static_cast<std::uint8_t>((coeffs_[k] >> 1) & 1u);
    return BinPoly(std::move(c));
}

QuadPoly operator+(const QuadPoly& a, const QuadPoly& b) {
    std::vector<std::uint8_t> c(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
    for (std::size_t k = 0; k < a.coeffs_.size(); ++k) c[k] = a.coeffs_[k];
    for (std::size_t k = 0; k < b.coeffs_.size(); ++k) c[k] = static_cast<std::uint8_t>((c[k] + b.coeffs_[k]) & 3u);
    return QuadPoly(std::move(c));
}

QuadPoly operator-(const QuadPoly& a) {
    std::vector<std::uint8_t> c(a.coeffs_.size());
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = static_cast<std::uint8_t>((4 - a.coeffs_[k]) & 3u);
    return QuadPoly(std::move(c));
}

QuadPoly operator-(const QuadPoly& a, const QuadPoly& b) { return a + (-b); }

QuadPoly operator*(const QuadPoly& a, const QuadPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<std::uint8_t> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        const unsigned ai = a.coeffs_[i];
        if (!ai) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            c[i + j] = static_cast<std::uint8_t>((c[i + j] + ai * b.coeffs_[j]) & 3u);
    }
    return QuadPoly(std::move(c));
}

QuadPoly operator*(int s, const QuadPoly& a) { return QuadPoly::constant(s) * a; }

QuadPoly QuadPoly::shifted(int k) const {
    if (is_zero()) return {};
    std::vector<std::uint8_t> c(static_cast<std::size_t>(k), 0);
    c.insert(c.end(), coeffs_.begin(), coeffs_.end());
    return QuadPoly(std::move(c));
}

QuadPoly QuadPoly::mod_xn1(int m) const {
    if (m <= 0) throw ArgumentError("modulus x^m-1 needs m >= 1");
    if (degree() < m) return *this;
    std::vector<std::uint8_t> c(static_cast<std::size_t>(m), 0);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) c[k % m] = static_cast<std::uint8_t>((c[k % m] + coeffs_[k]) & 3u);
    return QuadPoly(std::move(c));
}

std::string QuadPoly::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
        const int c = coeffs_[k];
        if (!c) continue;
        if (!out.empty()) out += '+';
        if (k == 0) {
            out += std::to_string(c);
            continue;
        }
        if (c != 1) out += std::to_string(c);
        out += k == 1 ? std::string("x") : "x^" + std::to_string(k);
    }
    return out;
}

QuadPoly quad_add(const QuadPoly& f, const QuadPoly& g) { return f + g; }
QuadPoly quad_sub(const QuadPoly& f, const QuadPoly& g) { return f - g; }
QuadPoly quad_mul(const QuadPoly& f, const QuadPoly& g) { return f * g; }

QuadDivMod quad_divmod(const QuadPoly& f, const QuadPoly& d) {
    if (d.is_zero()) throw DivisionError("division by the zero polynomial over Z4");
    if (!d.has_unit_lead())
        throw DivisionError("divisor " + d.to_string() + " has non-unit leading coefficient");
    const int dd = d.degree();
    if (f.degree() < dd) return {QuadPoly{}, f};
    const unsigned inv = d.lead();  // 1*1 = 3*3 = 1 mod 4
    std::vector<std::uint8_t> r = f.coeffs();
    std::vector<std::uint8_t> q(static_cast<std::size_t>(f.degree() - dd) + 1, 0);
    for (int k = f.degree(); k >= dd; --k) {
        const unsigned c = (r[k] * inv) & 3u;
        if (!c) continue;
        q[k - dd] = static_cast<std::uint8_t>(c);
        for (int j = 0; j <= dd; ++j) r[k - dd + j] = static_cast<std::uint8_t>((r[k - dd + j] + 4 * 4 - c * d[j]) & 3u);
    }
    return {QuadPoly(std::move(q)), QuadPoly(std::move(r))};
}

QuadPoly quad_mod(const QuadPoly& f, const QuadPoly& d) { return quad_divmod(f, d).remainder; }

QuadPoly quad_exact_div(const QuadPoly& f, const QuadPoly& d) {
    auto [q, r] = quad_divmod(f, d);
    if (!r.is_zero())
        throw DivisionError(d.to_string() + " does not divide " + f.to_string() + " over Z4");
    return q;
}

BinPoly reduce_mod2(const QuadPoly& f) { return BinPoly(f.coeffs()); }

QuadPoly make_monic(const QuadPoly& f) {
    if (!f.has_unit_lead()) throw DivisionError("cannot make " + f.to_string() + " monic");
    return f.lead() == 1 ? f : 3 * f;
}

std::optional<Bezout> is_coprime(const QuadPoly& f, const QuadPoly& g) {
    const BinPoly fb = reduce_mod2(f), gb = reduce_mod2(g);
    if (fb.is_zero() && gb.is_zero()) return std::nullopt;
    auto x = bin_xgcd(fb, gb);
    if (!x.gcd.is_one()) return std::nullopt;
    // u f + v g = 1 + 2e over Z4; multiplying by 1 - 2e gives exactly 1.
    QuadPoly u = QuadPoly::lift(x.u), v = QuadPoly::lift(x.v);
    QuadPoly s = u * f + v * g;
    QuadPoly corr = QuadPoly::constant(2) - s;  // 1 - 2e = 2 - (1 + 2e)
    return Bezout{corr * u, corr * v};
}

std::optional<QuadPoly> inverse_mod(const QuadPoly& a, const QuadPoly& p) {
    if (!p.has_unit_lead()) throw DivisionError("modulus " + p.to_string() + " has non-unit leading coefficient");
    if (p.degree() == 0) return QuadPoly{};
    auto w = is_coprime(quad_mod(a, p), p);
    if (!w) return std::nullopt;
    return quad_mod(w->u, p);
}

QuadPoly x_power_mod(long e, const QuadPoly& p) {
    if (p.degree() == 0) return QuadPoly{};
    QuadPoly base = QuadPoly::monomial(1);
    if (e < 0) {
        auto inv = inverse_mod(base, p);
        if (!inv) throw DivisionError("x is not invertible modulo " + p.to_string());
        base = *inv;
        e = -e;
    }
    QuadPoly result = quad_mod(QuadPoly::constant(1), p);
    base = quad_mod(base, p);
    while (e > 0) {
        if (e & 1) result = quad_mod(result * base, p);
        base = quad_mod(base * base, p);
        e >>= 1;
    }
    return result;
}

QuadPoly hensel_lift(const BinPoly& t, int n) {
    if (n <= 0 || n % 2 == 0) throw ArgumentError("Hensel lift needs odd n >= 1, got " + std::to_string(n));
    if (t.is_zero() || !bin_divides(t, BinPoly::xn_plus_one(n)))
        throw ArgumentError(t.to_string() + " does not divide x^" + std::to_string(n) + "+1 over Z2");
    // Graeffe step: with t^ the {0,1}-lift, t^(x) t^(-x) = (-1)^deg f(x^2).
    const QuadPoly tl = QuadPoly::lift(t);
    std::vector<std::uint8_t> neg = tl.coeffs();
    for (std::size_t k = 1; k < neg.size(); k += 2) neg[k] = static_cast<std::uint8_t>((4 - neg[k]) & 3u);
    QuadPoly prod = tl * QuadPoly(std::move(neg));
    std::vector<std::uint8_t> f(static_cast<std::size_t>(t.degree()) + 1, 0);
    for (int k = 0; k <= t.degree(); ++k) f[k] = prod[2 * k];
    QuadPoly lifted(std::move(f));
    lifted = make_monic(lifted);
    // Both post-conditions are cheap to confirm.
    if (!quad_mod(QuadPoly::xn_minus_one(n), lifted).is_zero() || reduce_mod2(lifted) != t)
        throw Error("Hensel lift of " + t.to_string() + " failed its post-condition");
    return lifted;
}

std::vector<QuadPoly> factor_xn1_z4(int n) {
    std::vector<QuadPoly> out;
    for (const auto& t : factor_xn_minus_1(n)) out.push_back(hensel_lift(t, n));
    return out;
}

std::vector<QuadPoly> basic_irreducible_factors(const QuadPoly& f) {
    if (!f.is_monic()) throw HypothesisError("polynomial " + f.to_string() + " is not monic");
    const BinPoly fb = reduce_mod2(f);
    if (!is_squarefree(fb))
        throw HypothesisError("reduction of " + f.to_string() + " has multiple roots");
    std::vector<QuadPoly> out;
    for (const auto& t : factor_squarefree(fb)) {
        // Lift f = a*b (mod 2) with a = t to an exact factorization mod 4.
        const BinPoly b = bin_exact_div(fb, t);
        const auto x = bin_xgcd(t, b);  // x.u*t + x.v*b = 1
        const QuadPoly ah = QuadPoly::lift(t), bh = QuadPoly::lift(b);
        const BinPoly e = (f - ah * bh).half();
        const BinPoly alpha = bin_mod(x.v * e, t);
        out.push_back(ah + 2 * QuadPoly::lift(alpha));
    }
    return out;
}

namespace {

struct FactorMatch {
    QuadPoly common;
    std::vector<QuadPoly> f_rest, g_rest;
};

FactorMatch match_factors(const QuadPoly& f, const QuadPoly& g) {
    auto check = [](const QuadPoly& p, const char* name) {
        if (!p.is_monic()) throw HypothesisError(std::string("gcd4: ") + name + " = " + p.to_string() + " is not monic");
        if (!is_squarefree(reduce_mod2(p)))
            throw HypothesisError(std::string("gcd4: reduction of ") + name + " = " + p.to_string() +
                                  " has multiple roots");
    };
    check(f, "first argument");
    check(g, "second argument");
    const auto ff = basic_irreducible_factors(f);
    const auto gf = basic_irreducible_factors(g);
    FactorMatch m{QuadPoly::constant(1), {}, {}};
    std::vector<bool> used(gf.size(), false);
    for (const auto& a : ff) {
        bool found = false;
        for (std::size_t j = 0; j < gf.size(); ++j) {
            if (used[j] || reduce_mod2(gf[j]) != reduce_mod2(a)) continue;
            if (gf[j] != a)
                throw HypothesisError("gcd4: factors " + a.to_string() + " and " + gf[j].to_string() +
                                      " share a reduction but differ over Z4");
            used[j] = true;
            found = true;
            m.common = m.common * a;
            break;
        }
        if (!found) m.f_rest.push_back(a);
    }
    for (std::size_t j = 0; j < gf.size(); ++j)
        if (!used[j]) m.g_rest.push_back(gf[j]);
    return m;
}

}  // namespace

QuadPoly gcd4(const QuadPoly& f, const QuadPoly& g) { return match_factors(f, g).common; }

Gcd4Bezout gcd4_bezout(const QuadPoly& f, const QuadPoly& g) {
    auto m = match_factors(f, g);
    QuadPoly fr = QuadPoly::constant(1), gr = QuadPoly::constant(1);
    for (const auto& p : m.f_rest) fr = fr * p;
    for (const auto& p : m.g_rest) gr = gr * p;
    auto w = is_coprime(fr, gr);
    if (!w) throw Error("gcd4: cofactors are not coprime");
    return {m.common, w->u, w->v};
}

std::vector<QuadPoly> monic_divisors(int n) {
    const auto fac = factor_xn1_z4(n);
    const std::size_t r = fac.size();
    std::vector<QuadPoly> out;
    for (std::size_t mask = 0; mask < (std::size_t{1} << r); ++mask) {
        QuadPoly p = QuadPoly::constant(1);
        for (std::size_t k = 0; k < r; ++k)
            if (mask >> k & 1u) p = p * fac[k];
        out.push_back(std::move(p));
    }
    return out;
}

std::vector<DivisorPair> divisor_pairs(int n) {
    const auto fac = factor_xn1_z4(n);
    const std::size_t r = fac.size();
    std::size_t total = 1;
    for (std::size_t k = 0; k < r; ++k) total *= 3;
    std::vector<DivisorPair> out;
    out.reserve(total);
    for (std::size_t code = 0; code < total; ++code) {
        QuadPoly f = QuadPoly::constant(1), g = QuadPoly::constant(1);
        std::size_t c = code;
        for (std::size_t k = 0; k < r; ++k, c /= 3) {
            const auto choice = c % 3;
            if (choice >= 1) f = f * fac[k];
            if (choice == 2) g = g * fac[k];
        }
        out.push_back({std::move(f), std::move(g)});
    }
    return out;
}

QuadPoly reciprocal(const QuadPoly& f) {
    if (f.is_zero()) throw ArgumentError("reciprocal of the zero polynomial");
    std::vector<std::uint8_t> c(f.coeffs().rbegin(), f.coeffs().rend());
    return QuadPoly(std::move(c));
}

QuadPoly tilde(const QuadPoly& f, int m) {
    if (f.is_zero()) throw ArgumentError("tilde of the zero polynomial");
    if (m <= f.degree())
        throw ArgumentError("tilde needs m > deg f (m = " + std::to_string(m) + ", deg = " + std::to_string(f.degree()) + ")");
    return reciprocal(f).shifted(m - f.degree() - 1);
}

}  // namespace gqc4
