#include "gqc4/poly2.hpp"

#include <algorithm>

#include "gqc4/error.hpp"

namespace gqc4 {

BinPoly::BinPoly(std::vector<std::uint8_t> coeffs) : coeffs_(std::move(coeffs)) {
    for (auto& c : coeffs_) c &= 1u;
    trim();
}

BinPoly::BinPoly(std::initializer_list<int> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (int c : coeffs) coeffs_.push_back(static_cast<std::uint8_t>(((c % 2) + 2) % 2));
    trim();
}

BinPoly BinPoly::monomial(int degree) {
    if (degree < 0) throw ArgumentError("monomial degree must be non-negative");
    std::vector<std::uint8_t> c(static_cast<std::size_t>(degree) + 1, 0);
    c.back() = 1;
    return BinPoly(std::move(c));
}

BinPoly BinPoly::xn_plus_one(int n) {
    if (n <= 0) throw ArgumentError("x^n+1 needs n >= 1");
    std::vector<std::uint8_t> c(static_cast<std::size_t>(n) + 1, 0);
    c.front() = 1;
    c.back() = 1;
    return BinPoly(std::move(c));
}

void BinPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BinPoly BinPoly::derivative() const {
    std::vector<std::uint8_t> d;
    for (std::size_t k = 1; k < coeffs_.size(); ++k) d.push_back(static_cast<std::uint8_t>((k & 1u) ? coeffs_[k] : 0));
    return BinPoly(std::move(d));
}

BinPoly operator+(const BinPoly& a, const BinPoly& b) {
    std::vector<std::uint8_t> c(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
    for (std::size_t k = 0; k < a.coeffs_.size(); ++k) c[k] ^= a.coeffs_[k];
    for (std::size_t k = 0; k < b.coeffs_.size(); ++k) c[k] ^= b.coeffs_[k];
    return BinPoly(std::move(c));
}

BinPoly operator*(const BinPoly& a, const BinPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<std::uint8_t> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (!a.coeffs_[i]) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] ^= b.coeffs_[j];
    }
    return BinPoly(std::move(c));
}

std::string BinPoly::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
        if (!coeffs_[k]) continue;
        if (!out.empty()) out += '+';
        if (k == 0) out += '1';
        else if (k == 1) out += 'x';
        else out += "x^" + std::to_string(k);
    }
    return out;
}

bool canonical_less(const BinPoly& a, const BinPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int k = a.degree(); k >= 0; --k)
        if (a[k] != b[k]) return a[k] < b[k];
    return false;
}

BinPoly bin_add(const BinPoly& f, const BinPoly& g) { return f + g; }

BinDivMod bin_divmod(const BinPoly& f, const BinPoly& d) {
    if (d.is_zero()) throw ArgumentError("division by the zero polynomial over Z2");
    std::vector<std::uint8_t> r = f.coeffs();
    const int dd = d.degree();
    if (f.degree() < dd) return {BinPoly{}, f};
    std::vector<std::uint8_t> q(static_cast<std::size_t>(f.degree() - dd) + 1, 0);
    for (int k = f.degree(); k >= dd; --k) {
        if (!r[k]) continue;
        q[k - dd] = 1;
        for (int j = 0; j <= dd; ++j) r[k - dd + j] ^= d[j];
    }
    return {BinPoly(std::move(q)), BinPoly(std::move(r))};
}

BinPoly bin_mod(const BinPoly& f, const BinPoly& d) { return bin_divmod(f, d).remainder; }

BinPoly bin_exact_div(const BinPoly& f, const BinPoly& d) {
    auto [q, r] = bin_divmod(f, d);
    if (!r.is_zero()) throw DivisionError(d.to_string() + " does not divide " + f.to_string() + " over Z2");
    return q;
}

bool bin_divides(const BinPoly& d, const BinPoly& f) {
    if (d.is_zero()) return f.is_zero();
    return bin_mod(f, d).is_zero();
}

BinXgcd bin_xgcd(const BinPoly& f, const BinPoly& g) {
    if (f.is_zero() && g.is_zero()) throw ArgumentError("gcd of two zero polynomials is undefined");
    // Invariants: r0 = u0 f + v0 g, r1 = u1 f + v1 g.
    BinPoly r0 = f, r1 = g, u0 = BinPoly::one(), u1, v0, v1 = BinPoly::one();
    while (!r1.is_zero()) {
        auto [q, r] = bin_divmod(r0, r1);
        BinPoly u2 = u0 + q * u1;
        BinPoly v2 = v0 + q * v1;
        r0 = std::move(r1);
        r1 = std::move(r);
        u0 = std::move(u1);
        u1 = std::move(u2);
        v0 = std::move(v1);
        v1 = std::move(v2);
    }
    return {r0, u0, v0};  // leading coefficient is already 1 over Z2
}

BinPoly bin_gcd(const BinPoly& f, const BinPoly& g) { return bin_xgcd(f, g).gcd; }

bool is_squarefree(const BinPoly& f) {
    if (f.is_zero()) return false;
    if (f.degree() == 0) return true;
    return bin_gcd(f, f.derivative()).is_one();
}

bool is_irreducible_trial(const BinPoly& f) {
    const int d = f.degree();
    if (d < 1) return false;
    for (int dd = 1; dd <= d / 2; ++dd) {
        // every polynomial with leading term x^dd
        const std::uint64_t count = std::uint64_t{1} << dd;
        for (std::uint64_t low = 0; low < count; ++low) {
            std::vector<std::uint8_t> c(static_cast<std::size_t>(dd) + 1, 0);
            for (int k = 0; k < dd; ++k) c[k] = static_cast<std::uint8_t>((low >> k) & 1u);
            c[dd] = 1;
            if (bin_divides(BinPoly(std::move(c)), f)) return false;
        }
    }
    return true;
}

namespace {

// Basis of {v : v^2 = v mod f} as polynomials (Berlekamp subalgebra).
std::vector<BinPoly> berlekamp_basis(const BinPoly& f) {
    const int d = f.degree();
    // q[i] = x^{2i} mod f, row i of Q.
    std::vector<std::vector<std::uint8_t>> q(d, std::vector<std::uint8_t>(d, 0));
    for (int i = 0; i < d; ++i) {
        BinPoly r = bin_mod(BinPoly::monomial(2 * i), f);
        for (int j = 0; j < d; ++j) q[i][j] = r[j];
    }
    // Solve v (Q - I) = 0: system with rows j, columns i.
    std::vector<std::vector<std::uint8_t>> a(d, std::vector<std::uint8_t>(d, 0));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) a[j][i] = static_cast<std::uint8_t>(q[i][j] ^ (i == j ? 1 : 0));
    std::vector<int> pivot_col;
    int row = 0;
    for (int col = 0; col < d && row < d; ++col) {
        int p = -1;
        for (int r = row; r < d; ++r)
            if (a[r][col]) {
                p = r;
                break;
            }
        if (p < 0) continue;
        std::swap(a[p], a[row]);
        for (int r = 0; r < d; ++r)
            if (r != row && a[r][col])
                for (int c = 0; c < d; ++c) a[r][c] ^= a[row][c];
        pivot_col.push_back(col);
        ++row;
    }
    std::vector<bool> is_pivot(d, false);
    for (int c : pivot_col) is_pivot[c] = true;
    std::vector<BinPoly> basis;
    for (int free = 0; free < d; ++free) {
        if (is_pivot[free]) continue;
        std::vector<std::uint8_t> v(d, 0);
        v[free] = 1;
        for (std::size_t r = 0; r < pivot_col.size(); ++r) v[pivot_col[r]] = a[r][free];
        basis.emplace_back(std::move(v));
    }
    return basis;
}

}  // namespace

std::vector<BinPoly> factor_squarefree(const BinPoly& f) {
    if (f.is_zero()) throw ArgumentError("cannot factor the zero polynomial");
    if (!is_squarefree(f)) throw ArgumentError("polynomial " + f.to_string() + " is not squarefree");
    if (f.degree() == 0) return {};
    const auto basis = berlekamp_basis(f);
    const std::size_t target = basis.size();
    std::vector<BinPoly> factors{f};
    for (const auto& v : basis) {
        if (factors.size() == target) break;
        if (v.degree() <= 0) continue;
        std::vector<BinPoly> next;
        for (const auto& h : factors) {
            if (h.degree() <= 1) {
                next.push_back(h);
                continue;
            }
            BinPoly g = bin_gcd(h, bin_mod(v, h));
            if (g.degree() > 0 && g.degree() < h.degree()) {
                next.push_back(bin_exact_div(h, g));
                next.push_back(std::move(g));
            } else {
                next.push_back(h);
            }
        }
        factors = std::move(next);
    }
    std::sort(factors.begin(), factors.end(), canonical_less);
    return factors;
}

std::vector<BinPoly> factor_xn_minus_1(int n) {
    if (n <= 0 || n % 2 == 0) throw ArgumentError("x^n-1 factorization needs odd n >= 1, got " + std::to_string(n));
    return factor_squarefree(BinPoly::xn_plus_one(n));
}

}  // namespace gqc4
