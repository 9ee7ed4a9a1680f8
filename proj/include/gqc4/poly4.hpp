#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gqc4/poly2.hpp"

namespace gqc4 {

/// Polynomial over Z4, ascending coefficients in {0,1,2,3}, no trailing zero.
class QuadPoly {
  public:
    static constexpr int kZeroDegree = -1;

    QuadPoly() = default;
    explicit QuadPoly(std::vector<std::uint8_t> coeffs);
    /// Accepts negative integers (-1 == 3).
    QuadPoly(std::initializer_list<int> coeffs);

    static QuadPoly constant(int c);
    static QuadPoly monomial(int degree, int coeff = 1);
    /// x^n - 1
    static QuadPoly xn_minus_one(int n);
    /// Lift with coefficients in {0,1}.
    static QuadPoly lift(const BinPoly& p);

    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    std::uint8_t lead() const noexcept { return coeffs_.empty() ? 0 : coeffs_.back(); }
    bool is_monic() const noexcept { return lead() == 1; }
    bool has_unit_lead() const noexcept { return (lead() & 1u) != 0; }
    std::uint8_t operator[](int k) const noexcept {
        return k >= 0 && k < static_cast<int>(coeffs_.size()) ? coeffs_[k] : 0;
    }
    const std::vector<std::uint8_t>& coeffs() const noexcept { return coeffs_; }

    /// Every coefficient even.
    bool is_even() const noexcept;
    /// For an even polynomial 2p, returns p mod 2.
    BinPoly half() const;

    friend QuadPoly operator+(const QuadPoly& a, const QuadPoly& b);
    friend QuadPoly operator-(const QuadPoly& a, const QuadPoly& b);
    friend QuadPoly operator-(const QuadPoly& a);
    friend QuadPoly operator*(const QuadPoly& a, const QuadPoly& b);
    friend QuadPoly operator*(int s, const QuadPoly& a);
    friend bool operator==(const QuadPoly& a, const QuadPoly& b) = default;
    QuadPoly& operator+=(const QuadPoly& b) { return *this = *this + b; }
    QuadPoly& operator-=(const QuadPoly& b) { return *this = *this - b; }

    /// Multiply by x^k.
    QuadPoly shifted(int k) const;
    /// Reduce modulo x^m - 1 (fold exponents mod m).
    QuadPoly mod_xn1(int m) const;

    std::string to_string() const;

  private:
    void trim();
    std::vector<std::uint8_t> coeffs_;
};

QuadPoly quad_add(const QuadPoly& f, const QuadPoly& g);
QuadPoly quad_sub(const QuadPoly& f, const QuadPoly& g);
QuadPoly quad_mul(const QuadPoly& f, const QuadPoly& g);

struct QuadDivMod {
    QuadPoly quotient;
    QuadPoly remainder;
};

/// f = q*d + r, deg r < deg d. The leading coefficient of d must be a unit;
/// throws DivisionError otherwise (including d = 0).
QuadDivMod quad_divmod(const QuadPoly& f, const QuadPoly& d);
QuadPoly quad_mod(const QuadPoly& f, const QuadPoly& d);
/// Throws DivisionError when the remainder is nonzero.
QuadPoly quad_exact_div(const QuadPoly& f, const QuadPoly& d);

BinPoly reduce_mod2(const QuadPoly& f);

/// Multiply by the unit making the leading coefficient 1; requires a unit lead.
QuadPoly make_monic(const QuadPoly& f);

struct Bezout {
    QuadPoly u;
    QuadPoly v;  ///< u*f + v*g = 1 over Z4
};

/// Coprimality over Z4 (equivalently of the mod-2 reductions), with witness.
std::optional<Bezout> is_coprime(const QuadPoly& f, const QuadPoly& g);

/// Inverse of a modulo p (p with unit leading coefficient). nullopt when not invertible.
std::optional<QuadPoly> inverse_mod(const QuadPoly& a, const QuadPoly& p);
/// x^e mod p for any integer e (negative exponents need x invertible mod p).
QuadPoly x_power_mod(long e, const QuadPoly& p);

/// The unique monic divisor of x^n - 1 over Z4 reducing to t (n odd, t | x^n+1).
QuadPoly hensel_lift(const BinPoly& t, int n);

/// Hensel lifts of factor_xn_minus_1(n), same order.
std::vector<QuadPoly> factor_xn1_z4(int n);

/// Factor a monic polynomial whose mod-2 reduction is squarefree into pairwise
/// coprime monic basic irreducibles, ordered by their reductions.
std::vector<QuadPoly> basic_irreducible_factors(const QuadPoly& f);

/// Greatest common monic divisor of two monic polynomials with squarefree
/// reductions, computed factorwise. Throws HypothesisError outside that domain.
QuadPoly gcd4(const QuadPoly& f, const QuadPoly& g);

struct Gcd4Bezout {
    QuadPoly gcd;
    QuadPoly u;
    QuadPoly v;  ///< u*f + v*g = gcd
};
Gcd4Bezout gcd4_bezout(const QuadPoly& f, const QuadPoly& g);

struct DivisorPair {
    QuadPoly f;
    QuadPoly g;  ///< g | f | x^n - 1
};

/// All 3^r monic pairs g | f | x^n-1, enumerated by assigning each basic
/// irreducible factor (in factor order, first factor least significant) to
/// neither / f only / both.
std::vector<DivisorPair> divisor_pairs(int n);

/// Monic divisors of x^n-1 over Z4 (2^r of them), indexed by factor subset bitmask.
std::vector<QuadPoly> monic_divisors(int n);

/// f*(x) = x^{deg f} f(1/x). Throws ArgumentError on the zero polynomial.
QuadPoly reciprocal(const QuadPoly& f);
/// f*(x) x^{m - deg f - 1}. Requires m > deg f.
QuadPoly tilde(const QuadPoly& f, int m);

}  // namespace gqc4
