#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace gqc4 {

/// Polynomial over Z2, stored ascending with no trailing zero coefficient.
/// The zero polynomial has an empty coefficient sequence and degree -1.
class BinPoly {
  public:
    static constexpr int kZeroDegree = -1;

    BinPoly() = default;
    /// Coefficients in ascending degree; each is taken mod 2.
    explicit BinPoly(std::vector<std::uint8_t> coeffs);
    BinPoly(std::initializer_list<int> coeffs);

    static BinPoly monomial(int degree);
    static BinPoly one() { return monomial(0); }
    /// x^n + 1
    static BinPoly xn_plus_one(int n);

    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_one() const noexcept { return coeffs_.size() == 1; }
    std::uint8_t operator[](int k) const noexcept {
        return k >= 0 && k < static_cast<int>(coeffs_.size()) ? coeffs_[k] : 0;
    }
    const std::vector<std::uint8_t>& coeffs() const noexcept { return coeffs_; }

    BinPoly derivative() const;

    friend BinPoly operator+(const BinPoly& a, const BinPoly& b);
    friend BinPoly operator-(const BinPoly& a, const BinPoly& b) { return a + b; }
    friend BinPoly operator*(const BinPoly& a, const BinPoly& b);
    friend bool operator==(const BinPoly& a, const BinPoly& b) = default;

    std::string to_string() const;

  private:
    void trim();
    std::vector<std::uint8_t> coeffs_;
};

/// Total order used for deterministic factor lists: by degree, then by the
/// coefficient sequence read from the top degree down.
bool canonical_less(const BinPoly& a, const BinPoly& b);

BinPoly bin_add(const BinPoly& f, const BinPoly& g);

struct BinDivMod {
    BinPoly quotient;
    BinPoly remainder;
};

/// f = q*d + r with deg r < deg d. Throws ArgumentError when d = 0.
BinDivMod bin_divmod(const BinPoly& f, const BinPoly& d);
BinPoly bin_mod(const BinPoly& f, const BinPoly& d);
/// Exact quotient; throws DivisionError if d does not divide f.
BinPoly bin_exact_div(const BinPoly& f, const BinPoly& d);
bool bin_divides(const BinPoly& d, const BinPoly& f);

/// Monic gcd. Throws ArgumentError when both inputs are zero.
BinPoly bin_gcd(const BinPoly& f, const BinPoly& g);

struct BinXgcd {
    BinPoly gcd;
    BinPoly u;
    BinPoly v;  ///< u*f + v*g = gcd
};
BinXgcd bin_xgcd(const BinPoly& f, const BinPoly& g);

bool is_squarefree(const BinPoly& f);
/// Trial division by every polynomial of degree <= deg(f)/2.
bool is_irreducible_trial(const BinPoly& f);

/// Irreducible factors of a squarefree polynomial (Berlekamp), in canonical order.
std::vector<BinPoly> factor_squarefree(const BinPoly& f);

/// Irreducible factors of x^n + 1 over Z2 for odd n >= 1, in canonical order.
std::vector<BinPoly> factor_xn_minus_1(int n);

}  // namespace gqc4
