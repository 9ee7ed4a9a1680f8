#pragma once

#include <string>
#include <vector>

#include "gqc4/poly4.hpp"
#include "gqc4/z4matrix.hpp"

namespace gqc4 {

/// Block lengths (m_1, ..., m_l); every m_i odd and positive. Block indices
/// in this API are 0-based.
class BlockLengths {
  public:
    BlockLengths() = default;
    explicit BlockLengths(std::vector<int> lengths);

    int index() const noexcept { return static_cast<int>(m_.size()); }
    int operator[](int i) const { return m_.at(static_cast<std::size_t>(i)); }
    const std::vector<int>& values() const noexcept { return m_; }
    /// n = m_1 + ... + m_l
    int total() const noexcept { return total_; }
    /// lcm(m_1, ..., m_l)
    long lcm() const noexcept { return lcm_; }
    /// Position of block i inside the length-n vector.
    int offset(int i) const { return offsets_.at(static_cast<std::size_t>(i)); }
    /// First i blocks.
    BlockLengths prefix(int count) const;
    std::string to_string() const;

    friend bool operator==(const BlockLengths& a, const BlockLengths& b) { return a.m_ == b.m_; }

  private:
    std::vector<int> m_;
    std::vector<int> offsets_;
    int total_ = 0;
    long lcm_ = 1;
};

/// Element (c_1(x) | ... | c_l(x)) of R = R_1 x ... x R_l, each block reduced
/// modulo x^{m_i} - 1.
struct ModuleElement {
    std::vector<QuadPoly> blocks;
    friend bool operator==(const ModuleElement&, const ModuleElement&) = default;
    bool is_zero() const;
};

ModuleElement zero_element(const BlockLengths& lengths);
/// Reduces every block modulo x^{m_i} - 1.
ModuleElement make_element(const BlockLengths& lengths, std::vector<QuadPoly> blocks);
ModuleElement add(const ModuleElement& a, const ModuleElement& b, const BlockLengths& lengths);
ModuleElement sub(const ModuleElement& a, const ModuleElement& b, const BlockLengths& lengths);
ModuleElement scale(int s, const ModuleElement& a, const BlockLengths& lengths);

/// alpha * (c_1 | ... | c_l) = (alpha c_1 | ... | alpha c_l), reduced blockwise.
ModuleElement star_multiply(const QuadPoly& alpha, const ModuleElement& c, const BlockLengths& lengths);
/// Simultaneous cyclic shift of every block (equals x * c).
ModuleElement cyclic_shift(const ModuleElement& c, const BlockLengths& lengths);
/// pi_i(c) = c_i(x); i is 0-based.
QuadPoly projection(const ModuleElement& c, int i);

Z4Vector to_vector(const ModuleElement& c, const BlockLengths& lengths);
ModuleElement from_vector(std::span<const std::uint8_t> v, const BlockLengths& lengths);

/// GQC code given by a generating set of its Z4[x]-module.
struct GqcCode {
    BlockLengths lengths;
    std::vector<ModuleElement> generators;

    static GqcCode zero(const BlockLengths& lengths);
    static GqcCode whole_space(const BlockLengths& lengths);
};

/// Lower-triangular generating set a_1..a_l with diagonals F_ii = f_i + 2 g_i,
/// g_i | f_i | x^{m_i} - 1. An absent diagonal has f_i = g_i = x^{m_i} - 1 and a
/// zero row.
struct NormalizedGenSet {
    BlockLengths lengths;
    std::vector<ModuleElement> rows;
    std::vector<QuadPoly> f;
    std::vector<QuadPoly> g;
    /// Notes from the degree-ordering pass (exempt or unresolved entries).
    std::vector<std::string> diagnostics;

    int t(int i) const { return f.at(i).degree(); }
    int k(int i) const { return g.at(i).degree(); }
    /// f_i + 2 g_i as an unreduced polynomial.
    QuadPoly diagonal(int i) const { return f.at(i) + 2 * g.at(i); }
    bool is_zero_column(int i) const;
    /// f_i = x^{m_i} - 1 but g_i is a proper divisor: the diagonal is 2 g_i.
    bool is_torsion_column(int i) const;
    /// g_i = f_i, i.e. F_ii = 3 f_i divides x^{m_i} - 1.
    bool is_free_column(int i) const { return f.at(i) == g.at(i); }
};

/// Prop-3 style spanning set over Z4.
struct MinGenSet {
    std::vector<int> t;
    std::vector<int> k;
    std::vector<QuadPoly> h;                     ///< (x^{m_i}-1)/f_i
    std::vector<std::vector<ModuleElement>> s1;  ///< x^u * a_i, u < m_i - t_i
    std::vector<std::vector<ModuleElement>> s2;  ///< x^u * h_i a_i, u < t_i - k_i
    /// All elements, block by block: s1[0], s2[0], s1[1], ...
    std::vector<ModuleElement> elements() const;
    /// true for elements of the s2 families, in elements() order.
    std::vector<bool> torsion_flags() const;
};

/// Z4-span of every shift of every generator, as a matrix (one row per shift).
Z4Matrix shift_span_matrix(const GqcCode& code);

NormalizedGenSet normalize(const GqcCode& code);

/// Checks the structural invariants of a normalized set; returns a list of
/// violations (empty when valid).
std::vector<std::string> check_normalized(const NormalizedGenSet& ngs);

/// Strict degree chain per column among monic nonzero entries. Returns
/// violations; entries with non-unit leading coefficients are skipped and
/// reported in `exempt` when given.
std::vector<std::string> degree_chain_violations(const NormalizedGenSet& ngs,
                                                 std::vector<std::string>* exempt = nullptr);

/// Throws ArgumentError when the set violates its invariants.
MinGenSet min_gen_set(const NormalizedGenSet& ngs);

ModuleType cardinality(const NormalizedGenSet& ngs);
ModuleType cardinality(const GqcCode& code);

/// Triangular reduction, last block first.
bool membership(const NormalizedGenSet& ngs, const ModuleElement& v);

Z4Matrix generator_matrix(const MinGenSet& mgs, const BlockLengths& lengths);
Z4Matrix generator_matrix(const NormalizedGenSet& ngs);
Z4Matrix generator_matrix(const GqcCode& code);

/// The code generated by the rows of a normalized set.
GqcCode as_code(const NormalizedGenSet& ngs);

std::string to_string(const ModuleElement& c);

}  // namespace gqc4
