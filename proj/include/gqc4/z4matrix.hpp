#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace gqc4 {

using Z4Vector = std::vector<std::uint8_t>;

/// Dense row-major matrix over Z4.
class Z4Matrix {
  public:
    Z4Matrix() = default;
    Z4Matrix(int rows, int cols);
    static Z4Matrix from_rows(const std::vector<Z4Vector>& rows, int cols);
    static Z4Matrix identity(int n);

    int rows() const noexcept { return rows_; }
    int cols() const noexcept { return cols_; }
    std::uint8_t at(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
    void set(int r, int c, int v) { data_[static_cast<std::size_t>(r) * cols_ + c] = static_cast<std::uint8_t>(v & 3); }
    std::span<const std::uint8_t> row(int r) const {
        return {data_.data() + static_cast<std::size_t>(r) * cols_, static_cast<std::size_t>(cols_)};
    }
    Z4Vector row_vector(int r) const { return {row(r).begin(), row(r).end()}; }
    void append_row(std::span<const std::uint8_t> v);
    std::vector<Z4Vector> to_rows() const;

    friend bool operator==(const Z4Matrix&, const Z4Matrix&) = default;

  private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<std::uint8_t> data_;
};

/// Module type 4^k1 2^k2 of a Z4-linear code.
struct ModuleType {
    int k1 = 0;
    int k2 = 0;
    int log2_size() const noexcept { return 2 * k1 + k2; }
    /// Throws CapExceededError when the size does not fit 64 bits.
    std::uint64_t size() const;
    friend bool operator==(const ModuleType&, const ModuleType&) = default;
};

/// Standard form: columns permuted so that the matrix reads
///   [ I  A  B ]
///   [ 0 2I 2C ]
/// with k1 unit-pivot rows and k2 rows of pivot 2. `column_perm[j]` is the
/// original index of column j of `form`.
struct StandardForm {
    int k1 = 0;
    int k2 = 0;
    Z4Matrix form;
    std::vector<int> column_perm;
};

StandardForm standard_form(const Z4Matrix& m);
ModuleType module_type(const Z4Matrix& m);
std::uint64_t span_size(const Z4Matrix& m);

/// Generators of {d : M d^T = 0}, in original column order.
Z4Matrix kernel(const Z4Matrix& m);

/// Howell form with respect to the given column order: for every k, the rows
/// whose leading entry sits at position >= k span exactly the part of the row
/// space vanishing on the first k columns.
Z4Matrix howell_form(const Z4Matrix& m);

/// Reduced row space with membership and solving. Each reduced row remembers
/// which combination of the input rows produced it.
class RowSpace {
  public:
    explicit RowSpace(const Z4Matrix& m, bool track_combinations = false);

    int cols() const noexcept { return cols_; }
    ModuleType type() const noexcept { return {k1_, k2_}; }
    bool contains(std::span<const std::uint8_t> v) const;
    /// Coefficients c (one per input row) with sum c_r row_r = v, if v is in the span.
    /// Requires track_combinations.
    std::optional<Z4Vector> solve(std::span<const std::uint8_t> v) const;
    /// Unit-pivot rows first, then pivot-2 rows, in original column order.
    const std::vector<Z4Vector>& reduced_rows() const noexcept { return rows_; }
    const std::vector<int>& pivot_columns() const noexcept { return pivots_; }
    /// true when `other` spans exactly the same module.
    bool same_span(const RowSpace& other) const;

  private:
    int cols_ = 0;
    int inputs_ = 0;
    int k1_ = 0;
    int k2_ = 0;
    bool tracked_ = false;
    std::vector<Z4Vector> rows_;
    std::vector<Z4Vector> combos_;
    std::vector<int> pivots_;
    std::optional<Z4Vector> reduce(std::span<const std::uint8_t> v, Z4Vector* coeffs) const;
};

bool same_span(const Z4Matrix& a, const Z4Matrix& b);

/// Euclidean inner product mod 4.
int dot(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b);

}  // namespace gqc4
