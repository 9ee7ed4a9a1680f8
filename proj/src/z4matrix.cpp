#include "gqc4/z4matrix.hpp"

#include <algorithm>

#include "gqc4/error.hpp"

namespace gqc4 {

namespace {

// a -= s * b (mod 4)
void axpy_sub(Z4Vector& a, const Z4Vector& b, unsigned s) {
    s &= 3u;
    if (!s) return;
    for (std::size_t k = 0; k < a.size(); ++k) a[k] = static_cast<std::uint8_t>((a[k] + 4u * 4u - s * b[k]) & 3u);
}

void scale(Z4Vector& a, unsigned s) {
    for (auto& x : a) x = static_cast<std::uint8_t>((x * s) & 3u);
}

bool is_zero(const Z4Vector& v) {
    return std::all_of(v.begin(), v.end(), [](std::uint8_t x) { return x == 0; });
}

}  // namespace

Z4Matrix::Z4Matrix(int rows, int cols)
    : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, 0) {
    if (rows < 0 || cols < 0) throw ArgumentError("negative matrix dimension");
}

Z4Matrix Z4Matrix::from_rows(const std::vector<Z4Vector>& rows, int cols) {
    Z4Matrix m(0, cols);
    for (const auto& r : rows) m.append_row(r);
    return m;
}

Z4Matrix Z4Matrix::identity(int n) {
    Z4Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

void Z4Matrix::append_row(std::span<const std::uint8_t> v) {
    if (static_cast<int>(v.size()) != cols_) throw ArgumentError("row length does not match matrix width");
    for (auto x : v) data_.push_back(static_cast<std::uint8_t>(x & 3u));
    ++rows_;
}

std::vector<Z4Vector> Z4Matrix::to_rows() const {
    std::vector<Z4Vector> out;
    for (int r = 0; r < rows_; ++r) out.push_back(row_vector(r));
    return out;
}

std::uint64_t ModuleType::size() const {
    if (log2_size() >= 64) throw CapExceededError("code size 2^" + std::to_string(log2_size()) + " exceeds 64 bits");
    return std::uint64_t{1} << log2_size();
}

RowSpace::RowSpace(const Z4Matrix& m, bool track_combinations)
    : cols_(m.cols()), inputs_(m.rows()), tracked_(track_combinations) {
    std::vector<Z4Vector> rows = m.to_rows();
    std::vector<Z4Vector> combos;
    if (tracked_) {
        combos.assign(rows.size(), Z4Vector(rows.size(), 0));
        for (std::size_t r = 0; r < rows.size(); ++r) combos[r][r] = 1;
    }
    const int nrows = static_cast<int>(rows.size());
    std::vector<int> kind(rows.size(), 0);  // 0 free, 1 unit pivot, 2 two-pivot
    std::vector<int> unit_rows, two_rows;
    auto sub = [&](int target, int src, unsigned s) {
        axpy_sub(rows[target], rows[src], s);
        if (tracked_) axpy_sub(combos[target], combos[src], s);
    };

    // Unit pivots, leftmost column first, lowest row index among candidates.
    while (true) {
        int pc = -1, pr = -1;
        for (int c = 0; c < cols_ && pc < 0; ++c)
            for (int r = 0; r < nrows; ++r)
                if (!kind[r] && (rows[r][c] & 1u)) {
                    pc = c;
                    pr = r;
                    break;
                }
        if (pc < 0) break;
        const unsigned inv = rows[pr][pc];
        scale(rows[pr], inv);
        if (tracked_) scale(combos[pr], inv);
        for (int r = 0; r < nrows; ++r)
            if (r != pr) sub(r, pr, rows[r][pc]);
        kind[pr] = 1;
        unit_rows.push_back(pr);
        pivots_.push_back(pc);
    }
    std::vector<int> two_pivots;
    while (true) {
        int pc = -1, pr = -1;
        for (int c = 0; c < cols_ && pc < 0; ++c)
            for (int r = 0; r < nrows; ++r)
                if (!kind[r] && rows[r][c]) {
                    pc = c;
                    pr = r;
                    break;
                }
        if (pc < 0) break;
        for (int r = 0; r < nrows; ++r) {
            if (r == pr) continue;
            if (rows[r][pc] >= 2) sub(r, pr, 1);
        }
        kind[pr] = 2;
        two_rows.push_back(pr);
        two_pivots.push_back(pc);
    }
    k1_ = static_cast<int>(unit_rows.size());
    k2_ = static_cast<int>(two_rows.size());
    for (int r : unit_rows) {
        rows_.push_back(rows[r]);
        if (tracked_) combos_.push_back(combos[r]);
    }
    for (int r : two_rows) {
        rows_.push_back(rows[r]);
        if (tracked_) combos_.push_back(combos[r]);
    }
    pivots_.insert(pivots_.end(), two_pivots.begin(), two_pivots.end());
}

std::optional<Z4Vector> RowSpace::reduce(std::span<const std::uint8_t> v, Z4Vector* coeffs) const {
    if (static_cast<int>(v.size()) != cols_) throw ArgumentError("vector length does not match row space");
    Z4Vector w(v.begin(), v.end());
    for (auto& x : w) x &= 3u;
    for (int i = 0; i < k1_; ++i) {
        const unsigned c = w[pivots_[i]];
        if (!c) continue;
        axpy_sub(w, rows_[i], c);
        if (coeffs) axpy_sub(*coeffs, combos_[i], 4u - c);
    }
    for (int i = k1_; i < k1_ + k2_; ++i) {
        const unsigned c = w[pivots_[i]];
        if (c & 1u) return std::nullopt;
        if (!c) continue;
        axpy_sub(w, rows_[i], 1);
        if (coeffs) axpy_sub(*coeffs, combos_[i], 3);
    }
    if (!is_zero(w)) return std::nullopt;
    return w;
}

bool RowSpace::contains(std::span<const std::uint8_t> v) const { return reduce(v, nullptr).has_value(); }

std::optional<Z4Vector> RowSpace::solve(std::span<const std::uint8_t> v) const {
    if (!tracked_) throw ArgumentError("RowSpace::solve needs combination tracking");
    Z4Vector coeffs(static_cast<std::size_t>(inputs_), 0);
    if (!reduce(v, &coeffs)) return std::nullopt;
    return coeffs;
}

bool RowSpace::same_span(const RowSpace& other) const {
    if (cols_ != other.cols_ || type() != other.type()) return false;
    return std::all_of(other.rows_.begin(), other.rows_.end(), [&](const Z4Vector& r) { return contains(r); });
}

bool same_span(const Z4Matrix& a, const Z4Matrix& b) { return RowSpace(a).same_span(RowSpace(b)); }

StandardForm standard_form(const Z4Matrix& m) {
    RowSpace rs(m);
    StandardForm sf;
    sf.k1 = rs.type().k1;
    sf.k2 = rs.type().k2;
    std::vector<bool> used(static_cast<std::size_t>(m.cols()), false);
    for (int p : rs.pivot_columns()) {
        sf.column_perm.push_back(p);
        used[p] = true;
    }
    for (int c = 0; c < m.cols(); ++c)
        if (!used[c]) sf.column_perm.push_back(c);
    sf.form = Z4Matrix(0, m.cols());
    for (const auto& r : rs.reduced_rows()) {
        Z4Vector p(r.size());
        for (std::size_t j = 0; j < p.size(); ++j) p[j] = r[sf.column_perm[j]];
        sf.form.append_row(p);
    }
    return sf;
}

ModuleType module_type(const Z4Matrix& m) { return RowSpace(m).type(); }

std::uint64_t span_size(const Z4Matrix& m) { return module_type(m).size(); }

Z4Matrix kernel(const Z4Matrix& m) {
    const StandardForm sf = standard_form(m);
    const int n = m.cols(), k1 = sf.k1, k2 = sf.k2, rest = n - k1 - k2;
    const Z4Matrix& t = sf.form;
    auto a = [&](int i, int s) { return static_cast<int>(t.at(i, k1 + s)); };
    auto b = [&](int i, int j) { return static_cast<int>(t.at(i, k1 + k2 + j)); };
    auto c = [&](int s, int j) { return static_cast<int>(t.at(k1 + s, k1 + k2 + j) >> 1); };

    Z4Matrix out(0, n);
    auto emit = [&](const std::vector<int>& permuted) {
        Z4Vector v(static_cast<std::size_t>(n), 0);
        for (int j = 0; j < n; ++j) v[sf.column_perm[j]] = static_cast<std::uint8_t>(((permuted[j] % 4) + 4) % 4);
        out.append_row(v);
    };
    // Free coordinates d3 = e_j: d2 = -C e_j, d1 = -A d2 - B e_j.
    for (int j = 0; j < rest; ++j) {
        std::vector<int> d(static_cast<std::size_t>(n), 0);
        d[k1 + k2 + j] = 1;
        for (int s = 0; s < k2; ++s) d[k1 + s] = -c(s, j);
        for (int i = 0; i < k1; ++i) {
            int acc = b(i, j);
            for (int s = 0; s < k2; ++s) acc += a(i, s) * d[k1 + s];
            d[i] = -acc;
        }
        emit(d);
    }
    // Order-2 directions d2 = 2 e_s.
    for (int s = 0; s < k2; ++s) {
        std::vector<int> d(static_cast<std::size_t>(n), 0);
        d[k1 + s] = 2;
        for (int i = 0; i < k1; ++i) d[i] = -2 * a(i, s);
        emit(d);
    }
    return out;
}

Z4Matrix howell_form(const Z4Matrix& m) {
    std::vector<Z4Vector> pool = m.to_rows();
    std::vector<Z4Vector> result;
    std::vector<int> result_pivot;
    const int n = m.cols();
    for (int c = 0; c < n; ++c) {
        pool.erase(std::remove_if(pool.begin(), pool.end(), is_zero), pool.end());
        int pick = -1;
        for (std::size_t r = 0; r < pool.size(); ++r)
            if (pool[r][c] & 1u) {
                pick = static_cast<int>(r);
                break;
            }
        if (pick < 0)
            for (std::size_t r = 0; r < pool.size(); ++r)
                if (pool[r][c]) {
                    pick = static_cast<int>(r);
                    break;
                }
        if (pick < 0) continue;
        Z4Vector p = pool[pick];
        pool.erase(pool.begin() + pick);
        const bool unit = p[c] & 1u;
        if (unit) scale(p, p[c]);
        for (auto& r : pool) {
            if (unit) axpy_sub(r, p, r[c]);
            else if (r[c] == 2) axpy_sub(r, p, 1);
        }
        for (auto& r : result) {
            if (unit) axpy_sub(r, p, r[c]);
            else if (r[c] >= 2) axpy_sub(r, p, 1);
        }
        if (!unit) {
            Z4Vector twice = p;
            scale(twice, 2);
            if (!is_zero(twice)) pool.push_back(std::move(twice));
        }
        result.push_back(std::move(p));
        result_pivot.push_back(c);
    }
    return Z4Matrix::from_rows(result, n);
}

int dot(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b) {
    if (a.size() != b.size()) throw ArgumentError("dot product of vectors of different lengths");
    unsigned s = 0;
    for (std::size_t k = 0; k < a.size(); ++k) s += static_cast<unsigned>(a[k]) * b[k];
    return static_cast<int>(s & 3u);
}

}  // namespace gqc4
