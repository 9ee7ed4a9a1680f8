#include "gqc4/gqc.hpp"

#include <algorithm>
#include <numeric>

#include "gqc4/error.hpp"

namespace gqc4 {

BlockLengths::BlockLengths(std::vector<int> lengths) : m_(std::move(lengths)) {
    if (m_.empty()) throw ArgumentError("a GQC code needs at least one block");
    for (int m : m_) {
        if (m <= 0 || m % 2 == 0) throw ArgumentError("block lengths must be odd and positive, got " + std::to_string(m));
        offsets_.push_back(total_);
        total_ += m;
        lcm_ = std::lcm(lcm_, static_cast<long>(m));
    }
}

BlockLengths BlockLengths::prefix(int count) const {
    if (count < 1 || count > index()) throw ArgumentError("truncation index out of range");
    return BlockLengths(std::vector<int>(m_.begin(), m_.begin() + count));
}

std::string BlockLengths::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < m_.size(); ++i) s += (i ? "," : "") + std::to_string(m_[i]);
    return s + ")";
}

bool ModuleElement::is_zero() const {
    return std::all_of(blocks.begin(), blocks.end(), [](const QuadPoly& p) { return p.is_zero(); });
}

ModuleElement zero_element(const BlockLengths& lengths) {
    return ModuleElement{std::vector<QuadPoly>(static_cast<std::size_t>(lengths.index()))};
}

ModuleElement make_element(const BlockLengths& lengths, std::vector<QuadPoly> blocks) {
    if (static_cast<int>(blocks.size()) != lengths.index())
        throw ArgumentError("element has " + std::to_string(blocks.size()) + " blocks, expected " +
                            std::to_string(lengths.index()));
    for (int i = 0; i < lengths.index(); ++i) blocks[i] = blocks[i].mod_xn1(lengths[i]);
    return ModuleElement{std::move(blocks)};
}

namespace {
void check_shape(const ModuleElement& a, const BlockLengths& lengths) {
    if (static_cast<int>(a.blocks.size()) != lengths.index()) throw ArgumentError("element does not match block lengths");
}
}  // namespace

ModuleElement add(const ModuleElement& a, const ModuleElement& b, const BlockLengths& lengths) {
    check_shape(a, lengths);
    check_shape(b, lengths);
    ModuleElement out = a;
    for (int i = 0; i < lengths.index(); ++i) out.blocks[i] += b.blocks[i];
    return out;
}

ModuleElement sub(const ModuleElement& a, const ModuleElement& b, const BlockLengths& lengths) {
    check_shape(a, lengths);
    check_shape(b, lengths);
    ModuleElement out = a;
    for (int i = 0; i < lengths.index(); ++i) out.blocks[i] -= b.blocks[i];
    return out;
}

ModuleElement scale(int s, const ModuleElement& a, const BlockLengths& lengths) {
    check_shape(a, lengths);
    ModuleElement out = a;
    for (auto& p : out.blocks) p = s * p;
    return out;
}

ModuleElement star_multiply(const QuadPoly& alpha, const ModuleElement& c, const BlockLengths& lengths) {
    check_shape(c, lengths);
    ModuleElement out;
    for (int i = 0; i < lengths.index(); ++i) out.blocks.push_back((alpha * c.blocks[i]).mod_xn1(lengths[i]));
    return out;
}

ModuleElement cyclic_shift(const ModuleElement& c, const BlockLengths& lengths) {
    check_shape(c, lengths);
    ModuleElement out;
    for (int i = 0; i < lengths.index(); ++i) out.blocks.push_back(c.blocks[i].shifted(1).mod_xn1(lengths[i]));
    return out;
}

QuadPoly projection(const ModuleElement& c, int i) {
    if (i < 0 || i >= static_cast<int>(c.blocks.size())) throw ArgumentError("projection index out of range");
    return c.blocks[i];
}

Z4Vector to_vector(const ModuleElement& c, const BlockLengths& lengths) {
    check_shape(c, lengths);
    Z4Vector v(static_cast<std::size_t>(lengths.total()), 0);
    for (int i = 0; i < lengths.index(); ++i) {
        const QuadPoly p = c.blocks[i].mod_xn1(lengths[i]);
        for (int k = 0; k <= p.degree(); ++k) v[lengths.offset(i) + k] = p[k];
    }
    return v;
}

ModuleElement from_vector(std::span<const std::uint8_t> v, const BlockLengths& lengths) {
    if (static_cast<int>(v.size()) != lengths.total()) throw ArgumentError("vector length does not match block lengths");
    ModuleElement out;
    for (int i = 0; i < lengths.index(); ++i) {
        auto s = v.subspan(lengths.offset(i), lengths[i]);
        out.blocks.emplace_back(std::vector<std::uint8_t>(s.begin(), s.end()));
    }
    return out;
}

GqcCode GqcCode::zero(const BlockLengths& lengths) { return {lengths, {zero_element(lengths)}}; }

GqcCode GqcCode::whole_space(const BlockLengths& lengths) {
    GqcCode c{lengths, {}};
    for (int i = 0; i < lengths.index(); ++i) {
        auto e = zero_element(lengths);
        e.blocks[i] = QuadPoly::constant(1);
        c.generators.push_back(std::move(e));
    }
    return c;
}

bool NormalizedGenSet::is_zero_column(int i) const {
    const auto full = QuadPoly::xn_minus_one(lengths[i]);
    return f.at(i) == full && g.at(i) == full;
}

bool NormalizedGenSet::is_torsion_column(int i) const {
    return f.at(i) == QuadPoly::xn_minus_one(lengths[i]) && g.at(i) != f.at(i);
}

Z4Matrix shift_span_matrix(const GqcCode& code) {
    const auto& L = code.lengths;
    Z4Matrix m(0, L.total());
    for (const auto& gen : code.generators) {
        ModuleElement cur = make_element(L, gen.blocks);
        for (long u = 0; u < L.lcm(); ++u) {
            m.append_row(to_vector(cur, L));
            cur = cyclic_shift(cur, L);
        }
    }
    return m;
}

namespace {

BinPoly block_poly_mod2(std::span<const std::uint8_t> v) { return BinPoly(std::vector<std::uint8_t>(v.begin(), v.end())); }

// Subtract the multiple of row i that reduces entry (k, i) against the diagonal.
bool reduce_against_diagonal(NormalizedGenSet& ngs, int k, int i) {
    const auto& L = ngs.lengths;
    ModuleElement& ak = ngs.rows[k];
    const ModuleElement& ai = ngs.rows[i];
    const QuadPoly& entry = ak.blocks[i];
    if (entry.is_zero() || ngs.is_zero_column(i)) return false;
    QuadPoly q;
    if (ngs.is_torsion_column(i)) {
        // Diagonal is 2g: only the 2-part of the entry can be reduced, modulo g.
        const QuadPoly odd = QuadPoly::lift(reduce_mod2(entry));
        const BinPoly two_part = (entry - odd).half();
        q = QuadPoly::lift(bin_divmod(two_part, reduce_mod2(ngs.g[i])).quotient);
    } else {
        q = quad_divmod(entry, ai.blocks[i]).quotient;
    }
    if (q.is_zero()) return false;
    ak = sub(ak, star_multiply(q, ai, L), L);
    return true;
}

void reduce_row(NormalizedGenSet& ngs, int k) {
    for (int i = k - 1; i >= 0; --i) reduce_against_diagonal(ngs, k, i);
}

// Indices of rows >= i whose entry in column i takes part in the degree chain.
std::vector<int> chain_rows(const NormalizedGenSet& ngs, int i) {
    std::vector<int> out;
    const int l = ngs.lengths.index();
    if (!ngs.rows[i].blocks[i].is_zero() && ngs.rows[i].blocks[i].has_unit_lead()) out.push_back(i);
    for (int j = i + 1; j < l; ++j) {
        const QuadPoly& e = ngs.rows[j].blocks[i];
        if (!e.is_zero() && e.is_monic()) out.push_back(j);
    }
    return out;
}

void order_degrees(NormalizedGenSet& ngs) {
    const int l = ngs.lengths.index();
    for (int k = 1; k < l; ++k) reduce_row(ngs, k);
    const int max_passes = 8 * l * l + 8;
    for (int pass = 0; pass < max_passes; ++pass) {
        bool changed = false;
        for (int i = 0; i + 1 < l; ++i) {
            const auto rows = chain_rows(ngs, i);
            for (std::size_t p = 1; p < rows.size(); ++p) {
                const int j = rows[p - 1], k = rows[p];
                if (j == i) {
                    if (!ngs.is_torsion_column(i) && reduce_against_diagonal(ngs, k, i)) {
                        for (int c = i - 1; c >= 0; --c) reduce_against_diagonal(ngs, k, c);
                        changed = true;
                        break;
                    }
                    continue;
                }
                const QuadPoly& upper = ngs.rows[j].blocks[i];
                const QuadPoly& lower = ngs.rows[k].blocks[i];
                if (lower.degree() < upper.degree()) continue;
                const QuadPoly q = quad_divmod(lower, upper).quotient;
                ngs.rows[k] = sub(ngs.rows[k], star_multiply(q, ngs.rows[j], ngs.lengths), ngs.lengths);
                // Only columns left of i: reducing the later ones against a
                // torsion diagonal can undo this step.
                for (int c = i - 1; c >= 0; --c) reduce_against_diagonal(ngs, k, c);
                changed = true;
                break;
            }
        }
        if (!changed) return;
    }
}

}  // namespace

std::vector<std::string> degree_chain_violations(const NormalizedGenSet& ngs, std::vector<std::string>* exempt) {
    std::vector<std::string> out;
    const int l = ngs.lengths.index();
    for (int i = 0; i < l; ++i) {
        for (int j = i + 1; j < l; ++j) {
            const QuadPoly& e = ngs.rows[j].blocks[i];
            if (!e.is_zero() && !e.is_monic() && exempt)
                exempt->push_back("entry (" + std::to_string(j + 1) + "," + std::to_string(i + 1) +
                                  ") has leading coefficient " + std::to_string(e.lead()) +
                                  "; exempt from the degree chain");
        }
        const auto rows = chain_rows(ngs, i);
        for (std::size_t p = 1; p < rows.size(); ++p) {
            const int a = rows[p - 1], b = rows[p];
            if (ngs.rows[b].blocks[i].degree() >= ngs.rows[a].blocks[i].degree())
                out.push_back("column " + std::to_string(i + 1) + ": deg F(" + std::to_string(b + 1) + "," +
                              std::to_string(i + 1) + ") >= deg F(" + std::to_string(a + 1) + "," +
                              std::to_string(i + 1) + ")");
        }
        // A torsion diagonal 2g has no unit lead; entries below must still stay under deg f.
        if (ngs.is_torsion_column(i))
            for (int j = i + 1; j < l; ++j)
                if (ngs.rows[j].blocks[i].degree() >= ngs.lengths[i])
                    out.push_back("column " + std::to_string(i + 1) + ": entry exceeds block length");
    }
    return out;
}

NormalizedGenSet normalize(const GqcCode& code) {
    const BlockLengths& L = code.lengths;
    const int l = L.index(), n = L.total();
    // Column order: last block first, so that Howell rows with late pivots span
    // the subcodes vanishing on trailing blocks.
    std::vector<int> perm;  // permuted position -> original column
    std::vector<int> start(static_cast<std::size_t>(l));
    for (int i = l - 1; i >= 0; --i) {
        start[i] = static_cast<int>(perm.size());
        for (int k = 0; k < L[i]; ++k) perm.push_back(L.offset(i) + k);
    }
    const Z4Matrix span = shift_span_matrix(code);
    Z4Matrix permuted(0, n);
    for (int r = 0; r < span.rows(); ++r) {
        Z4Vector v(static_cast<std::size_t>(n));
        for (int p = 0; p < n; ++p) v[p] = span.at(r, perm[p]);
        permuted.append_row(v);
    }
    const Z4Matrix howell = howell_form(permuted);
    std::vector<Z4Vector> hrows;  // original order
    std::vector<int> hpivot;      // permuted pivot position
    for (int r = 0; r < howell.rows(); ++r) {
        Z4Vector v(static_cast<std::size_t>(n));
        int piv = -1;
        for (int p = 0; p < n; ++p) {
            v[perm[p]] = howell.at(r, p);
            if (piv < 0 && howell.at(r, p)) piv = p;
        }
        hrows.push_back(std::move(v));
        hpivot.push_back(piv);
    }

    NormalizedGenSet ngs;
    ngs.lengths = L;
    for (int i = 0; i < l; ++i) {
        const int m = L[i];
        std::vector<const Z4Vector*> sub;  // rows of the subcode vanishing beyond block i
        for (std::size_t r = 0; r < hrows.size(); ++r)
            if (hpivot[r] >= start[i]) sub.push_back(&hrows[r]);
        Z4Matrix proj(0, m);
        for (auto* row : sub) proj.append_row(std::span<const std::uint8_t>(*row).subspan(L.offset(i), m));

        const QuadPoly full = QuadPoly::xn_minus_one(m);
        BinPoly residue = BinPoly::xn_plus_one(m);
        for (int r = 0; r < proj.rows(); ++r) residue = bin_gcd(residue, block_poly_mod2(proj.row(r)));
        BinPoly torsion = residue;
        {
            RowSpace rs(proj);
            const auto& red = rs.reduced_rows();
            for (int r = rs.type().k1; r < rs.type().k1 + rs.type().k2; ++r)
                torsion = bin_gcd(torsion, QuadPoly(red[r]).half());
        }
        ngs.f.push_back(hensel_lift(residue, m));
        ngs.g.push_back(hensel_lift(torsion, m));
        if (ngs.f.back() == full && ngs.g.back() == full) {
            ngs.rows.push_back(zero_element(L));
            continue;
        }
        const QuadPoly target = (ngs.f.back() + 2 * ngs.g.back()).mod_xn1(m);
        Z4Vector tv(static_cast<std::size_t>(m), 0);
        for (int k = 0; k <= target.degree(); ++k) tv[k] = target[k];
        const auto coeffs = RowSpace(proj, true).solve(tv);
        if (!coeffs) throw Error("normalize: diagonal generator not found in block " + std::to_string(i + 1));
        Z4Vector row(static_cast<std::size_t>(n), 0);
        for (std::size_t r = 0; r < sub.size(); ++r)
            for (int c = 0; c < n; ++c) row[c] = static_cast<std::uint8_t>((row[c] + (*coeffs)[r] * (*sub[r])[c]) & 3u);
        ngs.rows.push_back(from_vector(row, L));
    }
    order_degrees(ngs);
    std::vector<std::string> exempt;
    auto unresolved = degree_chain_violations(ngs, &exempt);
    ngs.diagnostics = exempt;
    for (auto& s : unresolved) ngs.diagnostics.push_back("unresolved: " + s);
    return ngs;
}

std::vector<std::string> check_normalized(const NormalizedGenSet& ngs) {
    std::vector<std::string> out;
    const auto& L = ngs.lengths;
    const int l = L.index();
    if (static_cast<int>(ngs.rows.size()) != l || static_cast<int>(ngs.f.size()) != l ||
        static_cast<int>(ngs.g.size()) != l) {
        out.push_back("normalized set has the wrong number of rows");
        return out;
    }
    for (int i = 0; i < l; ++i) {
        const std::string tag = "row " + std::to_string(i + 1) + ": ";
        const auto full = QuadPoly::xn_minus_one(L[i]);
        if (!ngs.f[i].is_monic() || !ngs.g[i].is_monic()) out.push_back(tag + "f or g not monic");
        if (!quad_mod(full, ngs.f[i]).is_zero()) out.push_back(tag + "f does not divide x^m-1");
        if (!quad_mod(ngs.f[i], ngs.g[i]).is_zero()) out.push_back(tag + "g does not divide f");
        for (int j = i + 1; j < l; ++j)
            if (!ngs.rows[i].blocks[j].is_zero()) out.push_back(tag + "not lower triangular");
        if (ngs.rows[i].blocks[i] != ngs.diagonal(i).mod_xn1(L[i])) out.push_back(tag + "diagonal is not f+2g");
    }
    return out;
}

MinGenSet min_gen_set(const NormalizedGenSet& ngs) {
    if (auto bad = check_normalized(ngs); !bad.empty()) throw ArgumentError("invalid normalized set: " + bad.front());
    const auto& L = ngs.lengths;
    MinGenSet out;
    for (int i = 0; i < L.index(); ++i) {
        const int m = L[i], t = ngs.t(i), k = ngs.k(i);
        const QuadPoly h = quad_exact_div(QuadPoly::xn_minus_one(m), ngs.f[i]);
        out.t.push_back(t);
        out.k.push_back(k);
        out.h.push_back(h);
        std::vector<ModuleElement> s1, s2;
        ModuleElement cur = ngs.rows[i];
        for (int u = 0; u < m - t; ++u) {
            s1.push_back(cur);
            cur = cyclic_shift(cur, L);
        }
        cur = star_multiply(h, ngs.rows[i], L);
        for (int u = 0; u < t - k; ++u) {
            s2.push_back(cur);
            cur = cyclic_shift(cur, L);
        }
        out.s1.push_back(std::move(s1));
        out.s2.push_back(std::move(s2));
    }
    return out;
}

std::vector<ModuleElement> MinGenSet::elements() const {
    std::vector<ModuleElement> out;
    for (std::size_t i = 0; i < s1.size(); ++i) {
        out.insert(out.end(), s1[i].begin(), s1[i].end());
        out.insert(out.end(), s2[i].begin(), s2[i].end());
    }
    return out;
}

std::vector<bool> MinGenSet::torsion_flags() const {
    std::vector<bool> out;
    for (std::size_t i = 0; i < s1.size(); ++i) {
        out.insert(out.end(), s1[i].size(), false);
        out.insert(out.end(), s2[i].size(), true);
    }
    return out;
}

ModuleType cardinality(const NormalizedGenSet& ngs) {
    ModuleType t;
    for (int i = 0; i < ngs.lengths.index(); ++i) {
        t.k1 += ngs.lengths[i] - ngs.t(i);
        t.k2 += ngs.t(i) - ngs.k(i);
    }
    return t;
}

ModuleType cardinality(const GqcCode& code) { return cardinality(normalize(code)); }

bool membership(const NormalizedGenSet& ngs, const ModuleElement& v_in) {
    const auto& L = ngs.lengths;
    ModuleElement v = make_element(L, v_in.blocks);
    for (int i = L.index() - 1; i >= 0; --i) {
        const QuadPoly& vi = v.blocks[i];
        if (vi.is_zero()) continue;
        if (ngs.is_zero_column(i)) return false;
        const BinPoly gbar = reduce_mod2(ngs.g[i]);
        QuadPoly alpha;
        QuadPoly rest = vi;
        QuadPoly mu = QuadPoly::constant(1);
        if (!ngs.is_torsion_column(i)) {
            auto [q, r] = quad_divmod(vi, ngs.rows[i].blocks[i]);
            alpha = q;
            rest = r;
            // mu * F = 2g in R_i, from a h + b (f/g) = 1 over Z2.
            const QuadPoly h = quad_exact_div(QuadPoly::xn_minus_one(L[i]), ngs.f[i]);
            const BinPoly fg = reduce_mod2(quad_exact_div(ngs.f[i], ngs.g[i]));
            const auto x = bin_xgcd(reduce_mod2(h), fg);
            if (!x.gcd.is_one()) throw Error("membership: h and f/g are not coprime");
            mu = QuadPoly::lift(x.u) * h + 2 * QuadPoly::lift(x.v);
        }
        if (!rest.is_zero()) {
            if (!rest.is_even()) return false;
            const auto [w, r2] = bin_divmod(rest.half(), gbar);
            if (!r2.is_zero()) return false;
            alpha += QuadPoly::lift(w) * mu;
        }
        v = sub(v, star_multiply(alpha, ngs.rows[i], L), L);
        if (!v.blocks[i].is_zero()) return false;
    }
    return v.is_zero();
}

Z4Matrix generator_matrix(const MinGenSet& mgs, const BlockLengths& lengths) {
    Z4Matrix m(0, lengths.total());
    for (const auto& e : mgs.elements()) m.append_row(to_vector(e, lengths));
    return m;
}

Z4Matrix generator_matrix(const NormalizedGenSet& ngs) { return generator_matrix(min_gen_set(ngs), ngs.lengths); }

Z4Matrix generator_matrix(const GqcCode& code) { return generator_matrix(normalize(code)); }

GqcCode as_code(const NormalizedGenSet& ngs) { return {ngs.lengths, ngs.rows}; }

std::string to_string(const ModuleElement& c) {
    std::string s = "(";
    for (std::size_t i = 0; i < c.blocks.size(); ++i) s += (i ? " | " : "") + c.blocks[i].to_string();
    return s + ")";
}

}  // namespace gqc4
