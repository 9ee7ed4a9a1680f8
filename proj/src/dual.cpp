#include "gqc4/dual.hpp"

#include <optional>
#include <sstream>

#include "gqc4/error.hpp"

namespace gqc4 {

QuadPoly conj_product(const ModuleElement& d, const ModuleElement& c, const BlockLengths& lengths) {
    const int l = lengths.index();
    if (static_cast<int>(d.blocks.size()) != l || static_cast<int>(c.blocks.size()) != l)
        throw ArgumentError("conj_product: elements do not match block lengths " + lengths.to_string());
    const int m = static_cast<int>(lengths.lcm());
    const QuadPoly xm1 = QuadPoly::xn_minus_one(m);
    QuadPoly sum;
    for (int i = 0; i < l; ++i) {
        const QuadPoly ci = quad_mod(c.blocks[i], QuadPoly::xn_minus_one(lengths[i]));
        const QuadPoly di = quad_mod(d.blocks[i], QuadPoly::xn_minus_one(lengths[i]));
        if (ci.is_zero() || di.is_zero()) continue;
        const QuadPoly theta = quad_exact_div(xm1, QuadPoly::xn_minus_one(lengths[i]));
        sum = quad_mod(sum + di * tilde(ci, m) * theta, xm1);
    }
    return sum;
}

bool is_orthogonal(const ModuleElement& d, const ModuleElement& c, const BlockLengths& lengths) {
    return conj_product(d, c, lengths).is_zero();
}

GqcCode truncate(const GqcCode& code, int count) {
    if (count < 1 || count > code.lengths.index())
        throw ArgumentError("truncate: index " + std::to_string(count) + " out of range 1.." +
                            std::to_string(code.lengths.index()));
    GqcCode out{code.lengths.prefix(count), {}};
    for (const auto& g : code.generators)
        out.generators.push_back(ModuleElement{{g.blocks.begin(), g.blocks.begin() + count}});
    return out;
}

namespace {

std::string where(int r, int k) { return "(r=" + std::to_string(r + 1) + ", k=" + std::to_string(k) + ")"; }

bool usable_pivot(const QuadPoly& p) { return p.is_monic() && is_squarefree(reduce_mod2(p)); }

}  // namespace

EliminationTrace eliminate(const BlockLengths& lengths, const std::vector<ModuleElement>& rows_in) {
    const int n = lengths.index();
    if (static_cast<int>(rows_in.size()) != n)
        throw ArgumentError("eliminate: need one row per block, got " + std::to_string(rows_in.size()));
    EliminationTrace tr{lengths, {}, {}, {}};
    std::vector<ModuleElement> g0;
    std::vector<QuadPoly> diag0;
    for (int r = 0; r < n; ++r) {
        ModuleElement row = make_element(lengths, rows_in[r].blocks);
        for (int j = r + 1; j < n; ++j)
            if (!row.blocks[j].is_zero()) throw ArgumentError("eliminate: row " + std::to_string(r + 1) + " is not triangular");
        QuadPoly d = row.blocks[r];
        if (d.is_zero()) {
            d = QuadPoly::xn_minus_one(lengths[r]);
        } else if (d.lead() == 3) {
            row = scale(3, row, lengths);
            d = row.blocks[r];
        }
        if (!usable_pivot(d))
            throw HypothesisError("eliminate: diagonal " + d.to_string() + " at " + where(r, 0) +
                                  " is not monic with squarefree reduction");
        g0.push_back(row);
        diag0.push_back(d);
    }
    for (int r = 0; r < n; ++r) {
        std::vector<ModuleElement> seq{g0[r]};
        std::vector<EliminationStep> steps{{diag0[r], QuadPoly{}, false}};
        std::vector<QuadPoly> diag{diag0[r]};
        for (int k = 1; k <= r; ++k) {
            const int j = r - k;
            const QuadPoly& p = seq.back().blocks[j];
            if (p.is_zero()) {
                steps.push_back({QuadPoly::constant(1), QuadPoly{}, true});
                seq.push_back(seq.back());
                diag.push_back(diag.back());
                continue;
            }
            if (!usable_pivot(p))
                throw HypothesisError("eliminate: pivot " + p.to_string() + " at " + where(r, k) +
                                      " is not monic with squarefree reduction");
            const QuadPoly d = gcd4(diag0[j], p);
            EliminationStep st{quad_exact_div(diag0[j], d), quad_exact_div(p, d), false};
            ModuleElement next = sub(star_multiply(st.A, seq.back(), lengths), star_multiply(st.B, g0[j], lengths), lengths);
            if (!next.blocks[j].is_zero()) throw Error("eliminate: column did not clear at " + where(r, k));
            diag.push_back(st.A * diag.back());
            steps.push_back(std::move(st));
            seq.push_back(std::move(next));
        }
        tr.rows.push_back(std::move(seq));
        tr.steps.push_back(std::move(steps));
        tr.diagonal.push_back(std::move(diag));
    }
    return tr;
}

EliminationTrace eliminate(const NormalizedGenSet& ngs) { return eliminate(ngs.lengths, ngs.rows); }

const char* to_string(ClosedFormStatus s) {
    switch (s) {
        case ClosedFormStatus::applied: return "applied";
        case ClosedFormStatus::hypothesis_violated: return "hypothesis-violated";
        case ClosedFormStatus::inapplicable: return "inapplicable";
        case ClosedFormStatus::mismatch: return "mismatch";
    }
    return "?";
}

namespace {

// One truncation level: normalized set of the first i+1 blocks and its trace.
struct Level {
    NormalizedGenSet ngs;
    std::optional<EliminationTrace> trace;
    std::string violation;   ///< why eliminate failed
    bool divides = true;     ///< every F_rr divides x^{m_r} - 1
    std::string divides_note;
};

std::vector<Level> levels(const GqcCode& code) {
    std::vector<Level> out;
    for (int i = 1; i <= code.lengths.index(); ++i) {
        Level lv{normalize(truncate(code, i)), std::nullopt, {}, true, {}};
        for (int r = 0; r < i; ++r) {
            if (lv.ngs.is_zero_column(r) || lv.ngs.is_free_column(r)) continue;
            lv.divides = false;
            lv.divides_note = "F_" + std::to_string(r + 1) + std::to_string(r + 1) + " = " + lv.ngs.diagonal(r).to_string() +
                              " does not divide x^" + std::to_string(lv.ngs.lengths[r]) + "-1 at level " + std::to_string(i);
            break;
        }
        try {
            lv.trace = eliminate(lv.ngs);
        } catch (const HypothesisError& e) {
            lv.violation = "level " + std::to_string(i) + ": " + e.what();
        }
        out.push_back(std::move(lv));
    }
    return out;
}

int severity(ClosedFormStatus s) {
    switch (s) {
        case ClosedFormStatus::applied: return 0;
        case ClosedFormStatus::mismatch: return 1;
        case ClosedFormStatus::inapplicable: return 2;
        case ClosedFormStatus::hypothesis_violated: return 3;
    }
    return 3;
}

QuadPoly reduced_lambda(const QuadPoly& value, const QuadPoly& modulus) {
    if (modulus.degree() <= 0) return QuadPoly{};
    return quad_mod(value, modulus);
}

}  // namespace

DualGenSet dual_closed_form(const GqcCode& code) {
    const BlockLengths& L = code.lengths;
    const int l = L.index();
    DualGenSet out;
    out.lengths = L;
    const auto lv = levels(code);
    for (int i = 0; i < l; ++i) {
        ModuleElement row = zero_element(L);
        std::vector<QuadPoly> lam(static_cast<std::size_t>(i + 1));
        ClosedFormStatus st = ClosedFormStatus::applied;
        QuadPoly u, v;
        const Level& level = lv[i];
        if (!level.divides || !level.trace) {
            st = ClosedFormStatus::hypothesis_violated;
            out.notes.push_back("row " + std::to_string(i + 1) + ": " + (level.divides ? level.violation : level.divides_note));
        } else {
            const EliminationTrace& tr = *level.trace;
            const long mprime = L.prefix(i + 1).lcm();
            // Every lambda is chained off the first-column step; a skipped
            // first-column step is only harmless when the row needed no
            // elimination at all.
            for (int r = 1; r <= i; ++r) {
                bool real_step = false;
                for (int k = 1; k <= r; ++k) real_step = real_step || !tr.steps[r][k].skipped;
                if (real_step && tr.steps[r][r].skipped) {
                    st = ClosedFormStatus::hypothesis_violated;
                    out.notes.push_back("row " + std::to_string(i + 1) + ": zero first-column pivot at " + where(r, r) +
                                        " while other columns of that row are eliminated");
                    break;
                }
            }
            lam[i] = QuadPoly::constant(1);
            if (i > 0 && st == ClosedFormStatus::applied) {
                const EliminationStep& last = tr.steps[i][i];
                const QuadPoly mod1 = reciprocal(last.A);
                if (!last.skipped && mod1.degree() > 0) {
                    auto inv = inverse_mod(reciprocal(last.B), mod1);
                    if (!inv) {
                        st = ClosedFormStatus::inapplicable;
                        out.notes.push_back("row " + std::to_string(i + 1) + ": (B_" + std::to_string(i + 1) +
                                            "1)* is not invertible modulo (A_" + std::to_string(i + 1) + "1)* = " + mod1.to_string());
                    } else {
                        const long e = mprime + tr.entry(i, i - 1, 0).degree() - tr.diagonal[i][i - 1].degree();
                        lam[0] = reduced_lambda(3 * lam[i] * *inv * x_power_mod(e, mod1), mod1);
                    }
                }
                for (int s = 1; s < i && st == ClosedFormStatus::applied; ++s) {
                    const EliminationStep& step = tr.steps[s][s];
                    const QuadPoly mods = reciprocal(step.A);
                    if (step.skipped || mods.degree() <= 0) continue;
                    const long e = mprime + tr.diagonal[s][s - 1].degree() - tr.entry(s, s - 1, 0).degree();
                    lam[s] = reduced_lambda(3 * lam[0] * reciprocal(step.B) * x_power_mod(e, mods), mods);
                }
            }
            if (st == ClosedFormStatus::applied) {
                try {
                    std::vector<QuadPoly> blocks(static_cast<std::size_t>(l));
                    for (int r = 0; r <= i; ++r) {
                        const QuadPoly xm1 = QuadPoly::xn_minus_one(L[r]);
                        blocks[r] = quad_exact_div(xm1 * lam[r], reciprocal(tr.final_diagonal(r)));
                    }
                    u = blocks[i];
                    if (u.has_unit_lead() && u.lead() == 3)
                        for (auto& b : blocks) b = 3 * b;
                    u = blocks[i];
                    v = u;
                    row = make_element(L, blocks);
                } catch (const DivisionError& e) {
                    st = ClosedFormStatus::mismatch;
                    out.notes.push_back("row " + std::to_string(i + 1) + ": inexact division: " + e.what());
                }
            }
        }
        out.rows.push_back(std::move(row));
        out.lambda.push_back(std::move(lam));
        out.u.push_back(u);
        out.v.push_back(v);
        out.row_status.push_back(st);
    }

    // Validate against the exact dual: orthogonality plus |C| |E| = 4^n.
    bool all_present = true;
    for (auto s : out.row_status) all_present = all_present && s == ClosedFormStatus::applied;
    for (int i = 0; i < l; ++i) {
        if (out.row_status[i] != ClosedFormStatus::applied) continue;
        for (const auto& g : code.generators)
            if (!is_orthogonal(out.rows[i], g, L)) {
                out.row_status[i] = ClosedFormStatus::mismatch;
                out.notes.push_back("row " + std::to_string(i + 1) + " is not orthogonal to generator " + to_string(g));
                break;
            }
    }
    ClosedFormStatus worst = ClosedFormStatus::applied;
    for (auto s : out.row_status)
        if (severity(s) > severity(worst)) worst = s;
    if (all_present && worst == ClosedFormStatus::applied) {
        const auto cs = cardinality(code).log2_size();
        const auto ds = cardinality(GqcCode{L, out.rows}).log2_size();
        if (cs + ds != 2 * L.total()) {
            worst = ClosedFormStatus::mismatch;
            out.notes.push_back("closed form spans 2^" + std::to_string(ds) + " words, dual has 2^" +
                                std::to_string(2 * L.total() - cs));
        }
    }
    out.status = worst;
    return out;
}

GqcCode dual_oracle(const GqcCode& code) {
    const BlockLengths& L = code.lengths;
    const Z4Matrix k = kernel(generator_matrix(code));
    GqcCode d{L, {}};
    for (int r = 0; r < k.rows(); ++r) d.generators.push_back(from_vector(k.row(r), L));
    if (d.generators.empty()) return GqcCode::zero(L);
    return as_code(normalize(d));
}

namespace {

std::string idx(const char* name, std::initializer_list<int> xs) {
    std::string s = name;
    const char* labels = "itr";
    int p = 0;
    for (int x : xs) s += std::string(" ") + labels[p++] + "=" + std::to_string(x + 1);
    return s;
}

}  // namespace

std::vector<CheckResult> verify_dual_annihilation(const GqcCode& code) {
    std::vector<CheckResult> out;
    const NormalizedGenSet dual = normalize(dual_oracle(code));
    const auto lv = levels(code);
    for (int i = 0; i < code.lengths.index(); ++i) {
        if (!lv[i].trace) {
            out.push_back({idx("annihilation", {i}), false, false, lv[i].violation});
            continue;
        }
        const auto& tr = *lv[i].trace;
        for (int t = 0; t <= i; ++t)
            for (int r = 0; r <= t; ++r) {
                const QuadPoly prod = quad_mod(dual.rows[t].blocks[r] * reciprocal(tr.final_diagonal(r)),
                                               QuadPoly::xn_minus_one(code.lengths[r]));
                out.push_back({idx("annihilation", {i, t, r}), true, prod.is_zero(),
                               prod.is_zero() ? "" : "residue " + prod.to_string()});
            }
    }
    return out;
}

std::vector<CheckResult> verify_dual_degrees(const GqcCode& code) {
    std::vector<CheckResult> out;
    const NormalizedGenSet dual = normalize(dual_oracle(code));
    const auto lv = levels(code);
    for (int i = 0; i < code.lengths.index(); ++i) {
        if (!lv[i].divides || !lv[i].trace) {
            out.push_back({idx("dual degree", {i}), false, false, lv[i].divides ? lv[i].violation : lv[i].divides_note});
            continue;
        }
        const int expect = code.lengths[i] - lv[i].trace->final_diagonal(i).degree();
        const int got = dual.t(i);
        out.push_back({idx("dual degree", {i}), true, got == expect,
                       "deg E = " + std::to_string(got) + ", formula " + std::to_string(expect)});
    }
    return out;
}

std::vector<CheckResult> verify_dual_diagonal(const GqcCode& code) {
    std::vector<CheckResult> out;
    const NormalizedGenSet dual = normalize(dual_oracle(code));
    const auto lv = levels(code);
    for (int i = 0; i < code.lengths.index(); ++i) {
        if (!lv[i].divides || !lv[i].trace) {
            out.push_back({idx("diagonal product", {i}), false, false, lv[i].divides ? lv[i].violation : lv[i].divides_note});
            continue;
        }
        const QuadPoly prod = dual.diagonal(i) * reciprocal(lv[i].trace->final_diagonal(i));
        const QuadPoly xm1 = QuadPoly::xn_minus_one(code.lengths[i]);
        const bool ok = prod == xm1 || prod == 3 * xm1;
        out.push_back({idx("diagonal product", {i}), true, ok, "E G* = " + prod.to_string()});
    }
    return out;
}

DualReport dual_report(const GqcCode& code) {
    DualReport rep;
    rep.code = code;
    rep.oracle = normalize(dual_oracle(code));
    rep.closed_form = dual_closed_form(code);
    rep.spans_match = rep.closed_form.status == ClosedFormStatus::applied;
    for (auto* f : {&verify_dual_annihilation, &verify_dual_degrees, &verify_dual_diagonal}) {
        auto part = (*f)(code);
        rep.checks.insert(rep.checks.end(), part.begin(), part.end());
    }
    return rep;
}

std::string DualReport::to_text() const {
    std::ostringstream os;
    os << "code: block lengths " << code.lengths.to_string() << "\n";
    for (std::size_t j = 0; j < code.generators.size(); ++j) os << "  a" << j + 1 << " = " << to_string(code.generators[j]) << "\n";
    os << "dual (oracle, normalized): type 4^" << cardinality(oracle).k1 << " 2^" << cardinality(oracle).k2 << "\n";
    for (std::size_t j = 0; j < oracle.rows.size(); ++j) os << "  e" << j + 1 << " = " << to_string(oracle.rows[j]) << "\n";
    os << "closed form: " << gqc4::to_string(closed_form.status) << "\n";
    for (std::size_t j = 0; j < closed_form.rows.size(); ++j)
        os << "  e" << j + 1 << " = " << to_string(closed_form.rows[j]) << "  [" << gqc4::to_string(closed_form.row_status[j]) << "]\n";
    for (const auto& n : closed_form.notes) os << "  note: " << n << "\n";
    os << "closed form matches oracle: " << (spans_match ? "yes" : "no") << "\n";
    os << "checks:\n";
    for (const auto& c : checks) {
        os << "  " << c.name << ": " << (!c.applicable ? "n/a" : (c.passed ? "pass" : "FAIL"));
        if (!c.detail.empty()) os << " (" << c.detail << ")";
        os << "\n";
    }
    return os.str();
}

}  // namespace gqc4
