#pragma once

#include <string>
#include <vector>

#include "gqc4/gqc.hpp"

namespace gqc4 {

/// d o c = sum_i d_i c~_i theta_i mod x^m - 1, m = lcm of the block lengths.
QuadPoly conj_product(const ModuleElement& d, const ModuleElement& c, const BlockLengths& lengths);
/// d is orthogonal to c and all its shifts.
bool is_orthogonal(const ModuleElement& d, const ModuleElement& c, const BlockLengths& lengths);

/// Keeps the first `count` blocks of every generator (1 <= count <= l).
GqcCode truncate(const GqcCode& code, int count);

/// One elimination step on row r: g_r^(k) = A g_r^(k-1) - B g_{r-k}^(0).
struct EliminationStep {
    QuadPoly A;
    QuadPoly B;
    bool skipped = false;  ///< pivot entry was zero: A = 1, B = 0
};

/// Elimination sequences for a triangular set of i rows. Indices are 0-based:
/// row r has steps k = 1..r, step k clearing column r - k.
struct EliminationTrace {
    BlockLengths lengths;
    /// g_r^(k) for k = 0..r.
    std::vector<std::vector<ModuleElement>> rows;
    /// steps[r][k]; steps[r][0] holds A = G_rr, B = 0.
    std::vector<std::vector<EliminationStep>> steps;
    /// Exact (unreduced) diagonal G_rr^(k) = A^(0) A^(1) ... A^(k).
    std::vector<std::vector<QuadPoly>> diagonal;

    int size() const { return static_cast<int>(rows.size()); }
    /// G_{r,j}^(k) as stored in the reduced row.
    const QuadPoly& entry(int r, int k, int j) const { return rows.at(r).at(k).blocks.at(j); }
    /// G_rr^(r-1): the final diagonal of row r.
    const QuadPoly& final_diagonal(int r) const { return diagonal.at(r).back(); }
};

/// Eliminates below-diagonal entries of a triangular set. Rows whose diagonal
/// is a unit multiple of a monic polynomial are rescaled first; a zero
/// diagonal stands for x^{m_r} - 1. Throws HypothesisError naming (r, k)
/// (1-based) when a pivot is not monic or has a repeated factor mod 2.
EliminationTrace eliminate(const BlockLengths& lengths, const std::vector<ModuleElement>& rows);
EliminationTrace eliminate(const NormalizedGenSet& ngs);

enum class ClosedFormStatus { applied, hypothesis_violated, inapplicable, mismatch };
const char* to_string(ClosedFormStatus s);

/// Closed-form dual generators e_1..e_l (lower triangular).
struct DualGenSet {
    BlockLengths lengths;
    std::vector<ModuleElement> rows;
    std::vector<QuadPoly> u;  ///< E_ii = u_ii + 2 v_ii, u_ii monic
    std::vector<QuadPoly> v;
    /// lambda[i][r], r <= i
    std::vector<std::vector<QuadPoly>> lambda;
    ClosedFormStatus status = ClosedFormStatus::applied;
    /// Per row; overall status is the worst of these.
    std::vector<ClosedFormStatus> row_status;
    std::vector<std::string> notes;
};

DualGenSet dual_closed_form(const GqcCode& code);

/// Exact dual: kernel of the generator matrix, split into blocks and normalized.
GqcCode dual_oracle(const GqcCode& code);

struct CheckResult {
    std::string name;  ///< e.g. "annihilation i=2 t=2 r=1"
    bool applicable = true;
    bool passed = false;
    std::string detail;
};

/// E_{t,r} (G_rr^(r-1))* == 0 mod x^{m_r} - 1 for r <= t <= i, E taken from the
/// normalized oracle dual.
std::vector<CheckResult> verify_dual_annihilation(const GqcCode& code);
/// deg E_ii = m_i - sum_k deg A^(k).
std::vector<CheckResult> verify_dual_degrees(const GqcCode& code);
/// E_ii (G_ii^(i-1))* = +-(x^{m_i} - 1).
std::vector<CheckResult> verify_dual_diagonal(const GqcCode& code);

struct DualReport {
    GqcCode code;
    NormalizedGenSet oracle;
    DualGenSet closed_form;
    std::vector<CheckResult> checks;
    bool spans_match = false;  ///< closed form == oracle (only meaningful when applied)
    std::string to_text() const;
};

DualReport dual_report(const GqcCode& code);

}  // namespace gqc4
