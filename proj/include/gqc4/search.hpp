#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gqc4/gqc.hpp"

namespace gqc4 {

struct SearchConfig {
    enum class Mode { diagonal, sampled };
    std::vector<int> lengths;
    Mode mode = Mode::diagonal;
    int samples = 0;                             ///< extra random triangular codes (sampled mode)
    std::uint64_t cap = std::uint64_t{1} << 24;  ///< distance enumeration limit per candidate
    std::uint64_t seed = 1;
    int workers = 0;                             ///< 0: hardware concurrency
};

struct ResultRecord {
    enum class Status { ok, zero, skipped };
    int n = 0;
    int k1 = 0, k2 = 0;
    int dL = 0;  ///< valid for Status::ok
    bool linear = false;
    std::string generators;  ///< "a|b;c|d"
    Status status = Status::ok;

    int N2() const { return 2 * n; }
    int log2size() const { return 2 * k1 + k2; }
    int dH() const { return dL; }
};

const char* to_string(ResultRecord::Status s);

/// Candidate codes in generation order: every diagonal choice of divisor pairs
/// (f_i, g_i) per block, then (sampled mode) random lower-triangular codes.
std::vector<GqcCode> search_candidates(const SearchConfig& cfg);

ResultRecord evaluate(const GqcCode& code, std::uint64_t cap);

/// Evaluates every candidate (in parallel; order preserved).
std::vector<ResultRecord> evaluate_all(const std::vector<GqcCode>& codes, const SearchConfig& cfg);

/// Keeps the best d_L per (n, k1, k2) and sorts by n, size, -d_L, then
/// generator text.
std::vector<ResultRecord> best_table(const std::vector<ResultRecord>& records);

std::vector<ResultRecord> run_search(const SearchConfig& cfg);

std::string format_table(const std::vector<ResultRecord>& rows);
std::string format_csv(const std::vector<ResultRecord>& rows);
std::string format_json(const std::vector<ResultRecord>& rows);

}  // namespace gqc4
