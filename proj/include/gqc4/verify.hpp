#pragma once

#include <cstdint>
#include <vector>

#include "gqc4/codespec.hpp"
#include "gqc4/dual.hpp"

namespace gqc4 {

struct VerifyOptions {
    std::uint64_t seed = 1;
    int orthogonality_samples = 200;
    std::uint64_t distance_cap = std::uint64_t{1} << 24;
};

/// Invariant suite for one code: shift closure, normalized-set structure,
/// min-gen-set minimality and cardinality, sampled conj-product vs shift
/// orthogonality, size duality, double dual, closed-form vs oracle dual and its
/// annihilation / degree / diagonal-product checks, plus any claims in spec.expect.
std::vector<CheckResult> verify_code(const CodeSpec& spec, const VerifyOptions& opt = {});

/// All applicable checks passed.
bool all_passed(const std::vector<CheckResult>& checks);

}  // namespace gqc4
