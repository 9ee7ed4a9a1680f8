#pragma once

#include <optional>
#include <string>

#include "gqc4/gqc.hpp"

namespace gqc4 {

/// Claims a spec file may make about its code; `verify` checks each one given.
struct Expectations {
    std::optional<int> k1, k2;
    std::optional<int> min_lee_distance;
    std::optional<int> dual_k1, dual_k2;
    std::optional<bool> linear_image;
    bool empty() const { return !k1 && !k2 && !min_lee_distance && !dual_k1 && !dual_k2 && !linear_image; }
};

/// Spec file:
///   {"block_lengths": [3, 7],
///    "generators": [["x-1", "x^3+2x^2+x+3"], ["0", "[1,1,0,1]"]],
///    "expect": {"k1": 2, "min_lee_distance": 3}}      // optional
struct CodeSpec {
    GqcCode code;
    Expectations expect;
};

/// Throws ParseError; position is the byte offset of JSON syntax errors.
CodeSpec parse_code_spec(const std::string& text);
CodeSpec load_code_spec(const std::string& path);
std::string to_json(const CodeSpec& spec, int indent = 2);

/// "g1b1|g1b2;g2b1|g2b2" — one generator per ';', blocks split by '|'.
std::string describe_generators(const GqcCode& code);
GqcCode parse_generators(const BlockLengths& lengths, const std::string& text);

}  // namespace gqc4
