#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "gqc4/gqc.hpp"

namespace gqc4 {

/// Binary word of length 2n: (b_0..b_{n-1}, a_0+b_0..a_{n-1}+b_{n-1}) for c = a + 2b.
using BinaryWord = std::vector<std::uint8_t>;

BinaryWord gray_map(std::span<const std::uint8_t> c);
int lee_weight(std::span<const std::uint8_t> c);
int lee_distance(std::span<const std::uint8_t> c, std::span<const std::uint8_t> d);
int hamming_weight(std::span<const std::uint8_t> w);
int hamming_distance(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b);

struct EnumerationOptions {
    std::uint64_t cap = std::uint64_t{1} << 24;  ///< refuse codes with more words
    int workers = 0;                             ///< 0: hardware concurrency
};

/// Calls `visit` once per codeword (including zero), in coefficient order, by
/// walking the min-gen-set coefficient space. Single-threaded. Needs n <= 64.
void for_each_codeword(const GqcCode& code, const std::function<void(const Z4Vector&)>& visit,
                       std::uint64_t cap = std::uint64_t{1} << 24);

/// Minimum Lee weight over nonzero codewords. Throws ArgumentError for the
/// zero code and CapExceededError when |C| > cap.
int min_lee_distance(const GqcCode& code, const EnumerationOptions& opt = {});

/// Phi(C) closed under XOR. Exhaustive on the image for |C| <= 2^12, otherwise
/// via 2(u.v mod 2) in C over pairs of min-gen-set elements.
bool is_linear_image(const GqcCode& code);
/// The exhaustive image-closure test alone (any size up to the cap).
bool is_linear_image_exhaustive(const GqcCode& code, std::uint64_t cap = std::uint64_t{1} << 16);

}  // namespace gqc4
