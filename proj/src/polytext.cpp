#include "gqc4/polytext.hpp"

#include <cctype>
#include <map>
#include <vector>

#include "gqc4/error.hpp"

namespace gqc4 {

namespace {

// Parses into (degree -> integer coefficient sum); reduction happens afterwards.
std::map<int, long> parse_terms(std::string_view text) {
    std::map<int, long> terms;
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    auto read_int = [&](long& out) -> bool {
        skip_ws();
        const std::size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == start) return false;
        out = std::stol(std::string(text.substr(start, i - start)));
        return true;
    };

    skip_ws();
    if (i < text.size() && text[i] == '[') {
        ++i;
        int k = 0;
        skip_ws();
        if (i < text.size() && text[i] == ']') {
            ++i;
        } else {
            while (true) {
                skip_ws();
                long sign = 1;
                if (i < text.size() && text[i] == '-') {
                    sign = -1;
                    ++i;
                }
                long c = 0;
                if (!read_int(c)) throw ParseError("expected coefficient in list", static_cast<long>(i));
                terms[k++] += sign * c;
                skip_ws();
                if (i < text.size() && text[i] == ',') {
                    ++i;
                    continue;
                }
                if (i < text.size() && text[i] == ']') {
                    ++i;
                    break;
                }
                throw ParseError("expected ',' or ']' in coefficient list", static_cast<long>(i));
            }
        }
        skip_ws();
        if (i != text.size()) throw ParseError("trailing characters after coefficient list", static_cast<long>(i));
        return terms;
    }

    bool first = true;
    while (true) {
        skip_ws();
        if (i >= text.size()) {
            if (first) throw ParseError("empty polynomial", static_cast<long>(i));
            break;
        }
        long sign = 1;
        if (text[i] == '+' || text[i] == '-') {
            sign = text[i] == '-' ? -1 : 1;
            ++i;
        } else if (!first) {
            throw ParseError("expected '+' or '-' between terms", static_cast<long>(i));
        }
        skip_ws();
        long coeff = 1;
        bool have_coeff = read_int(coeff);
        skip_ws();
        if (have_coeff && i < text.size() && text[i] == '*') {
            ++i;
            skip_ws();
        }
        int degree = 0;
        if (i < text.size() && text[i] == 'x') {
            ++i;
            degree = 1;
            skip_ws();
            if (i < text.size() && text[i] == '^') {
                ++i;
                long d = 0;
                if (!read_int(d)) throw ParseError("expected exponent after '^'", static_cast<long>(i));
                if (d > 1'000'000) throw ParseError("exponent too large", static_cast<long>(i));
                degree = static_cast<int>(d);
            }
        } else if (!have_coeff) {
            throw ParseError("expected a term", static_cast<long>(i));
        }
        terms[degree] += sign * coeff;
        first = false;
    }
    return terms;
}

std::vector<std::uint8_t> to_coeffs(const std::map<int, long>& terms, int modulus) {
    std::vector<std::uint8_t> c;
    if (!terms.empty()) c.assign(static_cast<std::size_t>(terms.rbegin()->first) + 1, 0);
    for (auto [k, v] : terms) c[k] = static_cast<std::uint8_t>(((v % modulus) + modulus) % modulus);
    return c;
}

}  // namespace

QuadPoly parse_quad(std::string_view text) { return QuadPoly(to_coeffs(parse_terms(text), 4)); }

BinPoly parse_bin(std::string_view text) {
    const auto terms = parse_terms(text);
    for (auto [k, v] : terms)
        if (v < 0 || v > 1) throw ParseError("Z2 coefficient out of range at degree " + std::to_string(k));
    return BinPoly(to_coeffs(terms, 2));
}

namespace {
template <class P>
std::string list_of(const P& f) {
    std::string s = "[";
    for (std::size_t k = 0; k < f.coeffs().size(); ++k) {
        if (k) s += ',';
        s += std::to_string(static_cast<int>(f.coeffs()[k]));
    }
    return s + "]";
}
}  // namespace

std::string coeff_list(const QuadPoly& f) { return list_of(f); }
std::string coeff_list(const BinPoly& f) { return list_of(f); }

}  // namespace gqc4
