#include "gqc4/gray.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <thread>
#include <unordered_set>

#include "gqc4/error.hpp"

namespace gqc4 {

BinaryWord gray_map(std::span<const std::uint8_t> c) {
    const std::size_t n = c.size();
    BinaryWord w(2 * n);
    for (std::size_t j = 0; j < n; ++j) {
        const std::uint8_t a = c[j] & 1u, b = (c[j] >> 1) & 1u;
        w[j] = b;
        w[n + j] = a ^ b;
    }
    return w;
}

int lee_weight(std::span<const std::uint8_t> c) {
    int w = 0;
    for (auto x : c) w += (x & 3u) == 2 ? 2 : ((x & 3u) ? 1 : 0);
    return w;
}

int lee_distance(std::span<const std::uint8_t> c, std::span<const std::uint8_t> d) {
    if (c.size() != d.size()) throw ArgumentError("lee_distance: length mismatch");
    int w = 0;
    for (std::size_t j = 0; j < c.size(); ++j) {
        const unsigned x = (c[j] - d[j]) & 3u;
        w += x == 2 ? 2 : (x ? 1 : 0);
    }
    return w;
}

int hamming_weight(std::span<const std::uint8_t> w) {
    return static_cast<int>(std::count_if(w.begin(), w.end(), [](std::uint8_t x) { return x != 0; }));
}

int hamming_distance(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b) {
    if (a.size() != b.size()) throw ArgumentError("hamming_distance: length mismatch");
    int w = 0;
    for (std::size_t j = 0; j < a.size(); ++j) w += a[j] != b[j];
    return w;
}

namespace {

// Z4 word in two bit planes: symbol j = lo_j + 2 hi_j.
struct Packed {
    std::uint64_t lo = 0, hi = 0;
};

inline Packed padd(Packed x, Packed y) {
    return {x.lo ^ y.lo, x.hi ^ y.hi ^ (x.lo & y.lo)};
}

inline int lee(Packed x) { return std::popcount(x.hi) + std::popcount(x.lo ^ x.hi); }

Packed pack(const Z4Vector& v) {
    Packed p;
    for (std::size_t j = 0; j < v.size(); ++j) {
        p.lo |= static_cast<std::uint64_t>(v[j] & 1u) << j;
        p.hi |= static_cast<std::uint64_t>((v[j] >> 1) & 1u) << j;
    }
    return p;
}

Z4Vector unpack(Packed p, int n) {
    Z4Vector v(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) v[j] = static_cast<std::uint8_t>(((p.lo >> j) & 1u) | (((p.hi >> j) & 1u) << 1));
    return v;
}

// Coefficient space of a min-gen set: digit j ranges over Z4 (radix 4) or
// {0,1} (radix 2, torsion rows).
struct Space {
    int n = 0;
    std::vector<Packed> step;  ///< added when digit j increments
    std::vector<Packed> wrap;  ///< added when digit j wraps to 0
    std::vector<int> radix;
    std::uint64_t size = 1;
};

Space make_space(const GqcCode& code, std::uint64_t cap) {
    const int n = code.lengths.total();
    if (n > 64) throw ArgumentError("codeword enumeration supports n <= 64 (n = " + std::to_string(n) + ")");
    const NormalizedGenSet ngs = normalize(code);
    const ModuleType type = cardinality(ngs);
    if (type.log2_size() > 62 || (std::uint64_t{1} << type.log2_size()) > cap)
        throw CapExceededError("code has 2^" + std::to_string(type.log2_size()) + " words, cap is " + std::to_string(cap));
    const MinGenSet mgs = min_gen_set(ngs);
    const auto elems = mgs.elements();
    const auto torsion = mgs.torsion_flags();
    Space s;
    s.n = n;
    for (std::size_t j = 0; j < elems.size(); ++j) {
        const Packed e = pack(to_vector(elems[j], code.lengths));
        s.step.push_back(e);
        if (torsion[j]) {
            s.radix.push_back(2);
            s.wrap.push_back(padd(padd(e, e), e));  // -e
        } else {
            s.radix.push_back(4);
            s.wrap.push_back(e);  // 3e + e = 0
        }
    }
    s.size = std::uint64_t{1} << type.log2_size();
    return s;
}

// Enumerates digits [0, low) for a fixed start word; calls f on every word
// (start included). f returns false to stop early.
template <class F>
bool walk(const Space& s, int low, Packed start, F&& f) {
    std::vector<int> digit(static_cast<std::size_t>(low), 0);
    Packed cur = start;
    while (true) {
        if (!f(cur)) return false;
        int j = 0;
        for (; j < low; ++j) {
            if (++digit[j] == s.radix[j]) {
                digit[j] = 0;
                cur = padd(cur, s.wrap[j]);
            } else {
                cur = padd(cur, s.step[j]);
                break;
            }
        }
        if (j == low) return true;
    }
}

}  // namespace

void for_each_codeword(const GqcCode& code, const std::function<void(const Z4Vector&)>& visit, std::uint64_t cap) {
    const Space s = make_space(code, cap);
    walk(s, static_cast<int>(s.step.size()), Packed{}, [&](Packed p) {
        visit(unpack(p, s.n));
        return true;
    });
}

int min_lee_distance(const GqcCode& code, const EnumerationOptions& opt) {
    const Space s = make_space(code, opt.cap);
    if (s.size <= 1) throw ArgumentError("min_lee_distance: the zero code has no nonzero codeword");
    const int digits = static_cast<int>(s.step.size());

    int workers = opt.workers > 0 ? opt.workers : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    // Split off leading digits until there are enough chunks to share.
    int high = 0;
    std::uint64_t chunks = 1;
    while (high < digits && chunks < static_cast<std::uint64_t>(workers) * 8 && s.size / chunks > 4096) {
        chunks *= static_cast<std::uint64_t>(s.radix[digits - 1 - high]);
        ++high;
    }
    const int low = digits - high;
    workers = static_cast<int>(std::min<std::uint64_t>(static_cast<std::uint64_t>(workers), chunks));

    std::atomic<int> best{2 * s.n + 1};
    std::atomic<std::uint64_t> next{0};
    auto run = [&] {
        while (true) {
            const std::uint64_t c = next.fetch_add(1);
            if (c >= chunks || best.load() <= 1) return;
            // Decode chunk index into the leading digits.
            Packed start;
            std::uint64_t rest = c;
            for (int h = 0; h < high; ++h) {
                const int j = digits - 1 - h;
                const auto d = static_cast<int>(rest % static_cast<std::uint64_t>(s.radix[j]));
                rest /= static_cast<std::uint64_t>(s.radix[j]);
                for (int t = 0; t < d; ++t) start = padd(start, s.step[j]);
            }
            int local = best.load();
            walk(s, low, start, [&](Packed p) {
                if (p.lo | p.hi) local = std::min(local, lee(p));
                return local > 1;
            });
            int seen = best.load();
            while (local < seen && !best.compare_exchange_weak(seen, local)) {
            }
        }
    };
    if (workers <= 1) {
        run();
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(run);
        for (auto& t : pool) t.join();
    }
    return best.load();
}

namespace {

struct PackedHash {
    std::size_t operator()(const std::pair<std::uint64_t, std::uint64_t>& k) const noexcept {
        return std::hash<std::uint64_t>{}(k.first * 0x9E3779B97F4A7C15ULL ^ k.second);
    }
};

}  // namespace

bool is_linear_image_exhaustive(const GqcCode& code, std::uint64_t cap) {
    const Space s = make_space(code, cap);
    std::vector<Packed> words;
    words.reserve(s.size);
    walk(s, static_cast<int>(s.step.size()), Packed{}, [&](Packed p) {
        words.push_back(p);
        return true;
    });
    std::unordered_set<std::pair<std::uint64_t, std::uint64_t>, PackedHash> set;
    for (auto p : words) set.insert({p.lo, p.hi});
    // Gray image of (lo, hi) is (hi, lo^hi); XOR of images pulled back:
    // hi = hi_u ^ hi_v, lo = lo_u ^ lo_v.
    for (std::size_t a = 0; a < words.size(); ++a)
        for (std::size_t b = a + 1; b < words.size(); ++b)
            if (!set.count({words[a].lo ^ words[b].lo, words[a].hi ^ words[b].hi})) return false;
    return true;
}

bool is_linear_image(const GqcCode& code) {
    const NormalizedGenSet ngs = normalize(code);
    const ModuleType type = cardinality(ngs);
    if (type.log2_size() == 0) throw ArgumentError("is_linear_image: zero code");
    if (type.log2_size() <= 12) return is_linear_image_exhaustive(code, std::uint64_t{1} << 12);
    // Phi(u) ^ Phi(v) = Phi(u + v + 2(u.v mod 2)); the correction is bilinear
    // in the reductions, so generator pairs decide it.
    const auto elems = min_gen_set(ngs).elements();
    const RowSpace space(generator_matrix(ngs));
    std::vector<Z4Vector> vecs;
    for (const auto& e : elems) vecs.push_back(to_vector(e, code.lengths));
    for (std::size_t a = 0; a < vecs.size(); ++a)
        for (std::size_t b = a + 1; b < vecs.size(); ++b) {
            Z4Vector w(vecs[a].size());
            for (std::size_t j = 0; j < w.size(); ++j) w[j] = static_cast<std::uint8_t>(2 * (vecs[a][j] & vecs[b][j] & 1u));
            if (!space.contains(w)) return false;
        }
    return true;
}

}  // namespace gqc4
