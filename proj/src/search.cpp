#include "gqc4/search.hpp"

#include <algorithm>
#include <atomic>
#include <iomanip>
#include <map>
#include <random>
#include <sstream>
#include <thread>

#include "gqc4/codespec.hpp"
#include "gqc4/error.hpp"
#include "gqc4/gray.hpp"
#include "json.hpp"

namespace gqc4 {

const char* to_string(ResultRecord::Status s) {
    switch (s) {
        case ResultRecord::Status::ok: return "ok";
        case ResultRecord::Status::zero: return "zero";
        case ResultRecord::Status::skipped: return "skipped";
    }
    return "?";
}

std::vector<GqcCode> search_candidates(const SearchConfig& cfg) {
    const BlockLengths L(cfg.lengths);
    const int l = L.index();
    std::vector<std::vector<DivisorPair>> pairs;
    for (int m : L.values()) pairs.push_back(divisor_pairs(m));

    std::vector<GqcCode> out;
    std::vector<std::size_t> pick(static_cast<std::size_t>(l), 0);
    auto diagonal_code = [&](const std::vector<std::size_t>& choice) {
        GqcCode code{L, {}};
        for (int i = 0; i < l; ++i) {
            std::vector<QuadPoly> blocks(static_cast<std::size_t>(l));
            const auto& p = pairs[i][choice[i]];
            blocks[i] = p.f + 2 * p.g;
            code.generators.push_back(make_element(L, std::move(blocks)));
        }
        return code;
    };
    // Block 1 varies fastest.
    while (true) {
        out.push_back(diagonal_code(pick));
        int i = 0;
        for (; i < l; ++i) {
            if (++pick[i] < pairs[i].size()) break;
            pick[i] = 0;
        }
        if (i == l) break;
    }
    if (cfg.mode == SearchConfig::Mode::sampled) {
        std::mt19937_64 rng(cfg.seed);
        for (int s = 0; s < cfg.samples; ++s) {
            std::vector<std::size_t> choice(static_cast<std::size_t>(l));
            for (int i = 0; i < l; ++i) choice[i] = static_cast<std::size_t>(rng() % pairs[i].size());
            GqcCode code = diagonal_code(choice);
            for (int i = 1; i < l; ++i)
                for (int j = 0; j < i; ++j) {
                    std::vector<std::uint8_t> c(static_cast<std::size_t>(L[j]));
                    for (auto& x : c) x = static_cast<std::uint8_t>(rng() & 3u);
                    code.generators[i].blocks[j] = QuadPoly(std::move(c));
                }
            out.push_back(std::move(code));
        }
    }
    return out;
}

ResultRecord evaluate(const GqcCode& code, std::uint64_t cap) {
    ResultRecord r;
    r.n = code.lengths.total();
    r.generators = describe_generators(code);
    const ModuleType t = cardinality(code);
    r.k1 = t.k1;
    r.k2 = t.k2;
    if (t.log2_size() == 0) {
        r.status = ResultRecord::Status::zero;
        return r;
    }
    try {
        r.dL = min_lee_distance(code, {cap, 1});
        r.linear = is_linear_image(code);
    } catch (const CapExceededError&) {
        r.status = ResultRecord::Status::skipped;
        r.dL = 0;
    }
    return r;
}

std::vector<ResultRecord> evaluate_all(const std::vector<GqcCode>& codes, const SearchConfig& cfg) {
    std::vector<ResultRecord> out(codes.size());
    int workers = cfg.workers > 0 ? cfg.workers : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    workers = static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(workers), std::max<std::size_t>(1, codes.size())));
    std::atomic<std::size_t> next{0};
    auto run = [&] {
        for (std::size_t k; (k = next.fetch_add(1)) < codes.size();) out[k] = evaluate(codes[k], cfg.cap);
    };
    if (workers <= 1) {
        run();
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(run);
        for (auto& t : pool) t.join();
    }
    return out;
}

std::vector<ResultRecord> best_table(const std::vector<ResultRecord>& records) {
    // First record wins ties, so the table only depends on candidate order.
    std::map<std::tuple<int, int, int, int>, ResultRecord> best;
    for (const auto& r : records) {
        const auto key = std::make_tuple(r.n, r.k1, r.k2, static_cast<int>(r.status));
        auto it = best.find(key);
        if (it == best.end() || (r.status == ResultRecord::Status::ok && r.dL > it->second.dL)) best[key] = r;
    }
    std::vector<ResultRecord> rows;
    for (auto& [k, r] : best) rows.push_back(r);
    std::sort(rows.begin(), rows.end(), [](const ResultRecord& a, const ResultRecord& b) {
        if (a.n != b.n) return a.n < b.n;
        if (a.log2size() != b.log2size()) return a.log2size() < b.log2size();
        if (a.dL != b.dL) return a.dL > b.dL;
        if (a.k1 != b.k1) return a.k1 < b.k1;
        if (a.status != b.status) return a.status < b.status;
        return a.generators < b.generators;
    });
    return rows;
}

std::vector<ResultRecord> run_search(const SearchConfig& cfg) { return best_table(evaluate_all(search_candidates(cfg), cfg)); }

namespace {

std::string dl_text(const ResultRecord& r) {
    return r.status == ResultRecord::Status::ok ? std::to_string(r.dL) : "";
}

}  // namespace

std::string format_table(const std::vector<ResultRecord>& rows) {
    std::ostringstream os;
    os << std::left << std::setw(5) << "n" << std::setw(10) << "type" << std::setw(5) << "dL" << std::setw(14)
       << "binary" << std::setw(8) << "linear" << std::setw(9) << "status" << "generators\n";
    for (const auto& r : rows) {
        const std::string type = "4^" + std::to_string(r.k1) + " 2^" + std::to_string(r.k2);
        std::string binary = "-";
        if (r.status == ResultRecord::Status::ok)
            binary = "(" + std::to_string(r.N2()) + "," + std::to_string(r.log2size()) + "," + std::to_string(r.dH()) + ")";
        os << std::setw(5) << r.n << std::setw(10) << type << std::setw(5) << (dl_text(r).empty() ? "-" : dl_text(r))
           << std::setw(14) << binary << std::setw(8)
           << (r.status == ResultRecord::Status::ok ? (r.linear ? "yes" : "no") : "-") << std::setw(9) << to_string(r.status)
           << r.generators << "\n";
    }
    return os.str();
}

std::string format_csv(const std::vector<ResultRecord>& rows) {
    std::ostringstream os;
    os << "n,k1,k2,dL,N2,log2size,dH,linear,generators\n";
    for (const auto& r : rows) {
        const bool ok = r.status == ResultRecord::Status::ok;
        os << r.n << ',' << r.k1 << ',' << r.k2 << ',' << dl_text(r) << ',' << r.N2() << ',' << r.log2size() << ','
           << dl_text(r) << ',' << (ok ? (r.linear ? "true" : "false") : "") << ',' << r.generators << "\n";
    }
    return os.str();
}

std::string format_json(const std::vector<ResultRecord>& rows) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : rows) {
        nlohmann::ordered_json o;
        o["n"] = r.n;
        o["k1"] = r.k1;
        o["k2"] = r.k2;
        o["status"] = to_string(r.status);
        if (r.status == ResultRecord::Status::ok) {
            o["dL"] = r.dL;
            o["N2"] = r.N2();
            o["log2size"] = r.log2size();
            o["dH"] = r.dH();
            o["linear"] = r.linear;
        }
        o["generators"] = r.generators;
        arr.push_back(o);
    }
    return arr.dump(2) + "\n";
}

}  // namespace gqc4
