#include "doctest.h"
#include "gqc4/codespec.hpp"
#include "gqc4/error.hpp"
#include "gqc4/gray.hpp"
#include "gqc4/polytext.hpp"
#include "gqc4/search.hpp"
#include "gqc4/verify.hpp"

using namespace gqc4;

TEST_CASE("spec file parsing") {
    auto spec = parse_code_spec(R"({"block_lengths":[3,7],"generators":[["x-1","[1,1,0,1]"]],"expect":{"k1":2}})");
    CHECK(spec.code.lengths == BlockLengths({3, 7}));
    REQUIRE(spec.code.generators.size() == 1);
    CHECK(spec.code.generators[0].blocks[1] == parse_quad("x^3+x+1"));
    CHECK(spec.expect.k1 == 2);
    CHECK_FALSE(spec.expect.k2);
    auto again = parse_code_spec(to_json(spec));
    CHECK(again.code.generators == spec.code.generators);
    CHECK(again.expect.k1 == 2);

    CHECK_THROWS_AS(parse_code_spec("{\"block_lengths\": [3"), ParseError);
    CHECK_THROWS_AS(parse_code_spec(R"({"generators":[]})"), ParseError);
    CHECK_THROWS_AS(parse_code_spec(R"({"block_lengths":[4]})"), ParseError);
    CHECK_THROWS_AS(parse_code_spec(R"({"block_lengths":[3],"generators":[["x","1"]]})"), ParseError);
    CHECK_THROWS_AS(parse_code_spec(R"({"block_lengths":[3],"generators":[["x^^2"]]})"), ParseError);
    // No generators: the zero code.
    CHECK(cardinality(parse_code_spec(R"({"block_lengths":[3]})").code).log2_size() == 0);
}

TEST_CASE("generator descriptions round-trip") {
    BlockLengths L({3, 7});
    GqcCode c{L, {make_element(L, {parse_quad("x-1"), parse_quad("2x^5+1")}), zero_element(L)}};
    const auto text = describe_generators(c);
    CHECK(text == "x+3|2x^5+1;0|0");
    CHECK(parse_generators(L, text).generators == c.generators);
    CHECK_THROWS_AS(parse_generators(L, "1"), ParseError);
}

TEST_CASE("diagonal search over (1) and (3)") {
    SearchConfig cfg;
    cfg.lengths = {1};
    CHECK(search_candidates(cfg).size() == 3);
    auto t1 = run_search(cfg);
    REQUIRE(t1.size() == 3);
    CHECK(t1.back().k1 == 1);
    CHECK(t1.back().dL == 1);

    cfg.lengths = {3};
    auto cands = search_candidates(cfg);
    CHECK(cands.size() == 9);
    auto recs = evaluate_all(cands, cfg);
    bool found = false;
    for (const auto& r : recs)
        if (r.k1 == 1 && r.k2 == 0 && r.dL == 3 && r.status == ResultRecord::Status::ok) found = true;
    CHECK(found);
}

TEST_CASE("(3,3) diagonal search: 81 candidates, dedup rule, round trip, determinism") {
    SearchConfig cfg;
    cfg.lengths = {3, 3};
    cfg.workers = 1;
    const auto cands = search_candidates(cfg);
    CHECK(cands.size() == 81);
    const auto recs = evaluate_all(cands, cfg);
    const auto table = best_table(recs);
    for (std::size_t a = 0; a < table.size(); ++a)
        for (std::size_t b = a + 1; b < table.size(); ++b)
            CHECK_FALSE((table[a].n == table[b].n && table[a].k1 == table[b].k1 && table[a].k2 == table[b].k2 &&
                         table[a].status == table[b].status));
    for (const auto& r : table) {
        if (r.status != ResultRecord::Status::ok) continue;
        const GqcCode back = parse_generators(BlockLengths({3, 3}), r.generators);
        const auto t = cardinality(back);
        CHECK(t.k1 == r.k1);
        CHECK(t.k2 == r.k2);
        CHECK(min_lee_distance(back) == r.dL);
    }
    SearchConfig many = cfg;
    many.workers = 4;
    CHECK(format_csv(run_search(many)) == format_csv(table));
    CHECK(format_json(run_search(cfg)) == format_json(table));
}

TEST_CASE("sampled mode is seeded") {
    SearchConfig cfg;
    cfg.lengths = {3, 3};
    cfg.mode = SearchConfig::Mode::sampled;
    cfg.samples = 20;
    cfg.seed = 11;
    auto a = search_candidates(cfg), b = search_candidates(cfg);
    CHECK(a.size() == 101);
    CHECK(describe_generators(a.back()) == describe_generators(b.back()));
    cfg.seed = 12;
    CHECK(describe_generators(search_candidates(cfg).back()) != describe_generators(a.back()));
}

TEST_CASE("cap-exceeded candidates are kept as skipped") {
    SearchConfig cfg;
    cfg.lengths = {3};
    cfg.cap = 16;
    int skipped = 0;
    for (const auto& r : run_search(cfg)) skipped += r.status == ResultRecord::Status::skipped;
    CHECK(skipped > 0);
}

TEST_CASE("verify flags a false claim") {
    auto good = parse_code_spec(R"({"block_lengths":[3],"generators":[["x-1"]],"expect":{"k1":2,"min_lee_distance":2}})");
    CHECK(all_passed(verify_code(good)));
    auto bad = parse_code_spec(R"({"block_lengths":[3],"generators":[["x-1"]],"expect":{"min_lee_distance":3}})");
    CHECK_FALSE(all_passed(verify_code(bad)));
}
