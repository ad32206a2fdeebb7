#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "dnawords/bench.hpp"
#include "dnawords/constraints.hpp"
#include "dnawords/errors.hpp"

#include <set>

using namespace dnawords;

TEST_CASE("splitmix64 reference values")
{
    // First two outputs of the reference generator seeded with 0.
    CHECK(splitmix64(0) == 0xe220a8397b1dcdafULL);
    CHECK(splitmix64(0x9e3779b97f4a7c15ULL) == 0x6e789e6aa1b965f4ULL);
    CHECK(splitmix64(1) != splitmix64(2));
}

TEST_CASE("random codes are distinct, seeded and well-formed")
{
    const Code a = sample_random_code(50, 12, Alphabet::dna(), 42);
    const Code b = sample_random_code(50, 12, Alphabet::dna(), 42);
    const Code c = sample_random_code(50, 12, Alphabet::dna(), 43);
    CHECK(a == b);
    CHECK_FALSE(a == c);
    CHECK(a.size() == 50);
    CHECK(a.length() == 12);
    const auto s = a.strings();
    CHECK(std::set<std::string>(s.begin(), s.end()).size() == 50);
    // all 4 binary words of length 2
    const Code full = sample_random_code(4, 2, Alphabet::binary(), 1);
    CHECK(full.size() == 4);
    CHECK_THROWS_AS(sample_random_code(5, 2, Alphabet::binary(), 1), InvalidParameter);
}

TEST_CASE("compare_lengths records")
{
    BenchConfig cfg;
    cfg.pipeline = Pipeline::C14;
    cfg.ns = {4, 8};
    cfg.ks = {1, 2};
    cfg.trials = 10;
    cfg.seed = 7;
    const auto recs = compare_lengths(cfg);
    REQUIRE(recs.size() == 4);
    CHECK(recs[0].n == 4);
    CHECK(recs[0].spec.k[1] == 1);
    CHECK(recs[1].spec.k[1] == 2);
    CHECK(recs[2].n == 8);
    for (const auto &r : recs) {
        CHECK(r.trials == 10);
        REQUIRE(r.baseline_length.has_value());
        CHECK(*r.baseline_length >= 1);
        CHECK(r.deterministic_length >= 1);
    }
    CHECK(recs[0].seed != recs[1].seed);

    const auto again = compare_lengths(cfg);
    for (std::size_t i = 0; i < recs.size(); ++i) {
        CHECK(again[i].baseline_length == recs[i].baseline_length);
        CHECK(again[i].seed == recs[i].seed);
    }
    const std::string table = format_bench_table(recs, false);
    CHECK(table.find("c1-4") != std::string::npos);
    CHECK(table == format_bench_table(again, false));
}
