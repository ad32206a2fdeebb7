#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "dnawords/constraints.hpp"
#include "dnawords/derandomizer.hpp"
#include "dnawords/errors.hpp"
#include "dnawords/expectation.hpp"
#include "dnawords/length_planner.hpp"
#include "oracle.hpp"

using namespace dnawords;

TEST_CASE("small grid satisfies C1 and C4 per the brute-force counters")
{
    for (std::size_t n : {2u, 3u, 4u, 6u, 8u, 11u})
        for (std::size_t k1 = 1; k1 <= 4; ++k1)
            for (std::size_t k4 = 0; k4 <= 4; ++k4) {
                const std::size_t l = min_length(n, k1, k4);
                const auto r = det_words(n, l, k1, k4);
                const auto w = r.code.strings();
                CHECK(r.code.size() == n);
                CHECK(r.code.length() == l);
                CHECK(oracle::count_c1(w, static_cast<int>(k1)) == 0);
                CHECK(oracle::count_c4(w, static_cast<int>(k4)) == 0);
            }
}

TEST_CASE("trace is monotone and ends at an integer above slots - 1")
{
    for (auto order : {FillOrder::ColumnMajor, FillOrder::RowMajor}) {
        const auto r = det_words(8, 20, 3, 2, {order, true});
        REQUIRE(r.trace.size() == 8u * 20u);
        DyadicRational prev = r.initial_expectation;
        for (const auto &s : r.trace) {
            CHECK(s.after >= prev);
            CHECK(s.after == std::max(s.e0, s.e1));
            CHECK((s.e0 + s.e1).half() == prev);
            CHECK(s.after == (s.bit == 0 ? s.e0 : s.e1));
            prev = s.after;
        }
        CHECK(r.final_expectation == prev);
        CHECK(r.final_expectation == DyadicRational(r.slots));
        CHECK(r.initial_expectation > DyadicRational(r.slots - 1));
    }
}

TEST_CASE("fill orders differ in cell sequence")
{
    const auto c = det_words(3, 6, 2, 2, {FillOrder::ColumnMajor, true});
    const auto r = det_words(3, 6, 2, 2, {FillOrder::RowMajor, true});
    CHECK(c.trace[1].row == 2);
    CHECK(c.trace[1].col == 1);
    CHECK(r.trace[1].row == 1);
    CHECK(r.trace[1].col == 2);
}

TEST_CASE("deterministic output")
{
    const auto a = det_words(16, 30, 4, 3);
    const auto b = det_words(16, 30, 4, 3);
    CHECK(a.code == b.code);
}

TEST_CASE("ties pick zero")
{
    // Every first-cell choice is symmetric.
    const auto r = det_words(2, 4, 2, 2, {FillOrder::ColumnMajor, true});
    CHECK(r.trace.front().bit == 0);
    CHECK(r.code[0][0] == '0');
}

TEST_CASE("errors")
{
    CHECK_THROWS_AS(det_words(1, 5, 1, 1), InvalidParameter);
    CHECK_THROWS_AS(det_words(4, 5, 0, 0), InvalidParameter);
    CHECK_THROWS_AS(det_words(3, 1, 1, 1), InfeasibleLength);
    try {
        det_words(8, 5, 3, 3);
        FAIL("expected InfeasibleLength");
    } catch (const InfeasibleLength &e) {
        CHECK(e.length() == 5);
    }
}

TEST_CASE("hamming-only variant")
{
    for (std::size_t n : {2u, 5u, 16u, 40u})
        for (std::size_t k1 = 1; k1 <= 5; ++k1) {
            const std::size_t l = min_length_hamming_only(n, k1);
            const auto r = det_words_hamming_only(n, l, k1, {FillOrder::ColumnMajor, true});
            CHECK(oracle::count_c1(r.code.strings(), static_cast<int>(k1)) == 0);
            CHECK(r.slots == n * (n - 1) / 2);
            CHECK(l <= min_length(n, k1, k1));
        }
    CHECK_THROWS_AS(det_words_hamming_only(4, 8, 0), InvalidParameter);
}

TEST_CASE("any feasible length works, not only the minimal one")
{
    for (std::size_t l = min_length(6, 3, 3); l < 24; ++l) {
        const auto w = det_words(6, l, 3, 3).code.strings();
        CHECK(oracle::count_c1(w, 3) == 0);
        CHECK(oracle::count_c4(w, 3) == 0);
    }
}
