#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "dnawords/errors.hpp"
#include "dnawords/expectation.hpp"
#include "dnawords/length_planner.hpp"
#include "oracle.hpp"

#include <cmath>

using namespace dnawords;

TEST_CASE("c2 values")
{
    CHECK(c2_of(3.0) == doctest::Approx(4.75655).epsilon(1e-5));
    CHECK(c2_of(2.1) == doctest::Approx(6.27731).epsilon(1e-5));
    CHECK_THROWS_AS(c2_of(2.0), InvalidParameter);
    // blows up as c1 approaches 2
    CHECK(c2_of(2.001) > c2_of(2.01));
    CHECK(c2_of(2.01) > c2_of(2.1));
    for (double c1 = 2.01; c1 < 6.0; c1 += 0.01)
        CHECK(c2_of(c1) > 0);
}

TEST_CASE("plan fields")
{
    const LengthPlan p = plan_length(16, 2, 1, 1.0);
    CHECK(p.c1 == 3.0);
    CHECK(p.k == 2);
    CHECK(p.ell_star == 22);
    CHECK(ell_star(16, 2, 2, 1.0) == 22);
    CHECK(ell_star(16, 2, 2, 1.0) ==
          static_cast<std::size_t>(std::ceil(3.0 * 4 + c2_of(3.0) * 2)));
    CHECK_THROWS_AS(plan_length(1, 1, 1, 1.0), InvalidParameter);
    CHECK_THROWS_AS(plan_length(4, 0, 0, 1.0), InvalidParameter);
    CHECK_THROWS_AS(plan_length(4, 1, 1, 0.0), InvalidParameter);
}

TEST_CASE("min_length is the first feasible length")
{
    for (int n = 2; n <= 20; ++n)
        for (int k1 = 0; k1 <= 5; ++k1)
            for (int k4 = 0; k4 <= 5; ++k4) {
                if (std::max(k1, k4) == 0)
                    continue;
                int want = 1;
                while (!oracle::blank_feasible(n, want, k1, k4))
                    ++want;
                const auto got = min_length(static_cast<std::size_t>(n), static_cast<std::size_t>(k1),
                                            static_cast<std::size_t>(k4));
                CHECK(got == static_cast<std::size_t>(want));
                CHECK(boundary_certificate(static_cast<std::size_t>(n), got, static_cast<std::size_t>(k1),
                                           static_cast<std::size_t>(k4)));
                CHECK(got <= ell_star(static_cast<std::size_t>(n), static_cast<std::size_t>(k1),
                                      static_cast<std::size_t>(k4), 1.0));
            }
}

TEST_CASE("hamming-only minimum")
{
    for (int n = 2; n <= 30; n += 3)
        for (int k1 = 1; k1 <= 6; ++k1) {
            int want = 1;
            while (!oracle::blank_feasible(n, want, k1, 1))
                ++want;
            CHECK(min_length_hamming_only(static_cast<std::size_t>(n), static_cast<std::size_t>(k1)) ==
                  static_cast<std::size_t>(want));
        }
}

TEST_CASE("known spot values")
{
    CHECK(min_length(2, 1, 1) == 1);
    CHECK(min_length(2, 2, 1) == 2);
}

TEST_CASE("certificate rejects non-minimal lengths")
{
    const std::size_t m = min_length(16, 3, 3);
    CHECK(boundary_certificate(16, m, 3, 3));
    CHECK_FALSE(boundary_certificate(16, m + 1, 3, 3));
    CHECK_FALSE(boundary_certificate(16, m - 1, 3, 3));
}
