#include "dnawords/length_planner.hpp"

#include "dnawords/errors.hpp"
#include "dnawords/expectation.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace dnawords {

namespace {

void validate(std::size_t n, std::size_t k1, std::size_t k4)
{
    if (n < 2)
        throw InvalidParameter("need at least two words, got n=" +
                               std::to_string(n));
    if (std::max(k1, k4) < 1)
        throw InvalidParameter("max{k1,k4} must be at least 1");
}

} // namespace

double c2_of(double c1)
{
    if (!(c1 > 2.0) || !std::isfinite(c1))
        throw InvalidParameter("c1 must exceed 2");
    const double log2e = std::numbers::log2e;
    return (c1 / 2.0) *
           (2.5 - log2e + std::log2(c1 / ((c1 - 2.0) * std::numbers::ln2)));
}

LengthPlan plan_length(std::size_t n, std::size_t k1, std::size_t k4,
                       double delta)
{
    validate(n, k1, k4);
    if (!(delta > 0.0) || !std::isfinite(delta))
        throw InvalidParameter("delta must be a positive real");
    LengthPlan plan;
    plan.delta = delta;
    plan.c1 = 2.0 + delta;
    plan.c2 = c2_of(plan.c1);
    plan.k = std::max(k1, k4);
    const double raw = plan.c1 * std::log2(static_cast<double>(n)) +
                       plan.c2 * static_cast<double>(plan.k);
    plan.ell_star = static_cast<std::size_t>(std::ceil(raw));
    return plan;
}

std::size_t ell_star(std::size_t n, std::size_t k1, std::size_t k4,
                     double delta)
{
    return plan_length(n, k1, k4, delta).ell_star;
}

bool boundary_certificate(std::size_t n, std::size_t length, std::size_t k1,
                          std::size_t k4)
{
    if (length < 1 || !exceeds_threshold(n, length, k1, k4))
        return false;
    return length == 1 || !exceeds_threshold(n, length - 1, k1, k4);
}

std::size_t min_length(std::size_t n, std::size_t k1, std::size_t k4)
{
    validate(n, k1, k4);
    std::size_t hi = ell_star(n, k1, k4, 1.0);
    // l* is feasible by construction; doubling only guards float drift.
    while (!exceeds_threshold(n, hi, k1, k4))
        hi *= 2;
    std::size_t lo = 1;
    while (lo < hi) {
        const std::size_t mid = lo + (hi - lo) / 2;
        if (exceeds_threshold(n, mid, k1, k4))
            hi = mid;
        else
            lo = mid + 1;
    }
    if (boundary_certificate(n, lo, k1, k4))
        return lo;
    std::size_t l = 1;
    while (!exceeds_threshold(n, l, k1, k4))
        ++l;
    return l;
}

std::size_t min_length_hamming_only(std::size_t n, std::size_t k1)
{
    if (k1 < 1)
        throw InvalidParameter("k1 must be at least 1");
    return min_length(n, k1, 1);
}

} // namespace dnawords
