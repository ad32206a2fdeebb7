// length_planner.hpp -- analytic and computed word-length budgets

#pragma once

#include <cstddef>

namespace dnawords {

/// Smallest c2 for which l* = ceil(c1 log2 n + c2 k) is guaranteed to pass
/// the derandomization base case:
/// c2 = (c1/2) (2.5 - log2 e + log2(c1 / ((c1-2) ln 2))). Requires c1 > 2.
double c2_of(double c1);

struct LengthPlan
{
    double delta = 0.0;
    double c1 = 0.0;
    double c2 = 0.0;
    std::size_t k = 0;
    std::size_t ell_star = 0;
};

/// c1 = 2 + delta, k = max{k1,k4}. Requires n >= 2, k >= 1, delta > 0.
LengthPlan plan_length(std::size_t n, std::size_t k1, std::size_t k4,
                       double delta);

std::size_t ell_star(std::size_t n, std::size_t k1, std::size_t k4,
                     double delta);

/// Smallest l with exceeds_threshold(n, l, k1, k4). Binary search below
/// ell_star(delta = 1), then a boundary certificate; if the certificate
/// fails the answer comes from a linear scan upward from 1.
std::size_t min_length(std::size_t n, std::size_t k1, std::size_t k4);

/// min_length for the C1-only potential.
std::size_t min_length_hamming_only(std::size_t n, std::size_t k1);

/// exceeds_threshold holds at l and (for l > 1) fails at l - 1.
bool boundary_certificate(std::size_t n, std::size_t length, std::size_t k1,
                          std::size_t k4);

} // namespace dnawords
