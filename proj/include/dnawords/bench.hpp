// bench.hpp -- naive rejection-sampling baseline for word-length comparison
//
// The baseline is plain uniform sampling plus the oracle, not a tuned
// randomized construction.

#pragma once

#include "dnawords/constraints.hpp"
#include "dnawords/core.hpp"
#include "dnawords/transforms.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace dnawords {

/// SplitMix64 finalizer; used to derive independent per-cell seeds.
std::uint64_t splitmix64(std::uint64_t x);

/// n distinct uniform words of length l. Characters come straight from the
/// top bits of std::mt19937_64 (whose output sequence is fixed by the
/// standard), so results are identical across platforms. A word that
/// collides with an earlier one is redrawn. InvalidParameter if fewer than
/// n distinct words exist.
Code sample_random_code(std::size_t n, std::size_t length, Alphabet alphabet,
                        std::uint64_t seed);

struct BenchConfig
{
    Pipeline pipeline = Pipeline::C14;
    std::vector<std::size_t> ns;
    std::vector<std::size_t> ks; ///< applied uniformly to k1..k6
    double gamma = 0.5;
    std::size_t d = 3;
    std::size_t trials = 20;
    std::uint64_t seed = 1;
    GenerateOptions options;
};

struct BenchRecord
{
    Pipeline pipeline = Pipeline::C14;
    std::size_t n = 0;
    ConstraintSpec spec;
    std::size_t deterministic_length = 0;
    /// Smallest l where at least half the samples verify; empty when no
    /// l up to twice the deterministic length qualifies.
    std::optional<std::size_t> baseline_length;
    std::size_t trials = 0;
    std::uint64_t seed = 0; ///< per-cell seed actually used
    double wall_seconds = 0.0;
};

/// One record per (n, k) cell, in grid order (n outer, k inner).
std::vector<BenchRecord> compare_lengths(const BenchConfig &config);

/// Aligned UTF-8 table; the time column only when `timing` is set.
std::string format_bench_table(const std::vector<BenchRecord> &records,
                               bool timing);

} // namespace dnawords
