// derandomizer.hpp -- greedy conditional-expectation construction of
// (k1,k4)-distance matrices

#pragma once

#include "dnawords/core.hpp"
#include "dnawords/dyadic.hpp"

#include <cstdint>
#include <vector>

namespace dnawords {

/// Order in which cells are fixed. Column-major assigns position 1 of
/// every word, then position 2, and so on.
enum class FillOrder { ColumnMajor, RowMajor };

/// One greedy step: the cell (1-based), the bit kept, the conditional
/// potentials of both choices and the potential afterwards.
struct TraceStep
{
    std::size_t row = 0;
    std::size_t col = 0;
    int bit = 0;
    DyadicRational e0;
    DyadicRational e1;
    DyadicRational after;
};

struct DetWordsOptions
{
    FillOrder order = FillOrder::ColumnMajor;
    bool trace = false;
};

struct DistanceMatrixResult
{
    Code code;
    DyadicRational initial_expectation;
    DyadicRational final_expectation;
    std::uint64_t slots = 0;
    std::vector<TraceStep> trace; ///< empty unless requested
};

/// Fill an n x l matrix so its rows satisfy C1(k1) and C4(k4).
/// InvalidParameter for n < 2 or max{k1,k4} = 0; InfeasibleLength when the
/// blank potential does not exceed slots - 1; VerificationFailed if the
/// oracle rejects the output.
DistanceMatrixResult det_words(std::size_t n, std::size_t length,
                               std::size_t k1, std::size_t k4,
                               const DetWordsOptions &options = {});

/// Same scheme restricted to C1(k1): no shifted terms, slots = C(n,2).
DistanceMatrixResult det_words_hamming_only(std::size_t n, std::size_t length,
                                            std::size_t k1,
                                            const DetWordsOptions &options = {});

} // namespace dnawords
