// expectation.hpp -- exact derandomization potential over partial matrices
//
// Every unknown cell of a PartialMatrix is an independent fair bit. The
// potential counts, in expectation, how many (pair, shift) instances of
// C1(max{k1,k4}) and C4(k4) are satisfied:
//
//   E(M) = sum over unordered pairs of P[H(Y,X) >= k]
//        + sum over i in [l-k4+1, l-1], ordered pairs (Y,X) of
//            P[H(Y[1..i], X[l-i+1..l]) >= k4 - (l-i)]
//
// All sums are carried as integer numerators over 2^l.

#pragma once

#include "dnawords/core.hpp"
#include "dnawords/dyadic.hpp"

#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

namespace dnawords {

enum class Cell : std::uint8_t { Zero = 0, One = 1, Unknown = 2 };

using PartialRow = std::vector<Cell>;

/// Parse "01??" style rows ('?' or 'x' for unknown).
PartialRow parse_row(std::string_view text);
std::string format_row(const PartialRow &row);

/// n x l grid over {0, 1, unknown}. Cells only move from unknown to known.
class PartialMatrix
{
public:
    /// All cells unknown. Throws InvalidParameter for n == 0.
    PartialMatrix(std::size_t n, std::size_t length);

    /// Throws LengthMismatch on ragged input.
    static PartialMatrix from_rows(const std::vector<std::string> &rows);

    std::size_t rows() const noexcept { return _rows.size(); }
    std::size_t length() const noexcept { return _length; }

    /// 1-based row p, column q.
    Cell cell(std::size_t p, std::size_t q) const;
    /// Fix an unknown cell to 0 or 1; throws InvalidParameter if the cell
    /// is already known, IndexError if out of range.
    void assign(std::size_t p, std::size_t q, int bit);

    /// 1-based row access.
    const PartialRow &row(std::size_t p) const;

    std::size_t unknown_count() const noexcept;
    bool complete() const noexcept { return unknown_count() == 0; }

    /// Rows as a binary code; throws InvalidParameter if incomplete.
    Code to_code() const;

private:
    std::size_t _length;
    std::vector<PartialRow> _rows;
};

/// Aligned-position statistics of a row pair.
struct PairProfile
{
    std::size_t s = 0; ///< both cells known
    std::size_t t = 0; ///< known and different
    std::size_t m = 0; ///< at least one unknown
};

/// Full-row alignment (C1).
PairProfile profile_c1(const PartialRow &y, const PartialRow &x);
/// Y position j against X position (l-i)+j, j = 1..i (C4 case i).
PairProfile profile_c4(const PartialRow &y, const PartialRow &x, std::size_t i);

/// Prefix sums of binomial tails, scaled to a common exponent l:
/// at(m, b) = sum_{j<=b} C(m,j) * 2^(l-m), i.e. the numerator over 2^l of
/// P[Bin(m, 1/2) <= b].
class TailTable
{
public:
    TailTable(std::size_t length, std::size_t max_bound);

    std::size_t length() const noexcept { return _length; }

    /// 0 for b < 0 and 2^l for b >= m.
    const BigInt &at(std::size_t m, long long b) const;

private:
    std::size_t _length;
    std::size_t _max_bound;
    BigInt _zero = 0;
    BigInt _full;
    std::vector<std::vector<BigInt>> _rows;
};

/// Failure numerator over 2^l for C1 with threshold k.
const BigInt &fail_numerator_c1(const TailTable &table, const PartialRow &y,
                                const PartialRow &x, std::size_t k);
/// Failure numerator over 2^l for C4 case i (requires 1 <= i <= l-1).
const BigInt &fail_numerator_c4(const TailTable &table, const PartialRow &y,
                                const PartialRow &x, std::size_t k4,
                                std::size_t i);

/// P[H(Y,X) <= k-1] under uniform completion of unknowns.
DyadicRational pair_fail_prob_c1(const PartialRow &y, const PartialRow &x,
                                 std::size_t k);

/// P[H(Y[1..i], X[l-i+1..l]) <= k4-(l-i)-1]. Requires
/// l-k4+1 <= i <= l-1, otherwise InvalidParameter.
DyadicRational pair_fail_prob_c4(const PartialRow &y, const PartialRow &x,
                                 std::size_t k4, std::size_t i);

/// C(n,2) * (1 + 2(k4-1)); k4 = 0 counts like k4 = 1 (no shifted cases).
std::uint64_t slot_count(std::size_t n, std::size_t k4);

struct ExpectationBreakdown
{
    DyadicRational e1_term;
    /// (i, term) for i = l-k4+1 .. l-1.
    std::vector<std::pair<std::size_t, DyadicRational>> e4_terms;
    DyadicRational total;
    std::uint64_t slots = 0;
};

/// Requires n >= 2, max{k1,k4} >= 1 and l >= max{k1,k4}.
ExpectationBreakdown approx_expectation(const PartialMatrix &m, std::size_t k1,
                                        std::size_t k4);

/// Total failure numerator over 2^l on the all-unknown matrix, without
/// materializing it. Shifted cases with i <= 0 (only when l < k4) fail
/// with certainty.
BigInt blank_failure_numerator(std::size_t n, std::size_t length,
                               std::size_t k1, std::size_t k4);

/// approx_expectation of the all-unknown n x l matrix. Requires n >= 2,
/// l >= 1, max{k1,k4} >= 1.
DyadicRational blank_expectation(std::size_t n, std::size_t length,
                                 std::size_t k1, std::size_t k4);

/// blank_expectation(...) > slots - 1, decided exactly.
bool exceeds_threshold(std::size_t n, std::size_t length, std::size_t k1,
                       std::size_t k4);

} // namespace dnawords
