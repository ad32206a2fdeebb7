#include "dnawords/derandomizer.hpp"

#include "dnawords/constraints.hpp"
#include "dnawords/errors.hpp"
#include "dnawords/expectation.hpp"

#include <algorithm>
#include <stdexcept>

namespace dnawords {

namespace {

/// Cached failure numerators (over 2^l) for every pair term, so that a
/// cell assignment only re-evaluates terms involving the mutated row.
class Potential
{
public:
    Potential(std::size_t n, std::size_t length, std::size_t k1,
              std::size_t k4)
      : _n(n), _l(length), _k(std::max(k1, k4)), _k4(k4),
        _shifts(k4 >= 2 ? k4 - 1 : 0), _table(length, _k - 1),
        _rows(n, PartialRow(length, Cell::Unknown)),
        _e1(n * n), _e4(_shifts * n * n)
    {
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = a + 1; b < n; ++b)
                _e1[a * n + b] = fail_numerator_c1(_table, _rows[a], _rows[b], _k);
        for (std::size_t s = 0; s < _shifts; ++s)
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = 0; b < n; ++b)
                    if (a != b)
                        e4(s, a, b) = fail_numerator_c4(
                            _table, _rows[a], _rows[b], _k4, case_of(s));
        _fail = 0;
        for (const auto &v : _e1)
            _fail += v;
        for (const auto &v : _e4)
            _fail += v;
    }

    const BigInt &fail() const noexcept { return _fail; }

    /// Sum of the cached terms that involve row p.
    BigInt row_terms(std::size_t p) const
    {
        BigInt sum = 0;
        for (std::size_t b = 0; b < _n; ++b) {
            if (b == p)
                continue;
            sum += _e1[std::min(p, b) * _n + std::max(p, b)];
            for (std::size_t s = 0; s < _shifts; ++s)
                sum += e4(s, p, b) + e4(s, b, p);
        }
        return sum;
    }

    /// Set cell (p, q) (0-based, unknown or not) and refresh row p's terms.
    /// Returns the new sum of row p's terms.
    BigInt set(std::size_t p, std::size_t q, Cell value)
    {
        _rows[p][q] = value;
        BigInt sum = 0;
        for (std::size_t b = 0; b < _n; ++b) {
            if (b == p)
                continue;
            const std::size_t lo = std::min(p, b), hi = std::max(p, b);
            auto &t1 = _e1[lo * _n + hi];
            t1 = fail_numerator_c1(_table, _rows[lo], _rows[hi], _k);
            sum += t1;
            for (std::size_t s = 0; s < _shifts; ++s) {
                const std::size_t i = case_of(s);
                auto &fwd = e4(s, p, b);
                auto &bwd = e4(s, b, p);
                fwd = fail_numerator_c4(_table, _rows[p], _rows[b], _k4, i);
                bwd = fail_numerator_c4(_table, _rows[b], _rows[p], _k4, i);
                sum += fwd + bwd;
            }
        }
        return sum;
    }

    void commit(BigInt fail) { _fail = std::move(fail); }

    const std::vector<PartialRow> &rows() const noexcept { return _rows; }

private:
    std::size_t case_of(std::size_t s) const { return _l - 1 - s; }

    BigInt &e4(std::size_t s, std::size_t a, std::size_t b)
    {
        return _e4[(s * _n + a) * _n + b];
    }
    const BigInt &e4(std::size_t s, std::size_t a, std::size_t b) const
    {
        return _e4[(s * _n + a) * _n + b];
    }

    std::size_t _n, _l, _k, _k4, _shifts;
    TailTable _table;
    std::vector<PartialRow> _rows;
    std::vector<BigInt> _e1; // upper triangle, a < b
    std::vector<BigInt> _e4; // [shift][a][b], ordered
    BigInt _fail;
};

DyadicRational potential_value(const BigInt &slots_num, const BigInt &fail,
                               std::size_t length)
{
    return DyadicRational(slots_num - fail, static_cast<std::uint32_t>(length));
}

DistanceMatrixResult run(std::size_t n, std::size_t length, std::size_t k1,
                         std::size_t k4, const DetWordsOptions &options,
                         bool verify_c4)
{
    if (n < 2)
        throw InvalidParameter("need at least two words, got n=" +
                               std::to_string(n));
    if (std::max(k1, k4) < 1)
        throw InvalidParameter("max{k1,k4} must be at least 1");
    if (length < 1)
        throw InvalidParameter("word length must be positive");

    const BigInt one = BigInt(1) << length;
    const BigInt blank_fail = blank_failure_numerator(n, length, k1, k4);
    const std::uint64_t slots = slot_count(n, k4);
    const BigInt slots_num = BigInt(slots) << length;
    if (blank_fail >= one)
        throw InfeasibleLength(
            length, "blank potential " +
                        potential_value(slots_num, blank_fail, length)
                            .to_string() +
                        " does not exceed slots - 1 = " +
                        std::to_string(slots - 1));

    Potential pot(n, length, k1, k4);
    if (pot.fail() != blank_fail)
        throw std::logic_error("cached potential disagrees with closed form");

    std::vector<TraceStep> trace;
    if (options.trace)
        trace.reserve(n * length);

    auto step = [&](std::size_t p, std::size_t q) {
        const BigInt before = pot.fail();
        const BigInt old_terms = pot.row_terms(p);
        const BigInt f0 = before - old_terms + pot.set(p, q, Cell::Zero);
        // Linearity: the current potential is the mean of both branches.
        const BigInt f1 = 2 * before - f0;
        int bit = 0;
        if (f0 <= f1) {
            pot.commit(f0);
        } else {
            bit = 1;
            const BigInt direct = before - old_terms + pot.set(p, q, Cell::One);
            if (direct != f1)
                throw std::logic_error("linearity check failed at cell (" +
                                       std::to_string(p + 1) + ", " +
                                       std::to_string(q + 1) + ")");
            pot.commit(direct);
        }
        if (pot.fail() >= one || pot.fail() > before)
            throw std::logic_error("greedy invariant violated");
        if (options.trace)
            trace.push_back(
                {p + 1, q + 1, bit, potential_value(slots_num, f0, length),
                 potential_value(slots_num, f1, length),
                 potential_value(slots_num, pot.fail(), length)});
    };

    if (options.order == FillOrder::ColumnMajor) {
        for (std::size_t q = 0; q < length; ++q)
            for (std::size_t p = 0; p < n; ++p)
                step(p, q);
    } else {
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = 0; q < length; ++q)
                step(p, q);
    }

    std::vector<Word> words;
    words.reserve(n);
    for (const auto &r : pot.rows())
        words.emplace_back(Alphabet::binary(), format_row(r));
    DistanceMatrixResult result{
        Code(std::move(words)), potential_value(slots_num, blank_fail, length),
        potential_value(slots_num, pot.fail(), length), slots,
        std::move(trace)};

    Report report = check_c1(result.code, k1);
    if (verify_c4)
        report.append(check_c4(result.code, k4));
    if (!report.empty())
        throw VerificationFailed("derandomized matrix rejected: " +
                                 report[0].describe());
    return result;
}

} // namespace

DistanceMatrixResult det_words(std::size_t n, std::size_t length,
                               std::size_t k1, std::size_t k4,
                               const DetWordsOptions &options)
{
    return run(n, length, k1, k4, options, true);
}

DistanceMatrixResult det_words_hamming_only(std::size_t n, std::size_t length,
                                            std::size_t k1,
                                            const DetWordsOptions &options)
{
    if (k1 < 1)
        throw InvalidParameter("k1 must be at least 1");
    return run(n, length, k1, 1, options, false);
}

} // namespace dnawords
