#include "dnawords/expectation.hpp"

#include "dnawords/errors.hpp"

#include <algorithm>

namespace dnawords {

namespace {

void validate(std::size_t n, std::size_t length, std::size_t k1,
              std::size_t k4)
{
    if (n < 2)
        throw InvalidParameter("need at least two words, got n=" +
                               std::to_string(n));
    if (length < 1)
        throw InvalidParameter("word length must be positive");
    if (std::max(k1, k4) < 1)
        throw InvalidParameter("max{k1,k4} must be at least 1");
}

std::uint64_t pairs(std::size_t n)
{
    return static_cast<std::uint64_t>(n) * (n - 1) / 2;
}

} // namespace

PartialRow parse_row(std::string_view text)
{
    PartialRow row;
    row.reserve(text.size());
    for (char c : text) {
        switch (c) {
        case '0': row.push_back(Cell::Zero); break;
        case '1': row.push_back(Cell::One); break;
        case '?':
        case 'x': row.push_back(Cell::Unknown); break;
        default:
            throw InvalidAlphabet(std::string("row character '") + c +
                                  "' is not 0, 1 or ?");
        }
    }
    return row;
}

std::string format_row(const PartialRow &row)
{
    std::string s;
    s.reserve(row.size());
    for (Cell c : row)
        s.push_back(c == Cell::Zero ? '0' : c == Cell::One ? '1' : '?');
    return s;
}

PartialMatrix::PartialMatrix(std::size_t n, std::size_t length)
  : _length(length), _rows(n, PartialRow(length, Cell::Unknown))
{
    if (n == 0)
        throw InvalidParameter("a partial matrix needs at least one row");
}

PartialMatrix PartialMatrix::from_rows(const std::vector<std::string> &rows)
{
    if (rows.empty())
        throw InvalidParameter("a partial matrix needs at least one row");
    PartialMatrix m(rows.size(), rows.front().size());
    for (std::size_t p = 0; p < rows.size(); ++p) {
        if (rows[p].size() != m._length)
            throw LengthMismatch("row " + std::to_string(p + 1) +
                                 " has length " +
                                 std::to_string(rows[p].size()));
        m._rows[p] = parse_row(rows[p]);
    }
    return m;
}

Cell PartialMatrix::cell(std::size_t p, std::size_t q) const
{
    const PartialRow &r = row(p);
    if (q == 0 || q > _length)
        throw IndexError("column " + std::to_string(q) + " out of range");
    return r[q - 1];
}

void PartialMatrix::assign(std::size_t p, std::size_t q, int bit)
{
    if (p == 0 || p > _rows.size() || q == 0 || q > _length)
        throw IndexError("cell (" + std::to_string(p) + ", " +
                         std::to_string(q) + ") out of range");
    if (bit != 0 && bit != 1)
        throw InvalidParameter("cell value must be 0 or 1");
    Cell &c = _rows[p - 1][q - 1];
    if (c != Cell::Unknown)
        throw InvalidParameter("cell (" + std::to_string(p) + ", " +
                               std::to_string(q) + ") is already assigned");
    c = bit == 0 ? Cell::Zero : Cell::One;
}

const PartialRow &PartialMatrix::row(std::size_t p) const
{
    if (p == 0 || p > _rows.size())
        throw IndexError("row " + std::to_string(p) + " out of range");
    return _rows[p - 1];
}

std::size_t PartialMatrix::unknown_count() const noexcept
{
    std::size_t u = 0;
    for (const auto &r : _rows)
        u += static_cast<std::size_t>(
            std::count(r.begin(), r.end(), Cell::Unknown));
    return u;
}

Code PartialMatrix::to_code() const
{
    if (!complete())
        throw InvalidParameter("matrix still has unknown cells");
    std::vector<Word> words;
    words.reserve(_rows.size());
    for (const auto &r : _rows)
        words.emplace_back(Alphabet::binary(), format_row(r));
    return Code(std::move(words));
}

PairProfile profile_c1(const PartialRow &y, const PartialRow &x)
{
    if (y.size() != x.size())
        throw LengthMismatch("rows of lengths " + std::to_string(y.size()) +
                             " and " + std::to_string(x.size()));
    PairProfile p;
    for (std::size_t j = 0; j < y.size(); ++j) {
        if (y[j] == Cell::Unknown || x[j] == Cell::Unknown) {
            ++p.m;
        } else {
            ++p.s;
            p.t += y[j] != x[j];
        }
    }
    return p;
}

PairProfile profile_c4(const PartialRow &y, const PartialRow &x, std::size_t i)
{
    if (y.size() != x.size())
        throw LengthMismatch("rows of lengths " + std::to_string(y.size()) +
                             " and " + std::to_string(x.size()));
    if (i > y.size())
        throw InvalidParameter("shift case i exceeds row length");
    const std::size_t offset = y.size() - i;
    PairProfile p;
    for (std::size_t j = 0; j < i; ++j) {
        const Cell a = y[j];
        const Cell b = x[offset + j];
        if (a == Cell::Unknown || b == Cell::Unknown) {
            ++p.m;
        } else {
            ++p.s;
            p.t += a != b;
        }
    }
    return p;
}

TailTable::TailTable(std::size_t length, std::size_t max_bound)
  : _length(length), _max_bound(max_bound), _full(BigInt(1) << length),
    _rows(length + 1)
{
    for (std::size_t m = 0; m <= length; ++m) {
        const std::size_t top = std::min(m, max_bound);
        auto &row = _rows[m];
        row.reserve(top + 1);
        BigInt binom = 1; // C(m, j)
        BigInt sum = 0;
        for (std::size_t j = 0; j <= top; ++j) {
            if (j > 0)
                binom = binom * (m - j + 1) / j;
            sum += binom;
            row.push_back(sum << (length - m));
        }
    }
}

const BigInt &TailTable::at(std::size_t m, long long b) const
{
    if (b < 0)
        return _zero;
    if (m > _length)
        throw InvalidParameter("tail table queried beyond its length");
    if (static_cast<std::size_t>(b) >= m)
        return _full;
    if (static_cast<std::size_t>(b) > _max_bound)
        throw InvalidParameter("tail table queried beyond its bound");
    return _rows[m][static_cast<std::size_t>(b)];
}

const BigInt &fail_numerator_c1(const TailTable &table, const PartialRow &y,
                                const PartialRow &x, std::size_t k)
{
    const PairProfile p = profile_c1(y, x);
    const long long b = static_cast<long long>(k) - 1 -
                        static_cast<long long>(p.t);
    return table.at(p.m, b);
}

const BigInt &fail_numerator_c4(const TailTable &table, const PartialRow &y,
                                const PartialRow &x, std::size_t k4,
                                std::size_t i)
{
    const PairProfile p = profile_c4(y, x, i);
    const long long bound = static_cast<long long>(k4) -
                            static_cast<long long>(y.size() - i);
    return table.at(p.m, bound - 1 - static_cast<long long>(p.t));
}

DyadicRational pair_fail_prob_c1(const PartialRow &y, const PartialRow &x,
                                 std::size_t k)
{
    if (y.size() != x.size())
        throw LengthMismatch("rows of lengths " + std::to_string(y.size()) +
                             " and " + std::to_string(x.size()));
    const std::size_t l = y.size();
    const TailTable table(l, k == 0 ? 0 : k - 1);
    return DyadicRational(fail_numerator_c1(table, y, x, k),
                          static_cast<std::uint32_t>(l));
}

DyadicRational pair_fail_prob_c4(const PartialRow &y, const PartialRow &x,
                                 std::size_t k4, std::size_t i)
{
    if (y.size() != x.size())
        throw LengthMismatch("rows of lengths " + std::to_string(y.size()) +
                             " and " + std::to_string(x.size()));
    const std::size_t l = y.size();
    if (i >= l || i + k4 < l + 1)
        throw InvalidParameter("C4 case i=" + std::to_string(i) +
                               " outside [l-k4+1, l-1] for l=" +
                               std::to_string(l) + ", k4=" +
                               std::to_string(k4));
    const TailTable table(l, k4);
    return DyadicRational(fail_numerator_c4(table, y, x, k4, i),
                          static_cast<std::uint32_t>(l));
}

std::uint64_t slot_count(std::size_t n, std::size_t k4)
{
    const std::uint64_t shifts = k4 > 1 ? 2 * (k4 - 1) : 0;
    return pairs(n) * (1 + shifts);
}

ExpectationBreakdown approx_expectation(const PartialMatrix &m, std::size_t k1,
                                        std::size_t k4)
{
    const std::size_t n = m.rows();
    const std::size_t l = m.length();
    validate(n, l, k1, k4);
    const std::size_t k = std::max(k1, k4);
    if (l < k)
        throw InvalidParameter("word length " + std::to_string(l) +
                               " is below max{k1,k4}=" + std::to_string(k));
    const auto e = static_cast<std::uint32_t>(l);
    const TailTable table(l, k - 1);
    const BigInt full = BigInt(1) << l;

    ExpectationBreakdown out;
    out.slots = slot_count(n, k4);

    BigInt e1 = 0;
    for (std::size_t a = 1; a <= n; ++a)
        for (std::size_t b = a + 1; b <= n; ++b)
            e1 += full - fail_numerator_c1(table, m.row(a), m.row(b), k);
    out.e1_term = DyadicRational(e1, e);
    BigInt total = e1;

    for (std::size_t i = l - k4 + 1; k4 >= 2 && i < l; ++i) {
        BigInt term = 0;
        for (std::size_t a = 1; a <= n; ++a)
            for (std::size_t b = 1; b <= n; ++b)
                if (a != b)
                    term += full - fail_numerator_c4(table, m.row(a),
                                                     m.row(b), k4, i);
        out.e4_terms.emplace_back(i, DyadicRational(term, e));
        total += term;
    }
    out.total = DyadicRational(total, e);
    return out;
}

BigInt blank_failure_numerator(std::size_t n, std::size_t length,
                               std::size_t k1, std::size_t k4)
{
    validate(n, length, k1, k4);
    const std::size_t k = std::max(k1, k4);
    const TailTable table(length, k - 1);
    const BigInt full = BigInt(1) << length;

    BigInt per_pair =
        table.at(length, static_cast<long long>(k) - 1); // E1, m = l
    // Shifted cases i = l-k4+1 .. l-1, each counted for both directions.
    for (std::size_t shift = 1; k4 >= 2 && shift <= k4 - 1; ++shift) {
        if (shift >= length) {
            per_pair += 2 * full; // i <= 0: nothing aligned, always fails
            continue;
        }
        const std::size_t i = length - shift;
        const long long b = static_cast<long long>(k4 - shift) - 1;
        per_pair += 2 * table.at(i, b);
    }
    return per_pair * pairs(n);
}

DyadicRational blank_expectation(std::size_t n, std::size_t length,
                                 std::size_t k1, std::size_t k4)
{
    const BigInt fail = blank_failure_numerator(n, length, k1, k4);
    const BigInt slots_num = BigInt(slot_count(n, k4)) << length;
    return DyadicRational(slots_num - fail, static_cast<std::uint32_t>(length));
}

bool exceeds_threshold(std::size_t n, std::size_t length, std::size_t k1,
                       std::size_t k4)
{
    // E > slots - 1  <=>  failure numerator < 2^l
    return blank_failure_numerator(n, length, k1, k4) < (BigInt(1) << length);
}

} // namespace dnawords
