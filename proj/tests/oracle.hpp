// oracle.hpp -- independent brute-force reference code for the tests
//
// Nothing here calls into the library under test; everything is computed
// straight from the constraint definitions on plain std::strings.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace oracle {

using Words = std::vector<std::string>;
using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;

inline char comp(char c)
{
    switch (c) {
    case '0': return '1';
    case '1': return '0';
    case 'A': return 'T';
    case 'T': return 'A';
    case 'C': return 'G';
    case 'G': return 'C';
    }
    return '?';
}

inline std::string rc(const std::string &w)
{
    std::string out;
    for (auto it = w.rbegin(); it != w.rend(); ++it)
        out.push_back(comp(*it));
    return out;
}

inline int ham(const std::string &a, const std::string &b)
{
    int d = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        d += a[i] != b[i];
    return d;
}

/// Number of violated instances, counted the same way the library does:
/// C1 per unordered pair, C2/C4/C5 per ordered pair, C5/C6 prefix and
/// suffix families separately except at i = l where they coincide.
inline long count_c1(const Words &w, int k)
{
    long bad = 0;
    for (std::size_t a = 0; a < w.size(); ++a)
        for (std::size_t b = a + 1; b < w.size(); ++b)
            bad += ham(w[a], w[b]) < k;
    return bad;
}

inline long count_c2(const Words &w, int k)
{
    long bad = 0;
    for (std::size_t a = 0; a < w.size(); ++a)
        for (std::size_t b = 0; b < w.size(); ++b)
            if (a != b)
                bad += ham(w[a], rc(w[b])) < k;
    return bad;
}

inline long count_c3(const Words &w, int k)
{
    long bad = 0;
    for (const auto &y : w)
        bad += ham(y, rc(y)) < k;
    return bad;
}

inline long count_c4(const Words &w, int k)
{
    long bad = 0;
    const int l = static_cast<int>(w.front().size());
    for (std::size_t a = 0; a < w.size(); ++a)
        for (std::size_t b = 0; b < w.size(); ++b) {
            if (a == b)
                continue;
            for (int i = std::max(1, l - k); i <= l; ++i) {
                const int need = k - (l - i);
                if (need <= 0)
                    continue;
                const std::string pre = w[a].substr(0, static_cast<std::size_t>(i));
                const std::string suf = w[b].substr(static_cast<std::size_t>(l - i));
                bad += ham(pre, suf) < need;
            }
        }
    return bad;
}

inline long count_rc_family(const std::string &y, const std::string &x, int k)
{
    long bad = 0;
    const int l = static_cast<int>(y.size());
    for (int i = std::max(1, l - k); i <= l; ++i) {
        const int need = k - (l - i);
        if (need <= 0)
            continue;
        const auto ui = static_cast<std::size_t>(i);
        bad += ham(y.substr(0, ui), rc(x.substr(0, ui))) < need;
        if (i < l) {
            const auto from = static_cast<std::size_t>(l - i);
            bad += ham(y.substr(from), rc(x.substr(from))) < need;
        }
    }
    return bad;
}

inline long count_c5(const Words &w, int k)
{
    long bad = 0;
    for (std::size_t a = 0; a < w.size(); ++a)
        for (std::size_t b = 0; b < w.size(); ++b)
            if (a != b)
                bad += count_rc_family(w[a], w[b], k);
    return bad;
}

inline long count_c6(const Words &w, int k)
{
    long bad = 0;
    for (const auto &y : w)
        bad += count_rc_family(y, y, k);
    return bad;
}

inline int longest_run(const std::string &w)
{
    int best = 0;
    for (std::size_t i = 0; i < w.size();) {
        std::size_t j = i;
        while (j < w.size() && w[j] == w[i])
            ++j;
        best = std::max(best, static_cast<int>(j - i));
        i = j;
    }
    return best;
}

inline int gc(const std::string &w)
{
    return static_cast<int>(std::count_if(w.begin(), w.end(), [](char c) {
        return c == 'G' || c == 'C';
    }));
}

/// Matrix cell: 0, 1 or -1 (unknown).
using Matrix = std::vector<std::vector<int>>;

/// V1 + V4 of a complete 0/1 matrix: satisfied C1(max{k1,k4}) pairs plus
/// satisfied shifted C4 cases for i in [l-k4+1, l-1].
inline long satisfied_count(const Matrix &m, int k1, int k4)
{
    const int n = static_cast<int>(m.size());
    const int l = static_cast<int>(m.front().size());
    const int k = std::max(k1, k4);
    long v = 0;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            int h = 0;
            for (int j = 0; j < l; ++j)
                h += m[a][j] != m[b][j];
            v += h >= k;
        }
    for (int i = l - k4 + 1; i <= l - 1; ++i) {
        if (i < 1)
            continue;
        const int need = k4 - (l - i);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                if (a == b)
                    continue;
                int h = 0;
                for (int j = 0; j < i; ++j)
                    h += m[a][j] != m[b][(l - i) + j];
                v += h >= need;
            }
    }
    return v;
}

/// Sum of V1 + V4 over all completions and the number of unknowns u; the
/// expectation is sum / 2^u.
struct Enumeration
{
    cpp_int sum;
    unsigned unknowns = 0;
};

inline Enumeration enumerate_completions(Matrix m, int k1, int k4)
{
    std::vector<std::pair<int, int>> cells;
    for (int p = 0; p < static_cast<int>(m.size()); ++p)
        for (int q = 0; q < static_cast<int>(m[0].size()); ++q)
            if (m[p][q] < 0)
                cells.emplace_back(p, q);
    Enumeration e;
    e.unknowns = static_cast<unsigned>(cells.size());
    const std::uint64_t total = std::uint64_t{1} << cells.size();
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        for (std::size_t c = 0; c < cells.size(); ++c)
            m[cells[c].first][cells[c].second] =
                static_cast<int>((mask >> c) & 1);
        e.sum += satisfied_count(m, k1, k4);
    }
    return e;
}

struct Sample
{
    double mean = 0.0;
    double stderr_ = 0.0;
};

inline Sample monte_carlo(const Matrix &m, int k1, int k4, std::size_t samples,
                          std::mt19937_64 &rng)
{
    Matrix work = m;
    double sum = 0.0, sq = 0.0;
    for (std::size_t s = 0; s < samples; ++s) {
        for (std::size_t p = 0; p < m.size(); ++p)
            for (std::size_t q = 0; q < m[p].size(); ++q)
                if (m[p][q] < 0)
                    work[p][q] = static_cast<int>(rng() >> 63);
        const double v = static_cast<double>(satisfied_count(work, k1, k4));
        sum += v;
        sq += v * v;
    }
    const double ns = static_cast<double>(samples);
    const double mean = sum / ns;
    const double var = std::max(0.0, sq / ns - mean * mean);
    return {mean, std::sqrt(var / ns)};
}

inline cpp_int binom(unsigned m, unsigned j)
{
    if (j > m)
        return 0;
    cpp_int r = 1;
    for (unsigned i = 1; i <= j; ++i)
        r = r * (m - j + i) / i;
    return r;
}

/// P[Bin(m, 1/2) <= b] as an exact rational.
inline cpp_rational tail(int m, int b)
{
    if (b < 0)
        return 0;
    cpp_int s = 0;
    for (int j = 0; j <= std::min(b, m); ++j)
        s += binom(static_cast<unsigned>(m), static_cast<unsigned>(j));
    return cpp_rational(s, cpp_int(1) << m);
}

/// Potential of the blank n x l matrix from the closed form, in rationals.
inline cpp_rational blank_potential(int n, int l, int k1, int k4)
{
    const int k = std::max(k1, k4);
    const cpp_int pairs = cpp_int(n) * (n - 1) / 2;
    const int shifts = std::max(k4 - 1, 0);
    cpp_rational fail = tail(l, k - 1);
    for (int i = l - k4 + 1; i <= l - 1; ++i)
        fail += 2 * (i >= 1 ? tail(i, k4 - (l - i) - 1) : cpp_rational(1));
    return cpp_rational(pairs * (1 + 2 * shifts)) - cpp_rational(pairs) * fail;
}

inline bool blank_feasible(int n, int l, int k1, int k4)
{
    const cpp_int pairs = cpp_int(n) * (n - 1) / 2;
    const int shifts = std::max(k4 - 1, 0);
    return blank_potential(n, l, k1, k4) >
           cpp_rational(pairs * (1 + 2 * shifts) - 1);
}

inline std::string random_word(std::mt19937_64 &rng, std::size_t l,
                               const std::string &alphabet)
{
    std::string w(l, ' ');
    for (char &c : w)
        c = alphabet[rng() % alphabet.size()];
    return w;
}

/// n distinct random words.
inline Words random_words(std::mt19937_64 &rng, std::size_t n, std::size_t l,
                          const std::string &alphabet)
{
    Words out;
    while (out.size() < n) {
        auto w = random_word(rng, l, alphabet);
        if (std::find(out.begin(), out.end(), w) == out.end())
            out.push_back(w);
    }
    return out;
}

} // namespace oracle
