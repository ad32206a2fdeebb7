#include "dnawords/constraints.hpp"

#include "dnawords/errors.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace dnawords {

namespace {

class Collector
{
public:
    Collector(int id, std::size_t limit) : _id(id), _limit(limit) {}

    void add(std::size_t word, std::size_t other, std::size_t offset,
             Family family, long long measured, long long required)
    {
        ++_report.total;
        if (_report.items.size() < _limit)
            _report.items.push_back(
                {_id, word, other, offset, family, measured, required});
    }

    Report take() { return std::move(_report); }

private:
    int _id;
    std::size_t _limit;
    Report _report;
};

void require_k_fits(const Code &code, std::size_t k, int id)
{
    if (k > code.length())
        throw InvalidParameter("C" + std::to_string(id) + ": k=" +
                               std::to_string(k) + " exceeds word length " +
                               std::to_string(code.length()));
}

/// Hamming distance between y[ys..ys+len) and x[xs..xs+len), 0-based.
std::size_t window_distance(const std::string &y, std::size_t ys,
                            const std::string &x, std::size_t xs,
                            std::size_t len)
{
    std::size_t d = 0;
    for (std::size_t j = 0; j < len; ++j)
        d += y[ys + j] != x[xs + j];
    return d;
}

/// Distance between y[from..from+len) and the reverse complement of
/// x[from..from+len), 0-based.
std::size_t window_rc_distance(const Word &y, const Word &x, std::size_t from,
                               std::size_t len)
{
    const Alphabet a = x.alphabet();
    std::size_t d = 0;
    for (std::size_t j = 0; j < len; ++j)
        d += y[from + j] != a.complement(x[from + len - 1 - j]);
    return d;
}

/// C5/C6 shared body: Y against (X window)^RC for both families.
void check_rc_shifted(const Word &y, const Word &x, std::size_t yi,
                      std::size_t xi, std::size_t k, Collector &out)
{
    const std::size_t l = y.length();
    for (std::size_t i = l; i >= 1 && i + k >= l; --i) {
        const long long bound =
            static_cast<long long>(k) - static_cast<long long>(l - i);
        if (bound <= 0)
            break;
        const std::size_t pre = window_rc_distance(y, x, 0, i);
        if (static_cast<long long>(pre) < bound)
            out.add(yi, xi, i, Family::Prefix, static_cast<long long>(pre),
                    bound);
        // At i = l both families are the same full-word comparison.
        if (i == l)
            continue;
        const std::size_t suf = window_rc_distance(y, x, l - i, i);
        if (static_cast<long long>(suf) < bound)
            out.add(yi, xi, i, Family::Suffix, static_cast<long long>(suf),
                    bound);
    }
}

const char *family_name(Family f)
{
    switch (f) {
    case Family::Prefix: return "prefix";
    case Family::Suffix: return "suffix";
    default: return "";
    }
}

int base_index(char c)
{
    switch (c) {
    case 'A': return 0;
    case 'C': return 1;
    case 'G': return 2;
    case 'T': return 3;
    }
    throw InvalidAlphabet(std::string("character '") + c +
                          "' is not a DNA base");
}

void require_dna(const Code &code, int id)
{
    if (code.alphabet() != Alphabet::dna())
        throw InvalidAlphabet("C" + std::to_string(id) +
                              " applies to DNA codes only");
}

} // namespace

std::string ViolationReport::describe() const
{
    std::ostringstream os;
    os << "C" << constraint << ": word " << word;
    if (other != 0)
        os << " vs word " << other;
    if (offset != 0)
        os << ", i=" << offset;
    if (family != Family::None)
        os << " (" << family_name(family) << ")";
    os << ": measured " << measured << ", required ";
    switch (constraint) {
    case 7: os << "exactly " << required; break;
    case 8:
    case 9: os << "at most " << required; break;
    default: os << "at least " << required; break;
    }
    return os.str();
}

void Report::append(const Report &other)
{
    items.insert(items.end(), other.items.begin(), other.items.end());
    total += other.total;
}

EnergyTable::EnergyTable(const std::array<int, 16> &entries)
  : _entries(entries),
    _max(*std::max_element(entries.begin(), entries.end())),
    _min(*std::min_element(entries.begin(), entries.end()))
{
}

EnergyTable EnergyTable::uniform(int value)
{
    std::array<int, 16> e;
    e.fill(value);
    return EnergyTable(e);
}

int EnergyTable::operator()(char first, char second) const
{
    return _entries[static_cast<std::size_t>(base_index(first) * 4 +
                                             base_index(second))];
}

std::size_t gc_target(std::size_t length, double gamma)
{
    if (!(gamma >= 0.0 && gamma <= 1.0))
        throw InvalidParameter("gamma must lie in [0, 1]");
    const double raw = gamma * static_cast<double>(length);
    const auto target = static_cast<std::size_t>(std::ceil(raw - 1e-9));
    return std::min(target, length);
}

Report check_c1(const Code &code, std::size_t k1, std::size_t limit)
{
    require_k_fits(code, k1, 1);
    Collector out(1, limit);
    for (std::size_t a = 0; a < code.size(); ++a)
        for (std::size_t b = a + 1; b < code.size(); ++b) {
            const std::size_t h = hamming(code[a], code[b]);
            if (h < k1)
                out.add(a + 1, b + 1, 0, Family::None,
                        static_cast<long long>(h), static_cast<long long>(k1));
        }
    return out.take();
}

Report check_c2(const Code &code, std::size_t k2, std::size_t limit)
{
    require_k_fits(code, k2, 2);
    Collector out(2, limit);
    for (std::size_t a = 0; a < code.size(); ++a)
        for (std::size_t b = 0; b < code.size(); ++b) {
            if (a == b)
                continue;
            const std::size_t h =
                hamming(code[a], reverse_complement(code[b]));
            if (h < k2)
                out.add(a + 1, b + 1, 0, Family::None,
                        static_cast<long long>(h), static_cast<long long>(k2));
        }
    return out.take();
}

Report check_c3(const Code &code, std::size_t k3, std::size_t limit)
{
    require_k_fits(code, k3, 3);
    Collector out(3, limit);
    for (std::size_t a = 0; a < code.size(); ++a) {
        const std::size_t h = hamming(code[a], reverse_complement(code[a]));
        if (h < k3)
            out.add(a + 1, 0, 0, Family::None, static_cast<long long>(h),
                    static_cast<long long>(k3));
    }
    return out.take();
}

Report check_c4(const Code &code, std::size_t k4, std::size_t limit)
{
    require_k_fits(code, k4, 4);
    Collector out(4, limit);
    const std::size_t l = code.length();
    for (std::size_t a = 0; a < code.size(); ++a)
        for (std::size_t b = 0; b < code.size(); ++b) {
            if (a == b)
                continue;
            const std::string &y = code[a].str();
            const std::string &x = code[b].str();
            for (std::size_t i = l; i >= 1 && i + k4 >= l; --i) {
                const long long bound = static_cast<long long>(k4) -
                                        static_cast<long long>(l - i);
                if (bound <= 0)
                    break;
                const std::size_t h = window_distance(y, 0, x, l - i, i);
                if (static_cast<long long>(h) < bound)
                    out.add(a + 1, b + 1, i, Family::None,
                            static_cast<long long>(h), bound);
            }
        }
    return out.take();
}

Report check_c5(const Code &code, std::size_t k5, std::size_t limit)
{
    require_k_fits(code, k5, 5);
    Collector out(5, limit);
    for (std::size_t a = 0; a < code.size(); ++a)
        for (std::size_t b = 0; b < code.size(); ++b)
            if (a != b)
                check_rc_shifted(code[a], code[b], a + 1, b + 1, k5, out);
    return out.take();
}

Report check_c6(const Code &code, std::size_t k6, std::size_t limit)
{
    require_k_fits(code, k6, 6);
    Collector out(6, limit);
    for (std::size_t a = 0; a < code.size(); ++a)
        check_rc_shifted(code[a], code[a], a + 1, 0, k6, out);
    return out.take();
}

Report check_c7(const Code &code, double gamma, std::size_t limit)
{
    require_dna(code, 7);
    const std::size_t want = gc_target(code.length(), gamma);
    Collector out(7, limit);
    for (std::size_t a = 0; a < code.size(); ++a) {
        const std::size_t have = gc_count(code[a]);
        if (have != want)
            out.add(a + 1, 0, 0, Family::None, static_cast<long long>(have),
                    static_cast<long long>(want));
    }
    return out.take();
}

Report check_c8(const Code &code, std::size_t d, std::size_t limit)
{
    if (d < 2)
        throw InvalidParameter("C8: d must be at least 2");
    Collector out(8, limit);
    for (std::size_t a = 0; a < code.size(); ++a) {
        const std::size_t run = longest_run(code[a]);
        if (run > d)
            out.add(a + 1, 0, 0, Family::None, static_cast<long long>(run),
                    static_cast<long long>(d));
    }
    return out.take();
}

long long free_energy(const Word &w, const EnergyTable &table)
{
    if (w.empty())
        throw InvalidParameter("free energy of an empty word");
    if (w.alphabet() != Alphabet::dna())
        throw InvalidAlphabet("free energy applies to DNA words only");
    long long fe = 0;
    for (std::size_t i = 0; i + 1 < w.length(); ++i)
        fe += table(w[i], w[i + 1]);
    return fe;
}

Report check_c9(const Code &code, const EnergyTable &table, double sigma,
                std::size_t limit)
{
    if (!(sigma >= 0.0))
        throw InvalidParameter("C9: sigma must be non-negative");
    require_dna(code, 9);
    std::vector<long long> fe;
    fe.reserve(code.size());
    for (const Word &w : code)
        fe.push_back(free_energy(w, table));
    Collector out(9, limit);
    for (std::size_t a = 0; a < code.size(); ++a)
        for (std::size_t b = a + 1; b < code.size(); ++b) {
            const long long diff = std::llabs(fe[a] - fe[b]);
            if (static_cast<double>(diff) > sigma)
                out.add(a + 1, b + 1, 0, Family::None, diff,
                        static_cast<long long>(std::floor(sigma)));
        }
    return out.take();
}

ConstraintSpec ConstraintSpec::uniform(std::size_t k)
{
    ConstraintSpec s;
    for (std::size_t p = 1; p <= 6; ++p)
        s.k[p] = k;
    return s;
}

ConstraintSpec &ConstraintSpec::enable(std::initializer_list<int> ids)
{
    for (int id : ids) {
        if (id < 1 || id > 9)
            throw InvalidParameter("constraint id " + std::to_string(id) +
                                   " outside 1..9");
        enabled.set(static_cast<std::size_t>(id));
    }
    return *this;
}

Report check_all(const Code &code, const ConstraintSpec &spec,
                 const EnergyTable *table, std::size_t limit)
{
    Report all;
    if (spec.is_enabled(1)) all.append(check_c1(code, spec.k[1], limit));
    if (spec.is_enabled(2)) all.append(check_c2(code, spec.k[2], limit));
    if (spec.is_enabled(3)) all.append(check_c3(code, spec.k[3], limit));
    if (spec.is_enabled(4)) all.append(check_c4(code, spec.k[4], limit));
    if (spec.is_enabled(5)) all.append(check_c5(code, spec.k[5], limit));
    if (spec.is_enabled(6)) all.append(check_c6(code, spec.k[6], limit));
    if (spec.is_enabled(7)) all.append(check_c7(code, spec.gamma, limit));
    if (spec.is_enabled(8)) all.append(check_c8(code, spec.d, limit));
    if (spec.is_enabled(9)) {
        if (table == nullptr)
            throw InvalidParameter("C9 enabled without an energy table");
        all.append(check_c9(code, *table, spec.sigma, limit));
    }
    return all;
}

} // namespace dnawords
