// constraints.hpp -- direct-from-definition verifiers for C1..C9
//
// These are deliberately naive (O(n^2 l k) for the shifted families). They
// are the oracle every generated code is checked against.

#pragma once

#include "dnawords/core.hpp"

#include <array>
#include <bitset>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace dnawords {

/// Which of the two aligned families a shifted C5/C6 violation belongs to.
enum class Family { None, Prefix, Suffix };

/// One violated constraint instance. Word indices are 1-based; `other` is
/// 0 for single-word constraints and `offset` is 0 where no i applies.
struct ViolationReport
{
    int constraint = 0;
    std::size_t word = 0;
    std::size_t other = 0;
    std::size_t offset = 0;
    Family family = Family::None;
    long long measured = 0;
    long long required = 0;

    std::string describe() const;

    bool operator==(const ViolationReport &) const = default;
};

/// Violations of one or more constraints. At most `limit` entries per
/// constraint are retained; `total` counts all of them.
struct Report
{
    std::vector<ViolationReport> items;
    std::size_t total = 0;

    bool empty() const noexcept { return total == 0; }
    std::size_t size() const noexcept { return items.size(); }
    const ViolationReport &operator[](std::size_t i) const { return items[i]; }

    void append(const Report &other);
};

inline constexpr std::size_t default_report_limit = 100;

/// 4x4 integer pair energies, row = first base, column = second base,
/// bases ordered A, C, G, T.
class EnergyTable
{
public:
    explicit EnergyTable(const std::array<int, 16> &entries);

    /// Every entry equal to `value`.
    static EnergyTable uniform(int value);

    int operator()(char first, char second) const;
    int gamma_max() const noexcept { return _max; }
    int gamma_min() const noexcept { return _min; }
    /// gamma_max - gamma_min.
    int spread() const noexcept { return _max - _min; }
    const std::array<int, 16> &entries() const noexcept { return _entries; }

private:
    std::array<int, 16> _entries;
    int _max;
    int _min;
};

/// Number of G/C characters a word of length `length` must carry for GC
/// fraction gamma: ceil(gamma * length). A 1e-9 slack absorbs binary
/// representation error (0.1 * 30 must give 3, not 4).
std::size_t gc_target(std::size_t length, double gamma);

Report check_c1(const Code &code, std::size_t k1,
                std::size_t limit = default_report_limit);
Report check_c2(const Code &code, std::size_t k2,
                std::size_t limit = default_report_limit);
Report check_c3(const Code &code, std::size_t k3,
                std::size_t limit = default_report_limit);
Report check_c4(const Code &code, std::size_t k4,
                std::size_t limit = default_report_limit);
Report check_c5(const Code &code, std::size_t k5,
                std::size_t limit = default_report_limit);
Report check_c6(const Code &code, std::size_t k6,
                std::size_t limit = default_report_limit);
/// DNA only; every word must hold exactly gc_target(l, gamma) G/C.
Report check_c7(const Code &code, double gamma,
                std::size_t limit = default_report_limit);
/// No run of identical characters longer than d (d >= 2).
Report check_c8(const Code &code, std::size_t d,
                std::size_t limit = default_report_limit);
/// One violation per unordered pair whose free energies differ by more
/// than sigma.
Report check_c9(const Code &code, const EnergyTable &table, double sigma,
                std::size_t limit = default_report_limit);

/// Sum of pair energies over adjacent bases; 0 for a single base.
long long free_energy(const Word &w, const EnergyTable &table);

/// Parameters and the set of enabled constraints.
struct ConstraintSpec
{
    std::array<std::size_t, 7> k{}; ///< k[1]..k[6]; k[0] unused
    double gamma = 0.5;
    std::size_t d = 2;
    double sigma = 0.0;
    std::bitset<10> enabled; ///< bit p set enables Cp, p in 1..9

    static ConstraintSpec uniform(std::size_t k);

    ConstraintSpec &enable(std::initializer_list<int> ids);
    bool is_enabled(int id) const { return enabled.test(id); }
};

/// Concatenated reports of every enabled constraint, ordered by id.
/// C9 needs `table`; InvalidParameter if it is enabled without one.
Report check_all(const Code &code, const ConstraintSpec &spec,
                 const EnergyTable *table = nullptr,
                 std::size_t limit = default_report_limit);

} // namespace dnawords
