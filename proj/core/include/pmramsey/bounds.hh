#ifndef PMRAMSEY_BOUNDS_HH
#define PMRAMSEY_BOUNDS_HH

#include <pmramsey/targets.hh>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace pmramsey {

// Closed-form values and bounds for R^M, R^PM, R^1C and covering numbers.
// Everything is exact integer arithmetic.

/// p_1 - (r-1) + sum_{i>=2} ceil(p_i/2). Needs r >= 2. This is R^M when p_1 is
/// even; matchings have even order, so for odd p_1 R^M is the value at p_1 + 1.
auto cockayne_lorimer(const TargetVector &p) -> std::int64_t;

struct StandardValue
{
    std::int64_t value;
    bool exact; ///< the value is proven to equal R^PM
};

/// p_1 - (r-1) + sum_{i>=2} ceil(p_i/3), flagged exact only where it is proven:
/// r <= 2, or r >= 3 with p_1 >= 4 and p_1 >= 2r - 3 - sum_{i>=2} (3 ceil(p_i/3) - p_i).
auto pm_standard_value(const TargetVector &p) -> StandardValue;

/// ceil(p_1 - r/3 + sum_{i>=2} p_i/3). Needs r >= 2.
auto pm_upper(const TargetVector &p) -> std::int64_t;

struct PmLowerBounds
{
    std::int64_t standard; ///< p_1 - (r-1) + sum_{i>=2} ceil(p_i/3)
    std::int64_t design;   ///< R^1C_s(3) + sum_i (ceil(p_i/3) - 1), s = #{i : 3 | p_i}
};

auto pm_lowers(const TargetVector &p) -> PmLowerBounds;

/// floor((sqrt(8r+1)+1)/2) + 1 for any r >= 0; the least n with binom(n,2) > r.
auto all3_formula(std::int64_t r) -> std::int64_t;

/// R^PM_r(3) = R^1C_r(3). Needs r >= 2.
auto pm_all3(std::int64_t r) -> std::int64_t;

/// 3 floor(n / (r+2)): guaranteed monochromatic path-matching order in any r-colouring of K_n.
auto diagonal_guarantee(std::int64_t n, std::int64_t r) -> std::int64_t;

/// Least n with sum_i binom(p_i - 1, 2) < binom(n, 2).
auto core_upper_edgecount(const TargetVector &p) -> std::int64_t;

/// Least n <= scan_cap for which some 1 <= t <= r-1 has p_1 <= ceil((n+t-1)/t) and
/// sum_i (p_i - 1) < (t+1) n. A scan_cap of zero means 4 * sum p_i.
auto core_upper_degree(const TargetVector &p, std::int64_t scan_cap = 0) -> std::optional<std::int64_t>;

/// max{p_1, ceil((p_1+p_2+p_3)/2) - 1, ceil(p_1/3 - r/3 + sum p_i/3)} for r >= 3;
/// max{p_1, p_2} for r = 2 and p_1 for r = 1.
auto core_upper_main(const TargetVector &p) -> std::int64_t;

/// ceil(v(v-1) / (k(k-1))).
auto covering_lower_eh(std::int64_t v, std::int64_t k) -> std::int64_t;

/// ceil((v/k) ceil((v-1)/(k-1))).
auto covering_lower_schonheim(std::int64_t v, std::int64_t k) -> std::int64_t;

/// Truth values of the three technical inequalities used to derive the upper
/// bounds from the 1-core estimate, each side evaluated on its own.
struct TechFact
{
    bool i;                ///< ceil(2a_1/3 - r/3 + sum a_i/3) >= ceil((a_1+a_2+a_3)/2) - 1
    bool ii_inequality;    ///< standard value >= ceil(a_1/3 - r/3 + sum a_i/3)
    bool ii_condition;     ///< a_1 >= 2r - 3 - sum_{i>=2} 3(ceil(a_i/3) - a_i/3)
    bool iii_inequality;   ///< standard value >= ceil((a_1+a_2+a_3)/2) - 1 + sum_{i>=4} (ceil(a_i/3) - 1)
    bool iii_condition;    ///< a_1 >= 2 + (a_2 - 2 ceil(a_2/3)) + (a_3 - 2 ceil(a_3/3))

    auto ii() const -> bool { return ii_inequality == ii_condition; }
    auto iii() const -> bool { return iii_inequality == iii_condition; }
};

/// Needs r >= 3 and a_1 >= 3.
auto techfact_holds(const TargetVector &a) -> TechFact;

enum class BoundKind
{
    lower,
    upper,
    exact_if_condition
};

struct BoundEntry
{
    std::string name;
    BoundKind kind;
    std::int64_t value;
    std::optional<bool> condition_holds;
};

/// All R^PM bounds for one target vector, lower bounds first.
/// Construction throws std::logic_error if some lower bound exceeds some upper bound.
struct BoundsReport
{
    TargetVector targets;
    std::vector<BoundEntry> entries;

    auto best_lower() const -> std::int64_t;
    auto best_upper() const -> std::optional<std::int64_t>;
};

auto bounds_report(const TargetVector &p) -> BoundsReport;

auto to_string(BoundKind kind) -> std::string;

} // namespace pmramsey

#endif
