#ifndef PMRAMSEY_TARGETS_HH
#define PMRAMSEY_TARGETS_HH

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace pmramsey {

/// Ramsey thresholds p_1 >= ... >= p_r >= 2.
///
/// The constructor accepts any order and sorts; order()[i] records which caller
/// position ended up at sorted position i, so results can be mapped back.
class TargetVector
{
public:
    explicit TargetVector(std::vector<int> values);

    static auto uniform(int p, int r) -> TargetVector;

    auto r() const -> int { return static_cast<int>(_values.size()); }
    auto operator[](int i) const -> int { return _values[static_cast<std::size_t>(i)]; }
    auto values() const -> const std::vector<int> & { return _values; }
    auto order() const -> const std::vector<int> & { return _order; }
    auto front() const -> int { return _values.front(); }
    auto sum() const -> long long;

    /// "5,5,5"
    auto key() const -> std::string;

    auto operator==(const TargetVector &o) const -> bool { return _values == o._values; }

private:
    std::vector<int> _values;
    std::vector<int> _order;
};

/// Sorts nonincreasing and drops entries <= 1 (and entries equal to 2 when
/// strip_twos is set); neither changes R^PM or R^1C. Returns nullopt when
/// nothing is left, in which case the Ramsey number is 2. Throws InvalidInput
/// when no entry is at least 2.
auto normalize_targets(std::span<const int> raw, bool strip_twos) -> std::optional<TargetVector>;

} // namespace pmramsey

#endif
