#ifndef PMRAMSEY_PATH_MATCHING_HH
#define PMRAMSEY_PATH_MATCHING_HH

#include <pmramsey/graph.hh>

namespace pmramsey {

inline constexpr int default_deficiency_cap = 24;
inline constexpr int packing_oracle_cap = 10;

/// A set X attaining max q(G - X) - 2|X|, with the isolated vertices of G - X.
struct DeficiencyCertificate
{
    VertexSet lv_set;
    VertexSet isolated_witness;
    int deficiency = 0;
};

struct DeficiencyResult
{
    int deficiency = 0;
    DeficiencyCertificate certificate;
};

/// Path-matching deficiency: the number of vertices missed by a maximum
/// path-matching, evaluated as max over X of (isolated vertices of G - X) - 2|X|.
/// Among optimal X the certificate holds the lexicographically least one of
/// minimum size. Throws InvalidInput if g has more than cap vertices.
auto deficiency(const SimpleGraph &g, int cap = default_deficiency_cap) -> DeficiencyResult;

/// Largest number of vertices covered by vertex-disjoint nontrivial paths.
auto max_pm_order(const SimpleGraph &g, int cap = default_deficiency_cap) -> int;

auto has_perfect_pm(const SimpleGraph &g, int cap = default_deficiency_cap) -> bool;

/// Exhaustive packing of disjoint P2 and P3 copies; only meant as a test oracle
/// for max_pm_order. Graphs above packing_oracle_cap vertices are rejected.
auto packing_oracle(const SimpleGraph &g) -> int;

} // namespace pmramsey

#endif
