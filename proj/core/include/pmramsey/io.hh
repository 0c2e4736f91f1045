#ifndef PMRAMSEY_IO_HH
#define PMRAMSEY_IO_HH

#include <pmramsey/coloring.hh>
#include <pmramsey/cover.hh>
#include <pmramsey/graph.hh>
#include <pmramsey/result.hh>

#include <nlohmann/json.hpp>

#include <iosfwd>

namespace pmramsey {

// Text formats are 1-indexed. Readers throw InvalidInput on malformed input.

/// "n r", then for i = 1..n-1 one line with the colours of (i,i+1), ..., (i,n).
void write_coloring(std::ostream &out, const EdgeColoring &c);
auto read_coloring(std::istream &in) -> EdgeColoring;

/// "n", then one "u v" line per edge.
void write_graph(std::ostream &out, const SimpleGraph &g);
auto read_graph(std::istream &in) -> SimpleGraph;

/// {n, capacities: [...], blocks: [[1-indexed vertices], ...]}
auto cover_to_json(const BlockCover &c) -> nlohmann::json;
auto cover_from_json(const nlohmann::json &j) -> BlockCover;

/// {n, r, rows: [[c(1,2), ..., c(1,n)], ..., [c(n-1,n)]]}
auto coloring_to_json(const EdgeColoring &c) -> nlohmann::json;
auto coloring_from_json(const nlohmann::json &j) -> EdgeColoring;

/// {targets, value, method, witness, stats: {nodes, millis}}; witness is null,
/// {"coloring": {...}} or {"cover": {...}}.
auto result_to_json(const RamseyResult &r) -> nlohmann::json;
auto result_from_json(const nlohmann::json &j) -> RamseyResult;

auto parse_method(const std::string &s) -> Method;

} // namespace pmramsey

#endif
