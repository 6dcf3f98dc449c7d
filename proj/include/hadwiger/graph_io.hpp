#pragma once

#include <string>
#include <string_view>

#include "hadwiger/exact.hpp"
#include "hadwiger/graph.hpp"

namespace hadwiger {

// Text format: header line "n m", then m lines "u v" with 0-based vertex
// ids, whitespace-separated, LF line endings. Lines starting with '#' are
// comments. Self-loops, duplicate edges, out-of-range ids and malformed
// lines raise parse_error with the offending 1-based line number.
Graph parse_graph(std::string_view text);

// Inverse of parse_graph: "n m" header plus the edge list sorted with
// u < v, lexicographically. parse_graph(serialize_graph(g)) == g.
std::string serialize_graph(const Graph& g);

// Partition files: one class per line, space-separated vertex ids; '#'
// comments and blank lines are skipped.
MinorWitness parse_partition(std::string_view text, int n);
std::string serialize_partition(const MinorWitness& w);

Graph load_graph_file(const std::string& path);
MinorWitness load_partition_file(const std::string& path, int n);
void write_text_file(const std::string& path, const std::string& content);

} // namespace hadwiger
