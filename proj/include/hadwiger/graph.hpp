#pragma once

#include <utility>
#include <vector>

namespace hadwiger {

// Undirected simple graph on vertices 0..n-1, adjacency kept as sorted
// neighbor lists. Graphs are immutable values: every operation below is a
// pure function returning a fresh graph, so values can be shared freely
// between threads.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    // Self-loops and out-of-range endpoints are precondition errors;
    // duplicate edges collapse (adjacency is a set).
    Graph(int n, const std::vector<std::pair<int, int>>& edge_list);

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }
    bool has_edge(int u, int v) const;
    const std::vector<int>& neighbors(int v) const;
    int degree(int v) const;
    int max_degree() const; // 0 when edgeless
    // Edge list as (u,v) with u < v, lexicographically sorted.
    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const Graph&) const = default;

private:
    int n_ = 0;
    int m_ = 0;
    std::vector<std::vector<int>> adj_;

    void check_vertex(int v) const;
};

// Vertex degrees sorted non-increasing.
using DegreeSequence = std::vector<int>;

struct Coloring {
    std::vector<int> color; // color[v] is a 0-based color index
    int colors_used() const;
};

enum class ReducedClass { Clique, OddCycle, Other };

// Contracts edge {u,v}: the merged vertex takes id min(u,v), ids above
// max(u,v) shift down by one, parallel edges collapse.
Graph contract_edge(const Graph& g, int u, int v);

// The empty graph counts as connected.
bool is_connected(const Graph& g);

DegreeSequence degree_sequence(const Graph& g);

// Subgraph induced by `keep`, renumbered 0..keep.size()-1 in ascending
// order of original id. Duplicate or out-of-range ids are errors.
Graph induced_subgraph(const Graph& g, std::vector<int> keep);

// Iteratively removes vertices of degree <= 1; the result is the 2-core,
// renumbered by the canonical ascending-id rule (so the result does not
// depend on deletion order).
Graph one_reduce(const Graph& g);

// one_reduce, then Clique if the remainder is complete (K_0 and K_1
// included), OddCycle if it is C_{2t+1} with t >= 2, else Other.
// C_3 is complete and reports Clique.
ReducedClass classify_reduced(const Graph& g);

// Colors vertices in the given order, each taking the smallest color not
// seen on an already-colored neighbor. `order` must be a permutation of
// 0..n-1.
Coloring greedy_color(const Graph& g, const std::vector<int>& order);

bool is_proper(const Graph& g, const Coloring& c);
bool is_complete(const Graph& g);
bool is_cycle(const Graph& g); // connected and 2-regular, n >= 3
bool is_bipartite(const Graph& g);

// Brute-force labeled-isomorphism test for small assertions (n <= 8).
bool isomorphic(const Graph& a, const Graph& b);

} // namespace hadwiger
