#pragma once

#include <utility>
#include <vector>

#include "hadwiger/graph.hpp"

namespace hadwiger {

// A partition of all vertices into nonempty classes, one class per vertex of
// the target graph of a contraction. Valid as a K_r witness iff every class
// induces a connected subgraph and every pair of classes is joined by at
// least one edge; such a witness certifies a clique-contraction number >= r.
struct MinorWitness {
    std::vector<std::vector<int>> classes;
};

// Documented desk-scale limits for the exact solvers.
inline constexpr int kMaxExactHadwigerN = 12;
inline constexpr int kMaxExactChromaticN = 32;

// Exact maximum clique size (branch and bound, n <= 64).
int max_clique(const Graph& g);

// Exact chromatic number by backtracking k-colorability for k from the
// clique lower bound upward; vertices are tried in ascending id order.
int chromatic_number(const Graph& g);
std::pair<int, Coloring> chromatic_number_with_coloring(const Graph& g);

struct HadwigerSolution {
    int number = 0;
    MinorWitness witness; // a valid witness with `number` classes
};

// Exact clique-contraction (Hadwiger) number of a connected graph,
// n <= kMaxExactHadwigerN. Depth-first assignment of vertices to classes in
// ascending id order; branches that cannot beat the incumbent are cut, and a
// class with no unassigned neighbor left is frozen: it must already be
// connected and joined to every other class, and no further class can open.
HadwigerSolution hadwiger_solve(const Graph& g);
int hadwiger_number(const Graph& g);

// True iff every class induces a connected subgraph and every pair of
// classes is joined by >= 1 edge. Throws if w is not a partition of V(g).
bool verify_minor_witness(const Graph& g, const MinorWitness& w);

// True iff every class induces a tree and every pair of classes is joined by
// exactly one edge: contracting each class is then an acyclic contraction to
// a complete graph. Works for any n.
bool verify_acyclic_clique_witness(const Graph& g, const MinorWitness& w);

// A valid witness built by growing a maximal clique's vertices into classes
// that absorb the rest of the graph; cheap certified lower bound for graphs
// beyond the exact solver's range. Requires connectivity.
MinorWitness greedy_clique_witness(const Graph& g);

// True iff V(g) splits into r classes that each induce a tree with exactly
// one edge between every pair of classes (the partition form of an acyclic
// contraction to K_r). Requires connectivity and r >= 3; n <= 12.
bool has_acyclic_contraction_to_clique(const Graph& g, int r);

// Literal variant: classes need only be connected (a cycle inside one class
// shrinks to a vertex, which is not forbidden); a pair joined by two or more
// edges would shrink some cycle to a single edge, so every pair must be
// joined by exactly one.
bool has_acyclic_contraction_to_clique_literal(const Graph& g, int r);

// Any r in 3..n. Only one r can satisfy the edge-count identity
// m = n - r + r(r-1)/2, so this costs a single search.
bool has_acyclic_contraction_to_any_clique(const Graph& g);

// True iff V(g) splits into `len` tree-inducing classes arranged in a cyclic
// order with exactly one edge between consecutive classes and none between
// non-consecutive ones. Requires connectivity and len >= 3; n <= 12.
bool has_acyclic_contraction_to_cycle(const Graph& g, int len);

} // namespace hadwiger
