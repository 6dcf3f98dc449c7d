#pragma once

#include "hadwiger/exact.hpp"
#include "hadwiger/graph.hpp"

namespace hadwiger {

struct FamilySpec {
    enum class Kind { D, Figure1a, TreeClique };
    Kind kind = Kind::Figure1a;
    int r = 0; // D column count
    int n = 0; // D vertex count
    int k = 0; // TreeClique tree count
};

// Max-degree-3 graph on vertices 0..n-1 built from r columns: column edges
// {r*i + j, r*(i-1) + j} for i >= 1 whenever the label is < n, and one
// crossing edge {r*i + j, r*j + i} per column pair 0 <= i < j <= r-1 with
// both labels < n. Requires r >= 3 and n >= r. Connected for n >= r^2 - 1;
// 2-degenerate in the natural vertex order, so greedy 3-colors it.
Graph build_d_r_n(int r, int n);

// The r column classes; accepted by verify_minor_witness whenever
// n >= r^2 - 1 (the largest crossing label is r^2 - 2), certifying a
// clique-contraction number >= r. Smaller n is an error.
MinorWitness d_r_n_witness(int r, int n);

// Eight vertices in four adjacent pairs (the "trees") with exactly one edge
// between every two pairs, chosen so that no vertex has degree one:
// n = 8, m = 10, clique-contraction number 4.
Graph build_figure_1a();
MinorWitness figure_1a_witness();

// Generalization to k >= 3 trees: 2k vertices in k adjacent pairs, one edge
// per pair of pairs assigned round-robin so every vertex gains at least one
// crossing edge. n = 2k, m = k + k(k-1)/2, clique-contraction number k.
Graph build_tree_clique_counterexample(int k);
MinorWitness tree_clique_witness(int k);

Graph build_family(const FamilySpec& spec);

} // namespace hadwiger
