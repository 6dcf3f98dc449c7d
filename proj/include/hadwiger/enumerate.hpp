#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "hadwiger/graph.hpp"

namespace hadwiger {

inline constexpr int kMaxEnumerationN = 7;

// Vertex pairs (u,v), u < v, in lexicographic order; bit k of an edge mask
// selects the k-th pair.
int pair_count(int n);
Graph graph_from_edge_mask(int n, std::uint64_t mask);

// All edge masks of connected labeled graphs on n vertices, in increasing
// mask order (every labeled connected graph exactly once). n <= 7.
// connected_graph_masks uses OpenMP when available; the serial variant is
// the reference it is tested against.
std::vector<std::uint64_t> connected_graph_masks(int n);
std::vector<std::uint64_t> connected_graph_masks_serial(int n);

// Serial stream over the same enumeration order.
void for_each_connected(int n, const std::function<void(const Graph&)>& fn);

// Edge-probability-p sample conditioned on connectivity by rejection;
// deterministic for a given (n, p, seed). Gives up after 1000 consecutive
// rejections and suggests a larger p.
Graph random_connected_graph(int n, double p, std::uint64_t seed);
Graph random_connected_graph(int n, double p, std::mt19937_64& rng);

} // namespace hadwiger
