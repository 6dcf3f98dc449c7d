#pragma once

#include <random>
#include <vector>

#include "hadwiger/graph.hpp"

namespace test_util {

inline hadwiger::Graph make_path(int n)
{
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v + 1 < n; ++v)
        edges.emplace_back(v, v + 1);
    return hadwiger::Graph(n, edges);
}

inline hadwiger::Graph make_cycle(int n)
{
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < n; ++v)
        edges.emplace_back(v, (v + 1) % n);
    return hadwiger::Graph(n, edges);
}

inline hadwiger::Graph make_complete(int n)
{
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            edges.emplace_back(u, v);
    return hadwiger::Graph(n, edges);
}

inline hadwiger::Graph make_star(int n)
{
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v)
        edges.emplace_back(0, v);
    return hadwiger::Graph(n, edges);
}

// not conditioned on connectivity; for property tests
inline hadwiger::Graph random_graph(int n, double p, std::mt19937_64& rng)
{
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (unit(rng) < p)
                edges.emplace_back(u, v);
    return hadwiger::Graph(n, edges);
}

} // namespace test_util
