#pragma once

// Brute-force reference implementations used to pin expected values. These
// share no code with the library solvers: connectivity is rechecked inline,
// partitions come from a restricted-growth-string odometer and colorings
// from plain base-k counting.

#include <cstdint>
#include <vector>

#include "hadwiger/graph.hpp"

namespace oracles {

inline bool class_connected(const hadwiger::Graph& g, const std::vector<int>& cls)
{
    if (cls.empty())
        return false;
    std::vector<char> in_class(static_cast<std::size_t>(g.vertex_count()), 0);
    for (int v : cls)
        in_class[v] = 1;
    std::vector<int> stack{cls[0]};
    std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()), 0);
    seen[cls[0]] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u : g.neighbors(v)) {
            if (in_class[u] && !seen[u]) {
                seen[u] = 1;
                ++reached;
                stack.push_back(u);
            }
        }
    }
    return reached == static_cast<int>(cls.size());
}

inline bool valid_contraction_partition(const hadwiger::Graph& g,
                                        const std::vector<std::vector<int>>& classes)
{
    for (const auto& cls : classes)
        if (!class_connected(g, cls))
            return false;
    const int r = static_cast<int>(classes.size());
    std::vector<int> class_of(static_cast<std::size_t>(g.vertex_count()), -1);
    for (int c = 0; c < r; ++c)
        for (int v : classes[c])
            class_of[v] = c;
    std::vector<char> joined(static_cast<std::size_t>(r) * r, 0);
    for (const auto& [u, v] : g.edges()) {
        if (class_of[u] != class_of[v]) {
            joined[class_of[u] * r + class_of[v]] = 1;
            joined[class_of[v] * r + class_of[u]] = 1;
        }
    }
    for (int a = 0; a < r; ++a)
        for (int b = a + 1; b < r; ++b)
            if (!joined[a * r + b])
                return false;
    return true;
}

// visits every set partition of 0..n-1 exactly once
template <typename Fn> void for_each_partition(int n, Fn&& fn)
{
    std::vector<int> assign(static_cast<std::size_t>(n), 0);
    while (true) {
        int num_classes = 0;
        for (int v = 0; v < n; ++v)
            num_classes = std::max(num_classes, assign[v] + 1);
        std::vector<std::vector<int>> classes(static_cast<std::size_t>(num_classes));
        for (int v = 0; v < n; ++v)
            classes[assign[v]].push_back(v);
        fn(classes);

        // next restricted growth string
        int v = n - 1;
        for (; v > 0; --v) {
            int cap = 0;
            for (int u = 0; u < v; ++u)
                cap = std::max(cap, assign[u]);
            if (assign[v] <= cap) {
                ++assign[v];
                for (int u = v + 1; u < n; ++u)
                    assign[u] = 0;
                break;
            }
        }
        if (v == 0)
            break;
    }
}

inline int brute_force_hadwiger(const hadwiger::Graph& g)
{
    int best = 0;
    for_each_partition(g.vertex_count(), [&](const std::vector<std::vector<int>>& classes) {
        if (static_cast<int>(classes.size()) > best && valid_contraction_partition(g, classes))
            best = static_cast<int>(classes.size());
    });
    return best;
}

inline bool proper_assignment(const hadwiger::Graph& g, const std::vector<int>& color)
{
    for (const auto& [u, v] : g.edges())
        if (color[u] == color[v])
            return false;
    return true;
}

// enumerates all k^n assignments; no pruning
inline bool brute_force_k_colorable(const hadwiger::Graph& g, int k)
{
    const int n = g.vertex_count();
    std::vector<int> color(static_cast<std::size_t>(n), 0);
    while (true) {
        if (proper_assignment(g, color))
            return true;
        int v = 0;
        while (v < n && ++color[v] == k) {
            color[v] = 0;
            ++v;
        }
        if (v == n)
            return false;
    }
}

inline int brute_force_chromatic(const hadwiger::Graph& g)
{
    for (int k = 1;; ++k)
        if (brute_force_k_colorable(g, k))
            return k;
}

} // namespace oracles
