#include "hadwiger/enumerate.hpp"

#include <bit>

#include "hadwiger/errors.hpp"

namespace hadwiger {

namespace {

// adjacency bitmasks straight from the edge mask, cheap enough to test
// connectivity without building a Graph
bool mask_graph_connected(int n, std::uint64_t mask)
{
    std::uint64_t adj[8] = {};
    int k = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++k)
            if (mask >> k & 1) {
                adj[u] |= std::uint64_t{1} << v;
                adj[v] |= std::uint64_t{1} << u;
            }
    const std::uint64_t all = (std::uint64_t{1} << n) - 1;
    std::uint64_t seen = 1, frontier = 1;
    while (frontier) {
        std::uint64_t next = 0;
        while (frontier) {
            int v = std::countr_zero(frontier);
            frontier &= frontier - 1;
            next |= adj[v];
        }
        next &= ~seen;
        seen |= next;
        frontier = next;
    }
    return seen == all;
}

void check_enumeration_n(int n)
{
    if (n < 1)
        throw precondition_error("enumeration requires n >= 1");
    if (n > kMaxEnumerationN)
        throw resource_error("exhaustive enumeration limited to n <= 7");
}

} // namespace

int pair_count(int n)
{
    return n * (n - 1) / 2;
}

Graph graph_from_edge_mask(int n, std::uint64_t mask)
{
    std::vector<std::pair<int, int>> edge_list;
    int k = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++k)
            if (mask >> k & 1)
                edge_list.emplace_back(u, v);
    return Graph(n, edge_list);
}

std::vector<std::uint64_t> connected_graph_masks_serial(int n)
{
    check_enumeration_n(n);
    const std::uint64_t total = std::uint64_t{1} << pair_count(n);
    std::vector<std::uint64_t> out;
    for (std::uint64_t mask = 0; mask < total; ++mask)
        if (mask_graph_connected(n, mask))
            out.push_back(mask);
    return out;
}

std::vector<std::uint64_t> connected_graph_masks(int n)
{
    check_enumeration_n(n);
    const std::uint64_t total = std::uint64_t{1} << pair_count(n);
#ifdef _OPENMP
    const int chunks = 64;
    std::vector<std::vector<std::uint64_t>> partial(chunks);
    const std::uint64_t step = (total + chunks - 1) / chunks;
#pragma omp parallel for schedule(dynamic)
    for (int chunk = 0; chunk < chunks; ++chunk) {
        const std::uint64_t lo = step * static_cast<std::uint64_t>(chunk);
        const std::uint64_t hi = std::min(total, lo + step);
        for (std::uint64_t mask = lo; mask < hi; ++mask)
            if (mask_graph_connected(n, mask))
                partial[chunk].push_back(mask);
    }
    std::vector<std::uint64_t> out;
    for (auto& p : partial)
        out.insert(out.end(), p.begin(), p.end());
    return out;
#else
    std::vector<std::uint64_t> out;
    for (std::uint64_t mask = 0; mask < total; ++mask)
        if (mask_graph_connected(n, mask))
            out.push_back(mask);
    return out;
#endif
}

void for_each_connected(int n, const std::function<void(const Graph&)>& fn)
{
    check_enumeration_n(n);
    const std::uint64_t total = std::uint64_t{1} << pair_count(n);
    for (std::uint64_t mask = 0; mask < total; ++mask)
        if (mask_graph_connected(n, mask))
            fn(graph_from_edge_mask(n, mask));
}

Graph random_connected_graph(int n, double p, std::mt19937_64& rng)
{
    if (n < 1)
        throw precondition_error("random_connected_graph: need n >= 1");
    if (!(p > 0.0) || p > 1.0)
        throw precondition_error("random_connected_graph: need 0 < p <= 1");
    // top 53 bits as a uniform double in [0,1); portable for a fixed seed
    auto unit = [&rng]() { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
    for (int attempt = 0; attempt < 1000; ++attempt) {
        std::vector<std::pair<int, int>> edge_list;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (unit() < p)
                    edge_list.emplace_back(u, v);
        Graph g(n, edge_list);
        if (is_connected(g))
            return g;
    }
    throw resource_error(
        "random_connected_graph: 1000 consecutive disconnected samples; try a larger p");
}

Graph random_connected_graph(int n, double p, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    return random_connected_graph(n, p, rng);
}

} // namespace hadwiger
