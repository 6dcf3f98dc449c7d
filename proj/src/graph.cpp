#include "hadwiger/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>

#include "hadwiger/errors.hpp"

namespace hadwiger {

Graph::Graph(int n) : n_(n), adj_(static_cast<std::size_t>(std::max(n, 0)))
{
    if (n < 0)
        throw precondition_error("vertex count must be non-negative");
}

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edge_list) : Graph(n)
{
    std::vector<std::set<int>> nbr(static_cast<std::size_t>(n));
    for (const auto& [u, v] : edge_list) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw precondition_error("edge endpoint out of range");
        if (u == v)
            throw precondition_error("self-loop not allowed");
        nbr[u].insert(v);
        nbr[v].insert(u);
    }
    for (int v = 0; v < n; ++v)
        adj_[v].assign(nbr[v].begin(), nbr[v].end());
    int deg_sum = 0;
    for (int v = 0; v < n; ++v)
        deg_sum += static_cast<int>(adj_[v].size());
    m_ = deg_sum / 2;
}

void Graph::check_vertex(int v) const
{
    if (v < 0 || v >= n_)
        throw precondition_error("vertex id out of range");
}

bool Graph::has_edge(int u, int v) const
{
    check_vertex(u);
    check_vertex(v);
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

const std::vector<int>& Graph::neighbors(int v) const
{
    check_vertex(v);
    return adj_[v];
}

int Graph::degree(int v) const
{
    check_vertex(v);
    return static_cast<int>(adj_[v].size());
}

int Graph::max_degree() const
{
    int d = 0;
    for (int v = 0; v < n_; ++v)
        d = std::max(d, static_cast<int>(adj_[v].size()));
    return d;
}

std::vector<std::pair<int, int>> Graph::edges() const
{
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[u])
            if (u < v)
                out.emplace_back(u, v);
    return out;
}

int Coloring::colors_used() const
{
    int k = 0;
    for (int c : color)
        k = std::max(k, c + 1);
    return k;
}

Graph contract_edge(const Graph& g, int u, int v)
{
    if (!g.has_edge(u, v))
        throw precondition_error("contract_edge requires an existing edge");
    const int a = std::min(u, v);
    const int b = std::max(u, v);
    const int n = g.vertex_count();
    // b maps onto a; every id above b shifts down by one.
    auto remap = [&](int w) { return w == b ? a : (w > b ? w - 1 : w); };
    std::vector<std::pair<int, int>> edge_list;
    edge_list.reserve(static_cast<std::size_t>(g.edge_count()));
    for (const auto& [x, y] : g.edges()) {
        int rx = remap(x), ry = remap(y);
        if (rx != ry)
            edge_list.emplace_back(rx, ry);
    }
    return Graph(n - 1, edge_list);
}

bool is_connected(const Graph& g)
{
    const int n = g.vertex_count();
    if (n <= 1)
        return true;
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::queue<int> frontier;
    frontier.push(0);
    seen[0] = 1;
    int reached = 1;
    while (!frontier.empty()) {
        int v = frontier.front();
        frontier.pop();
        for (int w : g.neighbors(v)) {
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                frontier.push(w);
            }
        }
    }
    return reached == n;
}

DegreeSequence degree_sequence(const Graph& g)
{
    DegreeSequence d(static_cast<std::size_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v)
        d[v] = g.degree(v);
    std::sort(d.begin(), d.end(), std::greater<int>());
    return d;
}

Graph induced_subgraph(const Graph& g, std::vector<int> keep)
{
    std::sort(keep.begin(), keep.end());
    if (std::adjacent_find(keep.begin(), keep.end()) != keep.end())
        throw precondition_error("induced_subgraph: duplicate vertex id");
    std::vector<int> new_id(static_cast<std::size_t>(g.vertex_count()), -1);
    for (std::size_t i = 0; i < keep.size(); ++i) {
        if (keep[i] < 0 || keep[i] >= g.vertex_count())
            throw precondition_error("induced_subgraph: vertex id out of range");
        new_id[keep[i]] = static_cast<int>(i);
    }
    std::vector<std::pair<int, int>> edge_list;
    for (const auto& [u, v] : g.edges())
        if (new_id[u] >= 0 && new_id[v] >= 0)
            edge_list.emplace_back(new_id[u], new_id[v]);
    return Graph(static_cast<int>(keep.size()), edge_list);
}

Graph one_reduce(const Graph& g)
{
    const int n = g.vertex_count();
    std::vector<int> deg(static_cast<std::size_t>(n));
    std::vector<char> dead(static_cast<std::size_t>(n), 0);
    std::queue<int> low;
    for (int v = 0; v < n; ++v) {
        deg[v] = g.degree(v);
        if (deg[v] <= 1)
            low.push(v);
    }
    while (!low.empty()) {
        int v = low.front();
        low.pop();
        if (dead[v])
            continue;
        dead[v] = 1;
        for (int w : g.neighbors(v)) {
            if (!dead[w] && --deg[w] == 1)
                low.push(w);
        }
    }
    std::vector<int> keep;
    for (int v = 0; v < n; ++v)
        if (!dead[v])
            keep.push_back(v);
    return induced_subgraph(g, keep);
}

ReducedClass classify_reduced(const Graph& g)
{
    Graph core = one_reduce(g);
    if (is_complete(core))
        return ReducedClass::Clique;
    if (is_cycle(core) && core.vertex_count() % 2 == 1)
        return ReducedClass::OddCycle;
    return ReducedClass::Other;
}

Coloring greedy_color(const Graph& g, const std::vector<int>& order)
{
    const int n = g.vertex_count();
    if (static_cast<int>(order.size()) != n)
        throw precondition_error("greedy_color: order must be a permutation of 0..n-1");
    std::vector<char> present(static_cast<std::size_t>(n), 0);
    for (int v : order) {
        if (v < 0 || v >= n || present[v])
            throw precondition_error("greedy_color: order must be a permutation of 0..n-1");
        present[v] = 1;
    }
    Coloring result;
    result.color.assign(static_cast<std::size_t>(n), -1);
    std::vector<char> used;
    for (int v : order) {
        used.assign(static_cast<std::size_t>(g.degree(v)) + 1, 0);
        for (int w : g.neighbors(v)) {
            int c = result.color[w];
            if (c >= 0 && c < static_cast<int>(used.size()))
                used[c] = 1;
        }
        int c = 0;
        while (used[c])
            ++c;
        result.color[v] = c;
    }
    return result;
}

bool is_proper(const Graph& g, const Coloring& c)
{
    if (static_cast<int>(c.color.size()) != g.vertex_count())
        return false;
    for (const auto& [u, v] : g.edges())
        if (c.color[u] == c.color[v])
            return false;
    return true;
}

bool is_complete(const Graph& g)
{
    const long long n = g.vertex_count();
    return g.edge_count() == n * (n - 1) / 2;
}

bool is_cycle(const Graph& g)
{
    const int n = g.vertex_count();
    if (n < 3)
        return false;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) != 2)
            return false;
    return is_connected(g);
}

bool is_bipartite(const Graph& g)
{
    const int n = g.vertex_count();
    std::vector<int> side(static_cast<std::size_t>(n), -1);
    for (int s = 0; s < n; ++s) {
        if (side[s] >= 0)
            continue;
        side[s] = 0;
        std::queue<int> frontier;
        frontier.push(s);
        while (!frontier.empty()) {
            int v = frontier.front();
            frontier.pop();
            for (int w : g.neighbors(v)) {
                if (side[w] < 0) {
                    side[w] = 1 - side[v];
                    frontier.push(w);
                } else if (side[w] == side[v]) {
                    return false;
                }
            }
        }
    }
    return true;
}

bool isomorphic(const Graph& a, const Graph& b)
{
    const int n = a.vertex_count();
    if (n != b.vertex_count() || a.edge_count() != b.edge_count())
        return false;
    if (degree_sequence(a) != degree_sequence(b))
        return false;
    if (n > 8)
        throw precondition_error("isomorphic: brute-force helper limited to n <= 8");
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool match = true;
        for (const auto& [u, v] : a.edges()) {
            if (!b.has_edge(perm[u], perm[v])) {
                match = false;
                break;
            }
        }
        if (match)
            return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

} // namespace hadwiger
