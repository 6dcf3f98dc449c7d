#include "hadwiger/exact.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <numeric>
#include <queue>

#include "hadwiger/errors.hpp"

namespace hadwiger {

namespace {

std::vector<std::uint64_t> adjacency_masks(const Graph& g)
{
    std::vector<std::uint64_t> adj(static_cast<std::size_t>(g.vertex_count()), 0);
    for (const auto& [u, v] : g.edges()) {
        adj[u] |= std::uint64_t{1} << v;
        adj[v] |= std::uint64_t{1} << u;
    }
    return adj;
}

bool mask_connected(const std::vector<std::uint64_t>& adj, std::uint64_t mask)
{
    if (mask == 0)
        return true;
    std::uint64_t seen = mask & (~mask + 1);
    std::uint64_t frontier = seen;
    while (frontier) {
        std::uint64_t next = 0;
        while (frontier) {
            int v = std::countr_zero(frontier);
            frontier &= frontier - 1;
            next |= adj[v] & mask;
        }
        next &= ~seen;
        seen |= next;
        frontier = next;
    }
    return seen == mask;
}

std::uint64_t max_clique_mask(const std::vector<std::uint64_t>& adj, int n)
{
    std::uint64_t best_mask = 0;
    int best = 0;
    std::uint64_t cur = 0;

    auto extend = [&](auto&& self, int size, std::uint64_t cand) -> void {
        if (cand == 0) {
            if (size > best) {
                best = size;
                best_mask = cur;
            }
            return;
        }
        while (cand) {
            if (size + std::popcount(cand) <= best)
                return;
            int v = std::countr_zero(cand);
            cand &= cand - 1;
            cur |= std::uint64_t{1} << v;
            self(self, size + 1, cand & adj[v]);
            cur &= ~(std::uint64_t{1} << v);
        }
    };

    std::uint64_t all = n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    extend(extend, 0, all);
    return best_mask;
}

} // namespace

int max_clique(const Graph& g)
{
    const int n = g.vertex_count();
    if (n == 0)
        return 0;
    if (n > 64)
        throw resource_error("max_clique: limited to n <= 64");
    return std::popcount(max_clique_mask(adjacency_masks(g), n));
}

namespace {

// Backtracking k-colorability, vertices in ascending id order; at most one
// new color may be opened per vertex, which breaks color symmetry.
bool k_colorable(const Graph& g, int k, std::vector<int>& colors)
{
    const int n = g.vertex_count();
    colors.assign(static_cast<std::size_t>(n), -1);

    auto rec = [&](auto&& self, int v, int used) -> bool {
        if (v == n)
            return true;
        const int limit = std::min(used + 1, k);
        for (int c = 0; c < limit; ++c) {
            bool conflict = false;
            for (int w : g.neighbors(v)) {
                if (w < v && colors[w] == c) {
                    conflict = true;
                    break;
                }
            }
            if (conflict)
                continue;
            colors[v] = c;
            if (self(self, v + 1, std::max(used, c + 1)))
                return true;
            colors[v] = -1;
        }
        return false;
    };
    return rec(rec, 0, 0);
}

} // namespace

std::pair<int, Coloring> chromatic_number_with_coloring(const Graph& g)
{
    const int n = g.vertex_count();
    if (n < 1)
        throw precondition_error("chromatic_number: empty graph");
    if (n > kMaxExactChromaticN)
        throw resource_error("chromatic_number: n exceeds documented limit");

    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    Coloring greedy = greedy_color(g, order);
    const int lower = max_clique(g);
    if (greedy.colors_used() == lower)
        return {lower, greedy};

    std::vector<int> colors;
    for (int k = lower; k <= n; ++k) {
        if (k_colorable(g, k, colors))
            return {k, Coloring{colors}};
    }
    return {n, greedy}; // unreachable: k = n always succeeds
}

int chromatic_number(const Graph& g)
{
    return chromatic_number_with_coloring(g).first;
}

bool verify_minor_witness(const Graph& g, const MinorWitness& w)
{
    const int n = g.vertex_count();
    const int r = static_cast<int>(w.classes.size());
    std::vector<int> class_of(static_cast<std::size_t>(n), -1);
    int assigned = 0;
    for (int c = 0; c < r; ++c) {
        if (w.classes[c].empty())
            throw precondition_error("witness: empty class");
        for (int v : w.classes[c]) {
            if (v < 0 || v >= n)
                throw precondition_error("witness: vertex id out of range");
            if (class_of[v] != -1)
                throw precondition_error("witness: vertex assigned twice");
            class_of[v] = c;
            ++assigned;
        }
    }
    if (assigned != n)
        throw precondition_error("witness: classes must cover every vertex");

    // every class induces a connected subgraph
    for (int c = 0; c < r; ++c) {
        std::vector<char> seen(static_cast<std::size_t>(n), 0);
        std::queue<int> frontier;
        frontier.push(w.classes[c][0]);
        seen[w.classes[c][0]] = 1;
        int reached = 1;
        while (!frontier.empty()) {
            int v = frontier.front();
            frontier.pop();
            for (int u : g.neighbors(v)) {
                if (class_of[u] == c && !seen[u]) {
                    seen[u] = 1;
                    ++reached;
                    frontier.push(u);
                }
            }
        }
        if (reached != static_cast<int>(w.classes[c].size()))
            return false;
    }

    // every pair of classes is joined by at least one edge
    std::vector<char> joined(static_cast<std::size_t>(r) * r, 0);
    for (const auto& [u, v] : g.edges()) {
        int a = class_of[u], b = class_of[v];
        if (a != b) {
            joined[a * r + b] = 1;
            joined[b * r + a] = 1;
        }
    }
    for (int a = 0; a < r; ++a)
        for (int b = a + 1; b < r; ++b)
            if (!joined[a * r + b])
                return false;
    return true;
}

bool verify_acyclic_clique_witness(const Graph& g, const MinorWitness& w)
{
    if (!verify_minor_witness(g, w))
        return false;
    const int n = g.vertex_count();
    const int r = static_cast<int>(w.classes.size());
    std::vector<int> class_of(static_cast<std::size_t>(n), -1);
    for (int c = 0; c < r; ++c)
        for (int v : w.classes[c])
            class_of[v] = c;

    // connected + |E| = |V|-1 makes each class a tree; count crossings per pair
    std::vector<int> internal(static_cast<std::size_t>(r), 0);
    std::vector<int> crossing(static_cast<std::size_t>(r) * r, 0);
    for (const auto& [u, v] : g.edges()) {
        int a = class_of[u], b = class_of[v];
        if (a == b) {
            ++internal[a];
        } else {
            ++crossing[a * r + b];
            ++crossing[b * r + a];
        }
    }
    for (int c = 0; c < r; ++c)
        if (internal[c] != static_cast<int>(w.classes[c].size()) - 1)
            return false;
    for (int a = 0; a < r; ++a)
        for (int b = a + 1; b < r; ++b)
            if (crossing[a * r + b] != 1)
                return false;
    return true;
}

namespace {

MinorWitness witness_from_clique(const Graph& g, const std::vector<int>& clique)
{
    const int n = g.vertex_count();
    std::vector<int> class_of(static_cast<std::size_t>(n), -1);
    for (std::size_t c = 0; c < clique.size(); ++c)
        class_of[clique[c]] = static_cast<int>(c);

    // absorb the remaining vertices: each joins the class of its smallest
    // already-assigned neighbor, so classes stay connected
    int assigned = static_cast<int>(clique.size());
    while (assigned < n) {
        bool progress = false;
        for (int v = 0; v < n; ++v) {
            if (class_of[v] != -1)
                continue;
            for (int u : g.neighbors(v)) {
                if (class_of[u] != -1) {
                    class_of[v] = class_of[u];
                    ++assigned;
                    progress = true;
                    break;
                }
            }
        }
        if (!progress)
            throw precondition_error("witness_from_clique: graph must be connected");
    }
    MinorWitness w;
    w.classes.resize(clique.size());
    for (int v = 0; v < n; ++v)
        w.classes[class_of[v]].push_back(v);
    return w;
}

} // namespace

MinorWitness greedy_clique_witness(const Graph& g)
{
    const int n = g.vertex_count();
    if (n < 1)
        throw precondition_error("greedy_clique_witness: empty graph");
    if (!is_connected(g))
        throw precondition_error("greedy_clique_witness: graph must be connected");
    std::vector<int> clique;
    for (int v = 0; v < n; ++v) {
        bool ok = true;
        for (int u : clique) {
            if (!g.has_edge(u, v)) {
                ok = false;
                break;
            }
        }
        if (ok)
            clique.push_back(v);
    }
    return witness_from_clique(g, clique);
}

namespace {

// Depth-first maximum over all partitions of V into connected, pairwise
// joined classes. Vertices are assigned in ascending id order; a class whose
// members have no unassigned neighbor left ("frozen") can never grow or gain
// a crossing edge, which cuts most of the tree.
struct HadwigerSearch {
    int n;
    const std::vector<std::uint64_t>& adj;
    int best;
    std::vector<int> best_class_of;
    std::array<std::uint64_t, kMaxExactHadwigerN> class_mask{};
    std::array<std::uint64_t, kMaxExactHadwigerN> nbr_union{};
    std::array<std::uint32_t, kMaxExactHadwigerN> crossbit{};
    std::vector<int> class_of;

    HadwigerSearch(int n_, const std::vector<std::uint64_t>& adj_, int incumbent)
        : n(n_), adj(adj_), best(incumbent),
          class_of(static_cast<std::size_t>(n_), -1)
    {
    }

    bool partition_valid(int num_classes) const
    {
        const std::uint32_t all = (std::uint32_t{1} << num_classes) - 1;
        for (int c = 0; c < num_classes; ++c) {
            if (crossbit[c] != (all ^ (std::uint32_t{1} << c)))
                return false;
            if (!mask_connected(adj, class_mask[c]))
                return false;
        }
        return true;
    }

    void rec(int v, int num_classes, bool allow_new)
    {
        if (num_classes + (n - v) <= best)
            return;
        if (v == n) {
            if (num_classes > best && partition_valid(num_classes)) {
                best = num_classes;
                best_class_of = class_of;
            }
            return;
        }
        const std::uint64_t vbit = std::uint64_t{1} << v;
        const std::uint64_t rest = ((n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1)) & ~((vbit << 1) - 1);
        const int tries = allow_new ? num_classes + 1 : num_classes;

        for (int c = 0; c < tries; ++c) {
            const bool fresh = (c == num_classes);
            // joining a class v has no edge to is pointless unless a later
            // vertex can still bridge them
            if (!fresh && (adj[v] & class_mask[c]) == 0 && (nbr_union[c] & rest) == 0)
                continue;

            const std::uint64_t saved_mask = class_mask[c];
            const std::uint64_t saved_nbru = nbr_union[c];
            const auto saved_cross = crossbit;

            class_mask[c] |= vbit;
            nbr_union[c] |= adj[v];
            for (int d = 0; d < num_classes + (fresh ? 1 : 0); ++d) {
                if (d != c && (adj[v] & class_mask[d]) != 0) {
                    crossbit[c] |= std::uint32_t{1} << d;
                    crossbit[d] |= std::uint32_t{1} << c;
                }
            }
            class_of[v] = c;
            const int child_classes = num_classes + (fresh ? 1 : 0);

            bool dead = false;
            bool any_frozen = false;
            const std::uint32_t all = (std::uint32_t{1} << child_classes) - 1;
            for (int d = 0; d < child_classes && !dead; ++d) {
                if ((nbr_union[d] & rest) != 0)
                    continue;
                any_frozen = true;
                if (crossbit[d] != (all ^ (std::uint32_t{1} << d)))
                    dead = true; // a missing crossing edge can never appear
                else if (!mask_connected(adj, class_mask[d]))
                    dead = true; // a frozen class can no longer be repaired
            }
            if (!dead && any_frozen && child_classes <= best)
                dead = true; // no further class can open once one is frozen

            if (!dead)
                rec(v + 1, child_classes, allow_new && !any_frozen);

            class_of[v] = -1;
            class_mask[c] = saved_mask;
            nbr_union[c] = saved_nbru;
            crossbit = saved_cross;
        }
    }
};

} // namespace

HadwigerSolution hadwiger_solve(const Graph& g)
{
    const int n = g.vertex_count();
    if (n < 1)
        throw precondition_error("hadwiger_solve: empty graph");
    if (!is_connected(g))
        throw precondition_error("hadwiger_solve: graph must be connected");
    if (n > kMaxExactHadwigerN) {
        MinorWitness lower = greedy_clique_witness(g);
        throw resource_error("hadwiger_solve: n exceeds documented limit",
                             static_cast<int>(lower.classes.size()));
    }

    const auto adj = adjacency_masks(g);
    const std::uint64_t clique_mask = max_clique_mask(adj, n);
    std::vector<int> clique;
    for (int v = 0; v < n; ++v)
        if (clique_mask >> v & 1)
            clique.push_back(v);

    HadwigerSolution solution;
    solution.witness = witness_from_clique(g, clique);
    solution.number = static_cast<int>(solution.witness.classes.size());

    HadwigerSearch search(n, adj, solution.number);
    search.rec(0, 0, true);
    if (search.best > solution.number) {
        solution.number = search.best;
        solution.witness.classes.assign(static_cast<std::size_t>(search.best), {});
        for (int v = 0; v < n; ++v)
            solution.witness.classes[search.best_class_of[v]].push_back(v);
    }
    return solution;
}

int hadwiger_number(const Graph& g)
{
    return hadwiger_solve(g).number;
}

namespace {

// Search for a partition of V into exactly r classes subject to the acyclic
// contraction side conditions. Crossing counts are capped at one; `TreeClasses`
// additionally rejects any in-class cycle via a union-find, and `CycleTarget`
// requires the class-level graph to be a single cycle instead of complete.
struct AcyclicSearch {
    int n;
    int r;
    const std::vector<std::uint64_t>& adj;
    bool tree_classes;
    bool cycle_target;

    std::array<std::uint64_t, kMaxExactHadwigerN> class_mask{};
    std::array<std::int8_t, kMaxExactHadwigerN> uf{};
    std::array<std::array<std::int8_t, kMaxExactHadwigerN>, kMaxExactHadwigerN> cross{};
    std::array<std::int8_t, kMaxExactHadwigerN> class_degree{};

    AcyclicSearch(int n_, int r_, const std::vector<std::uint64_t>& adj_, bool trees, bool cycle)
        : n(n_), r(r_), adj(adj_), tree_classes(trees), cycle_target(cycle)
    {
        for (int v = 0; v < n; ++v)
            uf[v] = static_cast<std::int8_t>(v);
    }

    int find(int v)
    {
        while (uf[v] != v)
            v = uf[v];
        return v;
    }

    bool accept(int num_classes)
    {
        if (num_classes != r)
            return false;
        if (cycle_target) {
            for (int c = 0; c < r; ++c)
                if (class_degree[c] != 2)
                    return false;
            // degrees all 2: connectivity of the class graph makes it one cycle
            std::vector<char> seen(static_cast<std::size_t>(r), 0);
            std::queue<int> frontier;
            frontier.push(0);
            seen[0] = 1;
            int reached = 1;
            while (!frontier.empty()) {
                int c = frontier.front();
                frontier.pop();
                for (int d = 0; d < r; ++d) {
                    if (cross[c][d] == 1 && !seen[d]) {
                        seen[d] = 1;
                        ++reached;
                        frontier.push(d);
                    }
                }
            }
            if (reached != r)
                return false;
        } else {
            for (int c = 0; c < r; ++c)
                for (int d = c + 1; d < r; ++d)
                    if (cross[c][d] != 1)
                        return false;
        }
        for (int c = 0; c < r; ++c) {
            if (tree_classes) {
                // acyclic throughout; one component makes it a tree
                int roots = 0;
                std::uint64_t mask = class_mask[c];
                while (mask) {
                    int v = std::countr_zero(mask);
                    mask &= mask - 1;
                    if (find(v) == v)
                        ++roots;
                }
                if (roots != 1)
                    return false;
            } else if (!mask_connected(adj, class_mask[c])) {
                return false;
            }
        }
        return true;
    }

    bool rec(int v, int num_classes)
    {
        if (num_classes + (n - v) < r)
            return false;
        if (v == n)
            return accept(num_classes);

        const std::uint64_t vbit = std::uint64_t{1} << v;
        const int tries = std::min(num_classes + 1, r);
        for (int c = 0; c < tries; ++c) {
            const bool fresh = (c == num_classes);
            const auto saved_uf = uf;
            const auto saved_cross = cross;
            const auto saved_degree = class_degree;

            bool dead = false;
            if (tree_classes) {
                std::uint64_t in_class = adj[v] & class_mask[c];
                while (in_class && !dead) {
                    int u = std::countr_zero(in_class);
                    in_class &= in_class - 1;
                    int ru = find(u), rv = find(v);
                    if (ru == rv)
                        dead = true; // joining two neighbors in one component closes a cycle
                    else
                        uf[rv] = static_cast<std::int8_t>(ru);
                }
            }
            for (int d = 0; d < num_classes + (fresh ? 1 : 0) && !dead; ++d) {
                if (d == c)
                    continue;
                int added = std::popcount(adj[v] & class_mask[d]);
                if (added == 0)
                    continue;
                if (cross[c][d] + added > 1) {
                    dead = true; // a doubly joined pair shrinks a cycle onto one edge
                    break;
                }
                cross[c][d] = cross[d][c] = 1;
                if (++class_degree[c] > 2 && cycle_target)
                    dead = true;
                if (++class_degree[d] > 2 && cycle_target)
                    dead = true;
            }

            if (!dead) {
                class_mask[c] |= vbit;
                if (rec(v + 1, num_classes + (fresh ? 1 : 0)))
                    return true;
                class_mask[c] &= ~vbit;
            }
            uf = saved_uf;
            cross = saved_cross;
            class_degree = saved_degree;
        }
        return false;
    }
};

void check_acyclic_preconditions(const Graph& g, int target, const char* what)
{
    if (target < 3)
        throw precondition_error(std::string(what) + ": target size must be >= 3");
    if (g.vertex_count() < 1)
        throw precondition_error(std::string(what) + ": empty graph");
    if (!is_connected(g))
        throw precondition_error(std::string(what) + ": graph must be connected");
    if (g.vertex_count() > kMaxExactHadwigerN)
        throw resource_error(std::string(what) + ": n exceeds documented limit");
}

} // namespace

bool has_acyclic_contraction_to_clique(const Graph& g, int r)
{
    check_acyclic_preconditions(g, r, "has_acyclic_contraction_to_clique");
    const int n = g.vertex_count();
    if (r > n)
        return false;
    // tree classes contribute n - r internal edges and each pair exactly one
    if (g.edge_count() != n - r + r * (r - 1) / 2)
        return false;
    const auto adj = adjacency_masks(g);
    AcyclicSearch search(n, r, adj, /*trees=*/true, /*cycle=*/false);
    return search.rec(0, 0);
}

bool has_acyclic_contraction_to_clique_literal(const Graph& g, int r)
{
    check_acyclic_preconditions(g, r, "has_acyclic_contraction_to_clique_literal");
    const int n = g.vertex_count();
    if (r > n)
        return false;
    if (g.edge_count() < n - r + r * (r - 1) / 2)
        return false; // connected classes need >= size-1 internal edges each
    const auto adj = adjacency_masks(g);
    AcyclicSearch search(n, r, adj, /*trees=*/false, /*cycle=*/false);
    return search.rec(0, 0);
}

bool has_acyclic_contraction_to_any_clique(const Graph& g)
{
    if (g.vertex_count() < 1)
        throw precondition_error("has_acyclic_contraction_to_any_clique: empty graph");
    if (!is_connected(g))
        throw precondition_error("has_acyclic_contraction_to_any_clique: graph must be connected");
    if (g.vertex_count() > kMaxExactHadwigerN)
        throw resource_error("has_acyclic_contraction_to_any_clique: n exceeds documented limit");
    for (int r = 3; r <= g.vertex_count(); ++r)
        if (has_acyclic_contraction_to_clique(g, r))
            return true;
    return false;
}

bool has_acyclic_contraction_to_cycle(const Graph& g, int len)
{
    check_acyclic_preconditions(g, len, "has_acyclic_contraction_to_cycle");
    const int n = g.vertex_count();
    if (len > n)
        return false;
    // n - len tree edges inside classes plus len consecutive crossings
    if (g.edge_count() != n)
        return false;
    const auto adj = adjacency_masks(g);
    AcyclicSearch search(n, len, adj, /*trees=*/true, /*cycle=*/true);
    return search.rec(0, 0);
}

} // namespace hadwiger
