#include "hadwiger/families.hpp"

#include "hadwiger/errors.hpp"

namespace hadwiger {

Graph build_d_r_n(int r, int n)
{
    if (r < 3)
        throw precondition_error("build_d_r_n: need r >= 3");
    if (n < r)
        throw precondition_error("build_d_r_n: need n >= r");
    std::vector<std::pair<int, int>> edge_list;
    for (int i = 1; r * i < n; ++i)
        for (int j = 0; j < r; ++j)
            if (r * i + j <= n - 1)
                edge_list.emplace_back(r * i + j, r * (i - 1) + j);
    for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j)
            if (r * i + j <= n - 1 && r * j + i <= n - 1)
                edge_list.emplace_back(r * i + j, r * j + i);
    return Graph(n, edge_list);
}

MinorWitness d_r_n_witness(int r, int n)
{
    if (r < 3)
        throw precondition_error("d_r_n_witness: need r >= 3");
    if (n < r * r - 1)
        throw not_applicable_error(
            "d_r_n_witness: witness only guaranteed for n >= r^2 - 1");
    MinorWitness w;
    w.classes.resize(static_cast<std::size_t>(r));
    for (int j = 0; j < r; ++j)
        for (int v = j; v <= n - 1; v += r)
            w.classes[j].push_back(v);
    return w;
}

Graph build_figure_1a()
{
    // pair edges first, then one fixed edge per pair of pairs; every vertex
    // ends with degree >= 2
    return Graph(8, {{0, 1}, {2, 3}, {4, 5}, {6, 7},
                     {0, 2}, {1, 5}, {0, 6}, {3, 7}, {4, 7}, {3, 4}});
}

MinorWitness figure_1a_witness()
{
    return MinorWitness{{{0, 1}, {2, 3}, {4, 5}, {6, 7}}};
}

Graph build_tree_clique_counterexample(int k)
{
    if (k < 3)
        throw precondition_error("build_tree_clique_counterexample: need k >= 3");
    std::vector<std::pair<int, int>> edge_list;
    for (int t = 0; t < k; ++t)
        edge_list.emplace_back(2 * t, 2 * t + 1);
    // each pair alternates which member takes the next crossing edge, walking
    // its partner pairs in ascending order; with k - 1 >= 2 partners both
    // members end up with a crossing edge, and no member carries more than
    // ceil((k-1)/2) of them
    std::vector<int> taken(static_cast<std::size_t>(k), 0);
    auto next_side = [&taken](int pair) { return 2 * pair + (taken[pair]++ % 2); };
    for (int p = 0; p < k; ++p)
        for (int q = p + 1; q < k; ++q)
            edge_list.emplace_back(next_side(p), next_side(q));
    return Graph(2 * k, edge_list);
}

MinorWitness tree_clique_witness(int k)
{
    if (k < 3)
        throw precondition_error("tree_clique_witness: need k >= 3");
    MinorWitness w;
    w.classes.resize(static_cast<std::size_t>(k));
    for (int t = 0; t < k; ++t)
        w.classes[t] = {2 * t, 2 * t + 1};
    return w;
}

Graph build_family(const FamilySpec& spec)
{
    switch (spec.kind) {
    case FamilySpec::Kind::D:
        return build_d_r_n(spec.r, spec.n);
    case FamilySpec::Kind::Figure1a:
        return build_figure_1a();
    case FamilySpec::Kind::TreeClique:
        return build_tree_clique_counterexample(spec.k);
    }
    throw precondition_error("build_family: unknown family kind");
}

} // namespace hadwiger
