#include "hadwiger/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "hadwiger/errors.hpp"

namespace hadwiger {

std::int64_t isqrt(std::int64_t x)
{
    if (x < 0)
        throw precondition_error("isqrt of negative value");
    auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(x)));
    while (r > 0 && r * r > x)
        --r;
    while ((r + 1) * (r + 1) <= x)
        ++r;
    return r;
}

// Each radical below is evaluated as floor((a + sqrt(x)) / 2) with integer a
// and integer x >= 0. Pushing the floor inside the square root is exact:
// an integer t satisfies t <= (a + sqrt(x)) / 2 iff 2t - a <= sqrt(x), and
// since 2t - a is an integer this holds iff 2t - a <= floor(sqrt(x)).
// Hence floor((a + sqrt(x)) / 2) == floor((a + isqrt(x)) / 2).

int ek_bound(std::int64_t n, std::int64_t m)
{
    if (n < 1)
        throw precondition_error("ek_bound: need n >= 1");
    if (m < n - 1)
        throw precondition_error("ek_bound: m < n-1 is inconsistent with a connected graph");
    return static_cast<int>((3 + isqrt(9 + 8 * (m - n))) / 2);
}

int chs_sqrt_bound(std::int64_t m)
{
    if (m < 0)
        throw precondition_error("chs_sqrt_bound: need m >= 0");
    return static_cast<int>((1 + isqrt(1 + 8 * m)) / 2);
}

int improved_bound(std::int64_t n, std::int64_t m)
{
    if (n < 1)
        throw precondition_error("improved_bound: need n >= 1");
    if (m < n)
        throw not_applicable_error("improved_bound: requires m >= n");
    return static_cast<int>((3 + isqrt(1 + 8 * (m - n))) / 2);
}

int brooks_bound(const Graph& g)
{
    if (g.vertex_count() < 1)
        throw precondition_error("brooks_bound: empty graph");
    return g.max_degree() + 1;
}

int welsh_powell_bound(const DegreeSequence& d)
{
    if (d.empty())
        throw precondition_error("welsh_powell_bound: empty degree sequence");
    if (!std::is_sorted(d.begin(), d.end(), std::greater<int>()))
        throw precondition_error("welsh_powell_bound: sequence must be non-increasing");
    int best = 0;
    for (std::size_t j = 1; j <= d.size(); ++j)
        best = std::max(best, std::min(static_cast<int>(j), d[j - 1] + 1));
    return best;
}

int delta2(const Graph& g)
{
    if (g.edge_count() == 0)
        throw not_applicable_error("delta2: graph has no edge");
    int best = -1;
    for (int u = 0; u < g.vertex_count(); ++u) {
        for (int v : g.neighbors(u))
            if (g.degree(v) <= g.degree(u))
                best = std::max(best, g.degree(v));
    }
    return best; // a max-degree vertex always contributes, so best >= 1
}

int stacho_delta2_bound(const Graph& g)
{
    return delta2(g) + 1;
}

int stacho_s(const Graph& g)
{
    const int delta = g.max_degree();
    if (delta < 2)
        throw not_applicable_error("stacho_s: requires max degree >= 2");
    const int threshold = (delta + 2 + 1) / 2; // ceil((delta+2)/2)
    std::map<int, int> class_size;
    for (int v = 0; v < g.vertex_count(); ++v)
        ++class_size[g.degree(v)];
    int s = 0;
    for (const auto& [deg, count] : class_size)
        if (deg >= threshold)
            s = std::max(s, count);
    return s; // V_delta always qualifies, so s >= 1
}

int stacho_s_bound(const Graph& g)
{
    const int s = stacho_s(g);
    const int delta = g.max_degree();
    return static_cast<int>((static_cast<std::int64_t>(s) * (delta + 2) + s) / (s + 1));
}

BoundReport evaluate_all(const Graph& g)
{
    if (g.vertex_count() < 1)
        throw precondition_error("evaluate_all: empty graph");
    if (!is_connected(g))
        throw precondition_error("evaluate_all: graph must be connected");

    BoundReport r;
    r.n = g.vertex_count();
    r.m = g.edge_count();
    r.delta = g.max_degree();
    r.connected = true;
    r.ek = ek_bound(r.n, r.m);
    r.chs_sqrt = chs_sqrt_bound(r.m);
    if (r.m >= r.n)
        r.improved = improved_bound(r.n, r.m);
    r.brooks = brooks_bound(g);
    r.welsh_powell = welsh_powell_bound(degree_sequence(g));
    if (r.m > 0) {
        r.delta2 = delta2(g);
        r.stacho_delta2 = *r.delta2 + 1;
    }
    if (r.delta >= 2) {
        r.s = stacho_s(g);
        r.stacho_s = stacho_s_bound(g);
    }
    r.reduced = classify_reduced(g);
    return r;
}

} // namespace hadwiger

