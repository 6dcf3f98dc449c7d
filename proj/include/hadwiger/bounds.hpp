#pragma once

#include <cstdint>
#include <optional>

#include "hadwiger/graph.hpp"

namespace hadwiger {

// floor(sqrt(x)) for x >= 0, exact.
std::int64_t isqrt(std::int64_t x);

// floor((3 + sqrt(9 + 8(m-n))) / 2). Requires m >= n-1 (consistent with a
// connected graph); upper bound on the clique-contraction number.
int ek_bound(std::int64_t n, std::int64_t m);

// floor((1 + sqrt(1 + 8m)) / 2): the largest k with k(k-1)/2 <= m. Upper
// bound on the chromatic number of a connected graph with m edges.
int chs_sqrt_bound(std::int64_t m);

// floor((3 + sqrt(1 + 8(m-n))) / 2). Requires m >= n; applies to connected
// graphs whose 2-core is neither a clique nor an odd cycle (chromatic
// bound), or with no acyclic clique contraction (clique-minor bound).
int improved_bound(std::int64_t n, std::int64_t m);

// max degree + 1.
int brooks_bound(const Graph& g);

// max over 1-based positions j of min(j, d_j + 1); input must be sorted
// non-increasing and nonempty.
int welsh_powell_bound(const DegreeSequence& d);

// max over vertices u of the largest neighbor degree not exceeding d(u);
// requires at least one edge. The associated chromatic bound is delta2 + 1.
int delta2(const Graph& g);
int stacho_delta2_bound(const Graph& g);

// s = max cardinality of a degree class V_i over i >= ceil((max_degree+2)/2);
// requires max_degree >= 2. The bound is ceil(s * (max_degree+2) / (s+1)).
int stacho_s(const Graph& g);
int stacho_s_bound(const Graph& g);

struct BoundReport {
    std::int64_t n = 0;
    std::int64_t m = 0;
    int delta = 0;
    std::optional<int> delta2;  // absent when edgeless
    std::optional<int> s;       // absent when delta <= 1
    int ek = 0;
    int chs_sqrt = 0;
    std::optional<int> improved; // absent when m < n
    int brooks = 0;
    int welsh_powell = 0;
    std::optional<int> stacho_delta2;
    std::optional<int> stacho_s;
    bool connected = false;
    ReducedClass reduced = ReducedClass::Other;
    // Filled by the exact module on request; never computed here.
    std::optional<bool> acyclic_clique;
};

// All applicable bounds for a connected graph; not-applicable entries stay
// absent rather than being set to sentinel values.
BoundReport evaluate_all(const Graph& g);

} // namespace hadwiger
