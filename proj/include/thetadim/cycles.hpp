// cycles.hpp — cycle-specific facts verified by brute force over small
// cycles, shared with the m = 2 degenerate theta case. Cycle vertices are
// plain indices 0..n-1 with index-arithmetic distances.
#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "thetadim/theta_graph.hpp"

namespace thetadim {

struct CycleSpec {
    int n = 0;
    explicit CycleSpec(int vertices) : n(vertices) {
        if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    }
};

inline int cycle_distance(int n, int a, int b) {
    int diff = std::abs(a - b) % n;
    return std::min(diff, n - diff);
}

struct AntipodalStructure {
    int antipode = 0;
    // equidistant_pairs[i-1] is the unique unordered pair at distance i on
    // both sides of u, for 1 <= i < n/2.
    std::vector<std::pair<int, int>> equidistant_pairs;
};

// Even cycles only: the unique vertex at maximum distance n/2 plus the
// unique equidistant pair at every smaller radius.
inline AntipodalStructure cycle_antipodal_structure(const CycleSpec& c, int u) {
    if (c.n % 2 != 0)
        throw std::invalid_argument("cycle_antipodal_structure: cycle order must be even");
    AntipodalStructure out;
    out.antipode = (u + c.n / 2) % c.n;
    for (int i = 1; i < c.n / 2; ++i) {
        int a = ((u - i) % c.n + c.n) % c.n;
        int b = (u + i) % c.n;
        out.equidistant_pairs.emplace_back(std::min(a, b), std::max(a, b));
    }
    return out;
}

// Vertices of the cycle mutually maximally distant from v: the antipode for
// even n, the two farthest vertices for odd n. Computed from the definition.
inline std::vector<int> cycle_mmd_set(const CycleSpec& c, int v) {
    auto maximally_distant = [&](int a, int b) {
        const int d = cycle_distance(c.n, a, b);
        return cycle_distance(c.n, (a + 1) % c.n, b) <= d &&
               cycle_distance(c.n, (a + c.n - 1) % c.n, b) <= d;
    };
    std::vector<int> out;
    for (int u = 0; u < c.n; ++u)
        if (u != v && maximally_distant(u, v) && maximally_distant(v, u)) out.push_back(u);
    return out;
}

// Whether {w1, w2} resolves C_n, by direct vector-representation check.
inline bool cycle_pair_resolves(const CycleSpec& c, int w1, int w2) {
    if (w1 == w2) throw std::invalid_argument("cycle_pair_resolves: landmarks must differ");
    std::vector<std::pair<int, int>> repr;
    repr.reserve(c.n);
    for (int v = 0; v < c.n; ++v)
        repr.emplace_back(cycle_distance(c.n, w1, v), cycle_distance(c.n, w2, v));
    std::sort(repr.begin(), repr.end());
    return std::adjacent_find(repr.begin(), repr.end()) == repr.end();
}

// Non-resolution criterion for n >= 6: at least three distinct vertices
// occupy a doubled place, i.e. share their vector representation with some
// other vertex (the radius pairs of the antipodal landmark structure). The
// n >= 6 floor matters: C4 produces only two such vertices.
inline bool cycle_double_place_criterion(const CycleSpec& c, int w1, int w2) {
    if (c.n < 6)
        throw std::invalid_argument("cycle_double_place_criterion: needs n >= 6");
    if (w1 == w2)
        throw std::invalid_argument("cycle_double_place_criterion: landmarks must differ");
    std::vector<std::pair<int, int>> repr;
    repr.reserve(c.n);
    for (int v = 0; v < c.n; ++v)
        repr.emplace_back(cycle_distance(c.n, w1, v), cycle_distance(c.n, w2, v));
    int doubled = 0;
    for (int v = 0; v < c.n; ++v)
        for (int u = 0; u < c.n; ++u)
            if (u != v && repr[u] == repr[v]) {
                ++doubled;
                break;
            }
    return doubled >= 3;
}

// The theta-graph rendering of the same cycle: C_n as Theta(s1, s2) with
// s1 + s2 + 2 = n. Ring order used for cross-checks: c1, path 1 forward,
// c2, path 2 backward.
inline std::vector<VertexId> cycle_ring_order(const GraphSpec& g) {
    if (!g.is_cycle())
        throw std::invalid_argument("cycle_ring_order: spec is not a cycle (m != 2)");
    std::vector<VertexId> ring{VertexId::c1()};
    for (int j = 1; j <= g.length(1); ++j) ring.push_back(VertexId::internal(1, j));
    ring.push_back(VertexId::c2());
    for (int j = g.length(2); j >= 1; --j) ring.push_back(VertexId::internal(2, j));
    return ring;
}

}  // namespace thetadim
