// resolving.hpp — vector representations, resolving-set verification, exact
// minimum-resolving-set search (certified ascending-size enumeration, with an
// optional symmetry-pruned mode), and the structural analyzers the theta-graph
// results lean on: MMD sets, identical path sets, twin-path lemmas, and the
// degree/shortest-path conditions for 2-element bases.
#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "thetadim/theta_graph.hpp"

namespace thetadim {

// Ordered landmark list; order fixes the coordinate order of vector
// representations.
using LandmarkSet = std::vector<VertexId>;
using DistanceVector = std::vector<int>;

struct ResolutionVerdict {
    bool resolved = false;
    // Lexicographically first colliding pair under the canonical vertex
    // order, present iff not resolved.
    std::optional<std::pair<VertexId, VertexId>> collision;
};

namespace detail {

inline void require_landmarks(const GraphSpec& g, const LandmarkSet& w) {
    if (w.empty()) throw std::invalid_argument("landmark set must be non-empty");
    std::set<VertexId> seen;
    for (VertexId v : w) {
        g.require_valid(v);
        if (!seen.insert(v).second)
            throw std::invalid_argument("landmark set contains a duplicate vertex");
    }
}

}  // namespace detail

inline DistanceVector vector_representation(const GraphSpec& g, const LandmarkSet& w,
                                            VertexId v) {
    detail::require_landmarks(g, w);
    g.require_valid(v);
    DistanceVector r;
    r.reserve(w.size());
    for (VertexId landmark : w) r.push_back(closed_form_distance(g, landmark, v));
    return r;
}

inline ResolutionVerdict verify_resolving(const GraphSpec& g, const LandmarkSet& w) {
    detail::require_landmarks(g, w);
    const int n = g.vertex_count();
    const DistanceMatrix d = bfs_distance_matrix(g);
    std::vector<int> landmark_idx;
    landmark_idx.reserve(w.size());
    for (VertexId v : w) landmark_idx.push_back(g.index_of(v));

    std::vector<DistanceVector> repr(n);
    for (int v = 0; v < n; ++v) {
        repr[v].reserve(landmark_idx.size());
        for (int li : landmark_idx) repr[v].push_back(d.at(li, v));
    }
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (repr[a] == repr[b])
                return {false, std::make_pair(g.vertex_at(a), g.vertex_at(b))};
    return {true, std::nullopt};
}

struct SearchOptions {
    int witness_cap = 64;      // max stored witnesses; the exact count is still reported
    bool pruned = false;       // skip subsets equivalent under equal-length path permutation
};

struct BetaResult {
    int beta = 0;
    std::vector<LandmarkSet> witnesses;   // canonical enumeration order, possibly truncated
    std::uint64_t witness_count = 0;      // exact number of minimum resolving sets
    std::uint64_t subsets_examined = 0;
    int witness_cap = 0;
    bool truncated = false;
};

namespace detail {

inline bool next_combination(std::vector<int>& comb, int n) {
    const int k = static_cast<int>(comb.size());
    for (int i = k - 1; i >= 0; --i) {
        if (comb[i] < n - k + i) {
            ++comb[i];
            for (int j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
            return true;
        }
    }
    return false;
}

// Fast resolving check over the dense distance matrix: pack each vertex's
// distance tuple into a 64-bit key (distances fit in 8 bits at desk scale),
// sort, and look for an adjacent duplicate. Falls back to full vectors when
// the subset is too large to pack.
inline bool subset_resolves(const DistanceMatrix& d, const std::vector<int>& subset,
                            std::vector<std::uint64_t>& keys) {
    const int n = d.size();
    const int k = static_cast<int>(subset.size());
    if (k <= 8) {
        keys.clear();
        for (int v = 0; v < n; ++v) {
            std::uint64_t key = 0;
            for (int li : subset) key = (key << 8) | static_cast<std::uint64_t>(d.at(li, v));
            keys.push_back(key);
        }
        std::sort(keys.begin(), keys.end());
        for (int v = 0; v + 1 < n; ++v)
            if (keys[v] == keys[v + 1]) return false;
        return true;
    }
    std::vector<std::vector<int>> repr(n);
    for (int v = 0; v < n; ++v)
        for (int li : subset) repr[v].push_back(d.at(li, v));
    std::sort(repr.begin(), repr.end());
    return std::adjacent_find(repr.begin(), repr.end()) == repr.end();
}

// Canonicity filter for the pruned search. Permuting equal-length paths is a
// graph automorphism, so orbits are determined by the per-path landmark
// position sets; a subset is the orbit representative iff within every block
// of equal-length paths the position sets appear in non-decreasing order.
inline bool subset_is_canonical(const GraphSpec& g, const std::vector<int>& subset) {
    const int m = g.multiplicity();
    std::vector<std::vector<int>> positions(m + 1);
    for (int idx : subset) {
        VertexId v = g.vertex_at(idx);
        if (v.kind == VertexId::Kind::Internal) positions[v.path].push_back(v.pos);
    }
    for (int i = 1; i + 1 <= m; ++i) {
        if (g.length(i) != g.length(i + 1)) continue;
        if (positions[i + 1] < positions[i]) return false;
    }
    return true;
}

inline std::optional<BetaResult> search_metric_dimension(const GraphSpec& g,
                                                         const SearchOptions& opts,
                                                         int max_subset_size) {
    const int n = g.vertex_count();
    const DistanceMatrix d = bfs_distance_matrix(g);
    BetaResult result;
    result.witness_cap = opts.witness_cap;
    std::vector<std::uint64_t> keys;
    keys.reserve(n);

    for (int k = 1; k <= max_subset_size; ++k) {
        std::vector<int> comb(k);
        std::iota(comb.begin(), comb.end(), 0);
        bool found = false;
        do {
            if (opts.pruned && !subset_is_canonical(g, comb)) continue;
            ++result.subsets_examined;
            if (!subset_resolves(d, comb, keys)) continue;
            found = true;
            ++result.witness_count;
            if (static_cast<int>(result.witnesses.size()) < opts.witness_cap) {
                LandmarkSet w;
                w.reserve(k);
                for (int idx : comb) w.push_back(g.vertex_at(idx));
                result.witnesses.push_back(std::move(w));
            } else {
                result.truncated = true;
            }
        } while (next_combination(comb, n));
        if (found) {
            result.beta = k;
            return result;
        }
    }
    return std::nullopt;
}

}  // namespace detail

// Smallest k such that some k-subset resolves, by ascending-size lexicographic
// enumeration over the dense vertex index. Always terminates: the full vertex
// set trivially resolves. Deterministic witness order.
inline BetaResult metric_dimension(const GraphSpec& g, const SearchOptions& opts = {}) {
    auto r = detail::search_metric_dimension(g, opts, g.vertex_count());
    return *r;  // k = n always resolves, so the search cannot come back empty
}

// Guarded variant for sweep use: gives up (nullopt) once subsets would exceed
// max_subset_size.
inline std::optional<BetaResult> metric_dimension_bounded(const GraphSpec& g,
                                                          int max_subset_size,
                                                          const SearchOptions& opts = {}) {
    return detail::search_metric_dimension(g, opts, max_subset_size);
}

// All vertices mutually maximally distant from v: u MMD v when no neighbor
// of u is strictly farther from v and vice versa. With a restriction, both
// distances and neighborhoods are taken in the induced subgraph, so traces
// within a two-path cycle C_{i,j} and graph-wide traces are both expressible.
inline std::vector<VertexId> mmd_set(const GraphSpec& g, VertexId v,
                                     std::optional<std::vector<VertexId>> restriction =
                                         std::nullopt) {
    g.require_valid(v);
    const Adjacency full = build_adjacency(g);

    std::vector<int> members;  // dense indices of the working vertex set
    if (restriction) {
        for (VertexId r : *restriction) {
            g.require_valid(r);
            members.push_back(g.index_of(r));
        }
        std::sort(members.begin(), members.end());
        members.erase(std::unique(members.begin(), members.end()), members.end());
    } else {
        members.resize(g.vertex_count());
        std::iota(members.begin(), members.end(), 0);
    }

    std::vector<int> local_of(g.vertex_count(), -1);
    for (std::size_t i = 0; i < members.size(); ++i) local_of[members[i]] = static_cast<int>(i);
    const int vi = local_of[g.index_of(v)];
    if (vi < 0)
        throw std::invalid_argument("mmd_set: vertex not contained in the restriction");

    std::vector<std::vector<int>> adj(members.size());
    for (std::size_t i = 0; i < members.size(); ++i)
        for (int nb : full.neighbors[members[i]])
            if (local_of[nb] >= 0) adj[i].push_back(local_of[nb]);

    std::vector<std::vector<int>> dist(members.size());
    for (std::size_t i = 0; i < members.size(); ++i) dist[i] = bfs_from(adj, static_cast<int>(i));

    auto maximally_distant = [&](int a, int b) {
        if (dist[a][b] < 0) return false;  // unreachable pairs are not MMD
        for (int w : adj[a])
            if (dist[w][b] > dist[a][b]) return false;
        return true;
    };

    std::vector<VertexId> out;
    for (std::size_t u = 0; u < members.size(); ++u) {
        if (static_cast<int>(u) == vi) continue;
        if (maximally_distant(static_cast<int>(u), vi) &&
            maximally_distant(vi, static_cast<int>(u)))
            out.push_back(g.vertex_at(members[u]));
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Maximal bundle of equal-length internally disjoint degree-2 paths between
// a vertex pair. In a generalized theta graph every bundle joins the two
// centers: one entry per repeated length.
struct IPEntry {
    VertexId u;
    VertexId v;
    int path_length = 0;   // internal vertex count s
    int path_count = 0;    // bundle multiplicity, >= 2
    std::vector<int> paths;  // canonical path indices carrying this length
};

inline std::vector<IPEntry> identical_path_set(const GraphSpec& g) {
    std::vector<IPEntry> out;
    const int m = g.multiplicity();
    int i = 1;
    while (i <= m) {
        int j = i;
        while (j < m && g.length(j + 1) == g.length(i)) ++j;
        if (j > i) {
            IPEntry e{VertexId::c1(), VertexId::c2(), g.length(i), j - i + 1, {}};
            for (int p = i; p <= j; ++p) e.paths.push_back(p);
            out.push_back(std::move(e));
        }
        i = j + 1;
    }
    return out;
}

inline int ip_lower_bound(const GraphSpec& g) {
    int bound = 0;
    for (const IPEntry& e : identical_path_set(g)) bound += e.path_count - 1;
    return bound;
}

// True iff for every identical-path bundle, at least (multiplicity - 1) of
// its paths carry a landmark among their internal vertices.
inline bool check_ip_internal_vertex_condition(const GraphSpec& g, const LandmarkSet& w) {
    detail::require_landmarks(g, w);
    for (const IPEntry& e : identical_path_set(g)) {
        int covered = 0;
        for (int p : e.paths) {
            bool hit = false;
            for (VertexId v : w)
                if (v.kind == VertexId::Kind::Internal && v.path == p) hit = true;
            if (hit) ++covered;
        }
        if (covered < e.path_count - 1) return false;
    }
    return true;
}

// Twin paths: two equal-length paths with no internal landmark force the
// collision of corresponding internal vertices. Returns the forced pair for
// the first such path pair in lexicographic order, if any.
inline std::optional<std::pair<VertexId, VertexId>> check_twin_path_lemma(
    const GraphSpec& g, const LandmarkSet& w) {
    if (!w.empty()) detail::require_landmarks(g, w);
    const int m = g.multiplicity();
    std::vector<bool> has_landmark(m + 1, false);
    for (VertexId v : w)
        if (v.kind == VertexId::Kind::Internal) has_landmark[v.path] = true;
    for (int i = 1; i <= m; ++i) {
        for (int l = i + 1; l <= m; ++l) {
            if (g.length(i) != g.length(l)) continue;
            if (has_landmark[i] || has_landmark[l]) continue;
            return std::make_pair(VertexId::internal(i, 1), VertexId::internal(l, 1));
        }
    }
    return std::nullopt;
}

// Generalized twins: paths i and l block W when neither carries an internal
// landmark and d(c1,c2) + 2 is below both path vertex counts (s + 2).
inline bool check_generalized_twin_lemma(const GraphSpec& g, int i, int l,
                                         const LandmarkSet& w) {
    if (i == l) throw std::invalid_argument("generalized twin lemma: need distinct paths");
    if (i < 1 || l < 1 || i > g.multiplicity() || l > g.multiplicity())
        throw std::invalid_argument("generalized twin lemma: path index out of range");
    if (!w.empty()) detail::require_landmarks(g, w);
    for (VertexId v : w)
        if (v.kind == VertexId::Kind::Internal && (v.path == i || v.path == l)) return false;
    const int crossing = g.length(1) + 1;  // d(c1, c2)
    return crossing + 2 < g.length(i) + 2 && crossing + 2 < g.length(l) + 2;
}

struct KhullerConditions {
    bool unique_shortest_path = false;
    bool endpoint_degrees_ok = false;  // deg(w1), deg(w2) <= 3
    bool interior_degrees_ok = false;  // deg <= 5 on shortest-path interiors
};

// Structural conditions on a 2-element metric basis. Errors when the given
// pair is not resolving, since the conditions are stated only for bases.
inline KhullerConditions khuller_conditions(const GraphSpec& g, const LandmarkSet& basis) {
    if (basis.size() != 2)
        throw std::invalid_argument("khuller_conditions: basis must have exactly 2 vertices");
    if (!verify_resolving(g, basis).resolved)
        throw std::invalid_argument("khuller_conditions: the given pair is not resolving");

    const Adjacency adj = build_adjacency(g);
    const int a = g.index_of(basis[0]);
    const int b = g.index_of(basis[1]);
    const std::vector<int> da = bfs_from(adj.neighbors, a);
    const std::vector<int> db = bfs_from(adj.neighbors, b);

    // Shortest-path count via DP over the BFS layer DAG from a.
    std::vector<int> order(adj.n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int x, int y) { return da[x] < da[y]; });
    std::vector<std::uint64_t> paths(adj.n, 0);
    paths[a] = 1;
    for (int x : order) {
        if (x == a) continue;
        for (int y : adj.neighbors[x])
            if (da[y] + 1 == da[x]) paths[x] += paths[y];
    }

    KhullerConditions out;
    out.unique_shortest_path = (paths[b] == 1);
    out.endpoint_degrees_ok = adj.neighbors[a].size() <= 3 && adj.neighbors[b].size() <= 3;
    out.interior_degrees_ok = true;
    for (int x = 0; x < adj.n; ++x) {
        if (x == a || x == b) continue;
        if (da[x] + db[x] == da[b] && adj.neighbors[x].size() > 5)
            out.interior_degrees_ok = false;
    }
    return out;
}

// 1 iff d(v, c1) <= d(v, c2) (ties go to c1), else 2.
inline int closer_center(const GraphSpec& g, VertexId v) {
    g.require_valid(v);
    const int d1 = closed_form_distance(g, VertexId::c1(), v);
    const int d2 = closed_form_distance(g, VertexId::c2(), v);
    return d1 <= d2 ? 1 : 2;
}

}  // namespace thetadim
