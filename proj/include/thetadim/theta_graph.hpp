// theta_graph.hpp — generalized theta graphs Theta(s1,...,sm): symbolic
// vertices, canonical parameter specs, and exact distances via both a
// closed-form case analysis and a BFS oracle on the materialized adjacency.
#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <queue>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace thetadim {

// Symbolic vertex: one of the two centers, or the internal vertex at
// position `pos` (1-based, counted from c1) on path `path` (1-based).
// Default ordering is the canonical vertex order: c1, c2, then internal
// vertices lexicographic by (path, pos).
struct VertexId {
    enum class Kind : std::uint8_t { Center1 = 0, Center2 = 1, Internal = 2 };

    Kind kind = Kind::Center1;
    int path = 0;
    int pos = 0;

    static constexpr VertexId c1() { return {Kind::Center1, 0, 0}; }
    static constexpr VertexId c2() { return {Kind::Center2, 0, 0}; }
    static constexpr VertexId internal(int path, int pos) {
        return {Kind::Internal, path, pos};
    }

    bool is_center() const { return kind != Kind::Internal; }

    friend auto operator<=>(const VertexId&, const VertexId&) = default;
};

// Canonical parameter vector of a generalized theta graph. Lengths are the
// internal-vertex counts per path, stored sorted non-decreasing; the sort
// permutation is kept so user-facing (original) path labels can be mapped
// to canonical ones and back. m = 2 is the degenerate cycle case and is
// accepted but flagged.
class GraphSpec {
public:
    explicit GraphSpec(std::vector<int> lengths) {
        if (lengths.empty())
            throw std::invalid_argument("theta spec: length list must be non-empty");
        if (lengths.size() < 2)
            throw std::invalid_argument("theta spec: need at least 2 paths, got 1");
        for (std::size_t i = 0; i < lengths.size(); ++i) {
            if (lengths[i] < 1)
                throw std::invalid_argument(
                    "theta spec: length at index " + std::to_string(i + 1) +
                    " must be >= 1 (got " + std::to_string(lengths[i]) + ")");
        }
        const int m = static_cast<int>(lengths.size());
        original_of_.resize(m);
        std::iota(original_of_.begin(), original_of_.end(), 1);
        std::stable_sort(original_of_.begin(), original_of_.end(),
                         [&](int a, int b) { return lengths[a - 1] < lengths[b - 1]; });
        lengths_.resize(m);
        canonical_of_.resize(m);
        for (int k = 0; k < m; ++k) {
            lengths_[k] = lengths[original_of_[k] - 1];
            canonical_of_[original_of_[k] - 1] = k + 1;
        }
        prefix_.assign(m + 1, 0);
        for (int k = 0; k < m; ++k) prefix_[k + 1] = prefix_[k] + lengths_[k];
    }

    int multiplicity() const { return static_cast<int>(lengths_.size()); }
    const std::vector<int>& lengths() const { return lengths_; }
    int length(int path) const { return lengths_[path - 1]; }
    int vertex_count() const { return 2 + prefix_.back(); }
    bool is_cycle() const { return multiplicity() == 2; }

    // 1-based mapping between canonical (sorted) and original path labels.
    int original_path(int canonical) const { return original_of_[canonical - 1]; }
    int canonical_path(int original) const { return canonical_of_[original - 1]; }

    bool valid(VertexId v) const {
        if (v.kind != VertexId::Kind::Internal) return true;
        return v.path >= 1 && v.path <= multiplicity() && v.pos >= 1 &&
               v.pos <= length(v.path);
    }

    void require_valid(VertexId v) const {
        if (!valid(v))
            throw std::invalid_argument("vertex v:" + std::to_string(v.path) + ":" +
                                        std::to_string(v.pos) + " not valid for " +
                                        literal());
    }

    // Dense index in canonical vertex order: c1 -> 0, c2 -> 1, then
    // internal vertices by (path, pos).
    int index_of(VertexId v) const {
        require_valid(v);
        switch (v.kind) {
            case VertexId::Kind::Center1: return 0;
            case VertexId::Kind::Center2: return 1;
            default: return 2 + prefix_[v.path - 1] + (v.pos - 1);
        }
    }

    VertexId vertex_at(int index) const {
        if (index < 0 || index >= vertex_count())
            throw std::out_of_range("vertex index out of range");
        if (index == 0) return VertexId::c1();
        if (index == 1) return VertexId::c2();
        int off = index - 2;
        int path = 1;
        while (off >= prefix_[path]) ++path;
        return VertexId::internal(path, off - prefix_[path - 1] + 1);
    }

    std::vector<VertexId> vertices() const {
        std::vector<VertexId> out;
        out.reserve(vertex_count());
        for (int i = 0; i < vertex_count(); ++i) out.push_back(vertex_at(i));
        return out;
    }

    std::string literal() const {
        std::string s = "theta:";
        for (std::size_t i = 0; i < lengths_.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(lengths_[i]);
        }
        return s;
    }

    friend bool operator==(const GraphSpec& a, const GraphSpec& b) {
        return a.lengths_ == b.lengths_;
    }

private:
    std::vector<int> lengths_;       // canonical, sorted non-decreasing
    std::vector<int> original_of_;   // canonical -> original label (1-based)
    std::vector<int> canonical_of_;  // original -> canonical label (1-based)
    std::vector<int> prefix_;        // prefix sums of lengths_
};

inline GraphSpec build_spec(std::vector<int> raw_lengths) {
    return GraphSpec(std::move(raw_lengths));
}

// Adjacency lists over the dense vertex index; the materialized edge list
// used by the BFS oracle. Every internal vertex has degree 2, each center
// degree m.
struct Adjacency {
    int n = 0;
    std::vector<std::vector<int>> neighbors;
};

inline Adjacency build_adjacency(const GraphSpec& g) {
    Adjacency a;
    a.n = g.vertex_count();
    a.neighbors.assign(a.n, {});
    auto link = [&](int u, int v) {
        a.neighbors[u].push_back(v);
        a.neighbors[v].push_back(u);
    };
    for (int i = 1; i <= g.multiplicity(); ++i) {
        int prev = 0;  // c1
        for (int j = 1; j <= g.length(i); ++j) {
            int cur = g.index_of(VertexId::internal(i, j));
            link(prev, cur);
            prev = cur;
        }
        link(prev, 1);  // c2
    }
    return a;
}

// Single-source BFS over plain adjacency lists; -1 marks unreachable.
inline std::vector<int> bfs_from(const std::vector<std::vector<int>>& adj, int src) {
    std::vector<int> dist(adj.size(), -1);
    std::queue<int> q;
    dist[src] = 0;
    q.push(src);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int v : adj[u]) {
            if (dist[v] < 0) {
                dist[v] = dist[u] + 1;
                q.push(v);
            }
        }
    }
    return dist;
}

class DistanceMatrix {
public:
    DistanceMatrix() = default;
    DistanceMatrix(int n, std::vector<int> d) : n_(n), d_(std::move(d)) {}

    int size() const { return n_; }
    int at(int u, int v) const { return d_[static_cast<std::size_t>(u) * n_ + v]; }

private:
    int n_ = 0;
    std::vector<int> d_;
};

inline DistanceMatrix bfs_distance_matrix(const GraphSpec& g) {
    Adjacency adj = build_adjacency(g);
    std::vector<int> d(static_cast<std::size_t>(adj.n) * adj.n, 0);
    for (int s = 0; s < adj.n; ++s) {
        std::vector<int> row = bfs_from(adj.neighbors, s);
        std::copy(row.begin(), row.end(), d.begin() + static_cast<std::size_t>(s) * adj.n);
    }
    return DistanceMatrix(adj.n, std::move(d));
}

namespace detail {

// Cheapest c1--c2 crossing avoiding path i: min over l != i of (s_l + 1).
inline int crossing_without(const GraphSpec& g, int i) {
    int best = -1;
    for (int l = 1; l <= g.multiplicity(); ++l) {
        if (l == i) continue;
        int c = g.length(l) + 1;
        if (best < 0 || c < best) best = c;
    }
    return best;
}

// Cheapest crossing avoiding both paths i and l; -1 when no third path (m=2).
inline int crossing_without(const GraphSpec& g, int i, int l) {
    int best = -1;
    for (int p = 1; p <= g.multiplicity(); ++p) {
        if (p == i || p == l) continue;
        int c = g.length(p) + 1;
        if (best < 0 || c < best) best = c;
    }
    return best;
}

}  // namespace detail

// Exact distance by case analysis on the path structure. The cases cover:
// center pairs, center to internal (direct or around through the cheapest
// other path), same-path pairs (direct or around), and cross-path pairs
// (through either center, or center-to-center via a third path when m > 2).
inline int closed_form_distance(const GraphSpec& g, VertexId u, VertexId v) {
    g.require_valid(u);
    g.require_valid(v);
    if (u == v) return 0;
    if (v < u) std::swap(u, v);

    using K = VertexId::Kind;
    if (u.kind == K::Center1 && v.kind == K::Center2) return g.length(1) + 1;

    if (u.is_center()) {
        const int i = v.path, j = v.pos, si = g.length(i);
        const int t = detail::crossing_without(g, i);
        const int from_c1 = j, from_c2 = si + 1 - j;
        if (u.kind == K::Center1) return std::min(from_c1, from_c2 + t);
        return std::min(from_c2, from_c1 + t);
    }

    const int i = u.path, j = u.pos;
    const int l = v.path, k = v.pos;
    if (i == l) {
        const int si = g.length(i);
        const int direct = std::abs(j - k);
        const int around =
            std::min(j, k) + detail::crossing_without(g, i) + (si + 1 - std::max(j, k));
        return std::min(direct, around);
    }
    const int si = g.length(i), sl = g.length(l);
    int best = std::min(j + k, (si + 1 - j) + (sl + 1 - k));
    const int t = detail::crossing_without(g, i, l);
    if (t >= 0) {
        best = std::min(best, j + t + (sl + 1 - k));
        best = std::min(best, (si + 1 - j) + t + k);
    }
    return best;
}

// D(S): sum of consecutive distances along a vertex sequence; always at
// least the distance between the sequence endpoints.
inline int sequence_distance(const GraphSpec& g, std::span<const VertexId> seq) {
    if (seq.empty())
        throw std::invalid_argument("sequence_distance: sequence must be non-empty");
    int total = 0;
    for (std::size_t i = 0; i + 1 < seq.size(); ++i)
        total += closed_form_distance(g, seq[i], seq[i + 1]);
    return total;
}

inline int sequence_distance(const GraphSpec& g, std::initializer_list<VertexId> seq) {
    return sequence_distance(g, std::span<const VertexId>(seq.begin(), seq.size()));
}

// Vertices of C_{i,l}, the cycle induced by paths i and l (centers included).
inline std::vector<VertexId> cycle_subgraph_vertices(const GraphSpec& g, int i, int l) {
    if (i == l || i < 1 || l < 1 || i > g.multiplicity() || l > g.multiplicity())
        throw std::invalid_argument("cycle_subgraph_vertices: need two distinct paths");
    std::vector<VertexId> out{VertexId::c1(), VertexId::c2()};
    for (int p : {std::min(i, l), std::max(i, l)})
        for (int j = 1; j <= g.length(p); ++j) out.push_back(VertexId::internal(p, j));
    return out;
}

}  // namespace thetadim
