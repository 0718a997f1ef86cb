#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "adjlab/bitset.hpp"
#include "adjlab/errors.hpp"

namespace adjlab {

// Undirected simple graph on vertices 0..n-1, one neighbor bitset per vertex.
// Construction goes through from_edge_list (or the generator/IO helpers), so
// adjacency is always symmetric and loop-free.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : n_(n), adj_(n, Bitset(n)) {}

    int n() const { return n_; }

    bool has_edge(int u, int v) const { return adj_[u].test(v); }
    int degree(int v) const { return adj_[v].count(); }
    const Bitset& neighbors(int v) const { return adj_[v]; }

    void add_edge(int u, int v) {
        if (u < 0 || u >= n_ || v < 0 || v >= n_)
            throw input_error("edge (" + std::to_string(u) + "," + std::to_string(v) +
                              ") has an endpoint outside [0," + std::to_string(n_) + ")");
        if (u == v)
            throw input_error("loop edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
        adj_[u].set(v);
        adj_[v].set(u);
    }

    long long edge_count() const {
        long long twice = 0;
        for (int v = 0; v < n_; ++v) twice += degree(v);
        return twice / 2;
    }

    int max_degree() const {
        int d = 0;
        for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
        return d;
    }

    // Edges as (u,v) with u < v, lexicographically sorted.
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        out.reserve(size_t(edge_count()));
        for (int u = 0; u < n_; ++u)
            adj_[u].for_each([&](int v) {
                if (u < v) out.emplace_back(u, v);
            });
        return out;
    }

    bool operator==(const Graph& o) const = default;

    // Symmetry and loop-freeness; cheap enough to assert in tests.
    bool valid() const {
        for (int u = 0; u < n_; ++u) {
            if (adj_[u].size() != n_) return false;
            if (adj_[u].test(u)) return false;
            bool ok = true;
            adj_[u].for_each([&](int v) { ok = ok && adj_[v].test(u); });
            if (!ok) return false;
        }
        return true;
    }

private:
    int n_ = 0;
    std::vector<Bitset> adj_;
};

inline Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& edge_list) {
    if (n < 0) throw input_error("negative vertex count");
    Graph g(n);
    for (auto [u, v] : edge_list) g.add_edge(u, v);
    return g;
}

// Permutation of 0..n-1 together with its inverse position map.
struct VertexOrdering {
    std::vector<int> order; // order[i] = vertex at position i
    std::vector<int> pos;   // pos[v] = position of vertex v

    VertexOrdering() = default;
    explicit VertexOrdering(std::vector<int> ord) : order(std::move(ord)) {
        int n = int(order.size());
        pos.assign(n, -1);
        for (int i = 0; i < n; ++i) {
            int v = order[i];
            if (v < 0 || v >= n || pos[v] != -1)
                throw input_error("ordering is not a permutation of 0.." + std::to_string(n - 1));
            pos[v] = i;
        }
    }

    int n() const { return int(order.size()); }
};

inline VertexOrdering identity_ordering(int n) {
    std::vector<int> ord(n);
    std::iota(ord.begin(), ord.end(), 0);
    return VertexOrdering(std::move(ord));
}

// ---------------------------------------------------------------------------
// Induced subgraphs

struct InducedSubgraph {
    Graph graph;
    std::vector<int> vertices; // new index -> original vertex id
};

inline InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& subset) {
    std::vector<int> verts = subset;
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    for (int v : verts)
        if (v < 0 || v >= g.n())
            throw input_error("vertex " + std::to_string(v) + " outside the graph");
    std::vector<int> newid(g.n(), -1);
    for (size_t i = 0; i < verts.size(); ++i) newid[verts[i]] = int(i);
    Graph sub(int(verts.size()));
    for (size_t i = 0; i < verts.size(); ++i)
        g.neighbors(verts[i]).for_each([&](int w) {
            if (newid[w] >= 0 && verts[i] < w) sub.add_edge(int(i), newid[w]);
        });
    return {std::move(sub), std::move(verts)};
}

// ---------------------------------------------------------------------------
// Degeneracy

struct DegeneracyResult {
    VertexOrdering ordering;        // every vertex has <= d neighbors earlier in it
    int d = 0;                      // degeneracy
    std::vector<int> back_degrees;  // back_degrees[v] = # neighbors of v earlier in ordering
};

// Repeatedly removes a minimum-degree vertex (smallest id on ties). The
// removal sequence is reversed so that "earlier neighbors" of each vertex are
// exactly the ones still present at its removal, capping back-degrees at d.
inline DegeneracyResult degeneracy_ordering(const Graph& g) {
    int n = g.n();
    std::vector<int> deg(n), removal;
    std::vector<bool> gone(n, false);
    for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
    removal.reserve(n);
    int d = 0;
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = 0; v < n; ++v)
            if (!gone[v] && (best == -1 || deg[v] < deg[best])) best = v;
        d = std::max(d, deg[best]);
        gone[best] = true;
        removal.push_back(best);
        g.neighbors(best).for_each([&](int w) {
            if (!gone[w]) --deg[w];
        });
    }
    std::reverse(removal.begin(), removal.end());
    DegeneracyResult res;
    res.ordering = VertexOrdering(std::move(removal));
    res.d = d;
    res.back_degrees.assign(n, 0);
    for (int v = 0; v < n; ++v) {
        int back = 0;
        g.neighbors(v).for_each([&](int w) {
            if (res.ordering.pos[w] < res.ordering.pos[v]) ++back;
        });
        res.back_degrees[v] = back;
    }
    return res;
}

// ---------------------------------------------------------------------------
// t-core peeling

// Deletes vertices of degree < t (smallest id first) until none remain.
// The result is the t-core: the unique maximal induced subgraph of minimum
// degree >= t, possibly empty.
inline InducedSubgraph peel_to_min_degree(const Graph& g, int t) {
    if (t < 0) throw input_error("negative degree threshold");
    int n = g.n();
    std::vector<int> deg(n);
    std::vector<bool> gone(n, false);
    for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v = 0; v < n; ++v) {
            if (!gone[v] && deg[v] < t) {
                gone[v] = true;
                changed = true;
                g.neighbors(v).for_each([&](int w) {
                    if (!gone[w]) --deg[w];
                });
            }
        }
    }
    std::vector<int> keep;
    for (int v = 0; v < n; ++v)
        if (!gone[v]) keep.push_back(v);
    return induced_subgraph(g, keep);
}

// ---------------------------------------------------------------------------
// Biclique subgraph test

namespace detail {

inline bool biclique_search(const Graph& g, int t, int start, int chosen, const Bitset& common,
                            std::vector<int>& side_a) {
    if (chosen == t) {
        // The other side must avoid the chosen set.
        int avail = common.count();
        for (int v : side_a)
            if (common.test(v)) --avail;
        return avail >= t;
    }
    for (int v = start; v < g.n(); ++v) {
        if (g.degree(v) < t) continue;
        Bitset next = chosen == 0 ? g.neighbors(v) : common;
        if (chosen > 0) next &= g.neighbors(v);
        if (next.count() < t) continue; // common neighborhood only shrinks
        side_a.push_back(v);
        if (biclique_search(g, t, v + 1, chosen + 1, next, side_a)) return true;
        side_a.pop_back();
    }
    return false;
}

} // namespace detail

// True iff K_{t,t} occurs as a (not necessarily induced) subgraph:
// some t-set A has at least t common neighbors outside A.
inline bool contains_biclique(const Graph& g, int t, int exhaustive_limit = 64) {
    if (t < 1) throw input_error("biclique parameter must be >= 1");
    if (g.n() > exhaustive_limit)
        throw size_error("contains_biclique: n = " + std::to_string(g.n()) +
                         " exceeds the exhaustive limit " + std::to_string(exhaustive_limit));
    if (g.n() < 2 * t) return false;
    std::vector<int> side_a;
    return detail::biclique_search(g, t, 0, 0, Bitset(g.n()), side_a);
}

// ---------------------------------------------------------------------------
// Subdivisions

enum class VertexRole { branching, subdivision };

struct SubdivisionResult {
    Graph graph;
    std::vector<VertexRole> roles;      // per vertex of the subdivision
    std::vector<int> origin;            // branching: original id; subdivision: -1
};

// r-subdivision: every edge becomes an (r+1)-edge path through r new vertices.
// Originals keep their ids; path vertices are appended edge by edge in
// lexicographic edge order.
inline SubdivisionResult subdivide(const Graph& g, int r) {
    if (r < 0) throw input_error("negative subdivision depth");
    auto es = g.edges();
    int n = g.n();
    int total = n + r * int(es.size());
    SubdivisionResult out{Graph(total), std::vector<VertexRole>(total, VertexRole::subdivision),
                          std::vector<int>(total, -1)};
    for (int v = 0; v < n; ++v) {
        out.roles[v] = VertexRole::branching;
        out.origin[v] = v;
    }
    int fresh = n;
    for (auto [u, v] : es) {
        if (r == 0) {
            out.graph.add_edge(u, v);
            continue;
        }
        int prev = u;
        for (int i = 0; i < r; ++i) {
            out.graph.add_edge(prev, fresh);
            prev = fresh++;
        }
        out.graph.add_edge(prev, v);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Misc small helpers shared across modules

inline bool is_connected(const Graph& g) {
    if (g.n() == 0) return true;
    std::vector<bool> seen(g.n(), false);
    std::vector<int> stack{0};
    seen[0] = true;
    int found = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        g.neighbors(v).for_each([&](int w) {
            if (!seen[w]) {
                seen[w] = true;
                ++found;
                stack.push_back(w);
            }
        });
    }
    return found == g.n();
}

} // namespace adjlab
