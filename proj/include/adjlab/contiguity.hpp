#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "adjlab/crossing.hpp"
#include "adjlab/errors.hpp"
#include "adjlab/graph.hpp"
#include "adjlab/set_system.hpp"

namespace adjlab {

// Maximal runs of positions, sorted, pairwise non-adjacent (merged).
struct IntervalSet {
    std::vector<std::pair<int, int>> intervals; // inclusive [start, end]

    int count() const { return int(intervals.size()); }
    bool contains(int position) const {
        for (auto [a, b] : intervals)
            if (a <= position && position <= b) return true;
        return false;
    }
};

// The neighborhood of v as maximal runs of consecutive positions under the
// ordering. Maximal runs are the unique minimum-cardinality partition.
inline IntervalSet interval_partition(const Graph& g, const VertexOrdering& ordering, int v) {
    if (ordering.n() != g.n()) throw input_error("ordering size differs from graph order");
    if (v < 0 || v >= g.n()) throw input_error("vertex out of range");
    IntervalSet out;
    const Bitset& nb = g.neighbors(v);
    int run_start = -1;
    for (int p = 0; p < g.n(); ++p) {
        bool in = nb.test(ordering.order[p]);
        if (in && run_start < 0) run_start = p;
        if (!in && run_start >= 0) {
            out.intervals.emplace_back(run_start, p - 1);
            run_start = -1;
        }
    }
    if (run_start >= 0) out.intervals.emplace_back(run_start, g.n() - 1);
    return out;
}

inline int contiguity_of_ordering(const Graph& g, const VertexOrdering& ordering) {
    int k = 0;
    for (int v = 0; v < g.n(); ++v)
        k = std::max(k, interval_partition(g, ordering, v).count());
    return k;
}

// Traversal order of a Hamiltonian path, starting from its lexicographically
// smaller endpoint.
inline VertexOrdering ordering_from_path(const EdgePairList& path) {
    int n = path.ground_size;
    if (n == 0) return VertexOrdering(std::vector<int>{});
    if (n == 1) {
        if (!path.pairs.empty()) throw input_error("ordering_from_path: edges on one vertex");
        return VertexOrdering(std::vector<int>{0});
    }
    if (int(path.pairs.size()) != n - 1)
        throw input_error("ordering_from_path: not a Hamiltonian path: " +
                          std::to_string(path.pairs.size()) + " edges, expected " +
                          std::to_string(n - 1));
    std::vector<std::vector<int>> adj(n);
    for (auto [x, y] : path.pairs) {
        if (x == y || x < 0 || x >= n || y < 0 || y >= n)
            throw input_error("ordering_from_path: invalid edge");
        adj[x].push_back(y);
        adj[y].push_back(x);
    }
    int start = -1;
    for (int v = 0; v < n; ++v) {
        if (adj[v].size() > 2)
            throw input_error("ordering_from_path: vertex " + std::to_string(v) +
                              " has degree " + std::to_string(adj[v].size()));
        if (adj[v].size() == 1 && start < 0) start = v; // endpoints scanned in id order
    }
    if (start < 0) throw input_error("ordering_from_path: no degree-1 endpoint (cycle)");
    std::vector<int> order{start};
    std::vector<bool> seen(n, false);
    seen[start] = true;
    int cur = start;
    while (int(order.size()) < n) {
        int next = -1;
        for (int w : adj[cur])
            if (!seen[w]) next = w;
        if (next < 0)
            throw input_error("ordering_from_path: path ends after " +
                              std::to_string(order.size()) + " vertices (disconnected)");
        seen[next] = true;
        order.push_back(next);
        cur = next;
    }
    return VertexOrdering(std::move(order));
}

struct ContiguityResult {
    VertexOrdering ordering;
    std::vector<IntervalSet> per_vertex;
    int k = 0; // max interval count over vertices
};

struct ContiguityReport {
    ContiguityResult result;
    PathCertificate pipeline; // tree certificate, path, per-set crossings
    bool halving_ok = false;  // k <= floor(k_P/2) + 1
    // Filled when the exact VC dimension and dual-shatter envelope fit the
    // enumeration budget.
    std::optional<int> vc_dim;
    std::optional<double> contiguity_bound; // 1 + log2 n + 5 d sum_j 1/finv(j/2)

    long long tree_crossing() const { return pipeline.tree.crossing; }
    long long path_crossing() const { return pipeline.path_crossing; }
};

struct ContiguityOptions {
    BuildOptions build;
    bool with_bound = false;  // compute d and the envelope-based bound if affordable
    int vc_ground_limit = 24;
    long long shatter_budget = 10'000'000;
};

// The pipeline: neighborhood system -> low-crossing tree -> path -> ordering.
inline ContiguityReport low_contiguity_ordering(const Graph& g,
                                                const ContiguityOptions& opts = {}) {
    ContiguityReport rep;
    if (g.n() == 0) {
        rep.result.ordering = VertexOrdering(std::vector<int>{});
        rep.halving_ok = true;
        return rep;
    }
    SetSystem nbhd = neighborhood_system(g);
    rep.pipeline = build_low_crossing_path(nbhd, opts.build);
    rep.result.ordering = ordering_from_path(rep.pipeline.path);
    rep.result.per_vertex.reserve(g.n());
    for (int v = 0; v < g.n(); ++v)
        rep.result.per_vertex.push_back(interval_partition(g, rep.result.ordering, v));
    for (const IntervalSet& is : rep.result.per_vertex)
        rep.result.k = std::max(rep.result.k, is.count());
    rep.halving_ok = rep.result.k <= rep.path_crossing() / 2 + 1;

    if (opts.with_bound && g.n() <= opts.vc_ground_limit) {
        try {
            int d = vc_dimension(nbhd, opts.vc_ground_limit);
            auto profile = full_shatter_profile(dual_system(nbhd), g.n(), opts.shatter_budget);
            if (profile) {
                rep.vc_dim = d;
                ShatterEnvelope env{*profile};
                mpq_class sum = envelope_inverse_sum(env, g.n());
                rep.contiguity_bound = 1.0 + std::log2(double(g.n())) + 5.0 * d * sum.get_d();
            }
        } catch (const size_error&) {
            // budget exceeded: report without the bound
        }
    }
    return rep;
}

// Exact minimum contiguity over all vertex orders, with a witness.
struct ExactContiguityResult {
    int k = 0;
    VertexOrdering ordering;
};

inline ExactContiguityResult exact_contiguity(const Graph& g, int exhaustive_limit = 8) {
    int n = g.n();
    if (n > exhaustive_limit)
        throw size_error("exact_contiguity: n = " + std::to_string(n) +
                         " exceeds the exhaustive limit " + std::to_string(exhaustive_limit));
    ExactContiguityResult best;
    if (n == 0) {
        best.ordering = VertexOrdering(std::vector<int>{});
        return best;
    }
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    int best_k = -1;
    do {
        if (n >= 2 && perm.front() > perm.back()) continue; // contiguity is reversal-invariant
        VertexOrdering ord(perm);
        int k = 0;
        for (int v = 0; v < n && (best_k < 0 || k < best_k); ++v)
            k = std::max(k, interval_partition(g, ord, v).count());
        if (best_k < 0 || k < best_k) {
            best_k = k;
            best.ordering = std::move(ord);
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    best.k = best_k;
    return best;
}

// Diagnostic for the run/crossing duality: per vertex,
// 2*#intervals - #intervals touching either end = #path edges crossed by N(v).
inline int boundary_touches(const IntervalSet& is, int n) {
    int t = 0;
    for (auto [a, b] : is.intervals) {
        if (a == 0) ++t;
        if (b == n - 1) ++t;
    }
    return t;
}

} // namespace adjlab
