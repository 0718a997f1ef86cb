#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "adjlab/graph.hpp"

namespace adjlab {

namespace detail {

// Per-vertex refinement signature: degree plus the sorted multiset of
// neighbor degrees. Isomorphisms preserve it, so it prunes candidates.
inline std::vector<std::vector<int>> vertex_signatures(const Graph& g) {
    std::vector<std::vector<int>> sig(g.n());
    for (int v = 0; v < g.n(); ++v) {
        std::vector<int> s{g.degree(v)};
        g.neighbors(v).for_each([&](int w) { s.push_back(g.degree(w)); });
        std::sort(s.begin() + 1, s.end());
        sig[v] = std::move(s);
    }
    return sig;
}

// Assignment order for the backtracking mapper: depth-first within each
// component, so every vertex after a component root has an already-ordered
// neighbor and a wrong branch is refuted where it starts. Depth-first order
// matters for subdivisions: it walks each chain to its far endpoint at once
// instead of fanning out over all chains level by level.
inline std::vector<int> expansion_order(const Graph& g) {
    int n = g.n();
    std::vector<int> order;
    std::vector<bool> placed(n, false);
    order.reserve(n);
    std::vector<int> stack;
    for (int root = 0; root < n; ++root) {
        if (placed[root]) continue;
        stack.push_back(root);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            if (placed[v]) continue; // may sit in the stack more than once
            placed[v] = true;
            order.push_back(v);
            g.neighbors(v).for_each([&](int w) {
                if (!placed[w]) stack.push_back(w);
            });
        }
    }
    return order;
}

// Counts mappings of G onto H that preserve adjacency and non-adjacency.
// When stop_at_first is set, returns as soon as one is found.
class IsoMapper {
public:
    IsoMapper(const Graph& g, const Graph& h, bool stop_at_first)
        : g_(g), h_(h), stop_at_first_(stop_at_first), n_(g.n()),
          order_(expansion_order(g)), map_(n_, -1), used_(n_, false),
          mapped_targets_(n_ == 0 ? 1 : n_) {
        // shared integer ids for the refinement signatures of both graphs
        std::vector<std::vector<int>> sg = vertex_signatures(g);
        std::vector<std::vector<int>> sh = vertex_signatures(h);
        std::vector<std::vector<int>> all = sg;
        all.insert(all.end(), sh.begin(), sh.end());
        std::sort(all.begin(), all.end());
        all.erase(std::unique(all.begin(), all.end()), all.end());
        auto id_of = [&](const std::vector<int>& s) {
            return int(std::lower_bound(all.begin(), all.end(), s) - all.begin());
        };
        sig_g_.resize(n_);
        sig_h_.resize(h.n());
        for (int v = 0; v < n_; ++v) sig_g_[v] = id_of(sg[v]);
        for (int v = 0; v < h.n(); ++v) sig_h_[v] = id_of(sh[v]);

        anchor_.assign(n_, -1);
        std::vector<int> pos(n_, -1);
        for (int i = 0; i < n_; ++i) pos[order_[i]] = i;
        for (int i = 0; i < n_; ++i) {
            int v = order_[i];
            g_.neighbors(v).for_each([&](int w) {
                if (pos[w] < i && (anchor_[v] == -1 || pos[w] < pos[anchor_[v]])) anchor_[v] = w;
            });
        }
    }

    uint64_t run() {
        count_ = 0;
        if (n_ == 0) return 1;
        req_by_depth_.assign(n_, {});
        cand_by_depth_.assign(n_, {});
        extend(0);
        return count_;
    }

private:
    void extend(int depth) {
        if (depth == n_) {
            ++count_;
            return;
        }
        int v = order_[depth];
        // Image must agree with every already-mapped vertex on (non-)adjacency:
        // w needs exactly the images of v's mapped neighbors among its own
        // mapped neighbors, no more, no fewer.
        std::vector<int>& req = req_by_depth_[depth];
        req.clear();
        g_.neighbors(v).for_each([&](int u) {
            if (map_[u] >= 0) req.push_back(map_[u]);
        });
        auto try_candidate = [&](int w) {
            if (used_[w] || sig_g_[v] != sig_h_[w]) return;
            const Bitset& nb = h_.neighbors(w);
            if (and_count(nb, mapped_targets_) != int(req.size())) return;
            for (int t : req)
                if (!nb.test(t)) return;
            map_[v] = w;
            used_[w] = true;
            mapped_targets_.set(w);
            extend(depth + 1);
            mapped_targets_.reset(w);
            used_[w] = false;
            map_[v] = -1;
        };
        if (anchor_[v] >= 0) {
            // any valid image is adjacent to the anchor's image
            std::vector<int>& candidates = cand_by_depth_[depth];
            candidates.clear();
            h_.neighbors(map_[anchor_[v]]).for_each([&](int w) { candidates.push_back(w); });
            for (int w : candidates) {
                if (count_ && stop_at_first_) break;
                try_candidate(w);
            }
        } else {
            for (int w = 0; w < h_.n() && !(count_ && stop_at_first_); ++w) try_candidate(w);
        }
    }

    const Graph& g_;
    const Graph& h_;
    bool stop_at_first_;
    int n_;
    std::vector<int> sig_g_, sig_h_;
    std::vector<int> order_;
    std::vector<int> anchor_; // earliest-ordered neighbor, -1 for component roots
    std::vector<int> map_;
    std::vector<bool> used_;
    Bitset mapped_targets_;
    std::vector<std::vector<int>> req_by_depth_;
    std::vector<std::vector<int>> cand_by_depth_;
    uint64_t count_ = 0;
};

inline std::vector<int> sorted_degrees(const Graph& g) {
    std::vector<int> d(g.n());
    for (int v = 0; v < g.n(); ++v) d[v] = g.degree(v);
    std::sort(d.begin(), d.end());
    return d;
}

} // namespace detail

// Exact |Aut(G)| by exhaustive backtracking over degree-compatible mappings.
inline uint64_t automorphism_count(const Graph& g, int exhaustive_limit = 9) {
    if (g.n() > exhaustive_limit)
        throw size_error("automorphism_count: n = " + std::to_string(g.n()) +
                         " exceeds the exhaustive limit " + std::to_string(exhaustive_limit));
    return detail::IsoMapper(g, g, false).run();
}

inline bool are_isomorphic(const Graph& g, const Graph& h, int exhaustive_limit = 9) {
    if (g.n() > exhaustive_limit || h.n() > exhaustive_limit)
        throw size_error("are_isomorphic: order exceeds the exhaustive limit " +
                         std::to_string(exhaustive_limit));
    if (g.n() != h.n() || g.edge_count() != h.edge_count()) return false;
    if (detail::sorted_degrees(g) != detail::sorted_degrees(h)) return false;
    auto sg = detail::vertex_signatures(g);
    auto sh = detail::vertex_signatures(h);
    std::sort(sg.begin(), sg.end());
    std::sort(sh.begin(), sh.end());
    if (sg != sh) return false;
    return detail::IsoMapper(g, h, true).run() > 0;
}

// Number of labeled graphs isomorphic to some member of `graphs`
// (all of equal order n): sum of n!/aut(G).
inline mpz_class count_labeled(const std::vector<Graph>& graphs, int exhaustive_limit = 9) {
    if (graphs.empty()) return 0;
    int n = graphs[0].n();
    for (const Graph& g : graphs)
        if (g.n() != n) throw input_error("count_labeled: graphs of unequal order");
    if (n > exhaustive_limit)
        throw size_error("count_labeled: n exceeds the exhaustive limit");
    if (graphs.size() <= 20) {
        for (size_t i = 0; i < graphs.size(); ++i)
            for (size_t j = i + 1; j < graphs.size(); ++j)
                if (are_isomorphic(graphs[i], graphs[j], exhaustive_limit))
                    throw input_error("count_labeled: graphs " + std::to_string(i) + " and " +
                                      std::to_string(j) + " are isomorphic");
    }
    mpz_class factorial;
    mpz_fac_ui(factorial.get_mpz_t(), n);
    mpz_class total = 0;
    for (const Graph& g : graphs)
        total += factorial / mpz_class(automorphism_count(g, exhaustive_limit));
    return total;
}

} // namespace adjlab
