#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "adjlab/bitset.hpp"
#include "adjlab/errors.hpp"
#include "adjlab/graph.hpp"
#include "adjlab/rng.hpp"

namespace adjlab {

// Ground set 0..ground_size-1 plus an ordered list of subsets. Duplicate sets
// are kept (multiset semantics, identified by index); the optional per-set
// multiplicities cover the weighted multisets of the packing machinery.
struct SetSystem {
    int ground_size = 0;
    std::vector<Bitset> sets;
    std::vector<uint64_t> multiplicities; // parallel to sets, all >= 1

    SetSystem() = default;
    SetSystem(int ground, std::vector<Bitset> s)
        : ground_size(ground), sets(std::move(s)), multiplicities(sets.size(), 1) {
        for (const Bitset& b : sets)
            if (b.size() != ground) throw input_error("set width differs from ground size");
    }

    int num_sets() const { return int(sets.size()); }

    mpz_class total_multiplicity() const {
        mpz_class t = 0;
        for (uint64_t m : multiplicities) t += mpz_class(m);
        return t;
    }

    // Indices of the distinct sets, first occurrence wins, in list order.
    std::vector<int> distinct_indices() const {
        std::vector<int> reps;
        std::map<Bitset, int> seen;
        for (int i = 0; i < num_sets(); ++i)
            if (seen.emplace(sets[i], i).second) reps.push_back(i);
        return reps;
    }
};

inline SetSystem make_set_system(int ground, const std::vector<std::vector<int>>& members) {
    std::vector<Bitset> sets;
    sets.reserve(members.size());
    for (const auto& m : members) {
        Bitset b(ground);
        for (int x : m) {
            if (x < 0 || x >= ground)
                throw input_error("element " + std::to_string(x) + " outside the ground set");
            b.set(x);
        }
        sets.push_back(std::move(b));
    }
    return SetSystem(ground, std::move(sets));
}

// One set per vertex, in vertex order: set v = N_G(v). Duplicates retained.
inline SetSystem neighborhood_system(const Graph& g) {
    std::vector<Bitset> sets;
    sets.reserve(g.n());
    for (int v = 0; v < g.n(); ++v) sets.push_back(g.neighbors(v));
    return SetSystem(g.n(), std::move(sets));
}

// Transpose of the incidence matrix. Sets with multiplicity > 1 become that
// many ground elements of the dual (a multiset member is one column each).
inline SetSystem dual_system(const SetSystem& s) {
    mpz_class total = s.total_multiplicity();
    if (total > 1 << 22) throw size_error("dual_system: expanded multiset too large");
    int cols = int(total.get_ui());
    std::vector<Bitset> dual_sets(s.ground_size, Bitset(cols));
    int col = 0;
    for (int i = 0; i < s.num_sets(); ++i)
        for (uint64_t c = 0; c < s.multiplicities[i]; ++c, ++col)
            s.sets[i].for_each([&](int x) { dual_sets[x].set(col); });
    return SetSystem(cols, std::move(dual_sets));
}

namespace detail {

// Distinct traces {S ∩ A} for |A| <= 64, with A given as element positions.
// Returns the count; the trace of set i is its membership mask over A.
inline int distinct_trace_count(const SetSystem& s, const std::vector<int>& a,
                                std::vector<uint64_t>& scratch) {
    scratch.clear();
    for (const Bitset& set : s.sets) {
        uint64_t mask = 0;
        for (size_t j = 0; j < a.size(); ++j)
            if (set.test(a[j])) mask |= uint64_t(1) << j;
        scratch.push_back(mask);
    }
    std::sort(scratch.begin(), scratch.end());
    scratch.erase(std::unique(scratch.begin(), scratch.end()), scratch.end());
    return int(scratch.size());
}

// C(n, k) saturating at cap+1.
inline long long binomial_capped(long long n, long long k, long long cap) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    long long r = 1;
    for (long long i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > cap) return cap + 1;
    }
    return r;
}

// Enumerates all k-subsets of 0..n-1, calling f with each (as positions).
template <typename F>
void for_each_subset(int n, int k, F&& f) {
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    if (k > n) return;
    while (true) {
        f(idx);
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

} // namespace detail

inline bool is_shattered(const SetSystem& s, const std::vector<int>& a) {
    if (int(a.size()) > 30) throw size_error("is_shattered: |A| > 30");
    for (int x : a)
        if (x < 0 || x >= s.ground_size)
            throw input_error("element " + std::to_string(x) + " outside the ground set");
    if (a.empty()) return true;
    uint64_t want = uint64_t(1) << a.size();
    if (uint64_t(s.num_sets()) < want) return false;
    std::vector<uint64_t> scratch;
    return uint64_t(detail::distinct_trace_count(s, a, scratch)) == want;
}

// Largest |A| with A shattered. The search stops at floor(log2(#distinct
// sets)): shattering |A| = m needs 2^m distinct traces, hence 2^m distinct
// sets in the family.
inline int vc_dimension(const SetSystem& s, int ground_limit = 24) {
    if (s.ground_size > ground_limit)
        throw size_error("vc_dimension: ground size " + std::to_string(s.ground_size) +
                         " exceeds the exhaustive limit " + std::to_string(ground_limit));
    if (s.num_sets() == 0) return 0;
    int ndistinct = int(s.distinct_indices().size());
    int cutoff = 0;
    while ((1LL << (cutoff + 1)) <= ndistinct) ++cutoff;
    cutoff = std::min(cutoff, s.ground_size);
    int d = 0;
    std::vector<uint64_t> scratch;
    for (int m = 1; m <= cutoff; ++m) {
        bool found = false;
        detail::for_each_subset(s.ground_size, m, [&](const std::vector<int>& a) {
            if (!found && detail::distinct_trace_count(s, a, scratch) == (1 << m)) found = true;
        });
        if (!found) break;
        d = m;
    }
    return d;
}

// Exact primal shatter function pi(m): max distinct traces over all m-subsets.
inline long long primal_shatter(const SetSystem& s, int m, long long budget = 10'000'000) {
    if (m < 0 || m > s.ground_size)
        throw input_error("primal_shatter: m outside [0, ground size]");
    if (m == 0) return 1;
    long long combos = detail::binomial_capped(s.ground_size, m, budget);
    if (combos > budget)
        throw size_error("primal_shatter: C(" + std::to_string(s.ground_size) + "," +
                         std::to_string(m) + ") exceeds the enumeration budget " +
                         std::to_string(budget) + "; use sampled_shatter_lower_bound");
    long long best = 0;
    if (m <= 64) {
        std::vector<uint64_t> scratch;
        detail::for_each_subset(s.ground_size, m, [&](const std::vector<int>& a) {
            best = std::max<long long>(best, detail::distinct_trace_count(s, a, scratch));
        });
    } else {
        // Wide subsets only arise with tiny combination counts; traces are
        // compared as full bitsets.
        detail::for_each_subset(s.ground_size, m, [&](const std::vector<int>& a) {
            Bitset mask(s.ground_size);
            for (int x : a) mask.set(x);
            std::vector<Bitset> traces;
            for (const Bitset& set : s.sets) {
                Bitset t = set;
                t &= mask;
                traces.push_back(std::move(t));
            }
            std::sort(traces.begin(), traces.end());
            traces.erase(std::unique(traces.begin(), traces.end()), traces.end());
            best = std::max<long long>(best, (long long)traces.size());
        });
    }
    return best;
}

inline long long dual_shatter(const SetSystem& s, int m, long long budget = 10'000'000) {
    return primal_shatter(dual_system(s), m, budget);
}

// Seeded sampling variant; a lower bound on pi(m) by construction.
inline long long sampled_shatter_lower_bound(const SetSystem& s, int m, int trials,
                                             uint64_t seed) {
    if (m < 0 || m > s.ground_size)
        throw input_error("sampled_shatter_lower_bound: m outside [0, ground size]");
    if (m == 0) return 1;
    SplitMix64 rng(seed);
    long long best = 0;
    std::vector<uint64_t> scratch;
    for (int t = 0; t < trials; ++t) {
        std::vector<int> a = rng.sample(s.ground_size, m);
        best = std::max<long long>(best, detail::distinct_trace_count(s, a, scratch));
    }
    return best;
}

inline long long neighborhood_complexity(const Graph& g, int m, long long budget = 10'000'000) {
    return primal_shatter(neighborhood_system(g), m, budget);
}

// Exact shatter-function values for a prefix of m. pi is non-decreasing and
// capped by min(2^m, #distinct sets); exact_up_to marks how far the budget
// allowed exact computation.
struct ShatterProfile {
    std::vector<long long> values; // values[m] for m = 0..exact_up_to
    int exact_up_to = 0;

    long long at(int m) const { return values.at(size_t(m)); }
};

inline ShatterProfile shatter_profile(const SetSystem& s, int max_m,
                                      long long budget = 10'000'000) {
    ShatterProfile p;
    p.values = {1};
    for (int m = 1; m <= max_m; ++m) {
        if (detail::binomial_capped(s.ground_size, m, budget) > budget) break;
        p.values.push_back(primal_shatter(s, m, budget));
        p.exact_up_to = m;
    }
    return p;
}

// pi(m) for every m in [0, max_m], or nothing if some m busts the budget.
inline std::optional<std::vector<long long>> full_shatter_profile(const SetSystem& s, int max_m,
                                                                  long long budget = 10'000'000) {
    ShatterProfile p = shatter_profile(s, max_m, budget);
    if (p.exact_up_to < max_m) return std::nullopt;
    return p.values;
}

inline int min_pairwise_separation(const SetSystem& s, const std::vector<int>& indices) {
    if (indices.size() < 2) throw input_error("min_pairwise_separation: fewer than 2 indices");
    for (int i : indices)
        if (i < 0 || i >= s.num_sets())
            throw input_error("set index " + std::to_string(i) + " out of range");
    int best = s.ground_size + 1;
    for (size_t i = 0; i < indices.size(); ++i)
        for (size_t j = i + 1; j < indices.size(); ++j)
            best = std::min(best, xor_count(s.sets[indices[i]], s.sets[indices[j]]));
    return best;
}

// Unit distance graph on the distinct sets: adjacent iff |S Δ S'| = 1.
struct UnitDistanceGraph {
    Graph graph;
    std::vector<int> representatives; // vertex -> index of the set it stands for
};

inline UnitDistanceGraph unit_distance_graph(const SetSystem& s) {
    std::vector<int> reps = s.distinct_indices();
    Graph g(int(reps.size()));
    for (size_t i = 0; i < reps.size(); ++i)
        for (size_t j = i + 1; j < reps.size(); ++j)
            if (xor_count(s.sets[reps[i]], s.sets[reps[j]]) == 1) g.add_edge(int(i), int(j));
    return {std::move(g), std::move(reps)};
}

// Maximal delta-separated sub-family, greedily built in seeded random order.
// Returns the kept indices, ascending.
inline std::vector<int> greedy_delta_packing(const SetSystem& s, int delta, uint64_t seed) {
    if (delta < 1) throw input_error("greedy_delta_packing: delta must be >= 1");
    std::vector<int> order(s.num_sets());
    for (int i = 0; i < s.num_sets(); ++i) order[i] = i;
    SplitMix64 rng(seed);
    rng.shuffle(order);
    std::vector<int> kept;
    for (int i : order) {
        bool ok = true;
        for (int j : kept)
            if (xor_count(s.sets[i], s.sets[j]) < delta) {
                ok = false;
                break;
            }
        if (ok) kept.push_back(i);
    }
    std::sort(kept.begin(), kept.end());
    return kept;
}

// Packing bound: a delta-separated P satisfies |P| <= 2*pi(ceil(4dn/delta)).
struct PackingReport {
    long long lhs = 0;
    long long rhs = 0;
    int shatter_arg = 0;
    bool holds = false;
};

inline PackingReport verify_packing_bound(const SetSystem& s, const std::vector<int>& packing,
                                          int d, int delta, long long budget = 10'000'000) {
    if (delta < 1 || delta > s.ground_size)
        throw input_error("verify_packing_bound: delta outside [1, n]");
    if (d < 0) throw input_error("verify_packing_bound: negative VC dimension");
    for (size_t i = 0; i < packing.size(); ++i)
        for (size_t j = i + 1; j < packing.size(); ++j)
            if (xor_count(s.sets[packing[i]], s.sets[packing[j]]) < delta)
                throw input_error("packing is not " + std::to_string(delta) +
                                  "-separated: witness sets " + std::to_string(packing[i]) +
                                  " and " + std::to_string(packing[j]));
    long long arg = (4LL * d * s.ground_size + delta - 1) / delta; // ceil
    int m = int(std::min<long long>(s.ground_size, arg));
    PackingReport r;
    r.lhs = (long long)packing.size();
    r.shatter_arg = m;
    r.rhs = 2 * primal_shatter(s, m, budget);
    r.holds = r.lhs <= r.rhs;
    return r;
}

} // namespace adjlab
