#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>
#include <mpfr.h>

#include "adjlab/errors.hpp"
#include "adjlab/rng.hpp"
#include "adjlab/set_system.hpp"

namespace adjlab {

// Multiset of 2-element subsets of 0..ground_size-1; doubles as the edge
// container for spanning trees and paths.
struct EdgePairList {
    int ground_size = 0;
    std::vector<std::pair<int, int>> pairs;
};

// Exactly one endpoint of {x,y} belongs to s.
inline bool crosses(const Bitset& s, int x, int y) {
    if (x == y) throw input_error("crosses: pair endpoints coincide");
    if (x < 0 || x >= s.size() || y < 0 || y >= s.size())
        throw input_error("crosses: endpoint outside the ground set");
    return s.test(x) != s.test(y);
}

struct CrossingProfile {
    std::vector<long long> per_set; // one entry per listed set (copies separate)
    long long max = 0;
};

inline CrossingProfile crossing_number(const EdgePairList& f, const SetSystem& s) {
    CrossingProfile p;
    p.per_set.assign(s.num_sets(), 0);
    for (auto [x, y] : f.pairs)
        for (int i = 0; i < s.num_sets(); ++i)
            if (crosses(s.sets[i], x, y)) ++p.per_set[i];
    for (long long c : p.per_set) p.max = std::max(p.max, c);
    return p;
}

// Pair from `active` minimizing the multiplicity-weighted number of crossing
// sets; ties go to the lexicographically first (min endpoint, max endpoint).
inline std::pair<int, int> min_crossing_pair(const SetSystem& q, const std::vector<int>& active) {
    std::vector<int> pts = active;
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() < 2) throw input_error("min_crossing_pair: fewer than 2 active points");
    for (int v : pts)
        if (v < 0 || v >= q.ground_size)
            throw input_error("min_crossing_pair: point " + std::to_string(v) + " out of range");
    std::pair<int, int> best{-1, -1};
    mpz_class best_cost;
    for (size_t i = 0; i < pts.size(); ++i)
        for (size_t j = i + 1; j < pts.size(); ++j) {
            mpz_class cost = 0;
            for (int k = 0; k < q.num_sets(); ++k)
                if (q.sets[k].test(pts[i]) != q.sets[k].test(pts[j]))
                    cost += mpz_class(q.multiplicities[k]);
            if (best.first < 0 || cost < best_cost) {
                best = {pts[i], pts[j]};
                best_cost = cost;
            }
        }
    return best;
}

namespace detail {

// Exact three-way comparison of sum_e a[e]*2^e vs sum_e b[e]*2^e where every
// count is in [0, limit]. Works top-down; once the scaled difference exceeds
// what lower exponents can compensate (< limit*2^e), the sign is decided.
inline int compare_pow2_sums(const std::vector<long long>& a, int a_top,
                             const std::vector<long long>& b, int b_top, long long limit) {
    long long diff = 0;
    for (int e = std::max(a_top, b_top); e >= 0; --e) {
        long long ae = e <= a_top ? a[e] : 0;
        long long be = e <= b_top ? b[e] : 0;
        diff = diff * 2 + (ae - be);
        if (diff > limit) return 1;
        if (diff < -limit) return -1;
    }
    return diff > 0 ? 1 : diff < 0 ? -1 : 0;
}

} // namespace detail

struct BuildOptions {
    int exhaustive_pair_limit = 128; // largest n for full pair scans per step
    long long sample_pairs = 0;      // >0: evaluate this many seeded candidate pairs instead
    uint64_t seed = 0;
};

// Per-set crossing counters of the weight-doubling build; the weight of set i
// is mult_i * 2^exponents[i], kept implicit so arithmetic stays exact.
struct WeightState {
    std::vector<int> exponents;

    explicit WeightState(int num_sets) : exponents(num_sets, 0) {}

    int min_exponent() const { return *std::min_element(exponents.begin(), exponents.end()); }

    mpz_class total_weight(const SetSystem& s) const {
        mpz_class total = 0, term;
        for (size_t i = 0; i < exponents.size(); ++i) {
            term = s.multiplicities[i];
            term <<= exponents[i];
            total += term;
        }
        return total;
    }
};

// Certificate of one weight-doubling build (the spanning-tree construction):
// the crossing number of the produced tree never exceeds log2 of the final
// total weight sum_S mult(S)*2^{k(S)}.
struct TreeCertificate {
    EdgePairList edges;
    std::vector<int> set_crossings;   // k(S) per listed set
    int crossing = 0;                 // max over sets
    mpz_class total_weight;
    double log_weight_bound = 0;      // log2(total_weight)
    bool certificate_ok = false;      // 2^crossing <= total_weight, exact
    bool weight_recompute_ok = false; // incremental weight == final recompute
    bool bookkeeping_ok = false;      // k(S) matches crossing_number(edges)
};

inline double log2_mpz(const mpz_class& w) {
    signed long exp;
    double m = mpz_get_d_2exp(&exp, w.get_mpz_t());
    return std::log2(m) + double(exp);
}

// Builds a spanning tree edge by edge: each step picks, among pairs of still
// active points, one crossed by minimum total weight, where the weight of a
// set doubles every time a selected edge crosses it. Weights live as
// exponents; pair costs are compared exactly via per-exponent counts after a
// common shift by the minimum exponent (the argmin is scale-invariant).
inline TreeCertificate build_low_crossing_tree(const SetSystem& s,
                                               const BuildOptions& opts = {}) {
    int n = s.ground_size;
    if (n < 1) throw input_error("build_low_crossing_tree: empty ground set");
    if (s.num_sets() < 1) throw input_error("build_low_crossing_tree: empty set family");
    if (n > opts.exhaustive_pair_limit && opts.sample_pairs <= 0)
        throw size_error("build_low_crossing_tree: n = " + std::to_string(n) +
                         " exceeds the exhaustive pair-scan limit " +
                         std::to_string(opts.exhaustive_pair_limit) +
                         "; enable pair sampling");
    mpz_class total_mult = s.total_multiplicity();
    if (total_mult > mpz_class(1) << 50)
        throw size_error("build_low_crossing_tree: total multiplicity too large");
    const long long limit = total_mult.get_si() + 1;

    int num_sets = s.num_sets();
    // Incidence transpose: which sets contain each point.
    std::vector<Bitset> rows(n, Bitset(num_sets));
    for (int i = 0; i < num_sets; ++i)
        s.sets[i].for_each([&](int v) { rows[v].set(i); });

    WeightState ws(num_sets);
    std::vector<int>& k = ws.exponents;
    std::vector<int> active(n);
    for (int v = 0; v < n; ++v) active[v] = v;

    TreeCertificate cert;
    cert.edges.ground_size = n;
    cert.total_weight = total_mult; // w_0 = sum of multiplicities (all weights 1)

    SplitMix64 rng(opts.seed);
    std::vector<long long> cand(n + 1, 0), best(n + 1, 0);
    std::vector<int> cand_touched, best_touched;
    std::vector<int> crossing_scratch;

    // Cost of pair (u,v) in shifted exponents; fills cand/cand_touched.
    auto eval_pair = [&](int u, int v, int kmin, int& emax) {
        emax = -1;
        crossing_scratch.clear();
        const auto& wu = rows[u].words();
        const auto& wv = rows[v].words();
        for (size_t wi = 0; wi < wu.size(); ++wi) {
            uint64_t x = wu[wi] ^ wv[wi];
            while (x) {
                int i = int(wi * 64) + std::countr_zero(x);
                x &= x - 1;
                int e = k[i] - kmin;
                if (cand[e] == 0) cand_touched.push_back(e);
                cand[e] += (long long)s.multiplicities[i];
                emax = std::max(emax, e);
                crossing_scratch.push_back(i);
            }
        }
    };
    auto clear_counts = [](std::vector<long long>& c, std::vector<int>& touched) {
        for (int e : touched) c[e] = 0;
        touched.clear();
    };

    std::vector<std::pair<int, int>> sampled;
    for (int step = 0; step + 1 < n; ++step) {
        int kmin = ws.min_exponent();
        int best_u = -1, best_v = -1, best_top = -1;
        std::vector<int> best_sets;

        auto consider = [&](int u, int v) {
            int top;
            eval_pair(u, v, kmin, top);
            bool better;
            if (best_u < 0) {
                better = true;
            } else {
                better = detail::compare_pow2_sums(cand, top, best, best_top, limit) < 0;
            }
            if (better) {
                clear_counts(best, best_touched);
                best.swap(cand);
                best_touched.swap(cand_touched);
                best_top = top;
                best_u = u;
                best_v = v;
                best_sets = crossing_scratch;
            } else {
                clear_counts(cand, cand_touched);
            }
        };

        if (opts.sample_pairs > 0) {
            sampled.clear();
            size_t a = active.size();
            for (long long t = 0; t < opts.sample_pairs; ++t) {
                size_t i = size_t(rng.bounded(a));
                size_t j = size_t(rng.bounded(a - 1));
                if (j >= i) ++j;
                int u = active[std::min(i, j)], v = active[std::max(i, j)];
                sampled.emplace_back(u, v);
            }
            std::sort(sampled.begin(), sampled.end());
            sampled.erase(std::unique(sampled.begin(), sampled.end()), sampled.end());
            for (auto [u, v] : sampled) consider(u, v);
        } else {
            for (size_t i = 0; i < active.size(); ++i)
                for (size_t j = i + 1; j < active.size(); ++j)
                    consider(active[i], active[j]);
        }

        // Doubling the crossed weights adds the pair cost to the total.
        mpz_class increment = 0;
        mpz_class term;
        for (int i : best_sets) {
            term = s.multiplicities[i];
            term <<= k[i];
            increment += term;
        }
        cert.total_weight += increment;
        for (int i : best_sets) ++k[i];
        cert.edges.pairs.emplace_back(best_u, best_v);
        active.erase(std::find(active.begin(), active.end(), best_u)); // smaller endpoint leaves
        clear_counts(best, best_touched);
    }

    cert.set_crossings = k;
    cert.crossing = k.empty() ? 0 : *std::max_element(k.begin(), k.end());
    cert.weight_recompute_ok = ws.total_weight(s) == cert.total_weight;
    cert.log_weight_bound = log2_mpz(cert.total_weight);
    cert.certificate_ok = (mpz_class(1) << cert.crossing) <= cert.total_weight;
    CrossingProfile check = crossing_number(cert.edges, s);
    cert.bookkeeping_ok = check.max == cert.crossing &&
                          std::equal(check.per_set.begin(), check.per_set.end(),
                                     cert.set_crossings.begin(),
                                     [](long long a, int b) { return a == b; });
    return cert;
}

// DFS discovery order of the tree (root 0 unless given, children ascending),
// shortcut into a Hamiltonian path. Claim: per-set crossing at most doubles.
inline EdgePairList tree_to_path(const EdgePairList& tree, int root = 0) {
    int n = tree.ground_size;
    if (n == 0) return {0, {}};
    if (root < 0 || root >= n) throw input_error("tree_to_path: root out of range");
    if (int(tree.pairs.size()) != n - 1)
        throw input_error("tree_to_path: not a spanning tree: " +
                          std::to_string(tree.pairs.size()) + " edges, expected " +
                          std::to_string(n - 1));
    std::vector<std::vector<int>> adj(n);
    for (auto [x, y] : tree.pairs) {
        if (x == y || x < 0 || x >= n || y < 0 || y >= n)
            throw input_error("tree_to_path: invalid edge");
        adj[x].push_back(y);
        adj[y].push_back(x);
    }
    for (auto& a : adj) std::sort(a.begin(), a.end());
    std::vector<int> discovery;
    std::vector<bool> seen(n, false);
    std::vector<int> stack{root};
    seen[root] = true;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        discovery.push_back(v);
        for (auto it = adj[v].rbegin(); it != adj[v].rend(); ++it)
            if (!seen[*it]) {
                seen[*it] = true;
                stack.push_back(*it);
            }
    }
    if (int(discovery.size()) != n) {
        int witness = 0;
        while (seen[witness]) ++witness;
        throw input_error("tree_to_path: not a spanning tree: vertex " +
                          std::to_string(witness) +
                          " unreachable from the root (cycle or disconnection)");
    }
    EdgePairList path{n, {}};
    for (int i = 0; i + 1 < n; ++i) path.pairs.emplace_back(discovery[i], discovery[i + 1]);
    return path;
}

struct PathCertificate {
    EdgePairList path;
    TreeCertificate tree;
    std::vector<long long> path_crossings; // per listed set
    long long path_crossing = 0;
    bool factor2_ok = false; // per-set: path crossing <= 2 * tree crossing
};

inline PathCertificate build_low_crossing_path(const SetSystem& s,
                                               const BuildOptions& opts = {}) {
    PathCertificate out;
    out.tree = build_low_crossing_tree(s, opts);
    out.path = tree_to_path(out.tree.edges, 0);
    CrossingProfile p = crossing_number(out.path, s);
    out.path_crossings = p.per_set;
    out.path_crossing = p.max;
    out.factor2_ok = true;
    for (int i = 0; i < s.num_sets(); ++i)
        if (out.path_crossings[i] > 2LL * out.tree.set_crossings[i]) out.factor2_ok = false;
    return out;
}

// Brute-force optimum over all Hamiltonian vertex orders (reversals skipped).
struct OptimalPathResult {
    long long crossing = 0;
    EdgePairList path;
};

inline OptimalPathResult optimal_path_crossing(const SetSystem& s, int exhaustive_limit = 8) {
    int n = s.ground_size;
    if (n > exhaustive_limit)
        throw size_error("optimal_path_crossing: n = " + std::to_string(n) +
                         " exceeds the exhaustive limit " + std::to_string(exhaustive_limit));
    if (n < 1) throw input_error("optimal_path_crossing: empty ground set");
    OptimalPathResult best;
    if (n == 1) {
        best.path.ground_size = 1;
        return best;
    }
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    long long best_val = -1;
    std::vector<long long> counts(s.num_sets());
    do {
        if (perm.front() > perm.back()) continue; // a path equals its reversal
        std::fill(counts.begin(), counts.end(), 0);
        long long worst = 0;
        for (int i = 0; i + 1 < n && (best_val < 0 || worst < best_val); ++i)
            for (int j = 0; j < s.num_sets(); ++j)
                if (s.sets[j].test(perm[i]) != s.sets[j].test(perm[i + 1]))
                    worst = std::max(worst, ++counts[j]);
        if (best_val < 0 || worst < best_val) {
            best_val = worst;
            best.path.ground_size = n;
            best.path.pairs.clear();
            for (int i = 0; i + 1 < n; ++i) best.path.pairs.emplace_back(perm[i], perm[i + 1]);
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    best.crossing = best_val;
    return best;
}

// ---------------------------------------------------------------------------
// Short-edge bound verification

struct ShortEdgeReport {
    std::pair<int, int> pair{-1, -1};
    mpz_class min_weight;  // total multiplicity crossing the chosen pair
    mpq_class bound;       // 5 d |Q| / f^{-1}(n/2)
    bool holds = false;
};

inline ShortEdgeReport verify_short_edge_bound(const SetSystem& q, int d,
                                               const mpq_class& f_inverse_at_half_n) {
    if (q.ground_size < 2) throw input_error("verify_short_edge_bound: need |X| >= 2");
    if (f_inverse_at_half_n <= 0)
        throw input_error("verify_short_edge_bound: non-positive f-inverse value");
    std::vector<int> all(q.ground_size);
    for (int i = 0; i < q.ground_size; ++i) all[i] = i;
    ShortEdgeReport r;
    r.pair = min_crossing_pair(q, all);
    r.min_weight = 0;
    for (int i = 0; i < q.num_sets(); ++i)
        if (q.sets[i].test(r.pair.first) != q.sets[i].test(r.pair.second))
            r.min_weight += mpz_class(q.multiplicities[i]);
    r.bound = mpq_class(mpz_class(5 * mpz_class(d) * q.total_multiplicity())) / f_inverse_at_half_n;
    r.holds = mpq_class(r.min_weight) <= r.bound;
    return r;
}

// ---------------------------------------------------------------------------
// Empirical dual-shatter envelope and the path crossing bound

// The integer profile pi*(m) extended by the right-continuous step function
// and inverted by the min-inverse. Relaxing "strictly increasing" to
// non-decreasing is sound here: the proof chain only ever evaluates the
// envelope at integers and only needs pi*(arg) >= value implications.
struct ShatterEnvelope {
    std::vector<long long> values; // values[m] = pi*(m), m = 0..n

    int max_m() const { return int(values.size()) - 1; }

    // min{m in [1, max] : pi*(m) >= y}; empty when even pi*(max) < y.
    std::optional<int> inverse(const mpq_class& y) const {
        for (int m = 1; m <= max_m(); ++m)
            if (mpq_class(long(values[m])) >= y) return m;
        return std::nullopt;
    }
};

// sum_{j=1}^{n} 1/finv(j/2). A step whose inverse is undefined has two active
// points sitting in exactly the same sets, so a zero-cost pair exists and the
// step contributes nothing; such terms are dropped.
inline mpq_class envelope_inverse_sum(const ShatterEnvelope& env, int n) {
    mpq_class sum = 0;
    for (int j = 1; j <= n; ++j) {
        auto m = env.inverse(mpq_class(j, 2));
        if (m) sum += mpq_class(1, *m);
    }
    return sum;
}

namespace detail {

// Decides t <= 2*log2(nsets) exactly. Rational vs (possibly irrational) log:
// powers of two compare in exact arithmetic, everything else via MPFR with
// directed rounding at increasing precision (equality is impossible there).
inline bool leq_two_log2(const mpq_class& t, long long nsets) {
    if (nsets < 1) throw input_error("leq_two_log2: empty family");
    if (t <= 0) return true;
    if ((nsets & (nsets - 1)) == 0) {
        int e = 0;
        while ((1LL << (e + 1)) <= nsets) ++e;
        return t <= mpq_class(2 * e);
    }
    for (mpfr_prec_t prec = 128; prec <= 4096; prec *= 2) {
        mpfr_t lo, hi, tlo, thi;
        mpfr_inits2(prec, lo, hi, tlo, thi, (mpfr_ptr) nullptr);
        mpfr_set_si(lo, nsets, MPFR_RNDD);
        mpfr_log2(lo, lo, MPFR_RNDD);
        mpfr_mul_ui(lo, lo, 2, MPFR_RNDD);
        mpfr_set_si(hi, nsets, MPFR_RNDU);
        mpfr_log2(hi, hi, MPFR_RNDU);
        mpfr_mul_ui(hi, hi, 2, MPFR_RNDU);
        mpfr_set_q(tlo, t.get_mpq_t(), MPFR_RNDD);
        mpfr_set_q(thi, t.get_mpq_t(), MPFR_RNDU);
        bool decided = false, result = false;
        if (mpfr_cmp(thi, lo) <= 0) {
            decided = true;
            result = true;
        } else if (mpfr_cmp(tlo, hi) > 0) {
            decided = true;
            result = false;
        }
        mpfr_clears(lo, hi, tlo, thi, (mpfr_ptr) nullptr);
        if (decided) return result;
    }
    throw std::logic_error("leq_two_log2: undecided at maximum precision");
}

} // namespace detail

struct PathBoundReport {
    int d = 0;
    mpq_class inverse_sum;  // sum_j 1/finv(j/2)
    mpq_class linear_part;  // 10 d * inverse_sum
    double rhs_approx = 0;  // 2 log2 |S| + linear part, for display
    bool holds = false;     // k_path <= 2 log2 |S| + 10 d sum, decided exactly
};

// The crossing bound for paths: k_P <= 2 log2|S| + 10 d sum_j 1/f^{-1}(j/2).
inline PathBoundReport check_path_crossing_bound(long long k_path, long long num_sets, int d,
                                                 const ShatterEnvelope& env, int n) {
    PathBoundReport r;
    r.d = d;
    r.inverse_sum = envelope_inverse_sum(env, n);
    r.linear_part = mpq_class(10 * d) * r.inverse_sum;
    r.rhs_approx = 2 * std::log2(double(num_sets)) + r.linear_part.get_d();
    mpq_class t = mpq_class(long(k_path)) - r.linear_part;
    r.holds = detail::leq_two_log2(t, num_sets);
    return r;
}

} // namespace adjlab
