#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "adjlab/contiguity.hpp"
#include "adjlab/crossing.hpp"
#include "adjlab/generators.hpp"
#include "adjlab/graph.hpp"
#include "adjlab/isomorphism.hpp"
#include "adjlab/labeling.hpp"
#include "adjlab/set_system.hpp"

namespace adjlab {

// ---------------------------------------------------------------------------
// Small-graph machinery: canonical codes and exhaustive class enumeration.
// canonical_code is deliberately a different algorithm from the backtracking
// isomorphism test, so the two can cross-check each other.

inline Graph apply_permutation(const Graph& g, const std::vector<int>& perm) {
    Graph h(g.n());
    for (auto [u, v] : g.edges()) h.add_edge(perm[u], perm[v]);
    return h;
}

// Minimum upper-triangle adjacency bitstring over all vertex permutations.
// Two graphs of order <= 8 are isomorphic iff their codes agree.
inline uint64_t canonical_code(const Graph& g) {
    int n = g.n();
    if (n > 8) throw size_error("canonical_code: n > 8");
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    uint64_t best = ~uint64_t(0);
    do {
        uint64_t code = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                code = code << 1 | uint64_t(g.has_edge(perm[i], perm[j]));
        best = std::min(best, code);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

// All graphs of order n up to isomorphism (n <= 7), by extending the (n-1)
// representatives with one new vertex per attachment subset and deduplicating
// on canonical codes.
inline std::vector<Graph> nonisomorphic_graphs(int n) {
    if (n > 7) throw size_error("nonisomorphic_graphs: n > 7");
    std::vector<Graph> reps{Graph(1)};
    for (int order = 2; order <= n; ++order) {
        std::map<uint64_t, Graph> next;
        for (const Graph& h : reps) {
            for (uint64_t mask = 0; mask < (uint64_t(1) << (order - 1)); ++mask) {
                Graph g(order);
                for (auto [u, v] : h.edges()) g.add_edge(u, v);
                for (int u = 0; u < order - 1; ++u)
                    if ((mask >> u) & 1) g.add_edge(u, order - 1);
                next.emplace(canonical_code(g), std::move(g));
            }
        }
        reps.clear();
        for (auto& [code, g] : next) reps.push_back(std::move(g));
    }
    if (n == 0) return {Graph(0)};
    return reps;
}

// ---------------------------------------------------------------------------
// Suite plumbing

struct SuiteResult {
    std::string name;
    long long checks = 0;
    long long failures = 0;
    std::vector<std::string> witnesses;

    void tally(bool ok, const std::string& witness) {
        ++checks;
        if (!ok) {
            ++failures;
            if (witnesses.size() < 8) witnesses.push_back(witness);
        }
    }
    bool passed() const { return failures == 0; }
};

// ---------------------------------------------------------------------------
// Seeded random set systems for the packing / short-edge suites

inline SetSystem random_set_system(SplitMix64& rng, int max_ground, int max_sets) {
    int n = 2 + int(rng.bounded(uint64_t(max_ground - 1)));
    int count = 1 + int(rng.bounded(uint64_t(std::min(max_sets, 2 * n))));
    double density = 0.15 + 0.7 * double(rng.bounded(1000)) / 1000.0;
    std::vector<Bitset> sets;
    for (int i = 0; i < count; ++i) {
        Bitset b(n);
        for (int x = 0; x < n; ++x)
            if (rng.chance(density)) b.set(x);
        sets.push_back(std::move(b));
    }
    return SetSystem(n, std::move(sets));
}

// ---------------------------------------------------------------------------
// Packing suite: the packing bound over greedy maximal packings and the
// unit-distance edge bound, both with the exact VC dimension.

inline SuiteResult suite_packing(int num_systems = 200, uint64_t seed = 20240601) {
    SuiteResult res;
    res.name = "packing";
    SplitMix64 rng(seed);
    for (int i = 0; i < num_systems; ++i) {
        SetSystem s = random_set_system(rng, 16, 32);
        int d = vc_dimension(s);
        for (int delta : {1, 2, 4}) {
            if (delta > s.ground_size) continue;
            std::vector<int> packing = greedy_delta_packing(s, delta, seed ^ uint64_t(i));
            PackingReport rep = verify_packing_bound(s, packing, d, delta);
            std::ostringstream w;
            w << "packing bound violated: system " << i << " delta " << delta << " |P| "
              << rep.lhs << " > " << rep.rhs;
            res.tally(rep.holds, w.str());
        }
        UnitDistanceGraph ud = unit_distance_graph(s);
        long long edge_bound = (long long)d * ud.graph.n();
        std::ostringstream w;
        w << "unit-distance edge bound violated: system " << i << " has "
          << ud.graph.edge_count() << " edges > d*distinct = " << edge_bound;
        res.tally(ud.graph.edge_count() <= edge_bound, w.str());
    }
    return res;
}

// Short-edge bound over random systems with exact d (>= 1; the bound
// degenerates for constant families) and the exact dual-shatter envelope.
inline SuiteResult suite_short_edge(int num_systems = 200, uint64_t seed = 20240602) {
    SuiteResult res;
    res.name = "short-edge";
    SplitMix64 rng(seed);
    int made = 0;
    while (made < num_systems) {
        SetSystem s = random_set_system(rng, 14, 16);
        int d = vc_dimension(s);
        if (d < 1) continue;
        ++made;
        SetSystem dual = dual_system(s);
        auto profile = full_shatter_profile(dual, std::min(s.ground_size, dual.ground_size));
        if (!profile) continue;
        ShatterEnvelope env{*profile};
        auto finv = env.inverse(mpq_class(s.ground_size, 2));
        if (!finv) {
            // No inverse: two ground points lie in exactly the same sets, so
            // some pair is crossed by nothing at all.
            std::vector<int> all(s.ground_size);
            std::iota(all.begin(), all.end(), 0);
            auto pair = min_crossing_pair(s, all);
            long long weight = 0;
            for (int j = 0; j < s.num_sets(); ++j)
                if (s.sets[j].test(pair.first) != s.sets[j].test(pair.second))
                    weight += (long long)s.multiplicities[j];
            res.tally(weight == 0, "twin-free system without envelope inverse, system " +
                                       std::to_string(made));
            continue;
        }
        ShortEdgeReport rep = verify_short_edge_bound(s, d, mpq_class(*finv));
        std::ostringstream w;
        w << "short-edge bound violated: system " << made << " min weight " << rep.min_weight
          << " > bound " << rep.bound;
        res.tally(rep.holds, w.str());
    }
    return res;
}

// ---------------------------------------------------------------------------
// Per-graph pipeline record: one run of the full chain with every certificate
// and bound check attached. Shared by the crossing/labels suites, the
// acceptance tests, и the CLI.

struct PipelineOptions {
    BuildOptions build;
    int vc_ground_limit = 24;
    long long envelope_budget = 400'000; // per-m subset budget for the exact pi* envelope
    int oracle_limit = 8;                // exhaustive contiguity/path oracles up to here
    bool run_oracles = false;
    bool check_roundtrip = true;
};

struct PipelineRecord {
    std::string name;
    int n = 0;
    long long edges = 0;
    // crossing pipeline
    long long k_tree = 0, k_path = 0;
    int k_ctg = 0;
    bool certificate_ok = false, weight_ok = false, bookkeeping_ok = false;
    bool factor2_ok = false, halving_ok = false;
    // labels
    int interval_max_bits = 0, interval_bound_bits = 0;
    bool interval_bound_ok = false;
    int degeneracy_d = 0, degeneracy_max_bits = 0, degeneracy_bound_bits = 0;
    bool degeneracy_bound_ok = false;
    bool roundtrip_ok = true, labels_distinct_ok = true, decode_symmetric_ok = true;
    // envelope crossing bound (exact d + full profile affordable only)
    std::optional<bool> path_bound_ok;
    std::optional<int> vc_dim;
    double path_bound_rhs = 0;
    std::optional<bool> tighter_bound_ok; // report-only 5d variant
    // oracles (n <= oracle_limit)
    std::optional<int> exact_ctg;
    std::optional<long long> optimal_k_path;
    bool oracle_ok = true;
};

inline PipelineRecord run_pipeline_checks(const std::string& name, const Graph& g,
                                          const PipelineOptions& opts = {}) {
    PipelineRecord rec;
    rec.name = name;
    rec.n = g.n();
    rec.edges = g.edge_count();

    ContiguityOptions copts;
    copts.build = opts.build;
    ContiguityReport rep = low_contiguity_ordering(g, copts);
    rec.k_tree = rep.tree_crossing();
    rec.k_path = rep.path_crossing();
    rec.k_ctg = rep.result.k;
    rec.halving_ok = rep.halving_ok;
    if (g.n() > 0) {
        rec.certificate_ok = rep.pipeline.tree.certificate_ok;
        rec.weight_ok = rep.pipeline.tree.weight_recompute_ok;
        rec.bookkeeping_ok = rep.pipeline.tree.bookkeeping_ok;
        rec.factor2_ok = rep.pipeline.factor2_ok;
    } else {
        rec.certificate_ok = rec.weight_ok = rec.bookkeeping_ok = rec.factor2_ok = true;
    }

    LabelSet interval = encode_interval_with(g, rep);
    LabelSet degen = encode_degeneracy(g);
    LabelStats ist = label_stats(interval);
    LabelStats dst = label_stats(degen);
    rec.interval_max_bits = ist.max_bits;
    rec.interval_bound_bits = ist.bound_bits;
    rec.interval_bound_ok = ist.bound_ok;
    rec.degeneracy_d = degen.degeneracy;
    rec.degeneracy_max_bits = dst.max_bits;
    rec.degeneracy_bound_bits = dst.bound_bits;
    rec.degeneracy_bound_ok = dst.bound_ok;

    if (opts.check_roundtrip) {
        for (int u = 0; u < g.n() && rec.labels_distinct_ok; ++u)
            for (int v = u + 1; v < g.n(); ++v)
                if (interval.labels[u] == interval.labels[v] ||
                    degen.labels[u] == degen.labels[v]) {
                    rec.labels_distinct_ok = false;
                    break;
                }
        for (int u = 0; u < g.n(); ++u)
            for (int v = u + 1; v < g.n(); ++v) {
                bool adj = g.has_edge(u, v);
                bool iuv = decode_interval(interval.labels[u], interval.labels[v]);
                bool ivu = decode_interval(interval.labels[v], interval.labels[u]);
                bool duv = decode_degeneracy(degen.labels[u], degen.labels[v]);
                bool dvu = decode_degeneracy(degen.labels[v], degen.labels[u]);
                if (iuv != adj || duv != adj) rec.roundtrip_ok = false;
                if (iuv != ivu || duv != dvu) rec.decode_symmetric_ok = false;
            }
    }

    if (g.n() >= 1 && g.n() <= 64 && g.n() <= opts.vc_ground_limit) {
        try {
            int d = vc_dimension(neighborhood_system(g), opts.vc_ground_limit);
            auto profile = full_shatter_profile(dual_system(neighborhood_system(g)), g.n(),
                                                opts.envelope_budget);
            if (profile) {
                rec.vc_dim = d;
                ShatterEnvelope env{*profile};
                PathBoundReport pb =
                    check_path_crossing_bound(rec.k_path, g.n(), d, env, g.n());
                rec.path_bound_ok = pb.holds;
                rec.path_bound_rhs = pb.rhs_approx;
                mpq_class tighter = mpq_class(long(rec.k_path)) - mpq_class(5 * d) * pb.inverse_sum;
                rec.tighter_bound_ok = detail::leq_two_log2(tighter, g.n());
            }
        } catch (const size_error&) {
        }
    }

    if (opts.run_oracles && g.n() >= 1 && g.n() <= opts.oracle_limit) {
        rec.exact_ctg = exact_contiguity(g, opts.oracle_limit).k;
        rec.optimal_k_path =
            optimal_path_crossing(neighborhood_system(g), opts.oracle_limit).crossing;
        rec.oracle_ok = *rec.exact_ctg <= rec.k_ctg && *rec.optimal_k_path <= rec.k_path;
    }
    return rec;
}

// ---------------------------------------------------------------------------
// The deterministic corpus driving the acceptance checks: every generator
// family at exhaustive-ish small orders plus seeded medium/large instances.

struct CorpusEntry {
    std::string name;
    GeneratorSpec spec;
    Graph graph;
};

inline std::vector<CorpusEntry> acceptance_corpus() {
    std::vector<CorpusEntry> corpus;
    auto add = [&](const GeneratorSpec& spec, const std::string& name) {
        corpus.push_back({name, spec, generate(spec)});
    };
    auto ints = [](std::initializer_list<long long> v) { return std::vector<long long>(v); };

    for (int n : {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17, 18, 32, 64, 128})
        add({Family::path, ints({n})}, "path_" + std::to_string(n));
    for (int n : {3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17, 18, 32, 64, 128})
        add({Family::cycle, ints({n})}, "cycle_" + std::to_string(n));
    for (int n : {2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17, 18, 32, 64, 128})
        add({Family::star, ints({n})}, "star_" + std::to_string(n));
    for (int n : {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17, 32, 64, 128})
        add({Family::complete, ints({n})}, "complete_" + std::to_string(n));

    for (int a = 1; a <= 8; ++a)
        for (int b = a; a + b <= 16; ++b)
            add({Family::complete_bipartite, ints({a, b})},
                "complete_bipartite_" + std::to_string(a) + "x" + std::to_string(b));
    for (int a : {16, 32, 64})
        add({Family::complete_bipartite, ints({a, a})},
            "complete_bipartite_" + std::to_string(a) + "x" + std::to_string(a));

    for (int r = 2; r <= 4; ++r)
        for (int c = r; r * c <= 20; ++c)
            add({Family::grid, ints({r, c})},
                "grid_" + std::to_string(r) + "x" + std::to_string(c));
    for (auto [r, c] : {std::pair{4, 8}, {8, 8}, {8, 16}})
        add({Family::grid, ints({r, c})}, "grid_" + std::to_string(r) + "x" + std::to_string(c));

    for (int n : {4, 6, 8, 10, 12, 14, 16})
        for (double p : {0.2, 0.5})
            for (uint64_t s : {1, 2, 3})
                add({Family::random_gnp, ints({n}), p, s},
                    "gnp_" + std::to_string(n) + "_p" + std::to_string(int(p * 100)) + "_s" +
                        std::to_string(s));
    for (int n : {32, 64})
        for (double p : {0.1, 0.3})
            for (uint64_t s : {1, 2})
                add({Family::random_gnp, ints({n}), p, s},
                    "gnp_" + std::to_string(n) + "_p" + std::to_string(int(p * 100)) + "_s" +
                        std::to_string(s));
    for (double p : {0.05, 0.15})
        add({Family::random_gnp, ints({128}), p, 1},
            "gnp_128_p" + std::to_string(int(p * 100)) + "_s1");

    for (int n : {6, 10, 16})
        for (int d : {1, 2, 3})
            for (uint64_t s : {1, 2, 3})
                add({Family::random_d_degenerate, ints({n, d}), 0.0, s},
                    "ddeg_" + std::to_string(n) + "_d" + std::to_string(d) + "_s" +
                        std::to_string(s));
    for (int n : {32, 64})
        for (int d : {2, 3})
            for (uint64_t s : {1, 2})
                add({Family::random_d_degenerate, ints({n, d}), 0.0, s},
                    "ddeg_" + std::to_string(n) + "_d" + std::to_string(d) + "_s" +
                        std::to_string(s));
    for (uint64_t s = 1; s <= 20; ++s)
        add({Family::random_d_degenerate, ints({128, 3}), 0.0, s},
            "ddeg_128_d3_s" + std::to_string(s));

    for (auto [a, b] : {std::pair{3, 3}, {4, 6}, {5, 5}, {8, 8}})
        for (double p : {0.3, 0.6})
            for (uint64_t s : {1, 2})
                add({Family::random_bipartite, ints({a, b}), p, s},
                    "rbip_" + std::to_string(a) + "x" + std::to_string(b) + "_p" +
                        std::to_string(int(p * 100)) + "_s" + std::to_string(s));
    add({Family::random_bipartite, ints({16, 16}), 0.2, 1}, "rbip_16x16_p20_s1");
    add({Family::random_bipartite, ints({32, 32}), 0.15, 1}, "rbip_32x32_p15_s1");
    add({Family::random_bipartite, ints({64, 64}), 0.08, 1}, "rbip_64x64_p8_s1");

    auto add_sub = [&](const GeneratorSpec& base, int r, const std::string& base_name) {
        add(subdivided_spec(base, r), "sub_" + base_name + "_r" + std::to_string(r));
    };
    for (int r : {1, 2, 3}) add_sub({Family::complete, ints({4})}, r, "k4");
    for (int r : {1, 2}) add_sub({Family::complete, ints({5})}, r, "k5");
    for (int r : {1, 2}) add_sub({Family::cycle, ints({5})}, r, "c5");
    for (int r : {1, 2}) add_sub({Family::cycle, ints({4})}, r, "c4");
    for (int r : {1, 2}) add_sub({Family::complete_bipartite, ints({3, 3})}, r, "k33");
    add_sub({Family::complete_bipartite, ints({2, 3})}, 1, "k23");
    add_sub({Family::star, ints({5})}, 1, "star5");
    add_sub({Family::grid, ints({3, 3})}, 1, "grid3x3");
    add_sub({Family::path, ints({5})}, 1, "path5");
    for (int r : {1, 2}) add_sub({Family::random_gnp, ints({10}), 0.4, 1}, r, "gnp10_p40_s1");

    return corpus;
}

// ---------------------------------------------------------------------------
// Crossing suite: certificates, the factor-2 conversion, shortcut edge
// replacement, build determinism, optimum sanity, and the short-edge bound.

inline SuiteResult suite_crossing(uint64_t seed = 20240603) {
    SuiteResult res;
    res.name = "crossing";
    PipelineOptions opts;
    opts.run_oracles = true;
    opts.check_roundtrip = false;
    for (const CorpusEntry& e : acceptance_corpus()) {
        if (e.graph.n() > 64 || e.graph.n() == 0) continue;
        PipelineRecord rec = run_pipeline_checks(e.name, e.graph, opts);
        res.tally(rec.certificate_ok, e.name + ": tree crossing exceeds log2(total weight)");
        res.tally(rec.weight_ok, e.name + ": incremental weight disagrees with recompute");
        res.tally(rec.bookkeeping_ok, e.name + ": crossing counters disagree with remeasure");
        res.tally(rec.factor2_ok, e.name + ": per-set path crossing exceeds twice the tree's");
        res.tally(rec.halving_ok, e.name + ": contiguity above floor(k_P/2)+1");
        if (rec.path_bound_ok)
            res.tally(*rec.path_bound_ok, e.name + ": path crossing above the envelope bound");
        if (rec.exact_ctg)
            res.tally(rec.oracle_ok, e.name + ": pipeline beat an exhaustive oracle");
        if (e.graph.n() <= 32) {
            SetSystem nbhd = neighborhood_system(e.graph);
            PathCertificate again = build_low_crossing_path(nbhd);
            res.tally(again.path.pairs ==
                          build_low_crossing_path(nbhd).path.pairs &&
                          again.tree.edges.pairs ==
                              low_contiguity_ordering(e.graph).pipeline.tree.edges.pairs,
                      e.name + ": rebuild produced different edges");
        }
    }

    // Shortcutting: replacing {x,y},{y,z} by {x,z} never increases any
    // set's crossing count.
    SplitMix64 rng(seed);
    for (int trial = 0; trial < 200; ++trial) {
        SetSystem s = random_set_system(rng, 12, 16);
        int n = s.ground_size;
        if (n < 3) continue;
        EdgePairList f{n, {}};
        int extra = int(rng.bounded(8));
        for (int i = 0; i < extra; ++i) {
            int x = int(rng.bounded(uint64_t(n)));
            int y = int(rng.bounded(uint64_t(n - 1)));
            if (y >= x) ++y;
            f.pairs.emplace_back(x, y);
        }
        int x = int(rng.bounded(uint64_t(n)));
        int y = int(rng.bounded(uint64_t(n - 1)));
        if (y >= x) ++y;
        int z = x;
        while (z == x || z == y) z = int(rng.bounded(uint64_t(n)));
        EdgePairList before = f;
        before.pairs.emplace_back(x, y);
        before.pairs.emplace_back(y, z);
        EdgePairList after = f;
        after.pairs.emplace_back(x, z);
        CrossingProfile pb = crossing_number(before, s);
        CrossingProfile pa = crossing_number(after, s);
        bool ok = true;
        for (int i = 0; i < s.num_sets(); ++i)
            if (pa.per_set[i] > pb.per_set[i]) ok = false;
        res.tally(ok, "edge replacement increased a crossing count, trial " +
                          std::to_string(trial));
    }

    SuiteResult se = suite_short_edge();
    res.checks += se.checks;
    res.failures += se.failures;
    for (const auto& w : se.witnesses)
        if (res.witnesses.size() < 8) res.witnesses.push_back(w);
    return res;
}

// Labels suite: roundtrip, symmetry, distinctness, and both size bounds over
// the corpus.
inline SuiteResult suite_labels(int max_n = 128) {
    SuiteResult res;
    res.name = "labels";
    PipelineOptions opts;
    opts.envelope_budget = 0; // skip bound work; this suite is about labels
    opts.vc_ground_limit = 0;
    for (const CorpusEntry& e : acceptance_corpus()) {
        if (e.graph.n() > max_n) continue;
        PipelineRecord rec = run_pipeline_checks(e.name, e.graph, opts);
        res.tally(rec.roundtrip_ok, e.name + ": decode disagrees with adjacency");
        res.tally(rec.decode_symmetric_ok, e.name + ": decode not symmetric");
        res.tally(rec.labels_distinct_ok, e.name + ": duplicate labels");
        res.tally(rec.interval_bound_ok, e.name + ": interval label above the size bound");
        res.tally(rec.degeneracy_bound_ok, e.name + ": degeneracy label above the size bound");
    }
    return res;
}

// Subdivision suite: subdividing preserves isomorphism classes, and for
// connected graphs with a degree-3 vertex it preserves the automorphism
// count; checked exhaustively over graph classes of small order.

namespace detail {

inline std::vector<long long> iso_signature(const Graph& g) {
    std::vector<std::vector<int>> sigs = vertex_signatures(g);
    std::sort(sigs.begin(), sigs.end());
    std::vector<long long> flat{g.n(), g.edge_count()};
    for (const auto& s : sigs) {
        flat.push_back(-1);
        flat.insert(flat.end(), s.begin(), s.end());
    }
    return flat;
}

} // namespace detail

inline SuiteResult suite_subdivision(uint64_t seed = 20240604) {
    SuiteResult res;
    res.name = "subdivision";
    const int big_limit = 1 << 20; // subdivided orders exceed the default caps
    SplitMix64 rng(seed);

    // n <= 6, r <= 2: pairwise non-isomorphic graphs must stay
    // pairwise non-isomorphic after subdividing; relabeled copies must not.
    for (int n = 1; n <= 6; ++n) {
        std::vector<Graph> reps = nonisomorphic_graphs(n);
        for (int r = 1; r <= 2; ++r) {
            std::vector<Graph> subs;
            subs.reserve(reps.size());
            for (const Graph& g : reps) subs.push_back(subdivide(g, r).graph);
            std::map<std::vector<long long>, std::vector<int>> buckets;
            for (size_t i = 0; i < subs.size(); ++i)
                buckets[detail::iso_signature(subs[i])].push_back(int(i));
            for (const auto& [sig, members] : buckets)
                for (size_t a = 0; a < members.size(); ++a)
                    for (size_t b = a + 1; b < members.size(); ++b)
                        res.tally(!are_isomorphic(subs[members[a]], subs[members[b]], big_limit),
                                  "subdivisions of non-isomorphic graphs merged: n=" +
                                      std::to_string(n) + " r=" + std::to_string(r) + " reps " +
                                      std::to_string(members[a]) + "," +
                                      std::to_string(members[b]));
            for (size_t i = 0; i < reps.size(); ++i) {
                std::vector<int> perm(n);
                std::iota(perm.begin(), perm.end(), 0);
                rng.shuffle(perm);
                Graph relabeled = apply_permutation(reps[i], perm);
                res.tally(are_isomorphic(subs[i], subdivide(relabeled, r).graph, big_limit),
                          "subdivision broke an isomorphism: n=" + std::to_string(n) +
                              " r=" + std::to_string(r) + " rep " + std::to_string(i));
            }
        }
    }

    // n <= 7, r <= 3, connected with a vertex of degree >= 3.
    for (int n = 4; n <= 7; ++n) {
        std::vector<Graph> reps = nonisomorphic_graphs(n);
        for (size_t i = 0; i < reps.size(); ++i) {
            const Graph& g = reps[i];
            if (!is_connected(g) || g.max_degree() < 3) continue;
            uint64_t aut = automorphism_count(g, 9);
            for (int r = 1; r <= 3; ++r) {
                uint64_t aut_sub = automorphism_count(subdivide(g, r).graph, big_limit);
                res.tally(aut_sub == aut, "aut changed under subdivision: n=" +
                                              std::to_string(n) + " rep " + std::to_string(i) +
                                              " r=" + std::to_string(r) + ": " +
                                              std::to_string(aut) + " vs " +
                                              std::to_string(aut_sub));
            }
        }
    }
    return res;
}

} // namespace adjlab
