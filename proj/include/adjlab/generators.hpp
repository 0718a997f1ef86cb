#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "adjlab/errors.hpp"
#include "adjlab/graph.hpp"
#include "adjlab/rng.hpp"

namespace adjlab {

enum class Family {
    path,
    cycle,
    star,
    complete,
    complete_bipartite,
    grid,
    random_gnp,
    random_d_degenerate,
    random_bipartite,
    subdivided,
};

inline std::string family_name(Family f) {
    switch (f) {
        case Family::path: return "path";
        case Family::cycle: return "cycle";
        case Family::star: return "star";
        case Family::complete: return "complete";
        case Family::complete_bipartite: return "complete_bipartite";
        case Family::grid: return "grid";
        case Family::random_gnp: return "random_gnp";
        case Family::random_d_degenerate: return "random_d_degenerate";
        case Family::random_bipartite: return "random_bipartite";
        case Family::subdivided: return "subdivided";
    }
    return "?";
}

inline Family family_from_name(const std::string& name) {
    for (Family f : {Family::path, Family::cycle, Family::star, Family::complete,
                     Family::complete_bipartite, Family::grid, Family::random_gnp,
                     Family::random_d_degenerate, Family::random_bipartite, Family::subdivided})
        if (family_name(f) == name) return f;
    throw input_error("unknown family '" + name + "'");
}

// Deterministic description of one corpus graph. Integer parameters by
// family: path/cycle/star/complete {n}; complete_bipartite/grid {a,b};
// random_gnp {n} + p; random_d_degenerate {n,d}; random_bipartite {a,b} + p.
// subdivided flattens its base spec: {base family id, base ints..., r}.
struct GeneratorSpec {
    Family family = Family::path;
    std::vector<long long> ints;
    double p = 0.0;
    uint64_t seed = 0;
};

inline GeneratorSpec subdivided_spec(const GeneratorSpec& base, int r) {
    GeneratorSpec s;
    s.family = Family::subdivided;
    s.ints.push_back((long long)base.family);
    s.ints.insert(s.ints.end(), base.ints.begin(), base.ints.end());
    s.ints.push_back(r);
    s.p = base.p;
    s.seed = base.seed;
    return s;
}

inline Graph generate(const GeneratorSpec& spec) {
    auto want_ints = [&](size_t k) {
        if (spec.ints.size() != k)
            throw input_error(family_name(spec.family) + ": expected " + std::to_string(k) +
                              " integer parameters, got " + std::to_string(spec.ints.size()));
    };
    auto nonneg = [&](long long v, const char* what) {
        if (v < 0) throw input_error(family_name(spec.family) + ": negative " + what);
        return int(v);
    };
    switch (spec.family) {
        case Family::path: {
            want_ints(1);
            int n = nonneg(spec.ints[0], "n");
            Graph g(n);
            for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
            return g;
        }
        case Family::cycle: {
            want_ints(1);
            int n = nonneg(spec.ints[0], "n");
            if (n < 3) throw input_error("cycle: n must be >= 3");
            Graph g(n);
            for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
            return g;
        }
        case Family::star: {
            want_ints(1);
            int n = nonneg(spec.ints[0], "n");
            if (n < 1) throw input_error("star: n must be >= 1");
            Graph g(n);
            for (int i = 1; i < n; ++i) g.add_edge(0, i);
            return g;
        }
        case Family::complete: {
            want_ints(1);
            int n = nonneg(spec.ints[0], "n");
            Graph g(n);
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
            return g;
        }
        case Family::complete_bipartite: {
            want_ints(2);
            int a = nonneg(spec.ints[0], "a"), b = nonneg(spec.ints[1], "b");
            Graph g(a + b);
            for (int i = 0; i < a; ++i)
                for (int j = 0; j < b; ++j) g.add_edge(i, a + j);
            return g;
        }
        case Family::grid: {
            want_ints(2);
            int rows = nonneg(spec.ints[0], "rows"), cols = nonneg(spec.ints[1], "cols");
            if (rows < 1 || cols < 1) throw input_error("grid: dimensions must be >= 1");
            Graph g(rows * cols);
            for (int r = 0; r < rows; ++r)
                for (int c = 0; c < cols; ++c) {
                    if (c + 1 < cols) g.add_edge(r * cols + c, r * cols + c + 1);
                    if (r + 1 < rows) g.add_edge(r * cols + c, (r + 1) * cols + c);
                }
            return g;
        }
        case Family::random_gnp: {
            want_ints(1);
            int n = nonneg(spec.ints[0], "n");
            if (spec.p < 0.0 || spec.p > 1.0) throw input_error("random_gnp: p outside [0,1]");
            SplitMix64 rng(spec.seed);
            Graph g(n);
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    if (rng.chance(spec.p)) g.add_edge(i, j);
            return g;
        }
        case Family::random_d_degenerate: {
            want_ints(2);
            int n = nonneg(spec.ints[0], "n"), d = nonneg(spec.ints[1], "d");
            SplitMix64 rng(spec.seed);
            Graph g(n);
            // Vertices arrive in id order and attach to at most d earlier
            // ones, which pins the degeneracy at <= d by construction.
            for (int v = 1; v < n; ++v) {
                int cap = std::min(v, d);
                int cnt = int(rng.bounded(uint64_t(cap) + 1));
                for (int u : rng.sample(v, cnt)) g.add_edge(u, v);
            }
            return g;
        }
        case Family::random_bipartite: {
            want_ints(2);
            int a = nonneg(spec.ints[0], "a"), b = nonneg(spec.ints[1], "b");
            if (spec.p < 0.0 || spec.p > 1.0) throw input_error("random_bipartite: p outside [0,1]");
            SplitMix64 rng(spec.seed);
            Graph g(a + b);
            for (int i = 0; i < a; ++i)
                for (int j = 0; j < b; ++j)
                    if (rng.chance(spec.p)) g.add_edge(i, a + j);
            return g;
        }
        case Family::subdivided: {
            if (spec.ints.size() < 2) throw input_error("subdivided: missing base spec or r");
            GeneratorSpec base;
            long long fam = spec.ints.front();
            if (fam < 0 || fam > (long long)Family::random_bipartite)
                throw input_error("subdivided: bad base family id");
            base.family = Family(fam);
            if (base.family == Family::subdivided)
                throw input_error("subdivided: nested subdivision not supported");
            base.ints.assign(spec.ints.begin() + 1, spec.ints.end() - 1);
            base.p = spec.p;
            base.seed = spec.seed;
            int r = nonneg(spec.ints.back(), "r");
            return subdivide(generate(base), r).graph;
        }
    }
    throw input_error("unknown family");
}

} // namespace adjlab
