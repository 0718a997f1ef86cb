// adjlab: adjacency labels for arbitrary graphs via low-crossing spanning
// paths, plus a degeneracy-based scheme and the verification suites.
//
// Exit codes: 0 success, 1 verification/assertion failure, 2 input error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <adjlab/adjlab.hpp>

using namespace adjlab;
using nlohmann::json;

namespace {

Graph load_graph(const std::string& path) {
    if (path == "-") return read_graph(std::cin);
    std::ifstream in(path);
    if (!in) throw input_error("cannot open graph file '" + path + "'");
    return read_graph(in);
}

SetSystem load_sets(const std::string& path) {
    if (path == "-") return read_set_system(std::cin);
    std::ifstream in(path);
    if (!in) throw input_error("cannot open matrix file '" + path + "'");
    return read_set_system(in);
}

struct OutStream {
    explicit OutStream(const std::string& path) {
        if (path != "-") {
            file.open(path);
            if (!file) throw input_error("cannot open output file '" + path + "'");
        }
    }
    std::ostream& get() { return file.is_open() ? file : std::cout; }
    std::ofstream file;
};

long long elapsed_ms_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start)
        .count();
}

struct GenArgs {
    std::string family;
    std::string base = "cycle";
    long long n = 8, a = 2, b = 2, rows = 2, cols = 2, d = 2, r = 1;
    double p = 0.5;
    uint64_t seed = 0;
    std::string out = "-";

    GeneratorSpec spec_for(const std::string& fam) const {
        Family f = family_from_name(fam);
        switch (f) {
            case Family::path:
            case Family::cycle:
            case Family::star:
            case Family::complete: return {f, {n}, 0.0, seed};
            case Family::complete_bipartite: return {f, {a, b}, 0.0, seed};
            case Family::grid: return {f, {rows, cols}, 0.0, seed};
            case Family::random_gnp: return {f, {n}, p, seed};
            case Family::random_d_degenerate: return {f, {n, d}, 0.0, seed};
            case Family::random_bipartite: return {f, {a, b}, p, seed};
            case Family::subdivided: return subdivided_spec(spec_for(base), int(r));
        }
        throw input_error("unknown family");
    }
};

int cmd_gen(const GenArgs& args) {
    Graph g = generate(args.spec_for(args.family));
    OutStream out(args.out);
    write_graph(out.get(), g);
    return 0;
}

struct EncodeArgs {
    std::string in;
    std::string scheme = "auto";
    std::string out;
    int threshold = 4;
    long long sample_pairs = 0;
    uint64_t seed = 0;
};

int cmd_encode(const EncodeArgs& args) {
    Graph g = load_graph(args.in);
    ContiguityOptions copts;
    copts.build.sample_pairs = args.sample_pairs;
    copts.build.seed = args.seed;
    LabelSet ls;
    if (args.scheme == "interval")
        ls = encode_interval(g, copts);
    else if (args.scheme == "degeneracy")
        ls = encode_degeneracy(g);
    else if (args.scheme == "auto")
        ls = choose_scheme(g, args.threshold, copts);
    else
        throw input_error("unknown scheme '" + args.scheme + "'");
    OutStream out(args.out);
    write_labels(out.get(), ls);
    LabelStats st = label_stats(ls);
    std::cout << "scheme " << scheme_name(ls.scheme) << ", n " << ls.n << ", max_bits "
              << st.max_bits << ", mean_bits " << st.mean_bits;
    if (ls.scheme == Scheme::interval)
        std::cout << ", k " << ls.k << ", k_path " << ls.path_crossing;
    else
        std::cout << ", degeneracy " << ls.degeneracy;
    std::cout << "\n";
    return 0;
}

struct DecodeArgs {
    std::string labels;
    std::string pairs;
};

int cmd_decode(const DecodeArgs& args) {
    std::ifstream in(args.labels);
    if (!in) throw input_error("cannot open label file '" + args.labels + "'");
    LabelFile f = read_labels(in);
    std::stringstream ss(args.pairs);
    std::string item;
    while (std::getline(ss, item, ';')) {
        if (item.empty()) continue;
        size_t comma = item.find(',');
        if (comma == std::string::npos)
            throw input_error("pair '" + item + "' is not of the form u,v");
        int u, v;
        try {
            u = std::stoi(item.substr(0, comma));
            v = std::stoi(item.substr(comma + 1));
        } catch (const std::exception&) {
            throw input_error("pair '" + item + "' is not of the form u,v");
        }
        auto iu = f.by_vertex.find(u), iv = f.by_vertex.find(v);
        if (iu == f.by_vertex.end()) throw input_error("vertex " + std::to_string(u) + " has no label");
        if (iv == f.by_vertex.end()) throw input_error("vertex " + std::to_string(v) + " has no label");
        bool adj = u != v && decode_adjacency(iu->second, iv->second);
        std::cout << u << ' ' << v << ' ' << (adj ? "true" : "false") << "\n";
    }
    return 0;
}

struct AnalyzeArgs {
    std::string in;
    std::string sets;
    bool crossing = false;
    bool contiguity = false;
    bool vcdim = false;
    int nu_m = -1;
    int nu_trials = 0; // >0: sampled lower bound instead of exhaustive
    long long sample_pairs = 0;
    uint64_t seed = 0;
    long long budget = 10'000'000;
    int limit_n = 24;
};

int cmd_analyze(const AnalyzeArgs& args) {
    if (args.in.empty() == args.sets.empty())
        throw input_error("analyze needs exactly one of --in (graph) or --sets (matrix)");
    std::optional<Graph> graph;
    SetSystem system;
    if (!args.in.empty()) {
        graph = load_graph(args.in);
        system = neighborhood_system(*graph);
    } else {
        system = load_sets(args.sets);
    }

    json report;
    report["n"] = system.ground_size;
    report["num_sets"] = system.num_sets();

    if (args.vcdim) report["vcdim"] = vc_dimension(system, args.limit_n);
    if (args.nu_m >= 0) {
        if (args.nu_trials > 0)
            report["nu"] = {{"m", args.nu_m},
                            {"value", sampled_shatter_lower_bound(system, args.nu_m,
                                                                  args.nu_trials, args.seed)},
                            {"sampled", true}};
        else
            report["nu"] = {{"m", args.nu_m},
                            {"value", primal_shatter(system, args.nu_m, args.budget)}};
    }
    if (args.crossing) {
        auto start = std::chrono::steady_clock::now();
        BuildOptions bopts;
        bopts.sample_pairs = args.sample_pairs;
        bopts.seed = args.seed;
        PathCertificate pc = build_low_crossing_path(system, bopts);
        report["crossing"] = {{"n", system.ground_size},
                              {"num_sets", system.num_sets()},
                              {"tree_crossing", pc.tree.crossing},
                              {"path_crossing", pc.path_crossing},
                              {"log_weight_bound", pc.tree.log_weight_bound},
                              {"elapsed_ms", elapsed_ms_since(start)}};
        report["crossing_certificate_ok"] = pc.tree.certificate_ok;
        report["factor2_ok"] = pc.factor2_ok;
        // envelope bound when exact d and the profile are affordable
        if (args.sample_pairs == 0 && system.ground_size <= args.limit_n) {
            try {
                int d = vc_dimension(system, args.limit_n);
                SetSystem dual = dual_system(system);
                // pi* saturates once m reaches the dual ground
                auto profile = full_shatter_profile(
                    dual, std::min(system.ground_size, dual.ground_size), args.budget);
                if (profile) {
                    PathBoundReport pb = check_path_crossing_bound(
                        pc.path_crossing, system.num_sets(), d, ShatterEnvelope{*profile},
                        system.ground_size);
                    report["path_bound_holds"] = pb.holds;
                    report["path_bound_rhs"] = pb.rhs_approx;
                }
            } catch (const size_error&) {
            }
        }
    }
    if (args.contiguity) {
        if (!graph) throw input_error("--contiguity needs a graph input (--in)");
        ContiguityOptions copts;
        copts.build.sample_pairs = args.sample_pairs;
        copts.build.seed = args.seed;
        copts.with_bound = args.sample_pairs == 0;
        copts.vc_ground_limit = args.limit_n;
        copts.shatter_budget = args.budget;
        ContiguityReport rep = low_contiguity_ordering(*graph, copts);
        std::string sigma;
        for (size_t i = 0; i < rep.result.ordering.order.size(); ++i)
            sigma += (i ? " " : "") + std::to_string(rep.result.ordering.order[i]);
        report["contiguity"] = {{"k", rep.result.k},
                                {"tree_crossing", rep.tree_crossing()},
                                {"path_crossing", rep.path_crossing()},
                                {"halving_bound_ok", rep.halving_ok},
                                {"ordering", sigma}};
        if (rep.vc_dim) report["contiguity"]["vcdim"] = *rep.vc_dim;
        if (rep.contiguity_bound) report["contiguity"]["bound"] = *rep.contiguity_bound;
    }
    std::cout << report.dump(2) << "\n";
    return 0;
}

struct BenchArgs {
    std::string families = "path,cycle,star,complete,random_gnp,random_d_degenerate";
    std::string sizes = "16,32,64";
    int seeds = 1;
    std::string out = "-";
    bool timing = false;
    double gnp_p = 0.1;
    long long ddeg_d = 3;
    double bip_p = 0.2;
    long long sample_pairs = 0;
    uint64_t seed = 0; // build seed under --sample-pairs
};

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

int cmd_bench(const BenchArgs& args) {
    OutStream out(args.out);
    out.get() << "family,n,seed,d_degeneracy,k_T,k_P,k_ctg,interval_bits,degeneracy_bits,"
                 "elapsed_ms\n";
    for (const std::string& fam : split_csv(args.families)) {
        Family f = family_from_name(fam);
        for (const std::string& size_str : split_csv(args.sizes)) {
            long long n = std::stoll(size_str);
            if (n < 1) throw input_error("bench: sizes must be positive");
            for (int seed = 0; seed < args.seeds; ++seed) {
                GeneratorSpec spec;
                spec.seed = uint64_t(seed);
                switch (f) {
                    case Family::path:
                    case Family::star:
                    case Family::complete: spec = {f, {n}, 0.0, uint64_t(seed)}; break;
                    case Family::cycle: spec = {f, {std::max(3LL, n)}, 0.0, uint64_t(seed)}; break;
                    case Family::complete_bipartite:
                        spec = {f, {n / 2, n - n / 2}, 0.0, uint64_t(seed)};
                        break;
                    case Family::grid: {
                        long long r = std::max(1LL, (long long)std::sqrt(double(n)));
                        spec = {f, {r, std::max(1LL, n / r)}, 0.0, uint64_t(seed)};
                        break;
                    }
                    case Family::random_gnp: spec = {f, {n}, args.gnp_p, uint64_t(seed)}; break;
                    case Family::random_d_degenerate:
                        spec = {f, {n, args.ddeg_d}, 0.0, uint64_t(seed)};
                        break;
                    case Family::random_bipartite:
                        spec = {f, {n / 2, n - n / 2}, args.bip_p, uint64_t(seed)};
                        break;
                    case Family::subdivided:
                        spec = subdivided_spec({Family::cycle, {std::max(3LL, n / 2)}}, 1);
                        break;
                }
                auto start = std::chrono::steady_clock::now();
                Graph g = generate(spec);
                ContiguityOptions copts;
                copts.build.sample_pairs = args.sample_pairs;
                copts.build.seed = args.seed;
                ContiguityReport rep = low_contiguity_ordering(g, copts);
                LabelSet iv = encode_interval_with(g, rep);
                LabelSet dg = encode_degeneracy(g);
                LabelStats ist = label_stats(iv);
                LabelStats dst = label_stats(dg);
                if (!ist.bound_ok || !dst.bound_ok)
                    throw std::logic_error("bench: label size bound violated");
                long long ms = args.timing ? elapsed_ms_since(start) : 0;
                out.get() << fam << ',' << g.n() << ',' << seed << ',' << dg.degeneracy << ','
                          << rep.tree_crossing() << ',' << rep.path_crossing() << ','
                          << rep.result.k << ',' << ist.max_bits << ',' << dst.max_bits << ','
                          << ms << "\n";
            }
        }
    }
    return 0;
}

int cmd_verify(const std::string& suite) {
    std::vector<SuiteResult> results;
    if (suite == "all" || suite == "packing") results.push_back(suite_packing());
    if (suite == "all" || suite == "crossing") results.push_back(suite_crossing());
    if (suite == "all" || suite == "labels") results.push_back(suite_labels());
    if (suite == "all" || suite == "subdivision") results.push_back(suite_subdivision());
    if (results.empty())
        throw input_error("unknown suite '" + suite +
                          "' (expected all|packing|crossing|labels|subdivision)");
    bool ok = true;
    for (const SuiteResult& r : results) {
        std::cout << (r.passed() ? "PASS" : "FAIL") << " " << r.name << ": " << r.checks
                  << " checks, " << r.failures << " failures\n";
        for (const std::string& w : r.witnesses) std::cout << "  witness: " << w << "\n";
        ok = ok && r.passed();
    }
    return ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"adjacency labels via low-crossing spanning paths"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags may follow the subcommand

    uint64_t seed = 0;
    long long budget = 10'000'000;
    int limit_n = 24;
    app.add_option("--seed", seed, "seed for random families and pair sampling");
    app.add_option("--budget", budget, "subset enumeration budget");
    app.add_option("--limit-n", limit_n, "exhaustive search limit (VC dimension)");

    GenArgs gen;
    auto* cgen = app.add_subcommand("gen", "generate a corpus graph as an edge list");
    cgen->add_option("--family", gen.family, "graph family")->required();
    cgen->add_option("-n,--n", gen.n, "vertex count");
    cgen->add_option("--a", gen.a, "first side (bipartite families)");
    cgen->add_option("--b", gen.b, "second side (bipartite families)");
    cgen->add_option("--rows", gen.rows, "grid rows");
    cgen->add_option("--cols", gen.cols, "grid cols");
    cgen->add_option("-p,--p", gen.p, "edge probability (random families)");
    cgen->add_option("-d,--d", gen.d, "degeneracy cap (random_d_degenerate)");
    cgen->add_option("--base", gen.base, "base family (subdivided)");
    cgen->add_option("--r", gen.r, "subdivision depth (subdivided)");
    cgen->add_option("--out", gen.out, "output file, - for stdout");

    EncodeArgs enc;
    auto* cenc = app.add_subcommand("encode", "build adjacency labels for a graph");
    cenc->add_option("--in", enc.in, "graph file, - for stdin")->required();
    cenc->add_option("--scheme", enc.scheme, "interval|degeneracy|auto");
    cenc->add_option("--out", enc.out, "label file (JSON lines)")->required();
    cenc->add_option("--threshold", enc.threshold, "degeneracy threshold for auto");
    cenc->add_option("--sample-pairs", enc.sample_pairs,
                     "candidate pairs per step (0 = exhaustive scan)");

    DecodeArgs dec;
    auto* cdec = app.add_subcommand("decode", "answer adjacency queries from labels alone");
    cdec->add_option("--labels", dec.labels, "label file")->required();
    cdec->add_option("--pairs", dec.pairs, "queries like 0,3;1,2")->required();

    AnalyzeArgs ana;
    auto* cana = app.add_subcommand("analyze", "measure crossing/contiguity/VC quantities");
    cana->add_option("--in", ana.in, "graph file");
    cana->add_option("--sets", ana.sets, "incidence matrix file");
    cana->add_flag("--crossing", ana.crossing, "run the low-crossing pipeline");
    cana->add_flag("--contiguity", ana.contiguity, "compute the contiguity ordering");
    cana->add_flag("--vcdim", ana.vcdim, "exact VC dimension");
    cana->add_option("--nu", ana.nu_m, "shatter function at this m");
    cana->add_option("--nu-trials", ana.nu_trials,
                     "sample this many subsets for --nu instead of enumerating");
    cana->add_option("--sample-pairs", ana.sample_pairs, "pair sampling for large inputs");

    BenchArgs ben;
    auto* cben = app.add_subcommand("bench", "sweep families and sizes into a CSV table");
    cben->add_option("--families", ben.families, "comma list of families");
    cben->add_option("--sizes", ben.sizes, "comma list of vertex counts");
    cben->add_option("--seeds", ben.seeds, "seeds per cell");
    cben->add_option("--out", ben.out, "CSV file, - for stdout");
    cben->add_flag("--timing", ben.timing,
                   "record wall-clock elapsed_ms (off by default so runs are byte-identical)");
    cben->add_option("--gnp-p", ben.gnp_p, "p for random_gnp");
    cben->add_option("--ddeg-d", ben.ddeg_d, "d for random_d_degenerate");
    cben->add_option("--bip-p", ben.bip_p, "p for random_bipartite");
    cben->add_option("--sample-pairs", ben.sample_pairs, "pair sampling for large sizes");

    std::string suite = "all";
    auto* cver = app.add_subcommand("verify", "run the property suites");
    cver->add_option("--suite", suite, "all|packing|crossing|labels|subdivision");

    try {
        app.parse(argc, argv);
        gen.seed = seed;
        enc.seed = seed;
        ana.seed = seed;
        ana.budget = budget;
        ana.limit_n = limit_n;
        ben.seed = seed;
        if (cgen->parsed()) return cmd_gen(gen);
        if (cenc->parsed()) return cmd_encode(enc);
        if (cdec->parsed()) return cmd_decode(dec);
        if (cana->parsed()) return cmd_analyze(ana);
        if (cben->parsed()) return cmd_bench(ben);
        if (cver->parsed()) return cmd_verify(suite);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const input_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const size_error& e) {
        std::cerr << "size error: " << e.what() << "\n";
        std::cerr << "hint: raise --budget / --limit-n, or pass --sample-pairs for large inputs\n";
        return 2;
    } catch (const decode_error& e) {
        std::cerr << "decode error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
