#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include <adjlab/generators.hpp>
#include <adjlab/io.hpp>
#include <adjlab/isomorphism.hpp>
#include <adjlab/labeling.hpp>
#include <adjlab/verify.hpp>

using namespace adjlab;

TEST_CASE("deterministic families") {
    Graph p5 = generate({Family::path, {5}});
    REQUIRE(p5.edge_count() == 4);
    REQUIRE(p5.degree(0) == 1);
    REQUIRE(p5.degree(2) == 2);

    Graph c6 = generate({Family::cycle, {6}});
    for (int v = 0; v < 6; ++v) REQUIRE(c6.degree(v) == 2);

    Graph star = generate({Family::star, {7}});
    REQUIRE(star.degree(0) == 6);
    for (int v = 1; v < 7; ++v) REQUIRE(star.degree(v) == 1);

    Graph k6 = generate({Family::complete, {6}});
    REQUIRE(k6.edge_count() == 15);

    Graph k33 = generate({Family::complete_bipartite, {3, 3}});
    REQUIRE(contains_biclique(k33, 3));

    for (auto [r, c] : {std::pair{2, 5}, {3, 4}, {4, 4}}) {
        Graph grid = generate({Family::grid, {r, c}});
        REQUIRE(grid.n() == r * c);
        REQUIRE(grid.edge_count() == 2LL * r * c - r - c);
    }
}

TEST_CASE("random families") {
    REQUIRE(generate({Family::random_gnp, {10}, 0.0, 3}).edge_count() == 0);
    REQUIRE(generate({Family::random_gnp, {10}, 1.0, 3}).edge_count() == 45);

    SECTION("identical specs are byte-identical") {
        GeneratorSpec spec{Family::random_gnp, {20}, 0.37, 12345};
        REQUIRE(generate(spec) == generate(spec));
        GeneratorSpec dd{Family::random_d_degenerate, {30, 2}, 0.0, 8};
        REQUIRE(generate(dd) == generate(dd));
    }
    SECTION("construction pins the degeneracy") {
        Graph g = generate({Family::random_d_degenerate, {100, 3}, 0.0, 7});
        REQUIRE(degeneracy_ordering(g).d <= 3);
    }
    SECTION("bipartite randomness stays bipartite") {
        Graph g = generate({Family::random_bipartite, {6, 5}, 0.5, 11});
        for (int u = 0; u < 6; ++u)
            for (int v = u + 1; v < 6; ++v) REQUIRE_FALSE(g.has_edge(u, v));
        for (int u = 6; u < 11; ++u)
            for (int v = u + 1; v < 11; ++v) REQUIRE_FALSE(g.has_edge(u, v));
    }
}

TEST_CASE("subdivided family") {
    GeneratorSpec base{Family::cycle, {5}};
    Graph sub = generate(subdivided_spec(base, 2));
    REQUIRE(sub.n() == 5 + 2 * 5);
    REQUIRE(are_isomorphic(sub, generate({Family::cycle, {15}}), 16));

    GeneratorSpec gb{Family::random_gnp, {8}, 0.5, 3};
    Graph g = generate(gb);
    REQUIRE(generate(subdivided_spec(gb, 1)).n() == g.n() + g.edge_count());
}

TEST_CASE("parameter validation") {
    REQUIRE_THROWS_AS(generate({Family::cycle, {2}}), input_error);
    REQUIRE_THROWS_AS(generate({Family::random_gnp, {5}, 1.5, 0}), input_error);
    REQUIRE_THROWS_AS(generate({Family::grid, {0, 3}}), input_error);
    REQUIRE_THROWS_AS(generate({Family::path, {3, 4}}), input_error);
    REQUIRE_THROWS_AS(family_from_name("pathz"), input_error);
    REQUIRE(family_from_name("random_gnp") == Family::random_gnp);
}

TEST_CASE("graph text io") {
    SECTION("roundtrip") {
        Graph g = generate({Family::random_gnp, {12}, 0.3, 21});
        std::stringstream ss;
        write_graph(ss, g);
        REQUIRE(read_graph(ss) == g);
    }
    SECTION("comments and blank lines") {
        std::stringstream ss("# a triangle\n3 3\n\n0 1 # first\n1 2\n2 0\n");
        Graph g = read_graph(ss);
        REQUIRE(g.n() == 3);
        REQUIRE(g.edge_count() == 3);
    }
    SECTION("malformed inputs") {
        std::stringstream missing("3 2\n0 1\n");
        REQUIRE_THROWS_AS(read_graph(missing), input_error);
        std::stringstream loop("2 1\n1 1\n");
        REQUIRE_THROWS_AS(read_graph(loop), input_error);
        std::stringstream garbage("x y\n");
        REQUIRE_THROWS_AS(read_graph(garbage), input_error);
        std::stringstream range("2 1\n0 5\n");
        REQUIRE_THROWS_AS(read_graph(range), input_error);
    }
}

TEST_CASE("incidence matrix io") {
    std::stringstream ss("# two sets over three points\n2 3\n101\n010\n");
    SetSystem s = read_set_system(ss);
    REQUIRE(s.ground_size == 3);
    REQUIRE(s.num_sets() == 2);
    REQUIRE(s.sets[0].to_vector() == std::vector<int>{0, 2});
    REQUIRE(s.sets[1].to_vector() == std::vector<int>{1});

    std::stringstream bad("1 3\n102\n");
    REQUIRE_THROWS_AS(read_set_system(bad), input_error);
    std::stringstream shortrow("1 3\n10\n");
    REQUIRE_THROWS_AS(read_set_system(shortrow), input_error);
}

TEST_CASE("label file io") {
    Graph g = generate({Family::cycle, {7}});
    LabelSet ls = encode_degeneracy(g);
    std::stringstream ss;
    write_labels(ss, ls);
    LabelFile f = read_labels(ss);
    REQUIRE(f.n == 7);
    REQUIRE(f.scheme == Scheme::degeneracy);
    REQUIRE(int(f.by_vertex.size()) == 7);
    for (int u = 0; u < 7; ++u) {
        REQUIRE(f.by_vertex.at(u) == ls.labels[u]);
        for (int v = u + 1; v < 7; ++v)
            REQUIRE(decode_adjacency(f.by_vertex.at(u), f.by_vertex.at(v)) == g.has_edge(u, v));
    }
    std::stringstream bad("{\"n\": 2}\n");
    REQUIRE_THROWS_AS(read_labels(bad), input_error);
}

TEST_CASE("corpus sanity") {
    auto corpus = acceptance_corpus();
    REQUIRE(corpus.size() >= 300);
    int small = 0, large = 0;
    for (const auto& e : corpus) {
        REQUIRE(e.graph.valid());
        REQUIRE(e.graph == generate(e.spec)); // regeneration is exact
        if (e.graph.n() <= 16) ++small;
        if (e.graph.n() >= 128) ++large;
    }
    REQUIRE(small >= 150);
    REQUIRE(large >= 20);
}
