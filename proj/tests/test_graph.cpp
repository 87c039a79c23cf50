#include "doctest.h"

#include "walkmat/errors.hpp"
#include "walkmat/graph.hpp"

#include <algorithm>

using namespace walkmat;

TEST_CASE("edge list construction normalizes and deduplicates") {
    const Graph c4 = graph_from_edge_list(4, {{1, 2}, {2, 3}, {3, 4}, {4, 1}});
    CHECK(c4.edge_count() == 4);
    CHECK(c4.has_edge(1, 4));
    CHECK(c4.has_edge(4, 1));
    CHECK_FALSE(c4.has_edge(1, 3));

    const Graph p3 = graph_from_edge_list(3, {{1, 2}, {2, 1}, {2, 3}});
    CHECK(p3.edge_count() == 2);
    CHECK(p3 == path_graph(3));

    CHECK_THROWS_AS(graph_from_edge_list(2, {{1, 1}}), SelfLoop);
    CHECK_THROWS_AS(graph_from_edge_list(2, {{1, 3}}), InvalidVertex);
    CHECK_THROWS_AS(graph_from_edge_list(0, {}), InvalidVertex);
}

TEST_CASE("standard families") {
    CHECK(path_graph(1).edge_count() == 0);
    CHECK(cycle_graph(5).edge_count() == 5);
    CHECK_THROWS_AS(cycle_graph(2), InvalidVertex);
    CHECK(complete_graph(4).edge_count() == 6);
    CHECK(star_graph(4).degrees() == std::vector<int>{3, 1, 1, 1});
}

TEST_CASE("rooted product with a path") {
    const Graph c4 = cycle_graph(4);
    const Graph prod = rooted_product_path(c4, 3);
    CHECK(prod.n() == 12);
    CHECK(prod.edge_count() == 12); // 4 cycle edges + 4*2 ladder edges

    CHECK(rooted_product_path(c4, 1) == c4);
    CHECK_THROWS_AS(rooted_product_path(c4, 0), InvalidOrder);

    // P_2 o P_2 is a 4-vertex path up to relabeling.
    std::vector<int> deg = rooted_product_path(path_graph(2), 2).degrees();
    std::sort(deg.begin(), deg.end());
    CHECK(deg == std::vector<int>{1, 1, 2, 2});
}

TEST_CASE("rooted product degree structure") {
    const Graph g = graph_from_edge_list(4, {{1, 2}, {1, 3}, {2, 3}, {3, 4}});
    const int n = g.n(), m = 4;
    const Graph prod = rooted_product_path(g, m);
    CHECK(prod.edge_count() == g.edge_count() + n * (m - 1));
    const std::vector<int> base = g.degrees();
    const std::vector<int> deg = prod.degrees();
    for (int i = 0; i < n; ++i) {
        CHECK(deg[static_cast<std::size_t>(i)] == base[static_cast<std::size_t>(i)] + 1);
        for (int j = 2; j < m; ++j) CHECK(deg[static_cast<std::size_t>((j - 1) * n + i)] == 2);
        CHECK(deg[static_cast<std::size_t>((m - 1) * n + i)] == 1);
    }
}

TEST_CASE("A_tau assembly") {
    const ExactMatrix q = a_tau_matrix(path_graph(3), 1);
    CHECK(q.at(0, 0) == 1);
    CHECK(q.at(1, 1) == 2);
    CHECK(q.at(2, 2) == 1);
    CHECK(q.at(0, 1) == 1);
    CHECK(q.at(0, 2) == 0);

    const ExactMatrix a = a_tau_matrix(cycle_graph(4), 0);
    for (int i = 0; i < 4; ++i) CHECK(a.at(i, i) == 0);

    const ExactMatrix half = a_tau_matrix(cycle_graph(4), Rational(1, 2));
    for (int i = 0; i < 4; ++i) CHECK(half.at(i, i) == 1);
    CHECK(half.is_symmetric());
}

TEST_CASE("Kronecker assembly equals the direct construction") {
    const std::vector<Graph> graphs = {path_graph(2), path_graph(3), cycle_graph(4),
                                       graph_from_edge_list(4, {{1, 2}, {1, 3}, {2, 3}, {3, 4}})};
    const std::vector<Rational> taus = {Rational(0), Rational(1), Rational(1, 2), Rational(-2)};
    for (const Graph& g : graphs)
        for (int m = 1; m <= 4; ++m)
            for (const Rational& tau : taus)
                CHECK(kron_assemble_a_tau_product(g, m, tau) ==
                      a_tau_matrix(rooted_product_path(g, m), tau));
}

TEST_CASE("Kronecker assembly degenerate and block cases") {
    const Graph p2 = path_graph(2);
    CHECK(kron_assemble_a_tau_product(p2, 1, Rational(1, 3)) ==
          a_tau_matrix(p2, Rational(1, 3)));

    // P_2, m=2, tau=0: blocks [[A(P_2), I_2], [I_2, 0]].
    const ExactMatrix k = kron_assemble_a_tau_product(p2, 2, 0);
    CHECK(k.rows() == 4);
    CHECK(k.at(0, 1) == 1);
    CHECK(k.at(0, 2) == 1);
    CHECK(k.at(1, 3) == 1);
    CHECK(k.at(2, 3) == 0);
    CHECK(k.at(2, 2) == 0);
    CHECK_THROWS_AS(kron_assemble_a_tau_product(p2, 0, 0), InvalidOrder);
}

TEST_CASE("graph text round trip") {
    const Graph g = graph_from_edge_list(5, {{1, 2}, {2, 5}, {3, 4}});
    CHECK(parse_graph_text(graph_to_text(g)) == g);
    CHECK(parse_graph_text("3\n# comment\n1 2\n\n2 3\n") == path_graph(3));
    CHECK_THROWS_AS(parse_graph_text("no count"), FormatError);
    CHECK_THROWS_AS(parse_graph_text("3\n1\n"), FormatError);
}

TEST_CASE("triangle encoding round trip") {
    const Graph g = graph_from_edge_list(4, {{1, 2}, {1, 3}, {2, 3}, {3, 4}});
    const std::string tri = graph_to_triangle(g);
    CHECK(tri == "110101");
    CHECK(graph_from_triangle(4, tri) == g);
    CHECK_THROWS_AS(graph_from_triangle(4, "1101"), FormatError);
    CHECK_THROWS_AS(graph_from_triangle(4, "11010x"), FormatError);
}

TEST_CASE("graph hash is canonical and order-insensitive") {
    const Graph a = graph_from_edge_list(4, {{1, 2}, {3, 4}});
    const Graph b = graph_from_edge_list(4, {{4, 3}, {2, 1}});
    CHECK(graph_hash(a) == graph_hash(b));
    CHECK(graph_hash(a).size() == 16);
    // Frozen values keep report files comparable across revisions.
    CHECK(graph_hash(path_graph(3)) == "28e129b80b696262");
    CHECK(graph_hash(cycle_graph(4)) == "a4989f60ff47ec07");
    CHECK(graph_hash(a) != graph_hash(path_graph(4)));
}
