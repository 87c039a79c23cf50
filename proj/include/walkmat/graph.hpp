#pragma once

#include "walkmat/exact_matrix.hpp"
#include "walkmat/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace walkmat {

// Simple undirected graph on vertices 1..n.  Edges are stored as a sorted
// vector of normalized pairs (i < j) with set semantics, so equality and
// hashing are canonical.
class Graph {
public:
    Graph(int n, std::vector<std::pair<int, int>> edges);

    int n() const { return n_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    bool has_edge(int i, int j) const;
    std::vector<int> degrees() const;

    bool operator==(const Graph& o) const { return n_ == o.n_ && edges_ == o.edges_; }

private:
    int n_;
    std::vector<std::pair<int, int>> edges_;
};

// Validates endpoints, normalizes pair order, and deduplicates.
Graph graph_from_edge_list(int n, const std::vector<std::pair<int, int>>& pairs);

// Standard small families, all on 1..n.
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph star_graph(int n); // K_{1,n-1} with center vertex 1

// Rooted product of g with the path P_m, rooting each path copy at an
// endvertex.  Vertex (path level j, graph vertex i) gets index (j-1)*n + i,
// level 1 carrying the copy of g.  This layout makes the adjacency matrix
// equal the Kronecker block form used by kron_assemble_a_tau_product.
Graph rooted_product_path(const Graph& g, int m);

// A_tau(g) = A(g) + tau*D(g): off-diagonal (i,j) = 1 iff {i,j} is an edge,
// diagonal (i,i) = tau*deg(i).  tau=0 gives A, tau=1 gives Q.
ExactMatrix a_tau_matrix(const Graph& g, const Rational& tau);

// A_tau(P_m) (x) I_n + D_1 (x) A_tau(g) with D_1 = diag(1,0,...,0) of order m.
// Must equal a_tau_matrix(rooted_product_path(g, m), tau) entrywise.
ExactMatrix kron_assemble_a_tau_product(const Graph& g, int m, const Rational& tau);

// Edge-list text: first non-blank line "n", then one "i j" pair per line.
Graph parse_graph_text(const std::string& text);
std::string graph_to_text(const Graph& g);

// Compact upper-triangle encoding: one '0'/'1' per pair (i,j), i<j, row-major.
std::string graph_to_triangle(const Graph& g);
Graph graph_from_triangle(int n, const std::string& digits);

// FNV-1a over n and the sorted edge list, rendered as 16 hex digits.
std::string graph_hash(const Graph& g);

} // namespace walkmat
