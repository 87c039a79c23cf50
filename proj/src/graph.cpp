#include "walkmat/graph.hpp"

#include "walkmat/errors.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>

namespace walkmat {

Graph::Graph(int n, std::vector<std::pair<int, int>> edges) : n_(n), edges_(std::move(edges)) {
    if (n_ < 1) throw InvalidVertex("graph must have at least one vertex");
    for (auto& [i, j] : edges_) {
        if (i == j) throw SelfLoop("self-loop at vertex " + std::to_string(i));
        if (i < 1 || i > n_ || j < 1 || j > n_)
            throw InvalidVertex("edge endpoint out of range 1.." + std::to_string(n_));
        if (i > j) std::swap(i, j);
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

bool Graph::has_edge(int i, int j) const {
    if (i > j) std::swap(i, j);
    return std::binary_search(edges_.begin(), edges_.end(), std::make_pair(i, j));
}

std::vector<int> Graph::degrees() const {
    std::vector<int> d(static_cast<std::size_t>(n_), 0);
    for (const auto& [i, j] : edges_) {
        ++d[static_cast<std::size_t>(i) - 1];
        ++d[static_cast<std::size_t>(j) - 1];
    }
    return d;
}

Graph graph_from_edge_list(int n, const std::vector<std::pair<int, int>>& pairs) {
    return Graph(n, pairs);
}

Graph path_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i < n; ++i) e.emplace_back(i, i + 1);
    return Graph(n, std::move(e));
}

Graph cycle_graph(int n) {
    if (n < 3) throw InvalidVertex("cycle needs at least 3 vertices");
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i < n; ++i) e.emplace_back(i, i + 1);
    e.emplace_back(1, n);
    return Graph(n, std::move(e));
}

Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) e.emplace_back(i, j);
    return Graph(n, std::move(e));
}

Graph star_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 2; i <= n; ++i) e.emplace_back(1, i);
    return Graph(n, std::move(e));
}

Graph rooted_product_path(const Graph& g, int m) {
    if (m < 1) throw InvalidOrder("rooted product needs m >= 1");
    int n = g.n();
    std::vector<std::pair<int, int>> e = g.edges(); // level-1 copy of g
    for (int j = 1; j <= m - 1; ++j)
        for (int i = 1; i <= n; ++i) e.emplace_back((j - 1) * n + i, j * n + i);
    return Graph(m * n, std::move(e));
}

ExactMatrix a_tau_matrix(const Graph& g, const Rational& tau) {
    int n = g.n();
    ExactMatrix m(n, n);
    for (const auto& [i, j] : g.edges()) {
        m.at(i - 1, j - 1) = 1;
        m.at(j - 1, i - 1) = 1;
    }
    std::vector<int> deg = g.degrees();
    for (int i = 0; i < n; ++i) m.at(i, i) = tau * deg[static_cast<std::size_t>(i)];
    return m;
}

ExactMatrix kron_assemble_a_tau_product(const Graph& g, int m, const Rational& tau) {
    if (m < 1) throw InvalidOrder("kron_assemble_a_tau_product needs m >= 1");
    ExactMatrix path_part = a_tau_matrix(path_graph(m), tau);
    ExactMatrix d1(m, m);
    d1.at(0, 0) = 1;
    return kronecker(path_part, ExactMatrix::identity(g.n())) + kronecker(d1, a_tau_matrix(g, tau));
}

Graph parse_graph_text(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    int n = 0;
    bool have_n = false;
    std::vector<std::pair<int, int>> pairs;
    while (std::getline(is, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const bool blank = line.find_first_not_of(" \t\r") == std::string::npos;
        std::istringstream ls(line);
        if (!have_n) {
            int v;
            if (ls >> v) {
                if (v < 1) throw FormatError("vertex count must be positive");
                int extra;
                if (ls >> extra) throw FormatError("first line must hold only the vertex count");
                n = v;
                have_n = true;
            } else if (!blank) {
                throw FormatError("first token must be the vertex count: " + line);
            }
            continue;
        }
        int i, j;
        if (ls >> i) {
            if (!(ls >> j)) throw FormatError("edge line needs two endpoints: " + line);
            pairs.emplace_back(i, j);
        } else if (!blank) {
            throw FormatError("bad edge line: " + line);
        }
    }
    if (!have_n) throw FormatError("missing vertex count line");
    return graph_from_edge_list(n, pairs);
}

std::string graph_to_text(const Graph& g) {
    std::ostringstream os;
    os << g.n() << '\n';
    for (const auto& [i, j] : g.edges()) os << i << ' ' << j << '\n';
    return os.str();
}

std::string graph_to_triangle(const Graph& g) {
    std::string s;
    for (int i = 1; i <= g.n(); ++i)
        for (int j = i + 1; j <= g.n(); ++j) s.push_back(g.has_edge(i, j) ? '1' : '0');
    return s;
}

Graph graph_from_triangle(int n, const std::string& digits) {
    const std::size_t want = static_cast<std::size_t>(n) * (n - 1) / 2;
    if (digits.size() != want)
        throw FormatError("triangle encoding for n=" + std::to_string(n) + " needs " +
                          std::to_string(want) + " digits, got " + std::to_string(digits.size()));
    std::vector<std::pair<int, int>> pairs;
    std::size_t k = 0;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j, ++k) {
            if (digits[k] == '1')
                pairs.emplace_back(i, j);
            else if (digits[k] != '0')
                throw FormatError("triangle encoding must use only '0' and '1'");
        }
    return graph_from_edge_list(n, pairs);
}

std::string graph_hash(const Graph& g) {
    std::uint64_t h = 1469598103934665603ull; // FNV-1a offset basis
    auto mix = [&h](std::uint64_t v) {
        for (int b = 0; b < 8; ++b) {
            h ^= (v >> (8 * b)) & 0xffu;
            h *= 1099511628211ull;
        }
    };
    mix(static_cast<std::uint64_t>(g.n()));
    for (const auto& [i, j] : g.edges()) {
        mix(static_cast<std::uint64_t>(i));
        mix(static_cast<std::uint64_t>(j));
    }
    static const char* hex = "0123456789abcdef";
    std::string out(16, '0');
    for (int k = 15; k >= 0; --k) {
        out[static_cast<std::size_t>(k)] = hex[h & 0xf];
        h >>= 4;
    }
    return out;
}

} // namespace walkmat
