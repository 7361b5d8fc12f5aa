#include "hamcert/graph.hpp"

#include <algorithm>
#include <functional>
#include <string>

namespace hamcert {

Graph::Graph(int n) : n_(n) {
    if (n < 0 || n > kMaxVertices) {
        throw PreconditionError("graph order " + std::to_string(n) + " outside [0, 64]");
    }
}

Graph::Graph(int n, const std::vector<Edge>& edges) : Graph(n) {
    for (auto [u, v] : edges) add_edge(u, v);
}

int Graph::size() const {
    int twice = 0;
    for (int v = 0; v < n_; ++v) twice += degree(v);
    return twice / 2;
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_) {
        throw PreconditionError("vertex " + std::to_string(v) + " not in graph of order " + std::to_string(n_));
    }
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw PreconditionError("self-loop at vertex " + std::to_string(u));
    adj_[u] |= bit(v);
    adj_[v] |= bit(u);
}

void Graph::remove_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    adj_[u] &= ~bit(v);
    adj_[v] &= ~bit(u);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    for (int u = 0; u < n_; ++u) {
        for (int v : VertexSet(adj_[u] & ~low_bits(u + 1))) out.emplace_back(u, v);
    }
    return out;
}

std::vector<int> Graph::degree_sequence() const {
    std::vector<int> d(n_);
    for (int v = 0; v < n_; ++v) d[v] = degree(v);
    std::sort(d.begin(), d.end(), std::greater<>());
    return d;
}

Graph Graph::relabeled(const std::vector<int>& perm) const {
    if (static_cast<int>(perm.size()) != n_) throw PreconditionError("permutation size mismatch");
    Graph h(n_);
    for (auto [u, v] : edges()) h.add_edge(perm[u], perm[v]);
    return h;
}

bool Graph::operator==(const Graph& o) const {
    return n_ == o.n_ && std::equal(adj_.begin(), adj_.begin() + n_, o.adj_.begin());
}

InducedSubgraph induced_subgraph(const Graph& g, VertexSet x) {
    if (!x.subset_of(g.vertices())) throw PreconditionError("induced_subgraph: vertex set exceeds graph order");
    InducedSubgraph out{Graph(x.size()), x.to_vector()};
    std::array<int, kMaxVertices> index{};
    for (int i = 0; i < static_cast<int>(out.to_host.size()); ++i) index[out.to_host[i]] = i;
    for (int u : x) {
        for (int v : g.neighbors(u) & x) {
            if (u < v) out.graph.add_edge(index[u], index[v]);
        }
    }
    return out;
}

Graph complete_graph(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph cycle_graph(int n) {
    Graph g = path_graph(n);
    if (n >= 3) g.add_edge(n - 1, 0);
    return g;
}

Graph path_graph(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph complete_bipartite(int a, int b) {
    Graph g(a + b);
    for (int u = 0; u < a; ++u)
        for (int v = a; v < a + b; ++v) g.add_edge(u, v);
    return g;
}

Graph add_dominating_vertex(const Graph& g) {
    const int n = g.order();
    Graph h(n + 1);
    for (auto [u, v] : g.edges()) h.add_edge(u, v);
    for (int v = 0; v < n; ++v) h.add_edge(v, n);
    return h;
}

}  // namespace hamcert
