#ifndef HAMCERT_GRAPH_HPP
#define HAMCERT_GRAPH_HPP

#include <array>
#include <utility>
#include <vector>

#include "hamcert/errors.hpp"
#include "hamcert/vertex_set.hpp"

namespace hamcert {

using Edge = std::pair<int, int>;

/// Simple undirected graph on vertices 0..n-1 (n <= 64).
///
/// Each adjacency row is a bitmask, so edge membership is a single AND and
/// neighbourhoods iterate in ascending order. Loops are rejected and every
/// edge is stored symmetrically.
class Graph {
  public:
    Graph() = default;
    explicit Graph(int n);
    Graph(int n, const std::vector<Edge>& edges);

    int order() const { return n_; }
    int size() const;

    bool adjacent(int u, int v) const { return (adj_[u] >> v) & 1U; }
    VertexSet neighbors(int v) const { return VertexSet(adj_[v]); }
    Mask row(int v) const { return adj_[v]; }
    int degree(int v) const { return popcount(adj_[v]); }
    VertexSet vertices() const { return VertexSet::range(n_); }

    void add_edge(int u, int v);
    void remove_edge(int u, int v);

    /// Edges (u, v) with u < v, sorted.
    std::vector<Edge> edges() const;
    std::vector<int> degree_sequence() const;  // non-increasing

    /// Graph on the same vertex set with vertex v renamed to perm[v].
    Graph relabeled(const std::vector<int>& perm) const;

    bool operator==(const Graph& o) const;

  private:
    void check_vertex(int v) const;

    int n_ = 0;
    std::array<Mask, kMaxVertices> adj_{};
};

struct InducedSubgraph {
    Graph graph;
    std::vector<int> to_host;  // new index -> original vertex
};

/// G[X]. New vertex i corresponds to the i-th smallest member of x.
InducedSubgraph induced_subgraph(const Graph& g, VertexSet x);

Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph complete_bipartite(int a, int b);

/// G plus one vertex (index n) adjacent to every vertex of G.
Graph add_dominating_vertex(const Graph& g);

}  // namespace hamcert

#endif  // HAMCERT_GRAPH_HPP
