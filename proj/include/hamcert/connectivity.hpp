#ifndef HAMCERT_CONNECTIVITY_HPP
#define HAMCERT_CONNECTIVITY_HPP

#include <optional>
#include <vector>

#include "hamcert/graph.hpp"

namespace hamcert {

/// Why a graph is not 2-connected. Every kind is checkable by deleting at
/// most one vertex and counting components.
struct CutWitness {
    enum class Kind {
        kTooSmall,      // fewer than 3 vertices
        kDisconnected,  // `a` and `b` lie in different components
        kCutVertex,     // deleting `a` leaves >= 2 components
    };
    Kind kind = Kind::kTooSmall;
    int a = -1;
    int b = -1;

    bool operator==(const CutWitness&) const = default;
};

/// A set X whose deletion leaves more than |X| components. A graph with such a
/// set has no Hamiltonian cycle: a spanning cycle minus |X| >= 1 vertices
/// falls apart into at most |X| arcs.
struct ToughnessWitness {
    VertexSet x;
    std::vector<VertexSet> components;

    bool operator==(const ToughnessWitness&) const = default;
};

/// Components of g restricted to `within` (all vertices by default), sorted by
/// minimum vertex.
std::vector<VertexSet> connected_components(const Graph& g);
std::vector<VertexSet> connected_components(const Graph& g, VertexSet within);

/// Vertices reachable from `source` inside `within` (source must be in within).
VertexSet reachable(const Graph& g, int source, VertexSet within);

bool is_connected(const Graph& g, VertexSet within);
bool is_connected(const Graph& g);

/// nullopt when g is 2-connected (n >= 3, connected, no cut vertex), otherwise
/// the reason. Cut vertices come from a lowpoint DFS.
std::optional<CutWitness> two_connectivity_obstacle(const Graph& g);
bool is_two_connected(const Graph& g);

/// Independent re-check of a CutWitness against g.
bool validate(const Graph& g, const CutWitness& w);

/// Searches sets of size 1..max_size in increasing size and lexicographic
/// order, returning the first X with more than |X| components in g - X.
std::optional<ToughnessWitness> toughness_witness(const Graph& g, int max_size);

bool validate(const Graph& g, const ToughnessWitness& w);

}  // namespace hamcert

#endif  // HAMCERT_CONNECTIVITY_HPP
