#ifndef HAMCERT_HAMILTON_HPP
#define HAMCERT_HAMILTON_HPP

#include <optional>
#include <vector>

#include "hamcert/graph.hpp"

namespace hamcert {

/// Spanning cycle, listed from vertex `order[0]`; the closing edge
/// order.back()-order.front() is implicit.
struct HamCycle {
    std::vector<int> order;
    bool operator==(const HamCycle&) const = default;
};

struct HamPath {
    std::vector<int> order;
    bool operator==(const HamPath&) const = default;
};

/// Exact backtracking search. The walk starts at vertex 0 and tries
/// neighbours in ascending order, so results are reproducible. Pruning:
/// minimum degree 2, vertices whose remaining options drop below two,
/// forced moves into vertices with exactly two remaining options, and
/// connectivity of the unvisited part.
std::optional<HamCycle> hamiltonian_cycle(const Graph& g);

/// Hamiltonian path via a Hamiltonian cycle of g plus a dominating vertex.
std::optional<HamPath> hamiltonian_path(const Graph& g);

bool validate(const Graph& g, const HamCycle& c);
bool validate(const Graph& g, const HamPath& p);

}  // namespace hamcert

#endif  // HAMCERT_HAMILTON_HPP
