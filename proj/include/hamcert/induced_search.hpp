#ifndef HAMCERT_INDUCED_SEARCH_HPP
#define HAMCERT_INDUCED_SEARCH_HPP

#include <optional>
#include <vector>

#include "hamcert/families.hpp"
#include "hamcert/graph.hpp"

namespace hamcert {

/// Induced copy of `pattern` in a host: map[i] is the host vertex playing
/// pattern vertex i. When `kind` is set, pattern == generate(*kind).
struct Embedding {
    std::optional<ObstructionKind> kind;
    Graph pattern;
    std::vector<int> map;

    VertexSet image() const;
    bool operator==(const Embedding&) const = default;
};

/// Injective, preserves adjacency and non-adjacency, and (if kind is set)
/// the pattern is the generated family member.
bool validate(const Graph& host, const Embedding& e);

/// First induced embedding in deterministic backtracking order, or nullopt.
std::optional<Embedding> find_induced(const Graph& host, const Graph& pattern);

/// Embedding of a family member given the host vertex set it occupies.
/// Recognizes G[x] and maps generate(kind) onto it. nullopt if G[x] is not
/// a family member.
std::optional<Embedding> embed_vertex_set(const Graph& host, VertexSet x);

/// Induced Nova(n) (2 <= n <= (|g|-1)/2) or snare. Tries Nova(2), the snare,
/// then Nova(3), Nova(4), ...
std::optional<Embedding> find_split_obstruction(const Graph& g);

/// Induced theta, closed theta or wheel in a triangle-free host. Throws
/// PreconditionError when g has a triangle.
std::optional<Embedding> find_tf_obstruction(const Graph& g);

/// All chordless cycles of length >= 4, each once, as vertex sequences
/// starting at their smallest vertex.
std::vector<std::vector<int>> induced_cycles(const Graph& g);

}  // namespace hamcert

#endif  // HAMCERT_INDUCED_SEARCH_HPP
