#ifndef HAMCERT_VERIFIER_HPP
#define HAMCERT_VERIFIER_HPP

#include <optional>
#include <string>
#include <vector>

#include "hamcert/families.hpp"
#include "hamcert/graph.hpp"

namespace hamcert {

inline constexpr int kObstructionCheckMaxOrder = 12;
inline constexpr int kBuiltinEnumerationMaxOrder = 8;

/// 2-connected, non-Hamiltonian, and every proper induced subgraph on >= 3
/// vertices is not 2-connected or is Hamiltonian. Throws above 12 vertices.
bool is_hc_obstruction(const Graph& g);

/// Connected analogue for Hamiltonian paths.
bool is_hp_obstruction(const Graph& g);

enum class GraphClass { kAll, kSplit, kTriangleFree };

/// Connected and in the class.
bool in_class(const Graph& g, GraphClass cls);

/// One connected graph per isomorphism class on n vertices, filtered to the
/// class, in canonical-form order. Built by adding a vertex to each graph on
/// n - 1 vertices (every connected graph has a non-cut vertex and all classes
/// are hereditary), deduplicated by canonical form. `max_order` guards the
/// exponential cost; throws PreconditionError above it.
std::vector<Graph> enumerate_graphs(int n, GraphClass cls, int max_order = kBuiltinEnumerationMaxOrder);

/// Same for every order 1..n_max; result[k] holds order k (result[0] empty).
std::vector<std::vector<Graph>> enumerate_graphs_up_to(int n_max, GraphClass cls,
                                                       int max_order = kBuiltinEnumerationMaxOrder);

/// Every graph on n vertices up to isomorphism, connected or not.
std::vector<Graph> enumerate_all_graphs(int n, int max_order = kBuiltinEnumerationMaxOrder);

/// Graphs of `source` with `n` vertices (any n if n < 0) that pass in_class.
/// Source records are trusted to be pairwise non-isomorphic.
std::vector<Graph> filter_graphs(const std::vector<Graph>& source, int n, GraphClass cls);

enum class VerifyClass { kSplit, kTriangleFree, kHamiltonianPath, kAll };

struct ObstructionRecord {
    int n = 0;
    std::string canon;
    std::optional<ObstructionKind> kind;
    bool expected = false;
};

struct ObstructionReport {
    VerifyClass cls = VerifyClass::kAll;
    std::vector<int> orders;        // vertex counts examined
    std::size_t graphs_checked = 0;
    std::vector<ObstructionRecord> found;     // sorted by (n, canon)
    std::vector<ObstructionKind> missing;     // catalog entries not found
    int unrecognized = 0;
    std::optional<bool> pass;       // nullopt for the informational class

    /// RECORD lines followed by a summary line.
    std::string text() const;
};

struct VerifyOptions {
    VerifyClass cls = VerifyClass::kSplit;
    int n_max = 8;
    /// When set, graphs come from here instead of the builtin enumerator.
    const std::vector<Graph>* source = nullptr;
    int jobs = 1;
    int builtin_max_order = kBuiltinEnumerationMaxOrder;
};

/// Expected catalog for the class restricted to the given orders, one
/// normalized kind per isomorphism class.
std::vector<ObstructionKind> expected_catalog(VerifyClass cls, const std::vector<int>& orders);

/// Checks every graph of the class and compares the obstructions found with
/// the expected catalog (exact set equality by canonical form).
ObstructionReport verify_characterization(const VerifyOptions& options);

const char* to_string(VerifyClass cls);
std::optional<VerifyClass> parse_verify_class(std::string_view name);

}  // namespace hamcert

#endif  // HAMCERT_VERIFIER_HPP
