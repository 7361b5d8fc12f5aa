#ifndef HAMCERT_SPLIT_CERTIFY_HPP
#define HAMCERT_SPLIT_CERTIFY_HPP

#include <optional>
#include <string>
#include <vector>

#include "hamcert/certificate.hpp"
#include "hamcert/graph.hpp"

namespace hamcert {

/// Stable set `s` and clique `k` partitioning V(G), with |k| maximum. Maximality
/// implies N(x) is a proper subset of k for every x in s.
struct SplitPartition {
    VertexSet s;
    VertexSet k;
    bool operator==(const SplitPartition&) const = default;
};

/// Maximum-clique split partition, or nullopt if g is not split. A partition
/// is read off the degree sequence (top-m vertices by degree, ties by index),
/// then stable vertices whose neighbourhood is all of the clique are moved
/// into it.
std::optional<SplitPartition> split_partition(const Graph& g);

bool validate(const Graph& g, const SplitPartition& p);

/// Which construction produced the certificate; reported for tests and the CLI.
struct SplitTrace {
    enum class Branch {
        kComplete,         // S empty
        kPairSelection,    // every clique vertex has <= 2 stable neighbours
        kHubObstruction,   // some clique vertex has >= 3 stable neighbours, obstruction found
        kHubThreeStable,   // ... and |S| = 3, explicit cycle
        kHubFourStable,    // ... and |S| = 4, explicit 8-cycle
    };
    Branch branch = Branch::kComplete;
    /// Number of cycles of the selection graph before each re-route (strictly
    /// decreasing), followed by the final count.
    std::vector<int> cycle_counts;
};

/// Certifying decision for 2-connected split graphs: a Hamiltonian cycle or an
/// induced snare / Nova(n). If g has no induced snare or nova the result is a
/// cycle. Throws PreconditionError if g is not split or not 2-connected.
Certificate split_certify(const Graph& g, SplitTrace* trace = nullptr);

}  // namespace hamcert

#endif  // HAMCERT_SPLIT_CERTIFY_HPP
