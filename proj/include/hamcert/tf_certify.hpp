#ifndef HAMCERT_TF_CERTIFY_HPP
#define HAMCERT_TF_CERTIFY_HPP

#include <optional>
#include <string>
#include <vector>

#include "hamcert/certificate.hpp"
#include "hamcert/graph.hpp"

namespace hamcert {

enum class MinorPattern { kK4, kK23 };

/// A subdivision of K4 or K_{2,3} in g.
///
/// K4: `branch` holds the four branch vertices b0..b3 and `paths` the six
/// branch paths in pair order (0,1),(0,2),(0,3),(1,2),(1,3),(2,3), each listed
/// from the lower-indexed branch vertex. `sets` is the derived minor model
/// A0..A3: each path interior is added to the set of its first branch vertex.
///
/// K_{2,3}: `branch` = {u, v}, `paths` the three u-v paths (each with at least
/// one interior vertex), sorted by length. `sets` is empty.
struct MinorModel {
    MinorPattern pattern = MinorPattern::kK4;
    std::vector<int> branch;
    std::vector<std::vector<int>> paths;
    std::vector<VertexSet> sets;

    VertexSet vertices() const;
};

/// Internally disjoint paths joining the right branch pairs, and (for K4) a
/// valid model: disjoint connected sets, an edge between every pair.
bool validate(const Graph& g, const MinorModel& m);

/// Exact K4-minor test by series-parallel reduction (repeatedly delete a
/// vertex of degree <= 1 or suppress one of degree 2).
bool has_k4_minor(const Graph& g);

/// K4: an edge-minimal subgraph keeping a K4 minor, read as a subdivision.
/// K_{2,3}: a subdivision with the fewest vertices, from a min-cost flow of
/// three vertex-disjoint paths of length >= 2 for each candidate branch pair.
/// Both patterns have maximum degree 3, so a minor exists iff a subdivision does.
std::optional<MinorModel> find_subdivision(const Graph& g, MinorPattern pattern);

/// Turns a K4 model in a triangle-free 2-connected graph into an induced
/// theta or wheel: build a chordless cycle C across A0, A1, A2; a vertex with
/// two or more neighbours on C finishes immediately; otherwise a shortest
/// path R between non-adjacent vertices of C (interior off C) gives either a
/// theta on C + R or a wheel whose hub is the vertex of C between R's ends.
Embedding extract_from_k4(const Graph& g, const MinorModel& model);

/// A minimum K_{2,3} subdivision in a triangle-free graph without K4 minor is
/// an induced theta, or a closed theta if its branch vertices are adjacent.
Embedding extract_from_k23(const Graph& g, const MinorModel& model);

/// The Hamiltonian cycle of a 2-connected graph with neither minor.
HamCycle outerplanar_hamiltonian(const Graph& g);

struct TfTrace {
    enum class Stage { kK4Extraction, kK23Extraction, kOuterplanar };
    Stage stage = Stage::kOuterplanar;
};

/// Certifying decision for 2-connected triangle-free graphs: a Hamiltonian
/// cycle, or an induced theta / closed theta / wheel. Throws PreconditionError
/// if g has a triangle or is not 2-connected.
Certificate tf_certify(const Graph& g, TfTrace* trace = nullptr);

}  // namespace hamcert

#endif  // HAMCERT_TF_CERTIFY_HPP
