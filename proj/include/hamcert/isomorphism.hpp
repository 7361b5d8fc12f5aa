#ifndef HAMCERT_ISOMORPHISM_HPP
#define HAMCERT_ISOMORPHISM_HPP

#include <optional>
#include <string>
#include <vector>

#include "hamcert/graph.hpp"

namespace hamcert {

/// Canonical forms are only computed up to this order.
inline constexpr int kCanonicalMaxOrder = 12;

/// Colour refinement (1-dimensional Weisfeiler-Leman) starting from degrees.
/// Colour numbers are ranks of sorted signatures and therefore invariant
/// under relabeling: isomorphic graphs get identical colour histograms.
std::vector<int> refine_colors(const Graph& g);

/// A bijection f with f[v] = image of v in h, preserving adjacency and
/// non-adjacency, or nullopt.
std::optional<std::vector<int>> find_isomorphism(const Graph& g, const Graph& h);

bool is_isomorphic(const Graph& g, const Graph& h);

/// Permutation lab with lab[v] = canonical position of v. Ties are broken so
/// that relabeling g never changes g.relabeled(lab).
std::vector<int> canonical_labeling(const Graph& g);

/// graph6 text of the canonically labeled graph. Equal strings iff isomorphic.
/// Throws PreconditionError above kCanonicalMaxOrder vertices.
std::string canonical_form(const Graph& g);

}  // namespace hamcert

#endif  // HAMCERT_ISOMORPHISM_HPP
