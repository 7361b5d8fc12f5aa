#ifndef HAMCERT_FAMILIES_HPP
#define HAMCERT_FAMILIES_HPP

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hamcert/graph.hpp"

namespace hamcert {

namespace kind {

struct Claw {
    bool operator==(const Claw&) const = default;
};
struct Net {
    bool operator==(const Net&) const = default;
};
/// Net plus a vertex adjacent to all six net vertices.
struct Snare {
    bool operator==(const Snare&) const = default;
};
/// 2n-cycle v1..v2n with the even-position vertices made a clique.
struct Sun {
    int n = 2;
    bool operator==(const Sun&) const = default;
};
/// Sun(n) plus an apex adjacent to the even-position vertices.
struct Nova {
    int n = 2;
    bool operator==(const Nova&) const = default;
};
/// Two non-adjacent ends joined by three paths of the given lengths (in
/// edges, each >= 2, sorted ascending) with no edges between interiors.
struct Theta {
    std::array<int, 3> lengths{2, 2, 2};
    bool operator==(const Theta&) const = default;
};
/// Theta plus the edge between its ends.
struct ClosedTheta {
    std::array<int, 3> lengths{2, 2, 2};
    bool operator==(const ClosedTheta&) const = default;
};
/// Cycle of length `cycle` plus a hub off the cycle adjacent to the cycle
/// positions in `spokes` (at least three).
struct Wheel {
    int cycle = 4;
    std::vector<int> spokes;
    bool operator==(const Wheel&) const = default;
};

}  // namespace kind

using ObstructionKind = std::variant<kind::Claw, kind::Net, kind::Snare, kind::Sun, kind::Nova, kind::Theta,
                                     kind::ClosedTheta, kind::Wheel>;

/// Sorts theta lengths and maps wheel spokes to the lexicographically least
/// sorted position list over all rotations and reflections of the cycle.
ObstructionKind normalize(const ObstructionKind& k);

/// Throws PreconditionError for out-of-range parameters.
void check_parameters(const ObstructionKind& k);

int vertex_count(const ObstructionKind& k);

/// Canonical labeled construction: cycle (or path) vertices first, then the
/// apex/hub. Theta: u = 0, interior of the first path, v, interior of the
/// second path walked back towards u, interior of the third path from u.
/// Wheel spokes are used as given (not normalized).
Graph generate(const ObstructionKind& k);

/// The kind g is isomorphic to, or nullopt. Families are tried in the order
/// claw, net, snare, nova, sun, theta, closed theta, wheel; the first match
/// wins, so ClosedTheta(2,2,2) (which is the 2-nova) is reported as Nova(2).
std::optional<ObstructionKind> recognize_obstruction(const Graph& g);

/// "theta 2,3,3", "wheel 6 0,2,4", "nova 3", ...
std::string to_string(const ObstructionKind& k);

/// Inverse of to_string; also accepts whitespace-separated numbers.
ObstructionKind parse_kind(std::string_view family, const std::vector<int>& params);

/// nullopt when triangle-free, otherwise a triangle (ascending).
std::optional<std::array<int, 3>> find_triangle(const Graph& g);
bool is_triangle_free(const Graph& g);

/// Triangle-freeness of a family member, decided from its parameters.
bool is_triangle_free_kind(const ObstructionKind& k);

}  // namespace hamcert

#endif  // HAMCERT_FAMILIES_HPP
