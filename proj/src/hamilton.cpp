#include "hamcert/hamilton.hpp"

#include <algorithm>

#include "hamcert/connectivity.hpp"

namespace hamcert {

namespace {

class CycleSearch {
  public:
    explicit CycleSearch(const Graph& g) : g_(g), all_(low_bits(g.order())) {}

    std::optional<HamCycle> run() {
        const int n = g_.order();
        if (n < 3) return std::nullopt;
        for (int v = 0; v < n; ++v)
            if (g_.degree(v) < 2) return std::nullopt;
        if (!is_connected(g_)) return std::nullopt;
        path_.assign(1, 0);
        if (!extend(bit(0))) return std::nullopt;
        return HamCycle{path_};
    }

  private:
    bool extend(Mask visited) {
        const int cur = path_.back();
        const Mask unvisited = all_ & ~visited;
        if (!unvisited) return g_.adjacent(cur, 0);

        // Each unvisited vertex still needs two cycle edges, drawn from other
        // unvisited vertices or from the two open ends of the path.
        const Mask ends = bit(cur) | bit(0);
        Mask forced = 0;
        for (int w : VertexSet(unvisited)) {
            const Mask avail = g_.row(w) & (unvisited | ends);
            const int k = popcount(avail);
            if (k < 2) return false;
            if (k == 2 && (avail & bit(cur)) && path_.size() > 1) forced |= bit(w);
        }
        if (popcount(forced) > 1) return false;
        if (!(g_.row(0) & unvisited)) return false;
        if (!is_connected(g_, VertexSet(unvisited | bit(cur)))) return false;

        const Mask options = forced ? forced : (g_.row(cur) & unvisited);
        for (int next : VertexSet(options)) {
            path_.push_back(next);
            if (extend(visited | bit(next))) return true;
            path_.pop_back();
        }
        return false;
    }

    const Graph& g_;
    Mask all_;
    std::vector<int> path_;
};

}  // namespace

std::optional<HamCycle> hamiltonian_cycle(const Graph& g) { return CycleSearch(g).run(); }

std::optional<HamPath> hamiltonian_path(const Graph& g) {
    const int n = g.order();
    if (n == 0) return HamPath{};
    if (n == 1) return HamPath{{0}};
    if (n >= kMaxVertices) throw PreconditionError("hamiltonian_path: graph too large for the apex reduction");
    auto cycle = hamiltonian_cycle(add_dominating_vertex(g));
    if (!cycle) return std::nullopt;
    auto& order = cycle->order;
    auto apex = std::find(order.begin(), order.end(), n);
    std::rotate(order.begin(), apex, order.end());
    return HamPath{{order.begin() + 1, order.end()}};
}

namespace {

bool is_permutation_of_vertices(const Graph& g, const std::vector<int>& order) {
    if (static_cast<int>(order.size()) != g.order()) return false;
    Mask seen = 0;
    for (int v : order) {
        if (v < 0 || v >= g.order() || (seen & bit(v))) return false;
        seen |= bit(v);
    }
    return true;
}

}  // namespace

bool validate(const Graph& g, const HamCycle& c) {
    if (g.order() < 3 || !is_permutation_of_vertices(g, c.order)) return false;
    for (std::size_t i = 0; i < c.order.size(); ++i) {
        if (!g.adjacent(c.order[i], c.order[(i + 1) % c.order.size()])) return false;
    }
    return true;
}

bool validate(const Graph& g, const HamPath& p) {
    if (!is_permutation_of_vertices(g, p.order)) return false;
    for (std::size_t i = 0; i + 1 < p.order.size(); ++i) {
        if (!g.adjacent(p.order[i], p.order[i + 1])) return false;
    }
    return true;
}

}  // namespace hamcert
