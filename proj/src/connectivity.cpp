#include "hamcert/connectivity.hpp"

#include <algorithm>
#include <functional>

namespace hamcert {

VertexSet reachable(const Graph& g, int source, VertexSet within) {
    Mask seen = bit(source);
    Mask frontier = seen;
    while (frontier) {
        Mask next = 0;
        for (int v : VertexSet(frontier)) next |= g.row(v);
        next &= within.bits() & ~seen;
        seen |= next;
        frontier = next;
    }
    return VertexSet(seen);
}

std::vector<VertexSet> connected_components(const Graph& g, VertexSet within) {
    std::vector<VertexSet> out;
    Mask left = within.bits();
    while (left) {
        const VertexSet comp = reachable(g, lowest(left), VertexSet(left));
        out.push_back(comp);
        left &= ~comp.bits();
    }
    return out;
}

std::vector<VertexSet> connected_components(const Graph& g) { return connected_components(g, g.vertices()); }

bool is_connected(const Graph& g, VertexSet within) {
    return within.empty() || reachable(g, within.min(), within) == within;
}

bool is_connected(const Graph& g) { return is_connected(g, g.vertices()); }

namespace {

// Lowest-index articulation point, or -1.
int first_cut_vertex(const Graph& g) {
    const int n = g.order();
    std::vector<int> disc(n, -1), low(n, 0);
    int timer = 0;
    Mask cuts = 0;
    std::function<void(int, int)> dfs = [&](int v, int parent) {
        disc[v] = low[v] = timer++;
        int children = 0;
        for (int w : g.neighbors(v)) {
            if (w == parent) continue;
            if (disc[w] >= 0) {
                low[v] = std::min(low[v], disc[w]);
                continue;
            }
            ++children;
            dfs(w, v);
            low[v] = std::min(low[v], low[w]);
            if (parent >= 0 && low[w] >= disc[v]) cuts |= bit(v);
        }
        if (parent < 0 && children > 1) cuts |= bit(v);
    };
    dfs(0, -1);
    return cuts ? lowest(cuts) : -1;
}

}  // namespace

std::optional<CutWitness> two_connectivity_obstacle(const Graph& g) {
    const int n = g.order();
    if (n < 3) return CutWitness{CutWitness::Kind::kTooSmall, -1, -1};
    const VertexSet first = reachable(g, 0, g.vertices());
    if (first.size() != n) {
        return CutWitness{CutWitness::Kind::kDisconnected, 0, (g.vertices() - first).min()};
    }
    if (int c = first_cut_vertex(g); c >= 0) return CutWitness{CutWitness::Kind::kCutVertex, c, -1};
    return std::nullopt;
}

bool is_two_connected(const Graph& g) { return !two_connectivity_obstacle(g).has_value(); }

bool validate(const Graph& g, const CutWitness& w) {
    const int n = g.order();
    switch (w.kind) {
        case CutWitness::Kind::kTooSmall:
            return n < 3;
        case CutWitness::Kind::kDisconnected:
            return w.a >= 0 && w.a < n && w.b >= 0 && w.b < n && !reachable(g, w.a, g.vertices()).contains(w.b);
        case CutWitness::Kind::kCutVertex: {
            if (w.a < 0 || w.a >= n) return false;
            VertexSet rest = g.vertices();
            rest.erase(w.a);
            return connected_components(g, rest).size() >= 2;
        }
    }
    return false;
}

std::optional<ToughnessWitness> toughness_witness(const Graph& g, int max_size) {
    const int n = g.order();
    if (max_size < 0 || max_size > n) throw PreconditionError("toughness_witness: max_size must be in [0, n]");

    std::optional<ToughnessWitness> found;
    std::vector<int> chosen;
    // Lexicographic enumeration of k-subsets.
    std::function<bool(int, int)> pick = [&](int from, int k) {
        if (static_cast<int>(chosen.size()) == k) {
            VertexSet x;
            for (int v : chosen) x.insert(v);
            auto comps = connected_components(g, g.vertices() - x);
            if (static_cast<int>(comps.size()) > k) {
                found = ToughnessWitness{x, std::move(comps)};
                return true;
            }
            return false;
        }
        for (int v = from; v <= n - (k - static_cast<int>(chosen.size())); ++v) {
            chosen.push_back(v);
            if (pick(v + 1, k)) return true;
            chosen.pop_back();
        }
        return false;
    };
    for (int k = 1; k <= max_size; ++k) {
        if (pick(0, k)) return found;
    }
    return std::nullopt;
}

bool validate(const Graph& g, const ToughnessWitness& w) {
    if (w.x.empty() || !w.x.subset_of(g.vertices())) return false;
    if (static_cast<int>(w.components.size()) <= w.x.size()) return false;
    Mask covered = 0;
    for (const VertexSet& c : w.components) {
        if (c.empty() || (c.bits() & covered) || !is_connected(g, c)) return false;
        covered |= c.bits();
    }
    if (covered != (g.vertices() - w.x).bits()) return false;
    for (const VertexSet& c : w.components) {
        for (int v : c) {
            if (g.row(v) & covered & ~c.bits()) return false;
        }
    }
    return true;
}

}  // namespace hamcert
