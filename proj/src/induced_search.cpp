#include "hamcert/induced_search.hpp"

#include <functional>

#include "hamcert/isomorphism.hpp"

namespace hamcert {

VertexSet Embedding::image() const {
    VertexSet s;
    for (int v : map) s.insert(v);
    return s;
}

bool validate(const Graph& host, const Embedding& e) {
    const int k = e.pattern.order();
    if (static_cast<int>(e.map.size()) != k) return false;
    Mask used = 0;
    for (int v : e.map) {
        if (v < 0 || v >= host.order() || (used & bit(v))) return false;
        used |= bit(v);
    }
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (e.pattern.adjacent(i, j) != host.adjacent(e.map[i], e.map[j])) return false;
    if (e.kind) {
        try {
            if (!(generate(*e.kind) == e.pattern)) return false;
        } catch (const PreconditionError&) {
            return false;
        }
    }
    return true;
}

namespace {

class InducedSearch {
  public:
    InducedSearch(const Graph& host, const Graph& pattern) : host_(host), pat_(pattern), map_(pattern.order(), -1) {
        // Highest degree first, then breadth-first so every later vertex has a
        // mapped neighbour to constrain it when the pattern is connected.
        const int k = pattern.order();
        Mask left = low_bits(k);
        while (left) {
            int start = lowest(left);
            for (int v : VertexSet(left))
                if (pattern.degree(v) > pattern.degree(start)) start = v;
            std::vector<int> queue{start};
            left &= ~bit(start);
            for (std::size_t i = 0; i < queue.size(); ++i) {
                order_.push_back(queue[i]);
                for (int w : VertexSet(pattern.row(queue[i]) & left)) {
                    queue.push_back(w);
                    left &= ~bit(w);
                }
            }
        }
    }

    std::optional<std::vector<int>> run() {
        if (pat_.order() > host_.order()) return std::nullopt;
        if (!step(0, 0)) return std::nullopt;
        return map_;
    }

  private:
    bool step(std::size_t depth, Mask used) {
        if (depth == order_.size()) return true;
        const int p = order_[depth];
        Mask cand = low_bits(host_.order()) & ~used;
        for (std::size_t i = 0; i < depth && cand; ++i) {
            const int q = order_[i];
            cand &= pat_.adjacent(p, q) ? host_.row(map_[q]) : ~host_.row(map_[q]);
        }
        for (int v : VertexSet(cand)) {
            if (host_.degree(v) < pat_.degree(p)) continue;
            map_[p] = v;
            if (step(depth + 1, used | bit(v))) return true;
        }
        map_[p] = -1;
        return false;
    }

    const Graph& host_;
    const Graph& pat_;
    std::vector<int> map_;
    std::vector<int> order_;
};

// Visits chordless cycles of length >= 4 once each; the visitor returns true
// to stop.
bool for_each_induced_cycle(const Graph& g, const std::function<bool(const std::vector<int>&)>& visit) {
    const int n = g.order();
    std::vector<int> path;
    std::function<bool(Mask, Mask)> grow = [&](Mask on_path, Mask blocked) {
        const int s = path.front();
        const int cur = path.back();
        const Mask above = ~low_bits(s + 1) & low_bits(n);
        for (int w : VertexSet(g.row(cur) & above & ~on_path & ~blocked)) {
            if (g.adjacent(w, s)) {
                // Closing edge; w must not also touch the interior (it cannot,
                // interior neighbours are blocked) and the cycle needs >= 4 vertices.
                if (path.size() >= 3 && path[1] < w) {
                    path.push_back(w);
                    const bool stop = visit(path);
                    path.pop_back();
                    if (stop) return true;
                }
                continue;
            }
            path.push_back(w);
            // Neighbours of the previous vertex (other than the new one) become chords.
            const Mask newly = path.size() >= 3 ? g.row(cur) : 0;
            if (grow(on_path | bit(w), blocked | newly)) return true;
            path.pop_back();
        }
        return false;
    };
    for (int s = 0; s < n; ++s) {
        path.assign(1, s);
        for (int first : VertexSet(g.row(s) & ~low_bits(s + 1))) {
            path.push_back(first);
            if (grow(bit(s) | bit(first), 0)) return true;
            path.pop_back();
        }
    }
    return false;
}

// Induced u-v paths of length >= 2 whose interior touches u only at its first
// vertex and v only at its last: exactly the legs of a (closed) theta.
std::vector<Mask> theta_legs(const Graph& g, int u, int v) {
    std::vector<Mask> legs;
    const Mask nu = g.row(u);
    const Mask nv = g.row(v);
    const Mask all = low_bits(g.order()) & ~bit(u) & ~bit(v);
    std::function<void(int, Mask, Mask)> grow = [&](int cur, Mask interior, Mask blocked) {
        if (nv & bit(cur)) {
            legs.push_back(interior);
            return;
        }
        for (int w : VertexSet(g.row(cur) & all & ~interior & ~blocked & ~nu)) {
            grow(w, interior | bit(w), blocked | (g.row(cur) & ~bit(w)));
        }
    };
    for (int first : VertexSet(nu & all)) grow(first, bit(first), 0);
    return legs;
}

Mask closed_neighborhood(const Graph& g, Mask set) {
    Mask out = set;
    for (int v : VertexSet(set)) out |= g.row(v);
    return out;
}

}  // namespace

std::optional<Embedding> find_induced(const Graph& host, const Graph& pattern) {
    auto map = InducedSearch(host, pattern).run();
    if (!map) return std::nullopt;
    return Embedding{std::nullopt, pattern, std::move(*map)};
}

std::optional<Embedding> embed_vertex_set(const Graph& host, VertexSet x) {
    const InducedSubgraph sub = induced_subgraph(host, x);
    auto k = recognize_obstruction(sub.graph);
    if (!k) return std::nullopt;
    Graph pattern = generate(*k);
    auto iso = find_isomorphism(pattern, sub.graph);
    if (!iso) throw InternalInvariantError("embed_vertex_set: recognized kind is not isomorphic to the subgraph");
    std::vector<int> map(pattern.order());
    for (int i = 0; i < pattern.order(); ++i) map[i] = sub.to_host[(*iso)[i]];
    return Embedding{std::move(k), std::move(pattern), std::move(map)};
}

std::optional<Embedding> find_split_obstruction(const Graph& g) {
    std::vector<ObstructionKind> kinds{kind::Nova{2}, kind::Snare{}};
    for (int n = 3; 2 * n + 1 <= g.order(); ++n) kinds.push_back(kind::Nova{n});
    for (const auto& k : kinds) {
        if (vertex_count(k) > g.order()) continue;
        if (auto e = find_induced(g, generate(k))) {
            e->kind = k;
            return e;
        }
    }
    return std::nullopt;
}

std::vector<std::vector<int>> induced_cycles(const Graph& g) {
    std::vector<std::vector<int>> out;
    for_each_induced_cycle(g, [&](const std::vector<int>& c) {
        out.push_back(c);
        return false;
    });
    return out;
}

std::optional<Embedding> find_tf_obstruction(const Graph& g) {
    if (!is_triangle_free(g)) throw PreconditionError("find_tf_obstruction: host graph has a triangle");
    const int n = g.order();

    // Thetas and closed thetas: ends u < v and three compatible legs.
    for (int u = 0; u < n; ++u) {
        if (g.degree(u) < 3) continue;
        for (int v = u + 1; v < n; ++v) {
            if (g.degree(v) < 3) continue;
            const auto legs = theta_legs(g, u, v);
            std::vector<Mask> reach(legs.size());
            for (std::size_t i = 0; i < legs.size(); ++i) reach[i] = closed_neighborhood(g, legs[i]);
            for (std::size_t a = 0; a < legs.size(); ++a)
                for (std::size_t b = a + 1; b < legs.size(); ++b) {
                    if (reach[a] & legs[b]) continue;
                    for (std::size_t c = b + 1; c < legs.size(); ++c) {
                        if ((reach[a] | reach[b]) & legs[c]) continue;
                        const VertexSet x(legs[a] | legs[b] | legs[c] | bit(u) | bit(v));
                        auto e = embed_vertex_set(g, x);
                        if (!e) throw InternalInvariantError("find_tf_obstruction: theta vertex set not recognized");
                        return e;
                    }
                }
        }
    }

    // Wheels: a vertex with >= 3 neighbours on a chordless cycle avoiding it.
    std::optional<Embedding> found;
    for_each_induced_cycle(g, [&](const std::vector<int>& cycle) {
        Mask c = 0;
        for (int v : cycle) c |= bit(v);
        for (int h : VertexSet(low_bits(n) & ~c)) {
            if (popcount(g.row(h) & c) >= 3) {
                found = embed_vertex_set(g, VertexSet(c | bit(h)));
                if (!found) throw InternalInvariantError("find_tf_obstruction: wheel vertex set not recognized");
                return true;
            }
        }
        return false;
    });
    return found;
}

}  // namespace hamcert
