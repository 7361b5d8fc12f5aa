#include "hamcert/tf_certify.hpp"

#include <algorithm>
#include <climits>
#include <sstream>

#include "hamcert/connectivity.hpp"

namespace hamcert {

VertexSet MinorModel::vertices() const {
    VertexSet out;
    for (int b : branch) out.insert(b);
    for (const auto& p : paths)
        for (int v : p) out.insert(v);
    return out;
}

namespace {

Mask neighborhood(const Graph& g, Mask set) {
    Mask out = 0;
    for (int v : VertexSet(set)) out |= g.row(v);
    return out;
}

Mask mask_of(const std::vector<int>& vs) {
    Mask m = 0;
    for (int v : vs) m |= bit(v);
    return m;
}

std::string describe(const std::vector<int>& vs) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < vs.size(); ++i) os << (i ? " " : "") << vs[i];
    os << ']';
    return os.str();
}

// Breadth-first search from `sources` to the nearest vertex of `targets`,
// moving only through `allowed`. Vertices are expanded in ascending order, so
// ties resolve towards lower indices. Returned path runs source -> target.
std::optional<std::vector<int>> shortest_path(const Graph& g, Mask sources, Mask targets, Mask allowed) {
    sources &= allowed;
    if (!sources) return std::nullopt;
    std::vector<int> parent(g.order(), -1);
    Mask seen = sources;
    std::vector<int> layer(VertexSet(sources).begin(), VertexSet(sources).end());
    while (!layer.empty()) {
        for (int v : layer)
            if (targets & bit(v)) {
                std::vector<int> path{v};
                while (parent[path.back()] >= 0) path.push_back(parent[path.back()]);
                std::reverse(path.begin(), path.end());
                return path;
            }
        std::vector<int> next;
        for (int v : layer) {
            for (int w : VertexSet(g.row(v) & allowed & ~seen)) {
                parent[w] = v;
                seen |= bit(w);
                next.push_back(w);
            }
        }
        std::sort(next.begin(), next.end());
        layer = std::move(next);
    }
    return std::nullopt;
}

bool is_chordless_cycle(const Graph& g, Mask c) {
    if (popcount(c) < 4) return false;
    for (int v : VertexSet(c))
        if (popcount(g.row(v) & c) != 2) return false;
    return is_connected(g, VertexSet(c));
}

// Follows a degree-2 chain in h from branch vertex b through first neighbour w
// until the next branch vertex.
std::vector<int> trace_chain(const Graph& h, Mask branch, int b, int w) {
    std::vector<int> path{b};
    int prev = b;
    int cur = w;
    while (!(branch & bit(cur))) {
        path.push_back(cur);
        const int next = lowest(h.row(cur) & ~bit(prev));
        prev = cur;
        cur = next;
    }
    path.push_back(cur);
    return path;
}

std::optional<MinorModel> find_k4_subdivision(const Graph& g) {
    if (!has_k4_minor(g)) return std::nullopt;
    Graph h = g;
    for (auto [u, v] : g.edges()) {
        h.remove_edge(u, v);
        if (!has_k4_minor(h)) h.add_edge(u, v);
    }
    Mask branch = 0;
    for (int v = 0; v < h.order(); ++v) {
        const int d = h.degree(v);
        if (d == 3)
            branch |= bit(v);
        else if (d != 0 && d != 2)
            throw InternalInvariantError("find_subdivision: minimal K4 subgraph has a vertex of degree " + std::to_string(d));
    }
    if (popcount(branch) != 4) throw InternalInvariantError("find_subdivision: minimal K4 subgraph without four branch vertices");

    MinorModel m;
    m.pattern = MinorPattern::kK4;
    m.branch = VertexSet(branch).to_vector();
    std::vector<std::vector<int>> chains;
    for (int b : m.branch)
        for (int w : h.neighbors(b)) {
            auto path = trace_chain(h, branch, b, w);
            if (path.front() < path.back()) chains.push_back(std::move(path));
        }
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            auto it = std::find_if(chains.begin(), chains.end(),
                                   [&](const auto& p) { return p.front() == m.branch[i] && p.back() == m.branch[j]; });
            if (it == chains.end()) throw InternalInvariantError("find_subdivision: branch pair without a path");
            m.paths.push_back(*it);
        }
    m.sets.assign(4, VertexSet{});
    for (int i = 0; i < 4; ++i) m.sets[i].insert(m.branch[i]);
    std::size_t p = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j, ++p)
            for (std::size_t t = 1; t + 1 < m.paths[p].size(); ++t) m.sets[i].insert(m.paths[p][t]);
    return m;
}

// Min-cost flow on the vertex-split network: three vertex-disjoint u-v paths of
// length >= 2 with the fewest interior vertices. Returns them, or nullopt.
std::optional<std::vector<std::vector<int>>> three_disjoint_paths(const Graph& g, int u, int v) {
    const int n = g.order();
    struct Arc {
        int to, cap, cost, rev, orig;
    };
    std::vector<std::vector<Arc>> net(2 * n);
    auto add = [&](int a, int b, int cap, int cost) {
        net[a].push_back({b, cap, cost, static_cast<int>(net[b].size()), cap});
        net[b].push_back({a, 0, -cost, static_cast<int>(net[a].size()) - 1, 0});
    };
    auto in = [](int x) { return 2 * x; };
    auto out = [](int x) { return 2 * x + 1; };
    for (int x = 0; x < n; ++x)
        if (x != u && x != v) add(in(x), out(x), 1, 1);
    for (auto [a, b] : g.edges()) {
        if ((a == u && b == v) || (a == v && b == u)) continue;
        if (b != u && a != v) add(out(a), in(b), 1, 0);
        if (a != u && b != v) add(out(b), in(a), 1, 0);
    }
    const int source = out(u), sink = in(v);
    for (int unit = 0; unit < 3; ++unit) {
        std::vector<int> dist(2 * n, INT_MAX), prev_node(2 * n, -1), prev_arc(2 * n, -1);
        dist[source] = 0;
        for (int round = 0; round < 2 * n; ++round) {
            bool changed = false;
            for (int a = 0; a < 2 * n; ++a) {
                if (dist[a] == INT_MAX) continue;
                for (std::size_t i = 0; i < net[a].size(); ++i) {
                    const Arc& e = net[a][i];
                    if (e.cap > 0 && dist[a] + e.cost < dist[e.to]) {
                        dist[e.to] = dist[a] + e.cost;
                        prev_node[e.to] = a;
                        prev_arc[e.to] = static_cast<int>(i);
                        changed = true;
                    }
                }
            }
            if (!changed) break;
        }
        if (dist[sink] == INT_MAX) return std::nullopt;
        for (int x = sink; x != source; x = prev_node[x]) {
            Arc& e = net[prev_node[x]][prev_arc[x]];
            e.cap -= 1;
            net[x][e.rev].cap += 1;
        }
    }
    // Decompose: follow forward arcs carrying flow from the source.
    std::vector<std::vector<int>> paths;
    for (int unit = 0; unit < 3; ++unit) {
        std::vector<int> path{u};
        int node = source;
        while (node != sink) {
            auto it = std::find_if(net[node].begin(), net[node].end(),
                                   [](const Arc& e) { return e.orig > 0 && e.cap < e.orig; });
            if (it == net[node].end()) throw InternalInvariantError("find_subdivision: flow decomposition failed");
            it->cap += 1;
            node = it->to;
            if (node % 2 == 0) path.push_back(node / 2);
        }
        paths.push_back(std::move(path));
    }
    return paths;
}

std::optional<MinorModel> find_k23_subdivision(const Graph& g) {
    const int n = g.order();
    std::optional<MinorModel> best;
    std::size_t best_size = SIZE_MAX;
    for (int u = 0; u < n; ++u) {
        if (g.degree(u) < 3) continue;
        for (int v = u + 1; v < n; ++v) {
            if (g.degree(v) < 3) continue;
            auto paths = three_disjoint_paths(g, u, v);
            if (!paths) continue;
            std::size_t size = 2;
            for (const auto& p : *paths) size += p.size() - 2;
            if (size >= best_size) continue;
            std::sort(paths->begin(), paths->end(), [](const auto& a, const auto& b) {
                return a.size() != b.size() ? a.size() < b.size() : a < b;
            });
            best_size = size;
            best = MinorModel{MinorPattern::kK23, {u, v}, std::move(*paths), {}};
        }
    }
    return best;
}

std::string state_message(const char* what, const std::vector<int>& cycle, const std::vector<int>& r, int a, int b,
                          int x, const std::vector<int>& p, const std::vector<int>& q) {
    std::ostringstream os;
    os << "extract_from_k4: " << what << " (C=" << describe(cycle) << " R=" << describe(r) << " a=" << a << " b=" << b
       << " x=" << x << " P=" << describe(p) << " Q=" << describe(q) << ")";
    return os.str();
}

Embedding expect_kind(const Graph& g, Mask set, std::initializer_list<int> allowed, const std::string& context) {
    auto e = embed_vertex_set(g, VertexSet(set));
    if (!e || !validate(g, *e) || std::find(allowed.begin(), allowed.end(), static_cast<int>(e->kind->index())) == allowed.end()) {
        throw InternalInvariantError(context + ": vertex set " + describe(VertexSet(set).to_vector()) +
                                     " is not the expected obstruction");
    }
    return std::move(*e);
}

constexpr int kThetaIndex = 5;
constexpr int kClosedThetaIndex = 6;
constexpr int kWheelIndex = 7;

}  // namespace

bool validate(const Graph& g, const MinorModel& m) {
    const int n = g.order();
    auto in_range = [&](int v) { return v >= 0 && v < n; };
    for (int b : m.branch)
        if (!in_range(b)) return false;

    std::vector<std::pair<int, int>> pairs;
    if (m.pattern == MinorPattern::kK4) {
        if (m.branch.size() != 4 || m.paths.size() != 6) return false;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) pairs.emplace_back(m.branch[i], m.branch[j]);
    } else {
        if (m.branch.size() != 2 || m.paths.size() != 3) return false;
        for (int i = 0; i < 3; ++i) pairs.emplace_back(m.branch[0], m.branch[1]);
    }
    Mask used = mask_of(m.branch);
    if (popcount(used) != static_cast<int>(m.branch.size())) return false;
    for (std::size_t i = 0; i < m.paths.size(); ++i) {
        const auto& p = m.paths[i];
        if (p.size() < 2 || p.front() != pairs[i].first || p.back() != pairs[i].second) return false;
        if (m.pattern == MinorPattern::kK23 && p.size() < 3) return false;
        for (std::size_t t = 0; t + 1 < p.size(); ++t)
            if (!in_range(p[t + 1]) || !g.adjacent(p[t], p[t + 1])) return false;
        for (std::size_t t = 1; t + 1 < p.size(); ++t) {
            if (used & bit(p[t])) return false;
            used |= bit(p[t]);
        }
    }
    if (m.pattern == MinorPattern::kK4) {
        if (m.sets.size() != 4) return false;
        Mask seen = 0;
        for (const VertexSet& a : m.sets) {
            if (a.empty() || (a.bits() & seen) || !a.subset_of(g.vertices()) || !is_connected(g, a)) return false;
            seen |= a.bits();
        }
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                if (!(neighborhood(g, m.sets[i].bits()) & m.sets[j].bits())) return false;
    }
    return true;
}

bool has_k4_minor(const Graph& g0) {
    Graph g = g0;
    Mask alive = low_bits(g.order());
    while (alive) {
        bool reduced = false;
        for (int v : VertexSet(alive)) {
            const Mask nb = g.row(v) & alive;
            const int d = popcount(nb);
            if (d > 2) continue;
            if (d == 2) {
                const int a = lowest(nb);
                const int b = lowest(nb & (nb - 1));
                if (!g.adjacent(a, b)) g.add_edge(a, b);
            }
            alive &= ~bit(v);
            reduced = true;
            break;
        }
        if (!reduced) return true;  // minimum degree >= 3
    }
    return false;
}

std::optional<MinorModel> find_subdivision(const Graph& g, MinorPattern pattern) {
    return pattern == MinorPattern::kK4 ? find_k4_subdivision(g) : find_k23_subdivision(g);
}

Embedding extract_from_k4(const Graph& g, const MinorModel& model) {
    if (model.pattern != MinorPattern::kK4 || !validate(g, model)) throw PreconditionError("extract_from_k4: invalid K4 model");
    if (!is_triangle_free(g)) throw PreconditionError("extract_from_k4: graph has a triangle");
    if (!is_two_connected(g)) throw PreconditionError("extract_from_k4: graph is not 2-connected");
    const int n = g.order();
    const Mask all = low_bits(n);
    const Mask A1 = model.sets[0].bits(), A2 = model.sets[1].bits(), A3 = model.sets[2].bits(), A4 = model.sets[3].bits();

    // Induced cycle through A1, A2, A3: shortest P in A1+A2 between the parts
    // touching A3, closed by a shortest Q inside A3.
    const Mask touch3 = neighborhood(g, A3);
    auto p = shortest_path(g, A1 & touch3, A2 & touch3, A1 | A2);
    if (!p) throw InternalInvariantError("extract_from_k4: no path between A1 and A2");
    const int x = p->front(), y = p->back();
    auto q = shortest_path(g, g.row(x) & A3, g.row(y) & A3, A3);
    if (!q) throw InternalInvariantError("extract_from_k4: no path inside A3");
    const Mask c = mask_of(*p) | mask_of(*q);
    std::vector<int> cycle = VertexSet(c).to_vector();
    if (!is_chordless_cycle(g, c)) {
        throw InternalInvariantError(state_message("C is not a chordless cycle", cycle, {}, -1, -1, -1, *p, *q));
    }

    // A vertex with two or more neighbours on C gives a theta or a wheel.
    for (int z : VertexSet(all & ~c)) {
        if (popcount(g.row(z) & c) >= 2) {
            return expect_kind(g, c | bit(z), {kThetaIndex, kWheelIndex}, "extract_from_k4 (attachment)");
        }
    }

    // Paths from a vertex of A4 into C through each of A1, A2, A3; two of
    // their landing points are non-adjacent, so a C-to-C path exists.
    const int hub4 = lowest(A4);
    std::vector<int> landing;
    for (Mask ai : {A1, A2, A3}) {
        auto pi = shortest_path(g, bit(hub4), c & ai, ai | A4);
        if (!pi) throw InternalInvariantError(state_message("no path from A4 into C", cycle, {}, -1, -1, -1, *p, *q));
        landing.push_back(pi->back());
    }
    bool nonadjacent_pair = false;
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) nonadjacent_pair = nonadjacent_pair || !g.adjacent(landing[i], landing[j]);
    if (!nonadjacent_pair) throw InternalInvariantError(state_message("landing points pairwise adjacent", cycle, {}, -1, -1, -1, *p, *q));

    // R: shortest path between non-adjacent vertices of C with interior off C.
    std::vector<int> r;
    for (int a : VertexSet(c)) {
        const Mask far = c & ~g.row(a) & ~bit(a);
        if (!far) continue;
        const Mask start_frontier = g.row(a) & ~c;
        auto tail = shortest_path(g, start_frontier, neighborhood(g, far) & ~c, all & ~c);
        if (!tail) continue;
        const int last = tail->back();
        const int b = lowest(g.row(last) & far);
        std::vector<int> cand{a};
        cand.insert(cand.end(), tail->begin(), tail->end());
        cand.push_back(b);
        if (r.empty() || cand.size() < r.size()) r = std::move(cand);
    }
    if (r.empty()) throw InternalInvariantError(state_message("no C-to-C path", cycle, {}, -1, -1, -1, *p, *q));
    const int a = r.front(), b = r.back();
    const Mask interior = mask_of(r) & ~bit(a) & ~bit(b);

    const Mask touched = neighborhood(g, interior) & c & ~bit(a) & ~bit(b);
    if (!touched) return expect_kind(g, c | mask_of(r), {kThetaIndex}, "extract_from_k4 (theta on C+R)");

    const int xc = lowest(touched);
    if (!g.adjacent(xc, a) || !g.adjacent(xc, b)) {
        throw InternalInvariantError(state_message("attachment not adjacent to both ends of R", cycle, r, a, b, xc, *p, *q));
    }
    const Mask rim = (c | mask_of(r)) & ~bit(xc);
    if (!is_chordless_cycle(g, rim)) {
        throw InternalInvariantError(state_message("rerouted cycle has a chord", cycle, r, a, b, xc, *p, *q));
    }
    return expect_kind(g, rim | bit(xc), {kWheelIndex}, "extract_from_k4 (rerouted wheel)");
}

Embedding extract_from_k23(const Graph& g, const MinorModel& model) {
    if (model.pattern != MinorPattern::kK23 || !validate(g, model)) throw PreconditionError("extract_from_k23: invalid K23 subdivision");
    if (!is_triangle_free(g)) throw PreconditionError("extract_from_k23: graph has a triangle");
    if (!is_two_connected(g)) throw PreconditionError("extract_from_k23: graph is not 2-connected");
    if (has_k4_minor(g)) throw PreconditionError("extract_from_k23: graph has a K4 minor");

    const int u = model.branch[0], v = model.branch[1];
    std::vector<Mask> inner;
    for (const auto& p : model.paths) {
        // Induced apart from a possible u-v edge: consecutive vertices only.
        for (std::size_t i = 0; i < p.size(); ++i)
            for (std::size_t j = i + 2; j < p.size(); ++j) {
                if (i == 0 && j + 1 == p.size()) continue;
                if (g.adjacent(p[i], p[j])) throw PreconditionError("extract_from_k23: subdivision is not vertex-minimum (chord)");
            }
        inner.push_back(mask_of(p) & ~bit(u) & ~bit(v));
    }
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (neighborhood(g, inner[i]) & inner[j]) {
                throw InternalInvariantError("extract_from_k23: edge between path interiors despite no K4 minor");
            }
    return expect_kind(g, model.vertices().bits(), {g.adjacent(u, v) ? kClosedThetaIndex : kThetaIndex}, "extract_from_k23");
}

HamCycle outerplanar_hamiltonian(const Graph& g) {
    if (!is_two_connected(g)) throw PreconditionError("outerplanar_hamiltonian: graph is not 2-connected");
    if (has_k4_minor(g)) throw PreconditionError("outerplanar_hamiltonian: graph has a K4 minor");
    if (find_k23_subdivision(g)) throw PreconditionError("outerplanar_hamiltonian: graph has a K23 minor");
    auto c = hamiltonian_cycle(g);
    if (!c) throw InternalInvariantError("outerplanar_hamiltonian: 2-connected outerplanar graph without Hamiltonian cycle");
    return *c;
}

Certificate tf_certify(const Graph& g, TfTrace* trace) {
    if (auto t = find_triangle(g)) throw PreconditionError("tf_certify: graph has a triangle");
    if (!is_two_connected(g)) throw PreconditionError("tf_certify: graph is not 2-connected");
    TfTrace local;
    TfTrace& tr = trace ? *trace : local;

    if (auto k4 = find_subdivision(g, MinorPattern::kK4)) {
        tr.stage = TfTrace::Stage::kK4Extraction;
        return extract_from_k4(g, *k4);
    }
    if (auto k23 = find_subdivision(g, MinorPattern::kK23)) {
        tr.stage = TfTrace::Stage::kK23Extraction;
        return extract_from_k23(g, *k23);
    }
    tr.stage = TfTrace::Stage::kOuterplanar;
    return outerplanar_hamiltonian(g);
}

}  // namespace hamcert
