#include "hamcert/families.hpp"

#include <algorithm>
#include <sstream>

#include "hamcert/connectivity.hpp"
#include "hamcert/isomorphism.hpp"

namespace hamcert {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::vector<int> normalize_spokes(int m, std::vector<int> spokes) {
    std::vector<int> best;
    for (int reflect = 0; reflect < 2; ++reflect) {
        for (int r = 0; r < m; ++r) {
            std::vector<int> img;
            img.reserve(spokes.size());
            for (int p : spokes) img.push_back(reflect ? ((r - p) % m + m) % m : (p + r) % m);
            std::sort(img.begin(), img.end());
            if (best.empty() || img < best) best = std::move(img);
        }
    }
    return best;
}

Graph theta_graph(const std::array<int, 3>& l, bool closed) {
    const int n = l[0] + l[1] + l[2] - 1;
    Graph g(n);
    const int u = 0;
    const int v = l[0];
    for (int i = 0; i < l[0]; ++i) g.add_edge(i, i + 1);  // u .. v
    int prev = v;
    int next = v + 1;
    for (int i = 1; i < l[1]; ++i, ++next) {
        g.add_edge(prev, next);
        prev = next;
    }
    g.add_edge(prev, u);
    prev = u;
    for (int i = 1; i < l[2]; ++i, ++next) {
        g.add_edge(prev, next);
        prev = next;
    }
    g.add_edge(prev, v);
    if (closed) g.add_edge(u, v);
    return g;
}

Graph sun_graph(int n, bool apex) {
    Graph g(2 * n + (apex ? 1 : 0));
    for (int i = 0; i < 2 * n; ++i) g.add_edge(i, (i + 1) % (2 * n));
    // v_{2i} is vertex 2i-1: the odd indices.
    for (int a = 1; a < 2 * n; a += 2) {
        for (int b = a + 2; b < 2 * n; b += 2) {
            if (!g.adjacent(a, b)) g.add_edge(a, b);
        }
        if (apex) g.add_edge(a, 2 * n);
    }
    return g;
}

bool matches(const Graph& g, const ObstructionKind& k) {
    return vertex_count(k) == g.order() && is_isomorphic(g, generate(k));
}

std::optional<ObstructionKind> recognize_theta(const Graph& g) {
    std::vector<int> branch;
    for (int v = 0; v < g.order(); ++v) {
        if (g.degree(v) >= 3) branch.push_back(v);
    }
    if (branch.size() != 2) return std::nullopt;
    VertexSet rest = g.vertices();
    rest.erase(branch[0]);
    rest.erase(branch[1]);
    const auto comps = connected_components(g, rest);
    if (comps.size() != 3) return std::nullopt;
    std::array<int, 3> lengths{};
    for (int i = 0; i < 3; ++i) lengths[i] = comps[i].size() + 1;
    std::sort(lengths.begin(), lengths.end());
    ObstructionKind k = g.adjacent(branch[0], branch[1]) ? ObstructionKind{kind::ClosedTheta{lengths}}
                                                         : ObstructionKind{kind::Theta{lengths}};
    if (lengths[0] < 2 || !matches(g, k)) return std::nullopt;
    return k;
}

std::optional<ObstructionKind> recognize_wheel(const Graph& g) {
    const int n = g.order();
    if (n < 5) return std::nullopt;
    for (int hub = 0; hub < n; ++hub) {
        if (g.degree(hub) < 3) continue;
        const Mask rim = low_bits(n) & ~bit(hub);
        bool two_regular = true;
        for (int v : VertexSet(rim)) two_regular = two_regular && popcount(g.row(v) & rim) == 2;
        if (!two_regular || !is_connected(g, VertexSet(rim))) continue;

        // Walk the rim from its smallest vertex.
        std::vector<int> pos(n, -1);
        int prev = -1;
        int cur = lowest(rim);
        for (int i = 0; i < n - 1; ++i) {
            pos[cur] = i;
            const Mask nb = g.row(cur) & rim & ~(prev >= 0 ? bit(prev) : 0);
            prev = cur;
            cur = lowest(nb);
        }
        std::vector<int> spokes;
        for (int v : g.neighbors(hub)) spokes.push_back(pos[v]);
        ObstructionKind k = kind::Wheel{n - 1, normalize_spokes(n - 1, spokes)};
        if (matches(g, k)) return k;
    }
    return std::nullopt;
}

std::string join(const std::vector<int>& xs) {
    std::ostringstream os;
    for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? "," : "") << xs[i];
    return os.str();
}

}  // namespace

ObstructionKind normalize(const ObstructionKind& k) {
    return std::visit(overloaded{
                          [](kind::Theta t) -> ObstructionKind {
                              std::sort(t.lengths.begin(), t.lengths.end());
                              return t;
                          },
                          [](kind::ClosedTheta t) -> ObstructionKind {
                              std::sort(t.lengths.begin(), t.lengths.end());
                              return t;
                          },
                          [](const kind::Wheel& w) -> ObstructionKind {
                              return kind::Wheel{w.cycle, normalize_spokes(w.cycle, w.spokes)};
                          },
                          [](const auto& other) -> ObstructionKind { return other; },
                      },
                      k);
}

void check_parameters(const ObstructionKind& k) {
    auto fail = [&](const std::string& why) { throw PreconditionError("invalid parameters for " + to_string(k) + ": " + why); };
    std::visit(overloaded{
                   [&](const kind::Sun& s) {
                       if (s.n < 2) fail("n must be >= 2");
                   },
                   [&](const kind::Nova& s) {
                       if (s.n < 2) fail("n must be >= 2");
                   },
                   [&](const kind::Theta& t) {
                       for (int l : t.lengths)
                           if (l < 2) fail("path lengths must be >= 2");
                   },
                   [&](const kind::ClosedTheta& t) {
                       for (int l : t.lengths)
                           if (l < 2) fail("path lengths must be >= 2");
                   },
                   [&](const kind::Wheel& w) {
                       if (w.cycle < 4) fail("cycle length must be >= 4");
                       std::vector<int> s = w.spokes;
                       std::sort(s.begin(), s.end());
                       if (std::adjacent_find(s.begin(), s.end()) != s.end()) fail("duplicate spoke");
                       if (s.size() < 3) fail("at least three spokes required");
                       if (s.front() < 0 || s.back() >= w.cycle) fail("spoke position outside the cycle");
                   },
                   [](const auto&) {},
               },
               k);
    if (vertex_count(k) > kMaxVertices) fail("more than 64 vertices");
}

int vertex_count(const ObstructionKind& k) {
    return std::visit(overloaded{
                          [](const kind::Claw&) { return 4; },
                          [](const kind::Net&) { return 6; },
                          [](const kind::Snare&) { return 7; },
                          [](const kind::Sun& s) { return 2 * s.n; },
                          [](const kind::Nova& s) { return 2 * s.n + 1; },
                          [](const kind::Theta& t) { return t.lengths[0] + t.lengths[1] + t.lengths[2] - 1; },
                          [](const kind::ClosedTheta& t) { return t.lengths[0] + t.lengths[1] + t.lengths[2] - 1; },
                          [](const kind::Wheel& w) { return w.cycle + 1; },
                      },
                      k);
}

Graph generate(const ObstructionKind& k) {
    check_parameters(k);
    return std::visit(overloaded{
                          [](const kind::Claw&) { return Graph(4, {{0, 3}, {1, 3}, {2, 3}}); },
                          [](const kind::Net&) {
                              return Graph(6, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 4}, {2, 5}});
                          },
                          [](const kind::Snare&) {
                              return add_dominating_vertex(Graph(6, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 4}, {2, 5}}));
                          },
                          [](const kind::Sun& s) { return sun_graph(s.n, false); },
                          [](const kind::Nova& s) { return sun_graph(s.n, true); },
                          [](const kind::Theta& t) { return theta_graph(t.lengths, false); },
                          [](const kind::ClosedTheta& t) { return theta_graph(t.lengths, true); },
                          [](const kind::Wheel& w) {
                              Graph g = cycle_graph(w.cycle);
                              Graph h(w.cycle + 1);
                              for (auto [a, b] : g.edges()) h.add_edge(a, b);
                              for (int p : w.spokes) h.add_edge(p, w.cycle);
                              return h;
                          },
                      },
                      k);
}

std::optional<ObstructionKind> recognize_obstruction(const Graph& g) {
    const int n = g.order();
    for (ObstructionKind k : {ObstructionKind{kind::Claw{}}, ObstructionKind{kind::Net{}}, ObstructionKind{kind::Snare{}}}) {
        if (matches(g, k)) return k;
    }
    if (n >= 5 && n % 2 == 1 && matches(g, kind::Nova{(n - 1) / 2})) return kind::Nova{(n - 1) / 2};
    if (n >= 4 && n % 2 == 0 && matches(g, kind::Sun{n / 2})) return kind::Sun{n / 2};
    if (auto t = recognize_theta(g)) return t;
    return recognize_wheel(g);
}

std::string to_string(const ObstructionKind& k) {
    auto lens = [](const std::array<int, 3>& l) { return join({l.begin(), l.end()}); };
    return std::visit(overloaded{
                          [](const kind::Claw&) -> std::string { return "claw"; },
                          [](const kind::Net&) -> std::string { return "net"; },
                          [](const kind::Snare&) -> std::string { return "snare"; },
                          [](const kind::Sun& s) { return "sun " + std::to_string(s.n); },
                          [](const kind::Nova& s) { return "nova " + std::to_string(s.n); },
                          [&](const kind::Theta& t) { return "theta " + lens(t.lengths); },
                          [&](const kind::ClosedTheta& t) { return "closed-theta " + lens(t.lengths); },
                          [](const kind::Wheel& w) { return "wheel " + std::to_string(w.cycle) + " " + join(w.spokes); },
                      },
                      k);
}

ObstructionKind parse_kind(std::string_view family, const std::vector<int>& params) {
    auto need = [&](std::size_t count) {
        if (params.size() != count) {
            throw PreconditionError(std::string(family) + " takes " + std::to_string(count) + " parameter(s)");
        }
    };
    ObstructionKind k;
    if (family == "claw") {
        need(0);
        k = kind::Claw{};
    } else if (family == "net") {
        need(0);
        k = kind::Net{};
    } else if (family == "snare") {
        need(0);
        k = kind::Snare{};
    } else if (family == "sun") {
        need(1);
        k = kind::Sun{params[0]};
    } else if (family == "nova") {
        need(1);
        k = kind::Nova{params[0]};
    } else if (family == "theta") {
        need(3);
        k = kind::Theta{{params[0], params[1], params[2]}};
    } else if (family == "closed-theta") {
        need(3);
        k = kind::ClosedTheta{{params[0], params[1], params[2]}};
    } else if (family == "wheel") {
        if (params.empty()) throw PreconditionError("wheel takes a cycle length and spoke positions");
        k = kind::Wheel{params[0], {params.begin() + 1, params.end()}};
    } else {
        throw PreconditionError("unknown family '" + std::string(family) + "'");
    }
    check_parameters(k);
    return k;
}

std::optional<std::array<int, 3>> find_triangle(const Graph& g) {
    for (auto [u, v] : g.edges()) {
        const Mask common = g.row(u) & g.row(v) & ~low_bits(v + 1);
        if (common) return std::array<int, 3>{u, v, lowest(common)};
    }
    return std::nullopt;
}

bool is_triangle_free(const Graph& g) { return !find_triangle(g).has_value(); }

bool is_triangle_free_kind(const ObstructionKind& k) {
    return std::visit(overloaded{
                          [](const kind::Claw&) { return true; },
                          [](const kind::Theta&) { return true; },
                          [](const kind::ClosedTheta& t) {
                              return *std::min_element(t.lengths.begin(), t.lengths.end()) >= 3;
                          },
                          [](const kind::Wheel& w) {
                              std::vector<int> s = w.spokes;
                              std::sort(s.begin(), s.end());
                              for (std::size_t i = 0; i < s.size(); ++i) {
                                  const int next = i + 1 < s.size() ? s[i + 1] : s[0] + w.cycle;
                                  if (next - s[i] == 1) return false;
                              }
                              return w.cycle >= 5;
                          },
                          [](const auto&) { return false; },
                      },
                      k);
}

}  // namespace hamcert
