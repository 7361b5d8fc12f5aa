#include "hamcert/verifier.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <thread>

#include "hamcert/connectivity.hpp"
#include "hamcert/errors.hpp"
#include "hamcert/graph6.hpp"
#include "hamcert/hamilton.hpp"
#include "hamcert/isomorphism.hpp"
#include "hamcert/split_certify.hpp"

namespace hamcert {

namespace {

void check_order(const Graph& g, const char* what) {
    if (g.order() > kObstructionCheckMaxOrder) {
        throw PreconditionError(std::string(what) + ": at most " + std::to_string(kObstructionCheckMaxOrder) +
                                " vertices supported, got " + std::to_string(g.order()));
    }
}

int min_degree_within(const Graph& g, Mask x) {
    int best = kMaxVertices;
    for (int v : VertexSet(x)) best = std::min(best, popcount(g.row(v) & x));
    return best;
}

bool class_predicate(const Graph& g, GraphClass cls) {
    switch (cls) {
        case GraphClass::kAll: return true;
        case GraphClass::kSplit: return split_partition(g).has_value();
        case GraphClass::kTriangleFree: return is_triangle_free(g);
    }
    return false;
}

GraphClass graph_class(VerifyClass cls) {
    switch (cls) {
        case VerifyClass::kSplit: return GraphClass::kSplit;
        case VerifyClass::kTriangleFree: return GraphClass::kTriangleFree;
        default: return GraphClass::kAll;
    }
}

// Spoke sets on an m-cycle with at least three spokes and no two cyclically
// adjacent, normalized and deduplicated.
std::vector<std::vector<int>> triangle_free_spoke_sets(int m) {
    std::set<std::vector<int>> out;
    for (Mask s = 0; s < (Mask{1} << m); ++s) {
        if (popcount(s) < 3) continue;
        const Mask rotated = ((s << 1) | (s >> (m - 1))) & low_bits(m);
        if (s & rotated) continue;
        auto k = normalize(kind::Wheel{m, VertexSet(s).to_vector()});
        out.insert(std::get<kind::Wheel>(k).spokes);
    }
    return {out.begin(), out.end()};
}

}  // namespace

bool is_hc_obstruction(const Graph& g) {
    check_order(g, "is_hc_obstruction");
    if (!is_two_connected(g) || hamiltonian_cycle(g)) return false;
    const Mask full = low_bits(g.order());
    for (Mask x = full - 1; x > 0; --x) {
        if (popcount(x) < 3 || min_degree_within(g, x) < 2) continue;
        const Graph h = induced_subgraph(g, VertexSet(x)).graph;
        if (is_two_connected(h) && !hamiltonian_cycle(h)) return false;
    }
    return true;
}

bool is_hp_obstruction(const Graph& g) {
    check_order(g, "is_hp_obstruction");
    if (g.order() == 0 || !is_connected(g) || hamiltonian_path(g)) return false;
    const Mask full = low_bits(g.order());
    for (Mask x = full - 1; x > 0; --x) {
        if (!is_connected(g, VertexSet(x))) continue;
        if (!hamiltonian_path(induced_subgraph(g, VertexSet(x)).graph)) return false;
    }
    return true;
}

bool in_class(const Graph& g, GraphClass cls) {
    return g.order() > 0 && is_connected(g) && class_predicate(g, cls);
}

namespace {

// Adds a vertex adjacent to every subset (non-empty unless `with_isolated`) of
// each graph one level down and keeps one graph per canonical form.
std::vector<std::vector<Graph>> augment_levels(int n_max, GraphClass cls, int max_order, bool with_isolated) {
    if (n_max < 0) throw PreconditionError("enumerate_graphs: negative order");
    if (n_max > max_order || max_order > kCanonicalMaxOrder) {
        throw PreconditionError("enumerate_graphs: builtin enumeration supports at most " + std::to_string(max_order) +
                                " vertices, got " + std::to_string(n_max));
    }
    std::vector<std::vector<Graph>> levels(n_max + 1);
    if (n_max >= 1) levels[1].push_back(Graph(1));
    for (int n = 2; n <= n_max; ++n) {
        std::map<std::string, Graph> seen;
        for (const Graph& g : levels[n - 1]) {
            for (Mask s = with_isolated ? 0 : 1; s < (Mask{1} << (n - 1)); ++s) {
                Graph h(n);
                for (auto [a, b] : g.edges()) h.add_edge(a, b);
                for (int v : VertexSet(s)) h.add_edge(v, n - 1);
                if (!class_predicate(h, cls)) continue;
                std::string canon = canonical_form(h);
                if (seen.count(canon)) continue;
                Graph c = parse_graph6(canon);
                seen.emplace(std::move(canon), std::move(c));
            }
        }
        for (auto& [canon, graph] : seen) levels[n].push_back(std::move(graph));
    }
    return levels;
}

}  // namespace

std::vector<std::vector<Graph>> enumerate_graphs_up_to(int n_max, GraphClass cls, int max_order) {
    return augment_levels(n_max, cls, max_order, false);
}

std::vector<Graph> enumerate_all_graphs(int n, int max_order) {
    if (n < 0) throw PreconditionError("enumerate_all_graphs: negative order");
    if (n == 0) return {Graph(0)};
    return std::move(augment_levels(n, GraphClass::kAll, max_order, true)[n]);
}

std::vector<Graph> enumerate_graphs(int n, GraphClass cls, int max_order) {
    if (n < 1) throw PreconditionError("enumerate_graphs: order must be positive");
    return std::move(enumerate_graphs_up_to(n, cls, max_order)[n]);
}

std::vector<Graph> filter_graphs(const std::vector<Graph>& source, int n, GraphClass cls) {
    std::vector<Graph> out;
    for (const Graph& g : source)
        if ((n < 0 || g.order() == n) && in_class(g, cls)) out.push_back(g);
    return out;
}

std::vector<ObstructionKind> expected_catalog(VerifyClass cls, const std::vector<int>& orders) {
    const std::set<int> wanted(orders.begin(), orders.end());
    std::vector<ObstructionKind> kinds;
    auto offer = [&](const ObstructionKind& k) {
        if (wanted.count(vertex_count(k))) kinds.push_back(normalize(k));
    };
    const int n_max = wanted.empty() ? 0 : *wanted.rbegin();
    switch (cls) {
        case VerifyClass::kSplit:
            for (int k = 2; 2 * k + 1 <= n_max; ++k) offer(kind::Nova{k});
            offer(kind::Snare{});
            break;
        case VerifyClass::kTriangleFree:
            for (int a = 2; a <= n_max; ++a)
                for (int b = a; a + b <= n_max; ++b)
                    for (int c = b; a + b + c - 1 <= n_max; ++c) {
                        offer(kind::Theta{{a, b, c}});
                        if (a >= 3) offer(kind::ClosedTheta{{a, b, c}});
                    }
            for (int m = 6; m + 1 <= n_max; ++m)
                for (auto& spokes : triangle_free_spoke_sets(m)) offer(kind::Wheel{m, spokes});
            break;
        case VerifyClass::kHamiltonianPath:
            offer(kind::Claw{});
            offer(kind::Net{});
            break;
        case VerifyClass::kAll:
            break;
    }
    return kinds;
}

ObstructionReport verify_characterization(const VerifyOptions& options) {
    if (options.n_max < 1) throw PreconditionError("verify: max order must be positive");
    if (options.jobs < 1) throw PreconditionError("verify: jobs must be positive");
    const GraphClass gcls = graph_class(options.cls);

    std::vector<Graph> graphs;
    std::set<int> orders;
    if (options.source) {
        for (const Graph& g : *options.source) {
            if (g.order() > options.n_max) continue;
            orders.insert(g.order());
            if (in_class(g, gcls)) graphs.push_back(g);
        }
    } else {
        auto levels = enumerate_graphs_up_to(options.n_max, gcls, options.builtin_max_order);
        for (int n = 1; n <= options.n_max; ++n) {
            orders.insert(n);
            for (Graph& g : levels[n]) graphs.push_back(std::move(g));
        }
    }

    const bool path_mode = options.cls == VerifyClass::kHamiltonianPath;
    std::vector<char> hit(graphs.size(), 0);
    auto work = [&](std::size_t first) {
        for (std::size_t i = first; i < graphs.size(); i += options.jobs)
            hit[i] = path_mode ? is_hp_obstruction(graphs[i]) : is_hc_obstruction(graphs[i]);
    };
    if (options.jobs == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (int j = 0; j < options.jobs; ++j) pool.emplace_back(work, static_cast<std::size_t>(j));
        for (auto& t : pool) t.join();
    }

    ObstructionReport report;
    report.cls = options.cls;
    report.orders.assign(orders.begin(), orders.end());
    report.graphs_checked = graphs.size();

    std::map<std::string, ObstructionKind> catalog;
    for (const ObstructionKind& k : expected_catalog(options.cls, report.orders))
        catalog.emplace(canonical_form(generate(k)), k);

    std::map<std::pair<int, std::string>, ObstructionRecord> found;
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        if (!hit[i]) continue;
        ObstructionRecord r;
        r.n = graphs[i].order();
        r.canon = canonical_form(graphs[i]);
        r.kind = recognize_obstruction(graphs[i]);
        r.expected = catalog.count(r.canon) > 0;
        found.emplace(std::make_pair(r.n, r.canon), std::move(r));
    }
    std::set<std::string> found_canon;
    for (auto& [key, r] : found) {
        if (!r.kind) ++report.unrecognized;
        found_canon.insert(r.canon);
        report.found.push_back(std::move(r));
    }
    for (const auto& [canon, k] : catalog)
        if (!found_canon.count(canon)) report.missing.push_back(k);

    if (options.cls != VerifyClass::kAll) {
        const bool all_expected = std::all_of(report.found.begin(), report.found.end(),
                                              [](const ObstructionRecord& r) { return r.expected; });
        report.pass = all_expected && report.missing.empty() && report.unrecognized == 0;
    }
    return report;
}

std::string ObstructionReport::text() const {
    std::ostringstream os;
    const char* name = to_string(cls);
    for (const ObstructionRecord& r : found) {
        const char* verdict = !r.kind ? "UNRECOGNIZED" : (r.expected || !pass) ? "OK" : "UNEXPECTED";
        os << "RECORD " << name << ' ' << r.n << ' ' << r.canon << ' ' << (r.kind ? to_string(*r.kind) : "UNRECOGNIZED")
           << ' ' << verdict << '\n';
    }
    for (const ObstructionKind& k : missing) os << "MISSING " << name << ' ' << vertex_count(k) << ' ' << to_string(k) << '\n';
    os << "SUMMARY class=" << name << " orders=";
    if (orders.empty()) {
        os << "none";
    } else {
        os << orders.front();
        if (orders.size() > 1) os << ".." << orders.back();
    }
    os << " graphs=" << graphs_checked << " obstructions=" << found.size() << " unrecognized=" << unrecognized
       << " missing=" << missing.size() << ' ' << (pass ? (*pass ? "PASS" : "FAIL") : "INFO") << '\n';
    return os.str();
}

const char* to_string(VerifyClass cls) {
    switch (cls) {
        case VerifyClass::kSplit: return "split";
        case VerifyClass::kTriangleFree: return "tf";
        case VerifyClass::kHamiltonianPath: return "hp";
        case VerifyClass::kAll: return "all";
    }
    return "?";
}

std::optional<VerifyClass> parse_verify_class(std::string_view name) {
    if (name == "split") return VerifyClass::kSplit;
    if (name == "tf") return VerifyClass::kTriangleFree;
    if (name == "hp") return VerifyClass::kHamiltonianPath;
    if (name == "all") return VerifyClass::kAll;
    return std::nullopt;
}

}  // namespace hamcert
