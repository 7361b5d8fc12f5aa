#include "hamcert/split_certify.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "hamcert/connectivity.hpp"

namespace hamcert {

namespace {

bool is_clique(const Graph& g, Mask set) {
    for (int v : VertexSet(set))
        if ((g.row(v) & set) != (set & ~bit(v))) return false;
    return true;
}

bool is_stable(const Graph& g, Mask set) {
    for (int v : VertexSet(set))
        if (g.row(v) & set) return false;
    return true;
}

}  // namespace

bool validate(const Graph& g, const SplitPartition& p) {
    return (p.s.bits() & p.k.bits()) == 0 && (p.s | p.k) == g.vertices() && is_stable(g, p.s.bits()) &&
           is_clique(g, p.k.bits());
}

std::optional<SplitPartition> split_partition(const Graph& g) {
    const int n = g.order();
    std::vector<int> byDegree(n);
    std::iota(byDegree.begin(), byDegree.end(), 0);
    std::stable_sort(byDegree.begin(), byDegree.end(), [&](int a, int b) { return g.degree(a) > g.degree(b); });

    // Degree-sequence test: with d1 >= ... >= dn and m = max{i : d_i >= i-1},
    // g is split iff sum_{i<=m} d_i = m(m-1) + sum_{i>m} d_i.
    int m = 0;
    while (m < n && g.degree(byDegree[m]) >= m) ++m;
    long top = 0, rest = 0;
    for (int i = 0; i < n; ++i) (i < m ? top : rest) += g.degree(byDegree[i]);
    if (top != static_cast<long>(m) * (m - 1) + rest) return std::nullopt;

    SplitPartition p;
    for (int i = 0; i < n; ++i) (i < m ? p.k : p.s).insert(byDegree[i]);
    if (!validate(g, p)) return std::nullopt;

    // Grow the clique while some stable vertex sees all of it.
    for (bool moved = true; moved;) {
        moved = false;
        for (int x : p.s) {
            if (p.k.subset_of(g.neighbors(x))) {
                p.s.erase(x);
                p.k.insert(x);
                moved = true;
                break;
            }
        }
    }
    return p;
}

namespace {

class SplitCertifier {
  public:
    SplitCertifier(const Graph& g, SplitPartition p, SplitTrace& trace)
        : g_(g), S_(p.s.bits()), K_(p.k.bits()), trace_(trace) {}

    Certificate run() {
        if (!S_) {
            trace_.branch = SplitTrace::Branch::kComplete;
            std::vector<int> order(g_.order());
            std::iota(order.begin(), order.end(), 0);
            return checked(HamCycle{std::move(order)});
        }
        for (int k : VertexSet(K_)) {
            if (stable_degree(k) >= 3) return hub_case();
        }
        trace_.branch = SplitTrace::Branch::kPairSelection;
        return pair_selection_case();
    }

  private:
    int stable_degree(int k) const { return popcount(g_.row(k) & S_); }

    Certificate checked(Certificate c) const {
        if (!validate(g_, c)) throw InternalInvariantError("split_certify produced an invalid certificate: " + format_certificate(c));
        return c;
    }

    Certificate obstruction(Mask set, const ObstructionKind& expected) const {
        auto e = embed_vertex_set(g_, VertexSet(set));
        if (!e || e->kind != expected) {
            throw InternalInvariantError("split_certify: vertex set is not a " + to_string(expected));
        }
        return checked(std::move(*e));
    }

    // --- every clique vertex has at most two stable neighbours -------------

    // Selection graph H: each stable vertex keeps two of its edges.
    Graph selection_graph(const std::vector<std::array<int, 2>>& pick) const {
        Graph h(g_.order());
        for (int s : VertexSet(S_)) {
            h.add_edge(s, pick[s][0]);
            h.add_edge(s, pick[s][1]);
        }
        return h;
    }

    static std::vector<VertexSet> cycles_of(const Graph& h) {
        std::vector<VertexSet> out;
        for (VertexSet comp : connected_components(h)) {
            if (comp.size() < 3) continue;
            bool all_two = true;
            for (int v : comp) all_two = all_two && h.degree(v) == 2;
            if (all_two) out.push_back(comp);
        }
        return out;
    }

    static std::vector<int> walk(const Graph& h, int start) {
        std::vector<int> out{start};
        int prev = -1;
        int cur = start;
        for (;;) {
            Mask nb = h.row(cur) & ~(prev >= 0 ? bit(prev) : 0);
            if (!nb) break;
            const int next = lowest(nb);
            if (next == start) break;
            out.push_back(next);
            prev = cur;
            cur = next;
        }
        return out;
    }

    Certificate pair_selection_case() {
        std::vector<std::array<int, 2>> pick(g_.order(), {-1, -1});
        for (int s : VertexSet(S_)) {
            const Mask nb = g_.row(s);
            pick[s] = {lowest(nb), lowest(nb & (nb - 1))};
        }

        for (;;) {
            const Graph h = selection_graph(pick);
            const auto cycles = cycles_of(h);
            const int count = static_cast<int>(cycles.size());
            if (!trace_.cycle_counts.empty() && count >= trace_.cycle_counts.back()) {
                throw InternalInvariantError("split_certify: re-route did not reduce the number of cycles");
            }
            trace_.cycle_counts.push_back(count);

            if (cycles.empty()) return concatenate_paths(h);

            const Mask c = cycles.front().bits();
            if (c == g_.vertices().bits()) return checked(HamCycle{walk(h, lowest(c))});

            // G[C] is a sun; any clique vertex off C either completes a nova or
            // lets one stable vertex on C re-route to it.
            const Mask outside = K_ & ~c;
            if (!outside) throw InternalInvariantError("split_certify: selection cycle contains the whole clique");
            const int k_out = lowest(outside);
            const Mask attach = g_.row(k_out) & c & S_;
            if (!attach) return obstruction(c | bit(k_out), kind::Nova{popcount(c) / 2});
            const int s = lowest(attach);
            pick[s][0] = k_out;
        }
    }

    Certificate concatenate_paths(const Graph& h) const {
        std::vector<int> order;
        Mask leftover = 0;
        for (VertexSet comp : connected_components(h)) {
            if (comp.size() == 1) {
                leftover |= comp.bits();
                continue;
            }
            int end = -1;
            for (int v : comp)
                if (h.degree(v) == 1) {
                    end = v;
                    break;
                }
            if (end < 0 || !(K_ & bit(end))) throw InternalInvariantError("split_certify: selection path does not end in the clique");
            const auto piece = walk(h, end);
            order.insert(order.end(), piece.begin(), piece.end());
        }
        for (int k : VertexSet(leftover)) {
            if (!(K_ & bit(k))) throw InternalInvariantError("split_certify: isolated stable vertex in selection graph");
            order.push_back(k);
        }
        return checked(HamCycle{std::move(order)});
    }

    // --- some clique vertex has three or more stable neighbours -------------

    Mask nb(int v) const { return g_.row(v); }

    // Statement checks for a hub k with stable neighbours s[0..2]: no second
    // common neighbour, no induced snare, and any two of them with two common
    // neighbours together see the whole clique.
    std::optional<Certificate> hub_checks(int k, const std::array<int, 3>& s) const {
        const Mask common = nb(s[0]) & nb(s[1]) & nb(s[2]) & ~bit(k);
        if (common) return obstruction(bit(k) | bit(lowest(common)) | bit(s[0]) | bit(s[1]) | bit(s[2]), kind::Nova{2});

        std::array<int, 3> other{};
        for (int i = 0; i < 3; ++i) {
            const Mask rest = nb(s[i]) & ~bit(k);
            if (!rest) throw InternalInvariantError("split_certify: stable vertex of degree 1 in a 2-connected graph");
            other[i] = lowest(rest);
        }
        bool cross = false;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                if (i != j && g_.adjacent(s[i], other[j])) cross = true;
        if (!cross) {
            Mask set = bit(k);
            for (int i = 0; i < 3; ++i) set |= bit(s[i]) | bit(other[i]);
            return obstruction(set, kind::Snare{});
        }

        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j)
                if (auto e = pair_union_check(s[i], s[j])) return e;
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j)
                if ((nb(s[i]) | nb(s[j])) != K_) {
                    throw InternalInvariantError("split_certify: two stable neighbours of a hub miss a clique vertex");
                }
        return std::nullopt;
    }

    // Two stable vertices with two common neighbours must see all of K,
    // otherwise the two common neighbours, a missed clique vertex and the two
    // stable vertices induce a 2-nova.
    std::optional<Certificate> pair_union_check(int a, int b) const {
        const Mask common = nb(a) & nb(b);
        if (popcount(common) < 2) return std::nullopt;
        const Mask missed = K_ & ~(nb(a) | nb(b));
        if (!missed) return std::nullopt;
        const int k1 = lowest(common);
        const int k2 = lowest(common & (common - 1));
        return obstruction(bit(k1) | bit(k2) | bit(lowest(missed)) | bit(a) | bit(b), kind::Nova{2});
    }

    static std::vector<int> first_members(Mask m, int count) {
        std::vector<int> out;
        for (int v : VertexSet(m)) {
            if (static_cast<int>(out.size()) == count) break;
            out.push_back(v);
        }
        return out;
    }

    Certificate hub_case() {
        trace_.branch = SplitTrace::Branch::kHubObstruction;

        // No clique vertex has four stable neighbours.
        for (int k : VertexSet(K_)) {
            if (stable_degree(k) < 4) continue;
            const auto s = first_members(g_.row(k) & S_, 4);
            if (auto e = hub_checks(k, {s[0], s[1], s[2]})) return *e;
            const int k2 = lowest(nb(s[3]) & ~bit(k));
            std::vector<int> seen;
            for (int i = 0; i < 3; ++i)
                if (g_.adjacent(s[i], k2)) seen.push_back(s[i]);
            if (seen.size() < 2) throw InternalInvariantError("split_certify: fourth stable neighbour check failed");
            return obstruction(bit(seen[0]) | bit(seen[1]) | bit(s[3]) | bit(k) | bit(k2), kind::Nova{2});
        }

        int hub = -1;
        for (int k : VertexSet(K_))
            if (stable_degree(k) >= 3) {
                hub = k;
                break;
            }
        const auto sv = first_members(g_.row(hub) & S_, 3);
        const std::array<int, 3> s{sv[0], sv[1], sv[2]};
        if (auto e = hub_checks(hub, s)) return *e;

        // K = {hub} + K1 + K2 + K3 with Ki = K - N(si), pairwise disjoint.
        std::array<Mask, 3> part{};
        Mask covered = bit(hub);
        for (int i = 0; i < 3; ++i) {
            part[i] = K_ & ~nb(s[i]);
            if (!part[i]) throw InternalInvariantError("split_certify: K - N(s) empty, clique not maximum");
            if (part[i] & covered) throw InternalInvariantError("split_certify: clique parts overlap");
            covered |= part[i];
        }
        if (covered != K_) throw InternalInvariantError("split_certify: clique parts do not cover K");

        const Mask others = S_ & ~(bit(s[0]) | bit(s[1]) | bit(s[2]));
        if (others) return fourth_stable_case(hub, s, part, lowest(others));

        trace_.branch = SplitTrace::Branch::kHubThreeStable;
        const int k1 = lowest(part[0]), k2 = lowest(part[1]), k3 = lowest(part[2]);
        std::vector<int> order;
        for (int v : VertexSet(K_ & ~(bit(hub) | bit(k1) | bit(k2) | bit(k3)))) order.push_back(v);
        for (int v : {hub, s[0], k2, s[2], k1, s[1], k3}) order.push_back(v);
        return checked(HamCycle{std::move(order)});
    }

    Certificate fourth_stable_case(int hub, const std::array<int, 3>& s, const std::array<Mask, 3>& part, int s4) {
        // At most one neighbour of s4 in each part.
        for (int i = 0; i < 3; ++i) {
            const Mask two = nb(s4) & part[i];
            if (popcount(two) >= 2) {
                Mask set = bit(lowest(two)) | bit(lowest(two & (two - 1))) | bit(s4);
                for (int j = 0; j < 3; ++j)
                    if (j != i) set |= bit(s[j]);
                return obstruction(set, kind::Nova{2});
            }
        }
        if (g_.adjacent(s4, hub)) throw InternalInvariantError("split_certify: hub has a fourth stable neighbour");

        // s4 must see every vertex of every part: a missed vertex z in part c,
        // together with s4's neighbours in the other two parts and s_c, is a 2-nova.
        for (int c = 0; c < 3; ++c) {
            const int a = (c + 1) % 3, b = (c + 2) % 3;
            const Mask ka = nb(s4) & part[a], kb = nb(s4) & part[b];
            if (!ka || !kb) continue;
            const Mask missed = part[c] & ~nb(s4);
            if (missed) {
                return obstruction(bit(lowest(ka)) | bit(lowest(kb)) | bit(lowest(missed)) | bit(s4) | bit(s[c]), kind::Nova{2});
            }
        }
        for (int i = 0; i < 3; ++i) {
            if (popcount(part[i]) != 1 || !(nb(s4) & part[i])) {
                throw InternalInvariantError("split_certify: fourth stable vertex does not see all parts");
            }
        }
        if (popcount(S_) != 4) throw InternalInvariantError("split_certify: more than four stable vertices survived");

        trace_.branch = SplitTrace::Branch::kHubFourStable;
        const int k1 = lowest(part[0]), k2 = lowest(part[1]), k3 = lowest(part[2]);
        return checked(HamCycle{{hub, s[0], k2, s[2], k1, s4, k3, s[1]}});
    }

    const Graph& g_;
    Mask S_;
    Mask K_;
    SplitTrace& trace_;
};

}  // namespace

Certificate split_certify(const Graph& g, SplitTrace* trace) {
    auto p = split_partition(g);
    if (!p) throw PreconditionError("split_certify: graph is not split");
    if (!is_two_connected(g)) throw PreconditionError("split_certify: graph is not 2-connected");
    SplitTrace local;
    SplitTrace& t = trace ? *trace : local;
    t = SplitTrace{};
    return SplitCertifier(g, *p, t).run();
}

}  // namespace hamcert
