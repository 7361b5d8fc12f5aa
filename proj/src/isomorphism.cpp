#include "hamcert/isomorphism.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "hamcert/graph6.hpp"

namespace hamcert {

namespace {

// Refines `color` in place over an adjacency-list graph until the number of
// classes stops growing.
void refine(const std::vector<std::vector<int>>& nbrs, std::vector<int>& color) {
    const std::size_t n = color.size();
    std::size_t classes = 0;
    for (;;) {
        std::vector<std::vector<int>> sig(n);
        for (std::size_t v = 0; v < n; ++v) {
            sig[v].reserve(nbrs[v].size() + 1);
            for (int w : nbrs[v]) sig[v].push_back(color[w]);
            std::sort(sig[v].begin(), sig[v].end());
            sig[v].insert(sig[v].begin(), color[v]);
        }
        std::vector<std::vector<int>> uniq = sig;
        std::sort(uniq.begin(), uniq.end());
        uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
        for (std::size_t v = 0; v < n; ++v) {
            color[v] = static_cast<int>(std::lower_bound(uniq.begin(), uniq.end(), sig[v]) - uniq.begin());
        }
        if (uniq.size() == classes) return;
        classes = uniq.size();
    }
}

std::vector<std::vector<int>> adjacency_lists(const Graph& g, int offset = 0) {
    std::vector<std::vector<int>> out(g.order());
    for (int v = 0; v < g.order(); ++v)
        for (int w : g.neighbors(v)) out[v].push_back(w + offset);
    return out;
}

// Backtracking over injective, colour-preserving maps g -> h.
class IsoSearch {
  public:
    IsoSearch(const Graph& g, const Graph& h, std::vector<int> gcol, std::vector<int> hcol)
        : g_(g), h_(h), gcol_(std::move(gcol)), hcol_(std::move(hcol)), map_(g.order(), -1) {
        // Rarest colour class first, then grow along edges so that each new
        // vertex is constrained by an already mapped neighbour.
        const int n = g.order();
        std::map<int, int> freq;
        for (int c : gcol_) ++freq[c];
        Mask left = low_bits(n);
        while (left) {
            int start = -1;
            for (int v : VertexSet(left)) {
                if (start < 0 || freq[gcol_[v]] < freq[gcol_[start]]) start = v;
            }
            std::vector<int> queue{start};
            left &= ~bit(start);
            for (std::size_t i = 0; i < queue.size(); ++i) {
                order_.push_back(queue[i]);
                for (int w : VertexSet(g.row(queue[i]) & left)) {
                    queue.push_back(w);
                    left &= ~bit(w);
                }
            }
        }
    }

    bool run() { return step(0, 0); }
    const std::vector<int>& map() const { return map_; }

  private:
    bool step(std::size_t depth, Mask used) {
        if (depth == order_.size()) return true;
        const int v = order_[depth];
        Mask cand = low_bits(h_.order()) & ~used;
        for (std::size_t i = 0; i < depth && cand; ++i) {
            const int p = order_[i];
            if (g_.adjacent(v, p))
                cand &= h_.row(map_[p]);
            else
                cand &= ~h_.row(map_[p]);
        }
        for (int w : VertexSet(cand)) {
            if (hcol_[w] != gcol_[v]) continue;
            map_[v] = w;
            if (step(depth + 1, used | bit(w))) return true;
        }
        map_[v] = -1;
        return false;
    }

    const Graph& g_;
    const Graph& h_;
    std::vector<int> gcol_, hcol_;
    std::vector<int> map_;
    std::vector<int> order_;
};

// Column j of the labeled adjacency matrix: bit i set iff order[i] ~ v, i < j.
Mask column(const Graph& g, const std::vector<int>& order, std::size_t j, int v) {
    Mask c = 0;
    for (std::size_t i = 0; i < j; ++i)
        if (g.adjacent(order[i], v)) c |= bit(static_cast<int>(i));
    return c;
}

// Lexicographic comparison of columns read from row 0 downward.
int compare_columns(Mask a, Mask b) {
    const Mask diff = a ^ b;
    if (!diff) return 0;
    return (a & (diff & -diff)) ? 1 : -1;
}

bool twins(const Graph& g, int u, int w) {
    return (g.row(u) & ~bit(w)) == (g.row(w) & ~bit(u));
}

// Maximises the column sequence over labelings that list colour classes in
// increasing colour order.
class CanonSearch {
  public:
    explicit CanonSearch(const Graph& g) : g_(g), color_(refine_colors(g)) {}

    std::vector<int> run() {
        std::vector<int> order;
        std::vector<Mask> cols;
        search(order, cols);
        return best_order_;
    }

  private:
    int compare_to_best(const std::vector<Mask>& cols) const {
        for (std::size_t i = 0; i < cols.size(); ++i) {
            if (int c = compare_columns(cols[i], best_cols_[i]); c != 0) return c;
        }
        return 0;
    }

    void search(std::vector<int>& order, std::vector<Mask>& cols) {
        const int n = g_.order();
        const std::size_t j = order.size();
        if (static_cast<int>(j) == n) {
            if (!have_best_ || compare_to_best(cols) > 0) {
                best_order_ = order;
                best_cols_ = cols;
                have_best_ = true;
            }
            return;
        }
        Mask placed = 0;
        for (int v : order) placed |= bit(v);
        const Mask remaining = low_bits(n) & ~placed;

        int min_color = n + 1;
        for (int v : VertexSet(remaining)) min_color = std::min(min_color, color_[v]);

        // Only candidates with the lexicographically largest next column can
        // lead to the maximum.
        std::vector<int> cand;
        Mask best_col = 0;
        for (int v : VertexSet(remaining)) {
            if (color_[v] != min_color) continue;
            const Mask c = column(g_, order, j, v);
            const int cmp = cand.empty() ? 1 : compare_columns(c, best_col);
            if (cmp > 0) {
                cand.assign(1, v);
                best_col = c;
            } else if (cmp == 0) {
                cand.push_back(v);
            }
        }

        cols.push_back(best_col);
        std::vector<int> tried;
        for (int v : cand) {
            if (have_best_ && compare_to_best(cols) < 0) break;
            // Swapping twins is an automorphism fixing everything placed so far.
            if (std::any_of(tried.begin(), tried.end(), [&](int u) { return twins(g_, u, v); })) continue;
            tried.push_back(v);
            order.push_back(v);
            search(order, cols);
            order.pop_back();
        }
        cols.pop_back();
    }

    const Graph& g_;
    std::vector<int> color_;
    std::vector<int> best_order_;
    std::vector<Mask> best_cols_;
    bool have_best_ = false;
};

}  // namespace

std::vector<int> refine_colors(const Graph& g) {
    std::vector<int> color(g.order());
    for (int v = 0; v < g.order(); ++v) color[v] = g.degree(v);
    refine(adjacency_lists(g), color);
    return color;
}

std::optional<std::vector<int>> find_isomorphism(const Graph& g, const Graph& h) {
    const int n = g.order();
    if (n != h.order() || g.size() != h.size() || g.degree_sequence() != h.degree_sequence()) return std::nullopt;

    // Refine on the disjoint union so colour numbers are comparable.
    auto nbrs = adjacency_lists(g);
    auto hn = adjacency_lists(h, n);
    nbrs.insert(nbrs.end(), hn.begin(), hn.end());
    std::vector<int> color(2 * n);
    for (int v = 0; v < n; ++v) {
        color[v] = g.degree(v);
        color[n + v] = h.degree(v);
    }
    refine(nbrs, color);
    std::vector<int> gcol(color.begin(), color.begin() + n);
    std::vector<int> hcol(color.begin() + n, color.end());
    auto gs = gcol, hs = hcol;
    std::sort(gs.begin(), gs.end());
    std::sort(hs.begin(), hs.end());
    if (gs != hs) return std::nullopt;

    IsoSearch search(g, h, std::move(gcol), std::move(hcol));
    if (!search.run()) return std::nullopt;
    return search.map();
}

bool is_isomorphic(const Graph& g, const Graph& h) { return find_isomorphism(g, h).has_value(); }

std::vector<int> canonical_labeling(const Graph& g) {
    if (g.order() > kCanonicalMaxOrder) {
        throw PreconditionError("canonical form limited to " + std::to_string(kCanonicalMaxOrder) + " vertices");
    }
    const std::vector<int> order = CanonSearch(g).run();
    std::vector<int> lab(g.order());
    for (int i = 0; i < g.order(); ++i) lab[order[i]] = i;
    return lab;
}

std::string canonical_form(const Graph& g) { return write_graph6(g.relabeled(canonical_labeling(g))); }

}  // namespace hamcert
