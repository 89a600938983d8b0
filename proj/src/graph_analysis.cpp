#include "ecg/graph_analysis.hpp"

#include "ecg/errors.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>

namespace ecg {

namespace {

using Mask = std::uint64_t;

void check_size(const ConflictGraph& g, const AnalysisLimits& limits, const char* what) {
    const int n = g.vertex_count();
    if (n > limits.max_vertices) {
        throw LimitError(std::string(what) + " refused: " + std::to_string(n) +
                         " vertices exceed the limit of " +
                         std::to_string(limits.max_vertices));
    }
    if (n > 64) {
        throw LimitError(std::string(what) + ": graphs over 64 vertices are unsupported");
    }
}

std::vector<Mask> adjacency_masks(const ConflictGraph& g) {
    const int n = g.vertex_count();
    std::vector<Mask> adj(n, 0);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            if (a != b && g.adjacent(a, b)) adj[a] |= Mask(1) << b;
        }
    }
    return adj;
}

std::vector<int> mask_to_vector(Mask m) {
    std::vector<int> out;
    while (m) {
        const int v = std::countr_zero(m);
        out.push_back(v);
        m &= m - 1;
    }
    return out;
}

void bron_kerbosch(Mask r, Mask p, Mask x, const std::vector<Mask>& adj,
                   std::vector<std::vector<int>>& out) {
    if (p == 0 && x == 0) {
        out.push_back(mask_to_vector(r));
        return;
    }
    // Pivot on the vertex of P | X with the most neighbours in P.
    int pivot = -1;
    int best = -1;
    for (Mask scan = p | x; scan;) {
        const int u = std::countr_zero(scan);
        scan &= scan - 1;
        const int score = std::popcount(p & adj[u]);
        if (score > best) {
            best = score;
            pivot = u;
        }
    }
    for (Mask candidates = p & ~adj[pivot]; candidates;) {
        const int v = std::countr_zero(candidates);
        candidates &= candidates - 1;
        const Mask vbit = Mask(1) << v;
        bron_kerbosch(r | vbit, p & adj[v], x & adj[v], adj, out);
        p &= ~vbit;
        x |= vbit;
    }
}

std::vector<std::vector<int>> enumerate_maximal_cliques(const std::vector<Mask>& adj, int n) {
    std::vector<std::vector<int>> out;
    if (n == 0) return out;
    const Mask all = n == 64 ? ~Mask(0) : (Mask(1) << n) - 1;
    bron_kerbosch(0, all, 0, adj, out);
    std::sort(out.begin(), out.end());
    return out;
}

/// Depth-first search over chordless paths rooted at the cycle's least vertex.
/// Paths extend in ascending vertex order, so the first closed cycle reported
/// is the lexicographically least canonical representative.
class OddHoleSearch {
public:
    explicit OddHoleSearch(const std::vector<Mask>& adj) : adj_(adj), n_((int)adj.size()) {}

    std::optional<std::vector<int>> run() {
        for (int root = 0; root < n_; ++root) {
            path_.assign(1, root);
            in_path_ = Mask(1) << root;
            blocked_ = 0;
            if (extend()) return path_;
        }
        return std::nullopt;
    }

private:
    // blocked_ holds neighbours of interior path vertices (path[1..k-1]):
    // touching them would create a chord.
    bool extend() {
        const int root = path_.front();
        const int last = path_.back();
        const Mask higher = ~((Mask(2) << root) - 1);  // vertices > root
        Mask candidates = adj_[last] & higher & ~in_path_ & ~blocked_;
        while (candidates) {
            const int v = std::countr_zero(candidates);
            candidates &= candidates - 1;
            if (path_.size() >= 2 && (adj_[v] & (Mask(1) << root))) {
                // Closing edge; only odd cycles of length >= 5, directed so
                // that the second vertex is smaller than the last.
                if (path_.size() >= 4 && path_.size() % 2 == 0 && path_[1] < v) {
                    path_.push_back(v);
                    return true;
                }
                continue;  // a chord for any longer cycle through v
            }
            const Mask saved_blocked = blocked_;
            path_.push_back(v);
            in_path_ |= Mask(1) << v;
            if (path_.size() > 2) blocked_ |= adj_[last];  // last becomes interior
            if (extend()) return true;
            path_.pop_back();
            in_path_ &= ~(Mask(1) << v);
            blocked_ = saved_blocked;
        }
        return false;
    }

    const std::vector<Mask>& adj_;
    int n_;
    std::vector<int> path_;
    Mask in_path_ = 0;
    Mask blocked_ = 0;
};

}  // namespace

std::vector<std::vector<int>> maximal_cliques(const ConflictGraph& g,
                                              const AnalysisLimits& limits) {
    check_size(g, limits, "maximal clique enumeration");
    return enumerate_maximal_cliques(adjacency_masks(g), g.vertex_count());
}

std::vector<std::vector<int>> maximal_stable_sets(const ConflictGraph& g,
                                                  const AnalysisLimits& limits) {
    check_size(g, limits, "maximal stable set enumeration");
    return enumerate_maximal_cliques(adjacency_masks(complement(g)), g.vertex_count());
}

std::pair<Rational, std::vector<int>> max_weight_clique(const ConflictGraph& g,
                                                        const WeightVector& weights,
                                                        const AnalysisLimits& limits) {
    if (static_cast<int>(weights.size()) != g.vertex_count()) {
        throw ValidationError("weight vector does not cover all vertices");
    }
    for (const auto& w : weights) {
        if (w < 0) throw ValidationError("negative weight");
    }
    if (g.vertex_count() == 0) return {Rational(0), {}};

    Rational best(0);
    std::vector<int> witness;
    bool first = true;
    for (const auto& clique : maximal_cliques(g, limits)) {
        Rational total(0);
        for (int v : clique) total += weights[v];
        if (first || total > best || (total == best && clique < witness)) {
            best = total;
            witness = clique;
            first = false;
        }
    }
    return {best, witness};
}

std::optional<std::vector<int>> find_odd_hole(const ConflictGraph& g,
                                              const AnalysisLimits& limits) {
    check_size(g, limits, "odd hole search");
    if (g.vertex_count() < 5) return std::nullopt;
    const auto adj = adjacency_masks(g);
    OddHoleSearch search(adj);
    return search.run();
}

PerfectionVerdict is_perfect(const ConflictGraph& g, const AnalysisLimits& limits) {
    check_size(g, limits, "perfection test");
    PerfectionVerdict verdict;
    if (auto hole = find_odd_hole(g, limits)) {
        verdict.perfect = false;
        verdict.certificate = PerfectionVerdict::Certificate::odd_hole;
        verdict.cycle = std::move(*hole);
        return verdict;
    }
    if (auto anti = find_odd_hole(complement(g), limits)) {
        verdict.perfect = false;
        verdict.certificate = PerfectionVerdict::Certificate::odd_anti_hole;
        verdict.cycle = std::move(*anti);
        return verdict;
    }
    verdict.perfect = true;
    return verdict;
}

}  // namespace ecg
