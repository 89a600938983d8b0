#include "ecg/polytope.hpp"

#include "ecg/errors.hpp"
#include "ecg/lp.hpp"

#include <algorithm>
#include <string>

namespace ecg {

namespace {

void check_arity(const Polytope& p) {
    for (const auto& row : p.rows) {
        if (static_cast<int>(row.coefficients.size()) != p.dimension) {
            throw ValidationError("polytope row arity does not match dimension");
        }
    }
}

/// Solves rows(subset) . x = rhs(subset) exactly; nullopt when singular.
std::optional<std::vector<Rational>> solve_square(const Polytope& p,
                                                  const std::vector<int>& subset) {
    const int d = p.dimension;
    std::vector<std::vector<Rational>> a(d, std::vector<Rational>(d + 1));
    for (int r = 0; r < d; ++r) {
        const auto& row = p.rows[subset[r]];
        for (int c = 0; c < d; ++c) a[r][c] = row.coefficients[c];
        a[r][d] = row.rhs;
    }
    for (int col = 0; col < d; ++col) {
        int pivot = -1;
        for (int r = col; r < d; ++r) {
            if (a[r][col] != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) return std::nullopt;
        std::swap(a[col], a[pivot]);
        const Rational inv = Rational(1) / a[col][col];
        for (int c = col; c <= d; ++c) a[col][c] *= inv;
        for (int r = 0; r < d; ++r) {
            if (r == col || a[r][col] == 0) continue;
            const Rational factor = a[r][col];
            for (int c = col; c <= d; ++c) a[r][c] -= factor * a[col][c];
        }
    }
    std::vector<Rational> x(d);
    for (int r = 0; r < d; ++r) x[r] = a[r][d];
    return x;
}

bool satisfies_all(const Polytope& p, const std::vector<Rational>& x) {
    for (const auto& row : p.rows) {
        Rational lhs = 0;
        for (int c = 0; c < p.dimension; ++c) lhs += row.coefficients[c] * x[c];
        if (lhs > row.rhs) return false;
    }
    return true;
}

}  // namespace

bool is_bounded(const Polytope& p) {
    check_arity(p);
    LinearProgram lp;
    lp.objective.assign(p.dimension, Rational(0));
    lp.lower_bounds.assign(p.dimension, std::nullopt);
    for (const auto& row : p.rows) {
        lp.constraints.push_back({row.coefficients, Relation::less_equal, row.rhs});
    }
    for (int j = 0; j < p.dimension; ++j) {
        lp.objective[j] = 1;
        for (Sense sense : {Sense::maximize, Sense::minimize}) {
            lp.sense = sense;
            LPResult r = solve_lp(lp);
            if (r.status == LPStatus::unbounded) return false;
            if (r.status == LPStatus::infeasible) return true;
        }
        lp.objective[j] = 0;
    }
    return true;
}

std::vector<std::vector<Rational>> enumerate_vertices(const Polytope& p,
                                                      const VertexEnumOptions& options) {
    check_arity(p);
    if (p.dimension > options.max_dimension) {
        throw LimitError("vertex enumeration refused: dimension " +
                         std::to_string(p.dimension) + " exceeds limit " +
                         std::to_string(options.max_dimension));
    }
    if (p.dimension == 0) return {};
    if (!is_bounded(p)) {
        throw UnboundedError("vertex enumeration requires a bounded polytope");
    }

    const int d = p.dimension;
    const int m = static_cast<int>(p.rows.size());
    std::vector<std::vector<Rational>> vertices;
    if (m < d) return vertices;

    // Lexicographic sweep over all d-subsets of the rows.
    std::vector<int> subset(d);
    for (int i = 0; i < d; ++i) subset[i] = i;
    for (;;) {
        if (auto x = solve_square(p, subset); x && satisfies_all(p, *x)) {
            vertices.push_back(std::move(*x));
        }
        int i = d - 1;
        while (i >= 0 && subset[i] == m - d + i) --i;
        if (i < 0) break;
        ++subset[i];
        for (int k = i + 1; k < d; ++k) subset[k] = subset[k - 1] + 1;
    }

    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    return vertices;
}

}  // namespace ecg
