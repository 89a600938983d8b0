#include "ecg/lp.hpp"

#include "ecg/errors.hpp"

#include <cstddef>
#include <limits>
#include <utility>

namespace ecg {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

/// Standard-form tableau: minimize c'z subject to T z = b, z >= 0, where the
/// initial basis is one designated identity column per row (slack or
/// artificial). Rows flagged redundant during phase 1 are skipped thereafter.
class Tableau {
public:
    Tableau(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), cells_(rows * (cols + 1)), basis_(rows, kNone),
          redundant_(rows, false), objective_(cols + 1) {}

    Rational& at(std::size_t r, std::size_t c) { return cells_[r * (cols_ + 1) + c]; }
    const Rational& at(std::size_t r, std::size_t c) const {
        return cells_[r * (cols_ + 1) + c];
    }
    Rational& rhs(std::size_t r) { return at(r, cols_); }
    const Rational& rhs(std::size_t r) const { return at(r, cols_); }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t basis(std::size_t r) const { return basis_[r]; }
    void set_basis(std::size_t r, std::size_t c) { basis_[r] = c; }
    bool redundant(std::size_t r) const { return redundant_[r]; }
    void mark_redundant(std::size_t r) { redundant_[r] = true; }

    /// Reduced-cost row; objective_[cols_] holds minus the current objective.
    Rational& reduced_cost(std::size_t c) { return objective_[c]; }
    Rational current_value() const { return -objective_[cols_]; }

    void pivot(std::size_t pr, std::size_t pc) {
        const Rational inv = Rational(1) / at(pr, pc);
        for (std::size_t c = 0; c <= cols_; ++c) {
            at(pr, c) *= inv;
        }
        for (std::size_t r = 0; r < rows_; ++r) {
            if (r == pr || redundant_[r]) continue;
            const Rational factor = at(r, pc);
            if (factor == 0) continue;
            for (std::size_t c = 0; c <= cols_; ++c) {
                at(r, c) -= factor * at(pr, c);
            }
        }
        if (objective_[pc] != 0) {
            const Rational factor = objective_[pc];
            for (std::size_t c = 0; c <= cols_; ++c) {
                objective_[c] -= factor * at(pr, c);
            }
        }
        basis_[pr] = pc;
    }

    /// Rebuilds the reduced-cost row for the given cost vector under the
    /// current basis (costs beyond the vector's length are zero).
    void price(const std::vector<Rational>& costs) {
        objective_.assign(cols_ + 1, Rational(0));
        for (std::size_t c = 0; c < costs.size(); ++c) {
            objective_[c] = costs[c];
        }
        for (std::size_t r = 0; r < rows_; ++r) {
            if (redundant_[r] || basis_[r] == kNone) continue;
            const Rational cb =
                basis_[r] < costs.size() ? costs[basis_[r]] : Rational(0);
            if (cb == 0) continue;
            for (std::size_t c = 0; c <= cols_; ++c) {
                objective_[c] -= cb * at(r, c);
            }
        }
    }

    /// Bland's rule: entering column = least index with negative reduced cost
    /// among columns < allowed_cols; leaving row = least ratio, ties broken by
    /// least basis index. Returns optimal or unbounded.
    LPStatus run_simplex(std::size_t allowed_cols) {
        for (;;) {
            std::size_t entering = kNone;
            for (std::size_t c = 0; c < allowed_cols; ++c) {
                if (objective_[c] < 0) {
                    entering = c;
                    break;
                }
            }
            if (entering == kNone) return LPStatus::optimal;

            std::size_t leaving = kNone;
            Rational best_ratio;
            for (std::size_t r = 0; r < rows_; ++r) {
                if (redundant_[r]) continue;
                const Rational& a = at(r, entering);
                if (a <= 0) continue;
                Rational ratio = rhs(r) / a;
                if (leaving == kNone || ratio < best_ratio ||
                    (ratio == best_ratio && basis_[r] < basis_[leaving])) {
                    leaving = r;
                    best_ratio = std::move(ratio);
                }
            }
            if (leaving == kNone) return LPStatus::unbounded;
            pivot(leaving, entering);
        }
    }

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Rational> cells_;
    std::vector<std::size_t> basis_;
    std::vector<bool> redundant_;
    std::vector<Rational> objective_;
};

struct VariableMap {
    // Column of the (shifted) variable; second column when split as p - q.
    std::size_t positive = kNone;
    std::size_t negative = kNone;
    Rational shift;  // finite lower bound, 0 for free variables
};

}  // namespace

LPResult solve_lp(const LinearProgram& lp) {
    const std::size_t n = lp.variable_count();
    for (const auto& row : lp.constraints) {
        if (row.coefficients.size() != n) {
            throw ValidationError("constraint arity does not match objective arity");
        }
    }
    if (!lp.lower_bounds.empty() && lp.lower_bounds.size() != n) {
        throw ValidationError("lower bound count does not match objective arity");
    }

    const bool maximize = lp.sense == Sense::maximize;
    const std::size_t m = lp.constraints.size();

    // Shift bounded variables to zero, split free ones.
    std::vector<VariableMap> vars(n);
    std::size_t structural = 0;
    for (std::size_t j = 0; j < n; ++j) {
        std::optional<Rational> lb =
            lp.lower_bounds.empty() ? std::optional<Rational>(Rational(0))
                                    : lp.lower_bounds[j];
        vars[j].positive = structural++;
        if (lb) {
            vars[j].shift = *lb;
        } else {
            vars[j].negative = structural++;
        }
    }

    // Column layout: structural | one slack per inequality row | artificials.
    std::vector<std::size_t> slack_col(m, kNone);
    std::size_t cols = structural;
    for (std::size_t i = 0; i < m; ++i) {
        if (lp.constraints[i].relation != Relation::equal) {
            slack_col[i] = cols++;
        }
    }
    const std::size_t first_artificial = cols;

    // Shifted rhs and row signs; decide which rows need artificials.
    std::vector<Rational> shifted_rhs(m);
    std::vector<int> row_sign(m, 1);
    std::vector<std::size_t> provider(m, kNone);
    std::size_t artificial_count = 0;
    for (std::size_t i = 0; i < m; ++i) {
        const auto& row = lp.constraints[i];
        Rational b = row.rhs;
        for (std::size_t j = 0; j < n; ++j) {
            if (vars[j].shift != 0) b -= row.coefficients[j] * vars[j].shift;
        }
        if (b < 0) row_sign[i] = -1;
        shifted_rhs[i] = row_sign[i] * b;

        // Slack coefficient after the sign flip; +1 makes it the initial basic.
        int slack_coeff = 0;
        if (row.relation == Relation::less_equal) slack_coeff = row_sign[i];
        if (row.relation == Relation::greater_equal) slack_coeff = -row_sign[i];
        if (slack_coeff == 1) {
            provider[i] = slack_col[i];
        } else {
            provider[i] = first_artificial + artificial_count++;
        }
    }
    cols += artificial_count;

    Tableau tab(m, cols);
    for (std::size_t i = 0; i < m; ++i) {
        const auto& row = lp.constraints[i];
        for (std::size_t j = 0; j < n; ++j) {
            const Rational c = row_sign[i] * row.coefficients[j];
            if (c == 0) continue;
            tab.at(i, vars[j].positive) += c;
            if (vars[j].negative != kNone) tab.at(i, vars[j].negative) -= c;
        }
        if (slack_col[i] != kNone) {
            int slack_coeff =
                row.relation == Relation::less_equal ? row_sign[i] : -row_sign[i];
            tab.at(i, slack_col[i]) = slack_coeff;
        }
        if (provider[i] >= first_artificial) {
            tab.at(i, provider[i]) = 1;
        }
        tab.rhs(i) = shifted_rhs[i];
        tab.set_basis(i, provider[i]);
    }

    // Phase 1: minimize the sum of artificials.
    if (artificial_count > 0) {
        std::vector<Rational> phase1_costs(cols, Rational(0));
        for (std::size_t c = first_artificial; c < cols; ++c) phase1_costs[c] = 1;
        tab.price(phase1_costs);
        tab.run_simplex(cols);
        if (tab.current_value() != 0) {
            LPResult result;
            result.status = LPStatus::infeasible;
            return result;
        }
        // Drive leftover artificials out of the basis; an all-zero row is
        // a redundant constraint.
        for (std::size_t r = 0; r < m; ++r) {
            if (tab.redundant(r) || tab.basis(r) < first_artificial) continue;
            std::size_t pivot_col = kNone;
            for (std::size_t c = 0; c < first_artificial; ++c) {
                if (tab.at(r, c) != 0) {
                    pivot_col = c;
                    break;
                }
            }
            if (pivot_col == kNone) {
                tab.mark_redundant(r);
            } else {
                tab.pivot(r, pivot_col);
            }
        }
    }

    // Phase 2 over the real objective (artificial columns are locked out).
    std::vector<Rational> costs(first_artificial, Rational(0));
    for (std::size_t j = 0; j < n; ++j) {
        const Rational c = maximize ? -lp.objective[j] : lp.objective[j];
        if (c == 0) continue;
        costs[vars[j].positive] += c;
        if (vars[j].negative != kNone) costs[vars[j].negative] -= c;
    }
    tab.price(costs);
    if (tab.run_simplex(first_artificial) == LPStatus::unbounded) {
        LPResult result;
        result.status = LPStatus::unbounded;
        return result;
    }

    LPResult result;
    result.status = LPStatus::optimal;

    std::vector<Rational> z(cols, Rational(0));
    for (std::size_t r = 0; r < m; ++r) {
        if (!tab.redundant(r) && tab.basis(r) != kNone) z[tab.basis(r)] = tab.rhs(r);
    }
    result.primal.resize(n);
    Rational value = 0;
    for (std::size_t j = 0; j < n; ++j) {
        Rational x = z[vars[j].positive] + vars[j].shift;
        if (vars[j].negative != kNone) x -= z[vars[j].negative];
        result.primal[j] = x;
        value += lp.objective[j] * x;
    }
    result.value = value;

    // Duals: for the standard-form rows, y_i = -reduced_cost(provider_i);
    // undo the row sign flip, then the max<->min negation.
    result.dual.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
        if (tab.redundant(i)) {
            result.dual[i] = 0;
            continue;
        }
        Rational y = -tab.reduced_cost(provider[i]);
        y *= row_sign[i];
        if (maximize) y = -y;
        result.dual[i] = y;
    }
    return result;
}

}  // namespace ecg
