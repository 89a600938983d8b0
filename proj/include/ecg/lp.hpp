#pragma once

#include "ecg/rational.hpp"

#include <optional>
#include <vector>

namespace ecg {

enum class Relation { less_equal, greater_equal, equal };
enum class Sense { minimize, maximize };
enum class LPStatus { optimal, infeasible, unbounded };

struct LinearConstraint {
    std::vector<Rational> coefficients;
    Relation relation = Relation::less_equal;
    Rational rhs;
};

/// Dense LP over exact rationals. Variables default to a lower bound of 0;
/// a nullopt lower bound makes the variable free. All rows must have the
/// same arity as the objective.
struct LinearProgram {
    Sense sense = Sense::minimize;
    std::vector<Rational> objective;
    std::vector<LinearConstraint> constraints;
    /// One entry per variable, or empty for the all-zero default.
    std::vector<std::optional<Rational>> lower_bounds;

    std::size_t variable_count() const { return objective.size(); }
};

/// When optimal, `primal` satisfies every constraint exactly and attains
/// `value`, and `dual` (one multiplier per constraint) certifies optimality:
/// complementary slackness and the dual sign conditions hold exactly.
///
/// Sign convention for duals, per constraint relation:
///   minimize:  <= rows have dual <= 0,  >= rows have dual >= 0, = rows free;
///              reduced costs c - A'y are >= 0 (= 0 on free variables).
///   maximize:  <= rows have dual >= 0,  >= rows have dual <= 0, = rows free;
///              reduced costs A'y - c are >= 0 (= 0 on free variables).
/// The dual objective y'b + (reduced costs)'(lower bounds) equals `value`.
struct LPResult {
    LPStatus status = LPStatus::infeasible;
    Rational value;
    std::vector<Rational> primal;
    std::vector<Rational> dual;
};

/// Exact two-phase tableau simplex with Bland's anti-cycling rule.
/// Deterministic for fixed input; never touches floating point.
/// Throws ValidationError on malformed arity.
LPResult solve_lp(const LinearProgram& lp);

}  // namespace ecg
