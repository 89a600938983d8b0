#pragma once

#include "ecg/rational.hpp"

#include <vector>

namespace ecg {

/// One halfspace: coefficients . x <= rhs.
struct HalfSpace {
    std::vector<Rational> coefficients;
    Rational rhs;
};

/// H-representation of a polyhedron. Nonnegativity bounds, when wanted, are
/// ordinary rows (-x_i <= 0). Vertex enumeration accepts bounded polytopes
/// only; boundedness is detected, not assumed.
struct Polytope {
    int dimension = 0;
    std::vector<HalfSpace> rows;
};

struct VertexEnumOptions {
    /// Refusal threshold for the exhaustive basis sweep.
    int max_dimension = 14;
};

/// True iff every coordinate is bounded above and below over the polyhedron
/// (checked exactly with 2*dimension LPs). An infeasible polytope counts as
/// bounded.
bool is_bounded(const Polytope& p);

/// All vertices, exact and deduplicated, in lexicographic order. Works by
/// exhaustive basis enumeration: every dimension-sized subset of rows is
/// solved exactly and filtered for feasibility. Throws LimitError past
/// max_dimension and UnboundedError when the input is unbounded.
std::vector<std::vector<Rational>> enumerate_vertices(const Polytope& p,
                                                      const VertexEnumOptions& options = {});

}  // namespace ecg
