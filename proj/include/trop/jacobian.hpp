#pragma once

#include <optional>

#include "trop/divisor.hpp"
#include "trop/linalg.hpp"
#include "trop/metric_graph.hpp"
#include "trop/pl_function.hpp"

namespace trop {

// Gram matrix of the edge-length pairing on a cycle basis: entry (i,j) =
// sum over edges of cycle_i(e) * cycle_j(e) * len(e). Symmetric, positive
// definite for genus >= 1.
struct PeriodMatrix {
  QMat gram;
  CycleBasis basis;
  int genus() const { return static_cast<int>(gram.size()); }
};

PeriodMatrix period_matrix(const MetricGraph& g, const CycleBasis& basis);

// Gram matrix for arbitrary integer cycle rows (used for transported and
// unimodularly transformed bases).
QMat gram_of_cycles(const MetricGraph& g, const std::vector<std::vector<int>>& rows);

// A point of the Jacobian torus in the dual basis of the cycle basis,
// considered modulo the lattice spanned by the gram rows.
struct JacobianPoint {
  QVec coords;
};

// Integer combination expressing v in the gram-row lattice, if any.
std::optional<IVec> lattice_member(const PeriodMatrix& pm, const QVec& v);

bool lattice_equal(const PeriodMatrix& pm, const JacobianPoint& a, const JacobianPoint& b);

enum class PathStrategy { Bfs, Dfs };

// Integral of the basis cycles along a path from base to p; well defined
// modulo the gram-row lattice.
JacobianPoint abel_jacobi(const MetricGraph& g, const CycleBasis& basis, const GraphPoint& base,
                          const GraphPoint& p, PathStrategy strategy = PathStrategy::Bfs);

// Linear extension of abel_jacobi to a degree-zero divisor. Throws
// NonZeroDegree otherwise.
JacobianPoint divisor_class(const MetricGraph& g, const CycleBasis& basis, const GraphPoint& base,
                            const Divisor& d, PathStrategy strategy = PathStrategy::Bfs);

// Tropical Abel theorem: degree zero and lattice-trivial class.
bool is_principal(const MetricGraph& g, const Divisor& d);

// Integer-sloped F with divisor_of(F) = d and F(gauge) = 0, found by an
// exact weighted-Laplacian solve on the subdivision at support(d) and
// gauge. Throws NotPrincipal when d is not principal.
PLFunction lift_to_function(const MetricGraph& g, const Divisor& d, const GraphPoint& gauge);

// Abel-Jacobi increment around a full traversal of basis cycle i, as the
// sum of single-edge chain pairings along an explicit closed walk.
QVec cycle_traversal_increment(const MetricGraph& g, const CycleBasis& basis, int i);

}  // namespace trop
