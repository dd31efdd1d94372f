#pragma once

#include <string>

#include "trop/linalg.hpp"
#include "trop/metric_graph.hpp"

namespace trop {

// Finitely generated abelian group given by invariant factors
// d1 | d2 | ... (each > 1) and a free rank.
struct FiniteAbelianGroup {
  std::vector<Int> factors;
  int free_rank = 0;

  Int order() const {  // only meaningful when free_rank == 0
    Int n = 1;
    for (const Int& d : factors) n *= d;
    return n;
  }
  std::string to_string() const;

  friend bool operator==(const FiniteAbelianGroup&, const FiniteAbelianGroup&) = default;
};

// Cokernel invariant factors of an integer matrix (via its Smith form).
FiniteAbelianGroup cokernel(const IMat& m, int ambient_rank);

// Combinatorial Laplacian of the underlying multigraph; loops are ignored.
IMat laplacian_matrix(const MetricGraph& g);

// Number of spanning trees = determinant of the reduced Laplacian.
Int spanning_tree_count(const MetricGraph& g);

// Jacobian of a unit-length graph from the reduced Laplacian. Throws
// NonUnitLengths when some edge length differs from 1.
FiniteAbelianGroup discrete_jacobian_via_laplacian(const MetricGraph& g);

// Same group from the cycle Gram matrix of the pairing <e,e'> = [e = e'].
FiniteAbelianGroup discrete_jacobian_via_pairing(const MetricGraph& g);

}  // namespace trop
