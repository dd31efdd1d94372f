#pragma once

#include <optional>
#include <vector>

#include "trop/rational.hpp"

namespace trop {

using QVec = std::vector<Rat>;
using QMat = std::vector<std::vector<Rat>>;
using IVec = std::vector<Int>;
using IMat = std::vector<std::vector<Int>>;

// Exact Gaussian elimination with partial (first-nonzero) pivoting.
// Returns nullopt when the system is singular or inconsistent.
std::optional<QVec> solve(QMat a, QVec b);

// Fraction-free Bareiss determinant over the integers.
Int det(IMat m);

Rat det(QMat m);

// Smith normal form: unimodular u, v with u*m*v = s, s diagonal with the
// divisibility chain s[0] | s[1] | ... Diagonal entries are nonnegative.
struct SmithResult {
  IMat u, s, v;
};
SmithResult smith_normal_form(IMat m);

IMat identity_matrix(int n);
IMat mat_mul(const IMat& a, const IMat& b);

}  // namespace trop
