#include "trop/discrete.hpp"

#include "trop/jacobian.hpp"

namespace trop {

std::string FiniteAbelianGroup::to_string() const {
  std::string out;
  for (const Int& d : factors) {
    if (!out.empty()) out += " x ";
    out += "Z/" + d.get_str();
  }
  for (int i = 0; i < free_rank; ++i) {
    if (!out.empty()) out += " x ";
    out += "Z";
  }
  return out.empty() ? "0" : out;
}

FiniteAbelianGroup cokernel(const IMat& m, int ambient_rank) {
  SmithResult snf = smith_normal_form(m);
  FiniteAbelianGroup group;
  int rank = 0;
  const int steps = std::min(snf.s.size(), snf.s.empty() ? size_t(0) : snf.s[0].size());
  for (int k = 0; k < steps; ++k) {
    const Int& d = snf.s[k][k];
    if (d == 0) continue;
    ++rank;
    if (d > 1) group.factors.push_back(d);
  }
  group.free_rank = ambient_rank - rank;
  return group;
}

IMat laplacian_matrix(const MetricGraph& g) {
  const int n = g.vertex_count();
  IMat lap(n, IVec(n, 0));
  for (const Edge& e : g.edges()) {
    if (e.src == e.dst) continue;
    lap[e.src][e.src] += 1;
    lap[e.dst][e.dst] += 1;
    lap[e.src][e.dst] -= 1;
    lap[e.dst][e.src] -= 1;
  }
  return lap;
}

namespace {

IMat reduced_laplacian(const MetricGraph& g) {
  // Delete the row and column of the smallest vertex id.
  IMat lap = laplacian_matrix(g);
  const int n = g.vertex_count();
  IMat red(n - 1, IVec(n - 1, 0));
  for (int i = 1; i < n; ++i) {
    for (int j = 1; j < n; ++j) red[i - 1][j - 1] = lap[i][j];
  }
  return red;
}

void require_unit_lengths(const MetricGraph& g) {
  for (const Edge& e : g.edges()) {
    if (e.len != 1) {
      throw Error("NonUnitLengths", "edge " + e.id + " has length " + rat_str(e.len));
    }
  }
}

}  // namespace

Int spanning_tree_count(const MetricGraph& g) {
  if (g.vertex_count() == 1) return 1;
  return det(reduced_laplacian(g));
}

FiniteAbelianGroup discrete_jacobian_via_laplacian(const MetricGraph& g) {
  require_unit_lengths(g);
  if (g.vertex_count() == 1) return FiniteAbelianGroup{};
  return cokernel(reduced_laplacian(g), g.vertex_count() - 1);
}

FiniteAbelianGroup discrete_jacobian_via_pairing(const MetricGraph& g) {
  require_unit_lengths(g);
  CycleBasis basis = homology_basis(g);
  QMat gram = gram_of_cycles(g, basis.cycles);
  IMat igram(gram.size(), IVec(gram.size(), 0));
  for (size_t i = 0; i < gram.size(); ++i) {
    for (size_t j = 0; j < gram.size(); ++j) igram[i][j] = gram[i][j].get_num();
  }
  return cokernel(igram, basis.genus());
}

}  // namespace trop
