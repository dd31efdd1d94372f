#include <doctest.h>

#include "test_support.hpp"
#include "trop/discrete.hpp"
#include "trop/jacobian.hpp"

using namespace trop;
using namespace troptest;

namespace {

bool is_unimodular(const IMat& m) {
  Int d = det(m);
  return d == 1 || d == -1;
}

}  // namespace

TEST_CASE("smith normal form anchors") {
  SmithResult id = smith_normal_form(identity_matrix(3));
  CHECK(id.s == identity_matrix(3));

  SmithResult two = smith_normal_form({{Int(2), Int(1)}, {Int(1), Int(2)}});
  CHECK(two.s[0][0] == 1);
  CHECK(two.s[1][1] == 3);
  CHECK(two.s[0][1] == 0);
  CHECK(two.s[1][0] == 0);

  SmithResult zero = smith_normal_form(IMat(2, IVec(3, 0)));
  for (const auto& row : zero.s) {
    for (const Int& x : row) CHECK(x == 0);
  }
}

TEST_CASE("smith normal form properties on random matrices") {
  Rng rng(60);
  std::uniform_int_distribution<int> dim(1, 5), entry(-6, 6);
  for (int trial = 0; trial < 40; ++trial) {
    int rows = dim(rng), cols = dim(rng);
    IMat m(rows, IVec(cols));
    for (auto& row : m) {
      for (Int& x : row) x = entry(rng);
    }
    SmithResult r = smith_normal_form(m);
    CHECK(is_unimodular(r.u));
    CHECK(is_unimodular(r.v));
    CHECK(mat_mul(mat_mul(r.u, m), r.v) == r.s);
    for (int i = 0; i < rows; ++i) {
      for (int j = 0; j < cols; ++j) {
        if (i != j) CHECK(r.s[i][j] == 0);
      }
    }
    for (int k = 0; k + 1 < std::min(rows, cols); ++k) {
      CHECK(r.s[k][k] >= 0);
      if (r.s[k][k] != 0) {
        CHECK(r.s[k + 1][k + 1] % r.s[k][k] == 0);
      } else {
        CHECK(r.s[k + 1][k + 1] == 0);
      }
    }
  }
}

TEST_CASE("discrete jacobian anchors") {
  MetricGraph path = MetricGraph({"a", "b", "c"}, {{"e1", "a", "b", Rat(1)},
                                                   {"e2", "b", "c", Rat(1)}});
  CHECK(discrete_jacobian_via_laplacian(path).factors.empty());
  CHECK(discrete_jacobian_via_pairing(path).factors.empty());
  CHECK(spanning_tree_count(path) == 1);

  MetricGraph banana = banana_graph(3);
  FiniteAbelianGroup b1 = discrete_jacobian_via_laplacian(banana);
  FiniteAbelianGroup b2 = discrete_jacobian_via_pairing(banana);
  CHECK(b1.factors == std::vector<Int>{Int(3)});
  CHECK(b1 == b2);
  CHECK(b1.to_string() == "Z/3");
  CHECK(spanning_tree_count(banana) == 3);

  MetricGraph k4 = complete_graph(4);
  FiniteAbelianGroup j4 = discrete_jacobian_via_laplacian(k4);
  CHECK(j4.order() == 16);
  CHECK(j4 == discrete_jacobian_via_pairing(k4));
  CHECK(spanning_tree_count(k4) == 16);

  // n-cycle: Z/n.
  for (int n = 3; n <= 6; ++n) {
    std::vector<std::string> vs;
    std::vector<EdgeSpec> specs;
    for (int i = 0; i < n; ++i) vs.push_back(vid(i));
    for (int i = 0; i < n; ++i) specs.push_back({eid(i), vid(i), vid((i + 1) % n), Rat(1)});
    MetricGraph cycle(std::move(vs), std::move(specs));
    CHECK(discrete_jacobian_via_laplacian(cycle).factors == std::vector<Int>{Int(n)});
    CHECK(spanning_tree_count(cycle) == n);
  }
}

TEST_CASE("unit length precondition") {
  MetricGraph g = segment_graph(Rat(2));
  CHECK_THROWS_WITH_AS(discrete_jacobian_via_laplacian(g), doctest::Contains("length"), Error);
  CHECK_THROWS_AS(discrete_jacobian_via_pairing(g), Error);
}

TEST_CASE("both presentations agree and match the tree count") {
  Rng rng(314);
  for (int trial = 0; trial < 40; ++trial) {
    MetricGraph g = random_connected_graph(rng, 7, 14, /*unit_lengths=*/true);
    FiniteAbelianGroup a = discrete_jacobian_via_laplacian(g);
    FiniteAbelianGroup b = discrete_jacobian_via_pairing(g);
    CHECK(a.factors == b.factors);
    CHECK(a.free_rank == 0);
    CHECK(b.free_rank == 0);
    CHECK(a.order() == spanning_tree_count(g));

    // det of the cycle Gram matrix counts spanning trees as well.
    CycleBasis basis = homology_basis(g);
    QMat gram = gram_of_cycles(g, basis.cycles);
    IMat igram(gram.size(), IVec(gram.size()));
    for (size_t i = 0; i < gram.size(); ++i) {
      for (size_t j = 0; j < gram.size(); ++j) igram[i][j] = gram[i][j].get_num();
    }
    CHECK(det(igram) == spanning_tree_count(g));
  }
}

TEST_CASE("vertex divisors: metric principality matches the discrete class") {
  // For unit lengths and vertex-supported divisors, principality in the
  // metric sense must coincide with having an integer potential.
  Rng rng(555);
  for (int trial = 0; trial < 25; ++trial) {
    MetricGraph g = random_connected_graph(rng, 6, 10, /*unit_lengths=*/true);
    Divisor d;
    Int total = 0;
    for (int v = 0; v < g.vertex_count() - 1; ++v) {
      int m = std::uniform_int_distribution<int>(-2, 2)(rng);
      d.add(g, GraphPoint::on_vertex(g.vertex_id(v)), m);
      total += m;
    }
    d.add(g, GraphPoint::on_vertex(g.vertex_id(g.vertex_count() - 1)), -total);

    // Independent discrete route: solve the grounded integer Laplacian
    // system over Q and test integrality of the potential.
    const int n = g.vertex_count();
    IMat lap = laplacian_matrix(g);
    QMat a(n, QVec(n, Rat(0)));
    QVec rhs(n, Rat(0));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) a[i][j] = Rat(lap[i][j]);
    }
    for (const auto& [p, m] : d.support()) rhs[g.vertex_index(p.vertex)] = Rat(-m);
    for (int j = 0; j < n; ++j) a[0][j] = (j == 0) ? 1 : 0;
    rhs[0] = 0;
    auto phi = solve(a, rhs);
    REQUIRE(phi.has_value());
    bool integral = true;
    for (const Rat& x : *phi) integral = integral && is_integer(x);

    CHECK(is_principal(g, d) == integral);
  }
}
