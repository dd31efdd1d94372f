#include "trop/jacobian.hpp"

#include <algorithm>
#include <deque>

namespace trop {

QMat gram_of_cycles(const MetricGraph& g, const std::vector<std::vector<int>>& rows) {
  const size_t k = rows.size();
  QMat gram(k, QVec(k, Rat(0)));
  for (int e = 0; e < g.edge_count(); ++e) {
    const Rat& len = g.edge(e).len;
    for (size_t i = 0; i < k; ++i) {
      if (rows[i][e] == 0) continue;
      for (size_t j = 0; j < k; ++j) {
        if (rows[j][e] == 0) continue;
        gram[i][j] += Rat(rows[i][e] * rows[j][e]) * len;
      }
    }
  }
  return gram;
}

PeriodMatrix period_matrix(const MetricGraph& g, const CycleBasis& basis) {
  return PeriodMatrix{gram_of_cycles(g, basis.cycles), basis};
}

std::optional<IVec> lattice_member(const PeriodMatrix& pm, const QVec& v) {
  const int g = pm.genus();
  if (static_cast<int>(v.size()) != g) {
    throw Error("MalformedInput", "coordinate dimension does not match genus");
  }
  if (g == 0) return IVec{};
  // Solve x * gram = v; gram is symmetric so solve gram * x = v.
  auto x = solve(pm.gram, v);
  if (!x) throw Error("InternalInconsistency", "period matrix is singular");
  IVec coeffs;
  for (const Rat& c : *x) {
    if (!is_integer(c)) return std::nullopt;
    coeffs.push_back(c.get_num());
  }
  return coeffs;
}

bool lattice_equal(const PeriodMatrix& pm, const JacobianPoint& a, const JacobianPoint& b) {
  QVec diff(a.coords.size());
  for (size_t i = 0; i < diff.size(); ++i) diff[i] = a.coords[i] - b.coords[i];
  return lattice_member(pm, diff).has_value();
}

namespace {

// Signed edges of a walk, +1 when traversed source -> target.
using Walk = std::vector<std::pair<int, int>>;

// Path between two vertices; BFS gives a shortest-edge-count path, DFS a
// generally different one, which exercises path independence.
Walk find_path(const MetricGraph& g, int from, int to, PathStrategy strategy) {
  const int n = g.vertex_count();
  std::vector<int> parent_vertex(n, -1), parent_e(n, -1), parent_sign(n, 0);
  std::vector<bool> visited(n, false);
  visited[from] = true;
  if (strategy == PathStrategy::Bfs) {
    std::deque<int> queue{from};
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (const auto& end : g.incident(v)) {
        const Edge& e = g.edge(end.edge);
        int w = end.at_source ? e.dst : e.src;
        if (visited[w]) continue;
        visited[w] = true;
        parent_vertex[w] = v;
        parent_e[w] = end.edge;
        parent_sign[w] = end.at_source ? 1 : -1;
        queue.push_back(w);
      }
    }
  } else {
    std::vector<int> stack{from};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      const auto& ends = g.incident(v);
      for (auto it = ends.rbegin(); it != ends.rend(); ++it) {
        const Edge& e = g.edge(it->edge);
        int w = it->at_source ? e.dst : e.src;
        if (visited[w]) continue;
        visited[w] = true;
        parent_vertex[w] = v;
        parent_e[w] = it->edge;
        parent_sign[w] = it->at_source ? 1 : -1;
        stack.push_back(w);
      }
    }
  }
  Walk walk;
  for (int v = to; v != from; v = parent_vertex[v]) {
    walk.emplace_back(parent_e[v], parent_sign[v]);
  }
  std::reverse(walk.begin(), walk.end());
  return walk;
}

// Edge-length pairing of a single directed edge with every cycle row.
void accumulate_pairing(const MetricGraph& g, const std::vector<std::vector<int>>& cycles,
                        int edge, int sign, QVec& coords) {
  const Rat& len = g.edge(edge).len;
  for (size_t j = 0; j < cycles.size(); ++j) {
    if (cycles[j][edge] != 0) coords[j] += Rat(sign * cycles[j][edge]) * len;
  }
}

}  // namespace

JacobianPoint abel_jacobi(const MetricGraph& g, const CycleBasis& basis, const GraphPoint& base,
                          const GraphPoint& p, PathStrategy strategy) {
  Subdivision sub = subdivide(g, {base, p});
  GraphPoint b2 = sub.map_point(g, base);
  GraphPoint p2 = sub.map_point(g, p);
  auto cycles = sub.transport_cycles(g, basis.cycles);
  Walk walk = find_path(sub.graph, sub.graph.vertex_index(b2.vertex),
                        sub.graph.vertex_index(p2.vertex), strategy);
  QVec coords(basis.genus(), Rat(0));
  for (const auto& [edge, sign] : walk) {
    accumulate_pairing(sub.graph, cycles, edge, sign, coords);
  }
  return JacobianPoint{std::move(coords)};
}

JacobianPoint divisor_class(const MetricGraph& g, const CycleBasis& basis, const GraphPoint& base,
                            const Divisor& d, PathStrategy strategy) {
  if (d.degree() != 0) {
    throw Error("NonZeroDegree", "divisor has degree " + d.degree().get_str());
  }
  QVec coords(basis.genus(), Rat(0));
  for (const auto& [p, mult] : d.support()) {
    JacobianPoint a = abel_jacobi(g, basis, base, p, strategy);
    Rat m(mult);
    for (size_t j = 0; j < coords.size(); ++j) coords[j] += m * a.coords[j];
  }
  return JacobianPoint{std::move(coords)};
}

bool is_principal(const MetricGraph& g, const Divisor& d) {
  if (d.degree() != 0) return false;
  CycleBasis basis = homology_basis(g);
  PeriodMatrix pm = period_matrix(g, basis);
  GraphPoint base = GraphPoint::on_vertex(g.vertex_id(0));
  JacobianPoint cls = divisor_class(g, basis, base, d);
  return lattice_member(pm, cls.coords).has_value();
}

PLFunction lift_to_function(const MetricGraph& g, const Divisor& d, const GraphPoint& gauge) {
  if (!is_principal(g, d)) {
    throw Error("NotPrincipal", "divisor is not principal");
  }

  std::vector<GraphPoint> points{gauge};
  for (const auto& [p, m] : d.support()) points.push_back(p);
  Subdivision sub = subdivide(g, points);
  const MetricGraph& sg = sub.graph;
  Divisor dv = d.transport(g, sub);
  const int n = sg.vertex_count();

  // Weighted Laplacian, edge weight 1/len; loops carry no weight (a
  // function linear on an uncut loop is constant on it).
  QMat lap(n, QVec(n, Rat(0)));
  for (const Edge& e : sg.edges()) {
    if (e.src == e.dst) continue;
    Rat w = 1 / e.len;
    lap[e.src][e.src] += w;
    lap[e.dst][e.dst] += w;
    lap[e.src][e.dst] -= w;
    lap[e.dst][e.src] -= w;
  }
  // Sum of outgoing slopes at v equals -(L phi)(v), so solve L phi = -d,
  // pinned by phi(gauge) = 0.
  QVec rhs(n, Rat(0));
  for (const auto& [p, m] : dv.support()) {
    rhs[sg.vertex_index(p.vertex)] = Rat(-m);
  }
  int gv = sg.vertex_index(sub.map_point(g, gauge).vertex);
  std::fill(lap[gv].begin(), lap[gv].end(), Rat(0));
  lap[gv][gv] = 1;
  rhs[gv] = 0;
  auto phi = solve(std::move(lap), std::move(rhs));
  if (!phi) throw Error("InternalInconsistency", "grounded Laplacian solve failed");

  PLFunction on_sub = PLFunction::from_vertex_values(sg, *phi);
  if (!on_sub.is_integer_sloped()) {
    throw Error("InternalInconsistency",
                "lattice test says principal but lifted function has a non-integer slope");
  }
  if (!(divisor_of(on_sub, sg) == dv)) {
    throw Error("InternalInconsistency", "lifted function has the wrong divisor");
  }

  // Express the lift on the original model, with the cut vertices back as
  // interior breakpoints.
  std::map<std::string, PLFunction::Breakpoints> per_edge;
  for (const Edge& e : g.edges()) {
    PLFunction::Breakpoints bps;
    bps.emplace_back(Rat(0), (*phi)[sg.vertex_index(g.vertex_id(e.src))]);
    auto it = sub.splits.find(e.id);
    if (it != sub.splits.end()) {
      for (size_t k = 0; k < it->second.cuts.size(); ++k) {
        bps.emplace_back(it->second.cuts[k],
                         (*phi)[sg.vertex_index(it->second.cut_vertices[k])]);
      }
    }
    bps.emplace_back(e.len, (*phi)[sg.vertex_index(g.vertex_id(e.dst))]);
    per_edge[e.id] = std::move(bps);
  }
  return PLFunction(g, std::move(per_edge));
}

QVec cycle_traversal_increment(const MetricGraph& g, const CycleBasis& basis, int i) {
  const auto& row = basis.cycles.at(i);
  // Directed edge pool of the cycle.
  std::vector<std::pair<int, int>> pool;
  for (int e = 0; e < g.edge_count(); ++e) {
    if (row[e] != 0) pool.emplace_back(e, row[e]);
  }
  if (pool.empty()) return QVec(basis.genus(), Rat(0));

  auto head = [&](const std::pair<int, int>& de) {
    return de.second > 0 ? g.edge(de.first).dst : g.edge(de.first).src;
  };
  auto tail = [&](const std::pair<int, int>& de) {
    return de.second > 0 ? g.edge(de.first).src : g.edge(de.first).dst;
  };

  // Order the pool into an explicit closed walk, then integrate edge by
  // edge.
  std::vector<bool> used(pool.size(), false);
  Walk walk{pool[0]};
  used[0] = true;
  int current = head(pool[0]);
  for (size_t step = 1; step < pool.size(); ++step) {
    bool advanced = false;
    for (size_t k = 0; k < pool.size(); ++k) {
      if (used[k] || tail(pool[k]) != current) continue;
      walk.push_back(pool[k]);
      used[k] = true;
      current = head(pool[k]);
      advanced = true;
      break;
    }
    if (!advanced) throw Error("InternalInconsistency", "cycle row is not a closed walk");
  }
  if (current != tail(pool[0])) {
    throw Error("InternalInconsistency", "cycle walk does not close up");
  }

  QVec coords(basis.genus(), Rat(0));
  for (const auto& [edge, sign] : walk) {
    accumulate_pairing(g, basis.cycles, edge, sign, coords);
  }
  return coords;
}

}  // namespace trop
