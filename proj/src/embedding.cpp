#include "trop/embedding.hpp"

#include <algorithm>
#include <map>
#include <optional>

namespace trop {

namespace {

void require_simple(const MetricGraph& g) {
  if (!g.is_loopless() || g.has_parallel_edges()) {
    throw Error("ModelNotSimple", "model has a loop or parallel edges");
  }
}

}  // namespace

PLFunction build_f1(const MetricGraph& g) {
  require_simple(g);
  std::map<std::string, PLFunction::Breakpoints> per_edge;
  for (const Edge& e : g.edges()) {
    per_edge[e.id] = {{Rat(0), Rat(0)}, {e.len / 2, e.len / 2}, {e.len, Rat(0)}};
  }
  return PLFunction(g, std::move(per_edge));
}

PLFunction build_f2(const MetricGraph& g) {
  require_simple(g);
  std::map<std::string, PLFunction::Breakpoints> per_edge;
  for (int i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edge(i);
    Rat sigma(i + 1);
    per_edge[e.id] = {{Rat(0), Rat(0)}, {e.len / 2, sigma * e.len / 2}, {e.len, Rat(0)}};
  }
  return PLFunction(g, std::move(per_edge));
}

PLFunction build_f3(const MetricGraph& g) {
  require_simple(g);
  std::map<std::string, PLFunction::Breakpoints> per_edge;
  for (const Edge& e : g.edges()) {
    Rat alpha_v(e.src + 1), alpha_w(e.dst + 1);
    Rat gap = abs(alpha_w - alpha_v);  // nonzero: loopless, distinct values
    // Smallest ramp slope magnitude with half-width delta < len/4, so the
    // plateaus strictly contain the outer quarters of the edge.
    Int mu = rat_floor(2 * gap / e.len) + 1;
    Rat delta = gap / (2 * Rat(mu));
    per_edge[e.id] = {{Rat(0), alpha_v},
                      {e.len / 2 - delta, alpha_v},
                      {e.len / 2 + delta, alpha_w},
                      {e.len, alpha_w}};
  }
  return PLFunction(g, std::move(per_edge));
}

namespace {

QVec3 cross(const QVec3& a, const QVec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

Rat dot(const QVec3& a, const QVec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

QVec3 sub3(const QVec3& a, const QVec3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }

bool is_zero3(const QVec3& v) { return v[0] == 0 && v[1] == 0 && v[2] == 0; }

struct Intersection {
  enum Kind { None, Point, Overlap } kind = None;
  Rat t, s;  // parameters on the two segments for Kind::Point
};

// Exact intersection of [a1,b1] and [a2,b2] in Q^3.
Intersection intersect_segments(const QVec3& a1, const QVec3& b1, const QVec3& a2,
                                const QVec3& b2) {
  QVec3 d1 = sub3(b1, a1);
  QVec3 d2 = sub3(b2, a2);
  QVec3 r = sub3(a2, a1);
  QVec3 n = cross(d1, d2);

  if (is_zero3(n)) {
    if (!is_zero3(cross(d1, r))) return {};  // parallel, different lines
    // Collinear: express both endpoints of the second segment in the first
    // segment's parameter.
    int k = d1[0] != 0 ? 0 : (d1[1] != 0 ? 1 : 2);
    Rat t0 = r[k] / d1[k];
    Rat t1 = (r[k] + d2[k]) / d1[k];
    Rat lo = std::min(t0, t1), hi = std::max(t0, t1);
    Rat from = std::max(Rat(0), lo), to = std::min(Rat(1), hi);
    if (from > to) return {};
    if (from < to) return {Intersection::Overlap, {}, {}};
    Rat s = (from - t0) / (t1 - t0);
    return {Intersection::Point, from, s};
  }

  Rat nn = dot(n, n);
  Rat t = dot(cross(r, d2), n) / nn;
  Rat s = dot(cross(r, d1), n) / nn;
  if (t < 0 || t > 1 || s < 0 || s > 1) return {};
  // The two lines may be skew; accept only a true common point.
  for (int k = 0; k < 3; ++k) {
    if (a1[k] + t * d1[k] != a2[k] + s * d2[k]) return {};
  }
  return {Intersection::Point, t, s};
}

Int gcd3(const IVec3& v) {
  Int g = 0;
  for (const Int& x : v) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  }
  return g;
}

}  // namespace

Embedding3D embed(const MetricGraph& g) {
  MetricGraph model = simple_loopless_model(g);
  PLFunction f1 = build_f1(model);
  PLFunction f2 = build_f2(model);
  PLFunction f3 = build_f3(model);
  const PLFunction* fs[3] = {&f1, &f2, &f3};

  // Common breakpoint refinement of the three functions.
  std::vector<GraphPoint> cuts;
  for (const PLFunction* f : fs) {
    for (const auto& [id, bps] : f->edges()) {
      for (size_t k = 1; k + 1 < bps.size(); ++k) {
        cuts.push_back(GraphPoint::on_edge(id, bps[k].first));
      }
    }
  }
  Subdivision sub = subdivide(model, cuts);

  // Source interval on the model for every subdivision edge.
  std::map<std::string, std::tuple<std::string, Rat, Rat>> source;
  for (const Edge& e : model.edges()) {
    auto it = sub.splits.find(e.id);
    if (it == sub.splits.end()) {
      source[e.id] = {e.id, Rat(0), e.len};
      continue;
    }
    Rat start = 0;
    for (size_t k = 0; k <= it->second.cuts.size(); ++k) {
      Rat end = k < it->second.cuts.size() ? it->second.cuts[k] : e.len;
      source[it->second.sub_edges[k]] = {e.id, start, end};
      start = end;
    }
  }

  Embedding3D out{model, sub.graph, {}};
  for (const Edge& se : sub.graph.edges()) {
    const auto& [parent, from, to] = source.at(se.id);
    Segment3 seg;
    seg.sub_edge = se.id;
    seg.src_edge = parent;
    seg.src_from = from;
    seg.src_to = to;
    for (int k = 0; k < 3; ++k) {
      seg.a[k] = fs[k]->value_at(model, model.normalize(GraphPoint::on_edge(parent, from)));
      seg.b[k] = fs[k]->value_at(model, model.normalize(GraphPoint::on_edge(parent, to)));
      Rat slope = (seg.b[k] - seg.a[k]) / (to - from);
      if (!is_integer(slope)) {
        throw Error("CertificationFailure", "non-integer slope on " + se.id);
      }
      seg.dir[k] = slope.get_num();
    }
    // Condition (ii): the slope vector is primitive (F1 contributes +-1).
    if (gcd3(seg.dir) != 1) {
      throw Error("CertificationFailure", "imprimitive direction on " + se.id);
    }
    out.segments.push_back(std::move(seg));
  }

  // Condition (i): global injectivity by exact pairwise intersection with
  // the source-preimage check.
  auto preimage = [&](const Segment3& seg, const Rat& t) {
    Rat off = seg.src_from + t * (seg.src_to - seg.src_from);
    return model.normalize(GraphPoint::on_edge(seg.src_edge, off));
  };
  for (size_t i = 0; i < out.segments.size(); ++i) {
    for (size_t j = i + 1; j < out.segments.size(); ++j) {
      const Segment3& si = out.segments[i];
      const Segment3& sj = out.segments[j];
      Intersection hit = intersect_segments(si.a, si.b, sj.a, sj.b);
      if (hit.kind == Intersection::None) continue;
      if (hit.kind == Intersection::Overlap) {
        throw Error("CertificationFailure",
                    "segments of " + si.sub_edge + " and " + sj.sub_edge + " overlap");
      }
      if (!(preimage(si, hit.t) == preimage(sj, hit.s))) {
        throw Error("CertificationFailure", "images of distinct points meet at segments " +
                                                si.sub_edge + " and " + sj.sub_edge);
      }
    }
  }
  return out;
}

BalancedComplex balance(const Embedding3D& e) {
  const MetricGraph& sg = e.subdivision;
  std::map<std::string, IVec3> sum;
  std::map<std::string, QVec3> position;
  for (const Segment3& seg : e.segments) {
    int idx = sg.edge_index(seg.sub_edge);
    const Edge& edge = sg.edge(idx);
    for (auto [v, point, sign] :
         {std::tuple{edge.src, seg.a, 1}, {edge.dst, seg.b, -1}}) {
      const std::string& id = sg.vertex_id(v);
      auto& acc = sum.try_emplace(id, IVec3{0, 0, 0}).first->second;
      for (int k = 0; k < 3; ++k) acc[k] += sign * seg.mult * seg.dir[k];
      position[id] = point;
    }
  }

  BalancedComplex out{e, {}};
  for (const auto& [id, acc] : sum) {
    IVec3 defect{-acc[0], -acc[1], -acc[2]};
    if (defect[0] == 0 && defect[1] == 0 && defect[2] == 0) continue;
    Int g = gcd3(defect);
    Ray3 ray{id, position.at(id), {defect[0] / g, defect[1] / g, defect[2] / g}, g};
    out.rays.push_back(std::move(ray));
  }
  return out;
}

bool is_balanced(const BalancedComplex& c) {
  const MetricGraph& sg = c.embedding.subdivision;
  std::map<std::string, IVec3> sum;
  for (const Segment3& seg : c.embedding.segments) {
    const Edge& edge = sg.edge(sg.edge_index(seg.sub_edge));
    for (auto [v, sign] : {std::pair{edge.src, 1}, {edge.dst, -1}}) {
      auto& acc = sum.try_emplace(sg.vertex_id(v), IVec3{0, 0, 0}).first->second;
      for (int k = 0; k < 3; ++k) acc[k] += sign * seg.mult * seg.dir[k];
    }
  }
  for (const Ray3& ray : c.rays) {
    auto& acc = sum.try_emplace(ray.at_vertex, IVec3{0, 0, 0}).first->second;
    for (int k = 0; k < 3; ++k) acc[k] += ray.mult * ray.dir[k];
  }
  for (const auto& [id, acc] : sum) {
    if (acc[0] != 0 || acc[1] != 0 || acc[2] != 0) return false;
  }
  return true;
}

}  // namespace trop
