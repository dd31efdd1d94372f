#include "trop/pl_function.hpp"

#include <algorithm>

namespace trop {

namespace {

// Drops interior breakpoints where the slope does not change.
void normalize_breakpoints(PLFunction::Breakpoints& bps) {
  if (bps.size() < 3) return;
  PLFunction::Breakpoints out;
  out.push_back(bps.front());
  for (size_t i = 1; i + 1 < bps.size(); ++i) {
    const auto& [o0, v0] = out.back();
    const auto& [o1, v1] = bps[i];
    const auto& [o2, v2] = bps[i + 1];
    // Collinear iff (v1-v0)*(o2-o1) == (v2-v1)*(o1-o0).
    if ((v1 - v0) * (o2 - o1) != (v2 - v1) * (o1 - o0)) out.push_back(bps[i]);
  }
  out.push_back(bps.back());
  bps = std::move(out);
}

Rat interpolate(const PLFunction::Breakpoints& bps, const Rat& off) {
  auto it = std::lower_bound(bps.begin(), bps.end(), off,
                             [](const auto& bp, const Rat& o) { return bp.first < o; });
  if (it != bps.end() && it->first == off) return it->second;
  const auto& [o1, v1] = *it;
  const auto& [o0, v0] = *(it - 1);
  return v0 + (v1 - v0) * (off - o0) / (o1 - o0);
}

}  // namespace

PLFunction::PLFunction(const MetricGraph& g, std::map<std::string, Breakpoints> per_edge) {
  std::vector<Rat> vertex_value(g.vertex_count());
  std::vector<bool> vertex_set(g.vertex_count(), false);
  for (const Edge& e : g.edges()) {
    auto it = per_edge.find(e.id);
    if (it == per_edge.end()) {
      throw Error("MalformedFunction", "no breakpoints for edge " + e.id);
    }
    Breakpoints& bps = it->second;
    if (bps.size() < 2 || bps.front().first != 0 || bps.back().first != e.len) {
      throw Error("MalformedFunction", "breakpoints of " + e.id + " must span [0, len]");
    }
    for (size_t i = 1; i < bps.size(); ++i) {
      if (bps[i - 1].first >= bps[i].first) {
        throw Error("MalformedFunction", "offsets not strictly increasing on " + e.id);
      }
    }
    for (auto [v, off_value] : {std::pair{e.src, bps.front().second}, {e.dst, bps.back().second}}) {
      if (vertex_set[v] && vertex_value[v] != off_value) {
        throw Error("MalformedFunction", "discontinuity at vertex " + g.vertex_id(v));
      }
      vertex_value[v] = off_value;
      vertex_set[v] = true;
    }
    normalize_breakpoints(bps);
  }
  if (per_edge.size() != static_cast<size_t>(g.edge_count())) {
    throw Error("MalformedFunction", "breakpoints given for unknown edges");
  }
  edges_ = std::move(per_edge);
}

PLFunction PLFunction::from_vertex_values(const MetricGraph& g, const std::vector<Rat>& values) {
  if (values.size() != static_cast<size_t>(g.vertex_count())) {
    throw Error("MalformedFunction", "vertex value count mismatch");
  }
  std::map<std::string, Breakpoints> per_edge;
  for (const Edge& e : g.edges()) {
    per_edge[e.id] = {{Rat(0), values[e.src]}, {e.len, values[e.dst]}};
  }
  return PLFunction(g, std::move(per_edge));
}

PLFunction PLFunction::constant(const MetricGraph& g, const Rat& c) {
  return from_vertex_values(g, std::vector<Rat>(g.vertex_count(), c));
}

Rat PLFunction::value_at(const MetricGraph& g, const GraphPoint& raw) const {
  GraphPoint p = g.normalize(raw);
  if (!p.at_vertex) return interpolate(edges_.at(p.edge), p.offset);
  int v = g.vertex_index(p.vertex);
  const auto& end = g.incident(v).front();  // connected, so some edge is incident
  const Breakpoints& bps = edges_.at(g.edge(end.edge).id);
  return end.at_source ? bps.front().second : bps.back().second;
}

bool PLFunction::is_integer_sloped() const {
  for (const auto& [id, bps] : edges_) {
    for (size_t i = 1; i < bps.size(); ++i) {
      Rat slope = (bps[i].second - bps[i - 1].second) / (bps[i].first - bps[i - 1].first);
      if (!is_integer(slope)) return false;
    }
  }
  return true;
}

namespace {

void check_same_shape(const PLFunction& f, const PLFunction& g) {
  if (f.edges().size() != g.edges().size()) throw Error("GraphMismatch", "edge sets differ");
  for (const auto& [id, bps] : f.edges()) {
    auto it = g.edges().find(id);
    if (it == g.edges().end() || it->second.back().first != bps.back().first) {
      throw Error("GraphMismatch", "edge " + id + " differs between operands");
    }
  }
}

}  // namespace

PLFunction PLFunction::unchecked(std::map<std::string, Breakpoints> edges) {
  PLFunction f;
  for (auto& [id, bps] : edges) normalize_breakpoints(bps);
  f.edges_ = std::move(edges);
  return f;
}

PLFunction add(const PLFunction& f, const PLFunction& g) {
  check_same_shape(f, g);
  std::map<std::string, PLFunction::Breakpoints> per_edge;
  for (const auto& [id, fb] : f.edges()) {
    const auto& gb = g.edges().at(id);
    // Merge the two offset grids, then add values pointwise.
    std::vector<Rat> offsets;
    for (const auto& bp : fb) offsets.push_back(bp.first);
    for (const auto& bp : gb) offsets.push_back(bp.first);
    std::sort(offsets.begin(), offsets.end());
    offsets.erase(std::unique(offsets.begin(), offsets.end()), offsets.end());
    PLFunction::Breakpoints merged;
    for (const Rat& off : offsets) {
      merged.emplace_back(off, interpolate(fb, off) + interpolate(gb, off));
    }
    per_edge[id] = std::move(merged);
  }
  return PLFunction::unchecked(std::move(per_edge));
}

PLFunction negate(const PLFunction& f) {
  auto edges = f.edges_;
  for (auto& [id, bps] : edges) {
    for (auto& [off, value] : bps) value = -value;
  }
  return PLFunction::unchecked(std::move(edges));
}

PLFunction add_constant(const PLFunction& f, const Rat& c) {
  auto edges = f.edges_;
  for (auto& [id, bps] : edges) {
    for (auto& [off, value] : bps) value += c;
  }
  return PLFunction::unchecked(std::move(edges));
}

Divisor divisor_of(const PLFunction& f, const MetricGraph& g) {
  // Integer slopes per segment, checked up front.
  std::map<std::string, std::vector<Int>> slopes;
  for (const auto& [id, bps] : f.edges()) {
    std::vector<Int> s;
    for (size_t i = 1; i < bps.size(); ++i) {
      Rat slope = (bps[i].second - bps[i - 1].second) / (bps[i].first - bps[i - 1].first);
      if (!is_integer(slope)) {
        throw Error("NonIntegerSlope", "slope " + rat_str(slope) + " on edge " + id);
      }
      s.push_back(slope.get_num());
    }
    slopes[id] = std::move(s);
  }

  Divisor div;
  // Interior breakpoints: outgoing slopes are s_right and -s_left.
  for (const auto& [id, bps] : f.edges()) {
    const auto& s = slopes[id];
    for (size_t i = 1; i + 1 < bps.size(); ++i) {
      Int n = s[i] - s[i - 1];
      if (n != 0) div.add(g, GraphPoint::on_edge(id, bps[i].first), n);
    }
  }
  // Vertices: sum outgoing slopes over incident edge ends (loops count both
  // ends).
  for (int v = 0; v < g.vertex_count(); ++v) {
    Int n = 0;
    for (const auto& end : g.incident(v)) {
      const auto& s = slopes[g.edge(end.edge).id];
      n += end.at_source ? s.front() : -s.back();
    }
    if (n != 0) div.add(g, GraphPoint::on_vertex(g.vertex_id(v)), n);
  }
  return div;
}

PLFunction transport(const PLFunction& f, const MetricGraph& original, const Subdivision& sub) {
  std::map<std::string, PLFunction::Breakpoints> per_edge;
  for (const Edge& e : original.edges()) {
    const auto& bps = f.breakpoints(e.id);
    auto it = sub.splits.find(e.id);
    if (it == sub.splits.end()) {
      per_edge[e.id] = bps;
      continue;
    }
    const EdgeSplit& split = it->second;
    Rat start = 0;
    for (size_t k = 0; k <= split.cuts.size(); ++k) {
      Rat end = k < split.cuts.size() ? split.cuts[k] : bps.back().first;
      PLFunction::Breakpoints piece;
      piece.emplace_back(Rat(0), interpolate(bps, start));
      for (const auto& [off, value] : bps) {
        if (off > start && off < end) piece.emplace_back(off - start, value);
      }
      piece.emplace_back(end - start, interpolate(bps, end));
      per_edge[split.sub_edges[k]] = std::move(piece);
      start = end;
    }
  }
  return PLFunction(sub.graph, std::move(per_edge));
}

}  // namespace trop
