#include "trop/metric_graph.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace trop {

std::string GraphPoint::to_string() const {
  if (at_vertex) return vertex;
  return edge + "@" + rat_str(offset);
}

MetricGraph::MetricGraph(std::vector<std::string> vertex_ids, std::vector<EdgeSpec> edges) {
  if (vertex_ids.empty()) throw Error("MalformedGraph", "graph has no vertices");
  std::sort(vertex_ids.begin(), vertex_ids.end());
  for (size_t i = 0; i + 1 < vertex_ids.size(); ++i) {
    if (vertex_ids[i] == vertex_ids[i + 1]) {
      throw Error("MalformedGraph", "duplicate vertex id: " + vertex_ids[i]);
    }
  }
  vertex_ids_ = std::move(vertex_ids);
  for (size_t i = 0; i < vertex_ids_.size(); ++i) vindex_[vertex_ids_[i]] = static_cast<int>(i);

  std::sort(edges.begin(), edges.end(),
            [](const EdgeSpec& a, const EdgeSpec& b) { return a.id < b.id; });
  for (const EdgeSpec& e : edges) {
    if (eindex_.count(e.id)) throw Error("MalformedGraph", "duplicate edge id: " + e.id);
    if (!vindex_.count(e.src)) throw Error("MalformedGraph", "unknown vertex: " + e.src);
    if (!vindex_.count(e.dst)) throw Error("MalformedGraph", "unknown vertex: " + e.dst);
    if (e.len <= 0) throw Error("MalformedGraph", "nonpositive length on edge " + e.id);
    eindex_[e.id] = static_cast<int>(edges_.size());
    edges_.push_back(Edge{e.id, vindex_.at(e.src), vindex_.at(e.dst), e.len});
  }

  incident_.resize(vertex_ids_.size());
  for (size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    incident_[e.src].push_back(EdgeEnd{static_cast<int>(i), true});
    incident_[e.dst].push_back(EdgeEnd{static_cast<int>(i), false});
  }

  // Connectivity is required by every downstream operation.
  std::vector<bool> seen(vertex_ids_.size(), false);
  std::deque<int> queue{0};
  seen[0] = true;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (const EdgeEnd& end : incident_[v]) {
      int w = end.at_source ? edges_[end.edge].dst : edges_[end.edge].src;
      if (!seen[w]) {
        seen[w] = true;
        queue.push_back(w);
      }
    }
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
    throw Error("Disconnected", "graph is not connected");
  }
}

int MetricGraph::vertex_index(const std::string& id) const {
  auto it = vindex_.find(id);
  if (it == vindex_.end()) throw Error("MalformedGraph", "unknown vertex: " + id);
  return it->second;
}

int MetricGraph::edge_index(const std::string& id) const {
  auto it = eindex_.find(id);
  if (it == eindex_.end()) throw Error("MalformedGraph", "unknown edge: " + id);
  return it->second;
}

Rat MetricGraph::total_length() const {
  Rat total = 0;
  for (const Edge& e : edges_) total += e.len;
  return total;
}

GraphPoint MetricGraph::normalize(const GraphPoint& p) const {
  if (p.at_vertex) {
    vertex_index(p.vertex);
    return p;
  }
  const Edge& e = edges_[edge_index(p.edge)];
  if (p.offset < 0 || p.offset > e.len) {
    throw Error("MalformedGraph", "offset " + rat_str(p.offset) + " outside edge " + p.edge);
  }
  if (p.offset == 0) return GraphPoint::on_vertex(vertex_ids_[e.src]);
  if (p.offset == e.len) return GraphPoint::on_vertex(vertex_ids_[e.dst]);
  return p;
}

bool MetricGraph::is_loopless() const {
  for (const Edge& e : edges_) {
    if (e.src == e.dst) return false;
  }
  return true;
}

bool MetricGraph::has_parallel_edges() const {
  std::set<std::pair<int, int>> pairs;
  for (const Edge& e : edges_) {
    auto key = std::minmax(e.src, e.dst);
    if (!pairs.insert({key.first, key.second}).second) return true;
  }
  return false;
}

CycleBasis homology_basis(const MetricGraph& g) {
  const int n = g.vertex_count();
  const int m = g.edge_count();

  // BFS from the smallest vertex id; incident lists are already in edge id
  // order, so tree edges are chosen by smallest edge id.
  std::vector<bool> visited(n, false);
  std::vector<bool> in_tree(m, false);
  std::vector<int> parent_edge(n, -1);  // tree edge toward the BFS root
  std::deque<int> queue{0};
  visited[0] = true;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (const MetricGraph::EdgeEnd& end : g.incident(v)) {
      const Edge& e = g.edge(end.edge);
      int w = end.at_source ? e.dst : e.src;
      if (!visited[w]) {
        visited[w] = true;
        in_tree[end.edge] = true;
        parent_edge[w] = end.edge;
        queue.push_back(w);
      }
    }
  }

  // Signed tree path from a vertex to the root, as (edge, +1/-1) pairs
  // where +1 means the edge is traversed source -> target.
  auto path_to_root = [&](int v) {
    std::vector<std::pair<int, int>> path;
    while (parent_edge[v] != -1) {
      const Edge& e = g.edge(parent_edge[v]);
      if (e.dst == v) {
        path.emplace_back(parent_edge[v], -1);  // walk dst -> src
        v = e.src;
      } else {
        path.emplace_back(parent_edge[v], +1);
        v = e.dst;
      }
    }
    return path;
  };

  CycleBasis basis;
  for (int i = 0; i < m; ++i) {
    if (in_tree[i]) basis.tree_edges.push_back(i);
  }
  for (int i = 0; i < m; ++i) {
    if (in_tree[i]) continue;
    const Edge& e = g.edge(i);
    // Cycle = e + tree path from dst back to src, so e carries +1.
    std::vector<int> row(m, 0);
    row[i] = 1;
    auto from_dst = path_to_root(e.dst);
    auto from_src = path_to_root(e.src);
    // Strip the common tail toward the root.
    while (!from_dst.empty() && !from_src.empty() && from_dst.back() == from_src.back()) {
      from_dst.pop_back();
      from_src.pop_back();
    }
    for (const auto& [edge, sign] : from_dst) row[edge] += sign;
    for (const auto& [edge, sign] : from_src) row[edge] -= sign;
    basis.cycles.push_back(std::move(row));
  }
  return basis;
}

Subdivision subdivide(const MetricGraph& g, const std::vector<GraphPoint>& points) {
  // Collect interior cut offsets per edge; vertex points are already model
  // vertices and need no cut.
  std::map<int, std::set<Rat>> cuts;
  for (const GraphPoint& raw : points) {
    GraphPoint p = g.normalize(raw);
    if (!p.at_vertex) cuts[g.edge_index(p.edge)].insert(p.offset);
  }

  std::vector<std::string> vertex_ids = g.vertex_ids();
  std::vector<EdgeSpec> specs;
  std::map<std::string, EdgeSplit> splits;
  for (int i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edge(i);
    auto it = cuts.find(i);
    if (it == cuts.end() || it->second.empty()) {
      specs.push_back(EdgeSpec{e.id, g.vertex_id(e.src), g.vertex_id(e.dst), e.len});
      continue;
    }
    EdgeSplit split;
    split.cuts.assign(it->second.begin(), it->second.end());
    std::string prev_vertex = g.vertex_id(e.src);
    Rat prev_off = 0;
    for (size_t k = 0; k < split.cuts.size(); ++k) {
      std::string cut_vertex = e.id + "@" + rat_str(split.cuts[k]);
      std::string sub_id = e.id + "." + std::to_string(k);
      specs.push_back(EdgeSpec{sub_id, prev_vertex, cut_vertex, split.cuts[k] - prev_off});
      split.cut_vertices.push_back(cut_vertex);
      split.sub_edges.push_back(sub_id);
      vertex_ids.push_back(cut_vertex);
      prev_vertex = cut_vertex;
      prev_off = split.cuts[k];
    }
    std::string last_id = e.id + "." + std::to_string(split.cuts.size());
    specs.push_back(EdgeSpec{last_id, prev_vertex, g.vertex_id(e.dst), e.len - prev_off});
    split.sub_edges.push_back(last_id);
    splits[e.id] = std::move(split);
  }

  return Subdivision{MetricGraph(std::move(vertex_ids), std::move(specs)), std::move(splits)};
}

GraphPoint Subdivision::map_point(const MetricGraph& original, const GraphPoint& raw) const {
  GraphPoint p = original.normalize(raw);
  if (p.at_vertex) return p;  // vertex ids survive subdivision
  auto it = splits.find(p.edge);
  if (it == splits.end()) return graph.normalize(p);
  const EdgeSplit& split = it->second;
  // Locate the sub-edge whose interval contains the offset.
  Rat start = 0;
  for (size_t k = 0; k < split.cuts.size(); ++k) {
    if (p.offset <= split.cuts[k]) {
      return graph.normalize(GraphPoint::on_edge(split.sub_edges[k], p.offset - start));
    }
    start = split.cuts[k];
  }
  return graph.normalize(GraphPoint::on_edge(split.sub_edges.back(), p.offset - start));
}

std::vector<std::vector<int>> Subdivision::transport_cycles(
    const MetricGraph& original, const std::vector<std::vector<int>>& rows) const {
  std::vector<std::vector<int>> out;
  out.reserve(rows.size());
  for (const auto& row : rows) {
    std::vector<int> nrow(graph.edge_count(), 0);
    for (int i = 0; i < original.edge_count(); ++i) {
      if (row[i] == 0) continue;
      const std::string& id = original.edge(i).id;
      auto it = splits.find(id);
      if (it == splits.end()) {
        nrow[graph.edge_index(id)] = row[i];
      } else {
        for (const std::string& sub : it->second.sub_edges) {
          nrow[graph.edge_index(sub)] = row[i];
        }
      }
    }
    out.push_back(std::move(nrow));
  }
  return out;
}

MetricGraph simple_loopless_model(const MetricGraph& g) {
  if (g.is_loopless() && !g.has_parallel_edges()) return g;

  std::map<std::pair<int, int>, int> family_size;
  for (const Edge& e : g.edges()) {
    auto key = std::minmax(e.src, e.dst);
    family_size[{key.first, key.second}]++;
  }

  std::vector<GraphPoint> points;
  for (const Edge& e : g.edges()) {
    if (e.src == e.dst) {
      points.push_back(GraphPoint::on_edge(e.id, e.len / 3));
      points.push_back(GraphPoint::on_edge(e.id, e.len * 2 / 3));
    } else {
      auto key = std::minmax(e.src, e.dst);
      if (family_size[{key.first, key.second}] > 1) {
        points.push_back(GraphPoint::on_edge(e.id, e.len / 2));
      }
    }
  }
  MetricGraph model = subdivide(g, points).graph;
  if (!model.is_loopless() || model.has_parallel_edges()) {
    throw Error("InternalInconsistency", "simple_loopless_model left a loop or parallel pair");
  }
  return model;
}

}  // namespace trop
