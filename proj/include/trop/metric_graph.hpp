#pragma once

#include <map>
#include <string>
#include <vector>

#include "trop/rational.hpp"

namespace trop {

// A point of the metric space: either a model vertex or an interior point
// of an edge, at a positive offset from the edge's source. Offsets equal to
// 0 or the edge length are normalized to vertex form by the owning graph.
struct GraphPoint {
  bool at_vertex = true;
  std::string vertex;  // set when at_vertex
  std::string edge;    // set otherwise
  Rat offset;          // 0 < offset < len(edge)

  static GraphPoint on_vertex(std::string id) {
    GraphPoint p;
    p.at_vertex = true;
    p.vertex = std::move(id);
    return p;
  }
  static GraphPoint on_edge(std::string id, Rat off) {
    GraphPoint p;
    p.at_vertex = false;
    p.edge = std::move(id);
    p.offset = std::move(off);
    return p;
  }

  friend bool operator==(const GraphPoint& a, const GraphPoint& b) {
    if (a.at_vertex != b.at_vertex) return false;
    if (a.at_vertex) return a.vertex == b.vertex;
    return a.edge == b.edge && a.offset == b.offset;
  }
  friend bool operator<(const GraphPoint& a, const GraphPoint& b) {
    if (a.at_vertex != b.at_vertex) return a.at_vertex;  // vertices first
    if (a.at_vertex) return a.vertex < b.vertex;
    if (a.edge != b.edge) return a.edge < b.edge;
    return a.offset < b.offset;
  }

  std::string to_string() const;
};

struct EdgeSpec {
  std::string id;
  std::string src;
  std::string dst;
  Rat len;
};

struct Edge {
  std::string id;
  int src;  // vertex index
  int dst;
  Rat len;
};

// A Q-rational model of a compact connected metric graph. Vertices and
// edges are kept sorted by id; all downstream tie-breaking (BFS order,
// sigma/alpha assignment) uses these positions. Immutable after
// construction.
class MetricGraph {
 public:
  MetricGraph(std::vector<std::string> vertex_ids, std::vector<EdgeSpec> edges);

  int vertex_count() const { return static_cast<int>(vertex_ids_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  int genus() const { return edge_count() - vertex_count() + 1; }

  const std::vector<std::string>& vertex_ids() const { return vertex_ids_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int i) const { return edges_[i]; }
  const std::string& vertex_id(int i) const { return vertex_ids_[i]; }

  int vertex_index(const std::string& id) const;
  int edge_index(const std::string& id) const;
  bool has_vertex(const std::string& id) const { return vindex_.count(id) > 0; }
  bool has_edge(const std::string& id) const { return eindex_.count(id) > 0; }

  // Edge-ends incident to a vertex, in edge index order. A loop edge
  // appears twice, once per end.
  struct EdgeEnd {
    int edge;
    bool at_source;
  };
  const std::vector<EdgeEnd>& incident(int vertex) const { return incident_[vertex]; }

  Rat total_length() const;

  // Canonical form: endpoint offsets collapse to the vertex; validates that
  // the point lies on this graph.
  GraphPoint normalize(const GraphPoint& p) const;

  bool is_loopless() const;
  bool has_parallel_edges() const;

 private:
  std::vector<std::string> vertex_ids_;
  std::vector<Edge> edges_;
  std::map<std::string, int> vindex_;
  std::map<std::string, int> eindex_;
  std::vector<std::vector<EdgeEnd>> incident_;
};

// Fundamental cycles of the BFS spanning tree, as rows over edge indices
// with entries in {-1,0,1}. Row order follows non-tree edge id order; the
// non-tree edge itself carries coefficient +1.
struct CycleBasis {
  std::vector<std::vector<int>> cycles;  // g x m
  std::vector<int> tree_edges;           // edge indices, sorted
  int genus() const { return static_cast<int>(cycles.size()); }
};

CycleBasis homology_basis(const MetricGraph& g);

// Result of cutting edges at interior points. New vertices get ids
// "<edge>@<offset>", sub-edges "<edge>.<k>"; untouched edges keep their id
// and every sub-edge inherits the parent's orientation.
struct EdgeSplit {
  std::vector<Rat> cuts;                  // strictly increasing interior offsets
  std::vector<std::string> cut_vertices;  // one per cut
  std::vector<std::string> sub_edges;     // cuts.size()+1 ids, source side first
};

class Subdivision {
 public:
  MetricGraph graph;
  std::map<std::string, EdgeSplit> splits;  // only edges that were cut

  // Transports a point of the original graph onto the subdivided model.
  GraphPoint map_point(const MetricGraph& original, const GraphPoint& p) const;

  // Rewrites cycle rows over original edges as rows over subdivided edges.
  std::vector<std::vector<int>> transport_cycles(
      const MetricGraph& original, const std::vector<std::vector<int>>& rows) const;
};

Subdivision subdivide(const MetricGraph& g, const std::vector<GraphPoint>& points);

// Model of the same metric space with no loops and no parallel edges:
// loops are cut at 1/3 and 2/3 of their length, every member of a parallel
// family at its midpoint. Returns the input unchanged when already simple.
MetricGraph simple_loopless_model(const MetricGraph& g);

}  // namespace trop
