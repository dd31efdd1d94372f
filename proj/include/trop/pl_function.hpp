#pragma once

#include <map>
#include <utility>
#include <vector>

#include "trop/divisor.hpp"
#include "trop/metric_graph.hpp"

namespace trop {

// Continuous piecewise-linear function on a metric graph, stored
// extensionally: per edge (in source->target orientation) the sorted
// breakpoint list (offset, value) including both endpoints. Tropical
// meromorphic exactly when every segment slope is an integer.
//
// Representation is canonical after construction: interior breakpoints
// where the slope does not change are merged away. Equality is
// representation equality; functions differing by a constant are unequal.
class PLFunction {
 public:
  using Breakpoints = std::vector<std::pair<Rat, Rat>>;

  // Validates endpoints, monotonicity and continuity across vertices.
  PLFunction(const MetricGraph& g, std::map<std::string, Breakpoints> per_edge);

  // Linear interpolation of vertex values along every edge.
  static PLFunction from_vertex_values(const MetricGraph& g, const std::vector<Rat>& values);

  static PLFunction constant(const MetricGraph& g, const Rat& c);

  const std::map<std::string, Breakpoints>& edges() const { return edges_; }
  const Breakpoints& breakpoints(const std::string& edge_id) const { return edges_.at(edge_id); }

  Rat value_at(const MetricGraph& g, const GraphPoint& p) const;

  bool is_integer_sloped() const;

  friend bool operator==(const PLFunction& a, const PLFunction& b) {
    return a.edges_ == b.edges_;
  }

 private:
  PLFunction() = default;
  // Trusted path for operations that preserve the invariants.
  static PLFunction unchecked(std::map<std::string, Breakpoints> edges);
  friend PLFunction add(const PLFunction&, const PLFunction&);
  friend PLFunction negate(const PLFunction&);
  friend PLFunction add_constant(const PLFunction&, const Rat&);

  std::map<std::string, Breakpoints> edges_;
};

// Pointwise group operations; throw GraphMismatch when the underlying edge
// structures differ.
PLFunction add(const PLFunction& f, const PLFunction& g);
PLFunction negate(const PLFunction& f);
PLFunction add_constant(const PLFunction& f, const Rat& c);

// Sum of outgoing slopes at every breakpoint and vertex; degree 0 by
// construction. Throws NonIntegerSlope on a non-integer segment slope.
Divisor divisor_of(const PLFunction& f, const MetricGraph& g);

// Same function on a subdivided model of the same metric space.
PLFunction transport(const PLFunction& f, const MetricGraph& original, const Subdivision& sub);

}  // namespace trop
