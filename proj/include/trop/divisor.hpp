#pragma once

#include <map>

#include "trop/metric_graph.hpp"

namespace trop {

// Finite formal Z-combination of graph points. Points are stored
// normalized (endpoint offsets collapsed to vertices) and zero
// multiplicities are dropped, so representation is canonical.
class Divisor {
 public:
  Divisor() = default;

  // Adds m * (p), normalizing p against the graph.
  void add(const MetricGraph& g, const GraphPoint& p, const Int& m) {
    add_normalized(g.normalize(p), m);
  }

  Int degree() const {
    Int d = 0;
    for (const auto& [p, m] : support_) d += m;
    return d;
  }

  const std::map<GraphPoint, Int>& support() const { return support_; }
  bool empty() const { return support_.empty(); }

  Divisor& operator+=(const Divisor& other) {
    for (const auto& [p, m] : other.support_) add_normalized(p, m);
    return *this;
  }
  friend Divisor operator+(Divisor a, const Divisor& b) { return a += b; }
  friend Divisor operator-(const Divisor& a) {
    Divisor out;
    for (const auto& [p, m] : a.support_) out.support_[p] = -m;
    return out;
  }
  friend Divisor operator-(Divisor a, const Divisor& b) { return a += -b; }
  friend bool operator==(const Divisor& a, const Divisor& b) {
    return a.support_ == b.support_;
  }

  // Same divisor on a subdivided model (support points become vertices or
  // keep their interior position).
  Divisor transport(const MetricGraph& original, const Subdivision& sub) const {
    Divisor out;
    for (const auto& [p, m] : support_) out.add_normalized(sub.map_point(original, p), m);
    return out;
  }

 private:
  void add_normalized(const GraphPoint& p, const Int& m) {
    if (m == 0) return;
    auto [it, inserted] = support_.try_emplace(p, m);
    if (!inserted) {
      it->second += m;
      if (it->second == 0) support_.erase(it);
    }
  }

  std::map<GraphPoint, Int> support_;
};

}  // namespace trop
