#pragma once

#include <array>

#include "trop/metric_graph.hpp"
#include "trop/pl_function.hpp"

namespace trop {

using QVec3 = std::array<Rat, 3>;
using IVec3 = std::array<Int, 3>;

// Image of one sub-edge of the common-breakpoint subdivision: a straight
// segment in Q^3 whose primitive integer direction is the slope vector of
// (F1, F2, F3). Lattice length of the segment equals the sub-edge length.
struct Segment3 {
  QVec3 a, b;
  std::string sub_edge;  // edge of the subdivision this segment is the image of
  std::string src_edge;  // edge of the simple loopless model
  Rat src_from, src_to;  // offsets on that edge, from < to
  IVec3 dir;             // integer slopes, gcd of |entries| = 1
  Int mult = 1;
};

struct Embedding3D {
  MetricGraph model;        // simple loopless model the functions live on
  MetricGraph subdivision;  // common breakpoint refinement
  std::vector<Segment3> segments;
};

// Ray added at an image vertex to restore the balancing condition.
struct Ray3 {
  std::string at_vertex;  // vertex id in the subdivision
  QVec3 origin;
  IVec3 dir;  // primitive
  Int mult;
};

struct BalancedComplex {
  Embedding3D embedding;
  std::vector<Ray3> rays;
};

// Per-edge tent of slope +-1 peaking at the midpoint; zero on vertices.
// Requires a simple loopless model (throws ModelNotSimple).
PLFunction build_f1(const MetricGraph& g);

// Per-edge tent of slope +-sigma_i with sigma_i = i+1 in edge id order.
PLFunction build_f2(const MetricGraph& g);

// Distinct vertex values alpha_i = i+1 with a plateau-ramp-plateau profile
// per edge; the ramp slope is the smallest integer magnitude keeping the
// ramp half-width below len/4. Asymmetric about every edge midpoint.
PLFunction build_f3(const MetricGraph& g);

// Full construction: simple loopless model, F1/F2/F3, common subdivision,
// per-segment isometry and gcd certification, exact pairwise injectivity
// certification. Throws CertificationFailure if any check fails.
Embedding3D embed(const MetricGraph& g);

// Adds one ray per unbalanced vertex so the multiplicity-weighted sum of
// primitive outgoing directions vanishes everywhere.
BalancedComplex balance(const Embedding3D& e);

// Exact balancing check, exposed for the CLI and tests.
bool is_balanced(const BalancedComplex& c);

}  // namespace trop
