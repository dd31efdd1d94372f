#pragma once

#include <nlohmann/json_fwd.hpp>
#include <string>

#include "trop/discrete.hpp"
#include "trop/divisor.hpp"
#include "trop/embedding.hpp"
#include "trop/jacobian.hpp"
#include "trop/metric_graph.hpp"
#include "trop/pl_function.hpp"

namespace trop::io {

using json = nlohmann::json;

// Graph: {"vertices":["v1",...],"edges":[{"id":"e1","src":"v1","dst":"v2","len":"3/2"},...]}
MetricGraph graph_from_json(const json& j);
json graph_to_json(const MetricGraph& g);

// Divisor: [{"at":{"vertex":"v1"},"mult":2},{"at":{"edge":"e1","offset":"1/3"},"mult":-2}]
GraphPoint point_from_json(const json& j);
json point_to_json(const GraphPoint& p);
Divisor divisor_from_json(const MetricGraph& g, const json& j);
json divisor_to_json(const Divisor& d);

// Point literal for CLI flags: a vertex id, or "edge@offset".
GraphPoint point_from_string(const std::string& s);

// PLFunction: {"edges":[{"id":"e1","breakpoints":[["0","0"],["1","1"]]}]}
json pl_function_to_json(const PLFunction& f);
PLFunction pl_function_from_json(const MetricGraph& g, const json& j);

json period_matrix_to_json(const PeriodMatrix& pm);
json jacobian_point_to_json(const JacobianPoint& p);
json group_to_json(const FiniteAbelianGroup& grp);
json embedding_to_json(const Embedding3D& e);
json balanced_complex_to_json(const BalancedComplex& c);

}  // namespace trop::io
