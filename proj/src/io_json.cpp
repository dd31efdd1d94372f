#include "trop/io_json.hpp"

#include <nlohmann/json.hpp>

namespace trop::io {

namespace {

Rat rat_from_json(const json& j) {
  if (j.is_number_integer()) return Rat(static_cast<long>(j.get<long long>()));
  if (j.is_string()) return parse_rat(j.get<std::string>());
  throw Error("ParseError", "expected a rational string, got: " + j.dump());
}

json ivec3_to_json(const IVec3& v) {
  json out = json::array();
  for (const Int& x : v) out.push_back(x.get_str());
  return out;
}

json qvec3_to_json(const QVec3& v) {
  json out = json::array();
  for (const Rat& x : v) out.push_back(rat_str(x));
  return out;
}

}  // namespace

MetricGraph graph_from_json(const json& j) {
  try {
    std::vector<std::string> vertices = j.at("vertices").get<std::vector<std::string>>();
    std::vector<EdgeSpec> edges;
    for (const json& e : j.at("edges")) {
      edges.push_back(EdgeSpec{e.at("id").get<std::string>(), e.at("src").get<std::string>(),
                               e.at("dst").get<std::string>(), rat_from_json(e.at("len"))});
    }
    return MetricGraph(std::move(vertices), std::move(edges));
  } catch (const json::exception& ex) {
    throw Error("ParseError", std::string("bad graph document: ") + ex.what());
  }
}

json graph_to_json(const MetricGraph& g) {
  json edges = json::array();
  for (const Edge& e : g.edges()) {
    edges.push_back({{"id", e.id},
                     {"src", g.vertex_id(e.src)},
                     {"dst", g.vertex_id(e.dst)},
                     {"len", rat_str(e.len)}});
  }
  return {{"vertices", g.vertex_ids()}, {"edges", edges}};
}

GraphPoint point_from_json(const json& j) {
  try {
    if (j.contains("vertex")) return GraphPoint::on_vertex(j.at("vertex").get<std::string>());
    return GraphPoint::on_edge(j.at("edge").get<std::string>(), rat_from_json(j.at("offset")));
  } catch (const json::exception& ex) {
    throw Error("ParseError", std::string("bad point: ") + ex.what());
  }
}

json point_to_json(const GraphPoint& p) {
  if (p.at_vertex) return {{"vertex", p.vertex}};
  return {{"edge", p.edge}, {"offset", rat_str(p.offset)}};
}

GraphPoint point_from_string(const std::string& s) {
  if (s.empty()) throw Error("ParseError", "empty point literal");
  auto at = s.find('@');
  if (at == std::string::npos) return GraphPoint::on_vertex(s);
  return GraphPoint::on_edge(s.substr(0, at), parse_rat(s.substr(at + 1)));
}

Divisor divisor_from_json(const MetricGraph& g, const json& j) {
  if (!j.is_array()) throw Error("ParseError", "divisor document must be an array");
  Divisor d;
  for (const json& term : j) {
    try {
      d.add(g, point_from_json(term.at("at")), Int(static_cast<long>(term.at("mult").get<long long>())));
    } catch (const json::exception& ex) {
      throw Error("ParseError", std::string("bad divisor term: ") + ex.what());
    }
  }
  return d;
}

json divisor_to_json(const Divisor& d) {
  json out = json::array();
  for (const auto& [p, m] : d.support()) {
    out.push_back({{"at", point_to_json(p)}, {"mult", std::stoll(m.get_str())}});
  }
  return out;
}

json pl_function_to_json(const PLFunction& f) {
  json edges = json::array();
  for (const auto& [id, bps] : f.edges()) {
    json list = json::array();
    for (const auto& [off, value] : bps) {
      list.push_back(json::array({rat_str(off), rat_str(value)}));
    }
    edges.push_back({{"id", id}, {"breakpoints", list}});
  }
  return {{"edges", edges}};
}

PLFunction pl_function_from_json(const MetricGraph& g, const json& j) {
  try {
    std::map<std::string, PLFunction::Breakpoints> per_edge;
    for (const json& e : j.at("edges")) {
      PLFunction::Breakpoints bps;
      for (const json& bp : e.at("breakpoints")) {
        bps.emplace_back(rat_from_json(bp.at(0)), rat_from_json(bp.at(1)));
      }
      per_edge[e.at("id").get<std::string>()] = std::move(bps);
    }
    return PLFunction(g, std::move(per_edge));
  } catch (const json::exception& ex) {
    throw Error("ParseError", std::string("bad function document: ") + ex.what());
  }
}

json period_matrix_to_json(const PeriodMatrix& pm) {
  json gram = json::array();
  for (const QVec& row : pm.gram) {
    json r = json::array();
    for (const Rat& x : row) r.push_back(rat_str(x));
    gram.push_back(r);
  }
  return {{"gram", gram}, {"basis", "bfs-v1"}};
}

json jacobian_point_to_json(const JacobianPoint& p) {
  json coords = json::array();
  for (const Rat& x : p.coords) coords.push_back(rat_str(x));
  return {{"coords", coords}, {"basis", "bfs-v1"}};
}

json group_to_json(const FiniteAbelianGroup& grp) {
  json factors = json::array();
  for (const Int& d : grp.factors) factors.push_back(std::stoll(d.get_str()));
  json out{{"factors", factors}, {"order", std::stoll(grp.order().get_str())}};
  if (grp.free_rank > 0) out["free_rank"] = grp.free_rank;
  return out;
}

json embedding_to_json(const Embedding3D& e) {
  json segments = json::array();
  for (const Segment3& s : e.segments) {
    json dir = json::array();
    for (const Int& x : s.dir) dir.push_back(std::stoll(x.get_str()));
    segments.push_back({{"a", qvec3_to_json(s.a)},
                        {"b", qvec3_to_json(s.b)},
                        {"dir", dir},
                        {"mult", std::stoll(s.mult.get_str())},
                        {"src", {{"edge", s.src_edge},
                                 {"from", rat_str(s.src_from)},
                                 {"to", rat_str(s.src_to)}}}});
  }
  return {{"subdivision", graph_to_json(e.subdivision)}, {"segments", segments}};
}

json balanced_complex_to_json(const BalancedComplex& c) {
  json out = embedding_to_json(c.embedding);
  json rays = json::array();
  for (const Ray3& r : c.rays) {
    json dir = json::array();
    for (const Int& x : r.dir) dir.push_back(std::stoll(x.get_str()));
    rays.push_back({{"at", r.at_vertex},
                    {"origin", qvec3_to_json(r.origin)},
                    {"dir", dir},
                    {"mult", std::stoll(r.mult.get_str())}});
  }
  out["rays"] = rays;
  return out;
}

}  // namespace trop::io
