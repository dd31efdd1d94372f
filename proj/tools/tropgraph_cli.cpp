// tropgraph: divisor theory on metric graphs from the command line.
//
// Subcommands: jacobian, abel-jacobi, is-principal, lift-function,
// discrete-jac, trees, embed, check-balance. Inputs are JSON documents
// with all rationals as "p/q" strings; output goes to stdout (or --out).
// Exit codes: 0 success, 1 domain error, 2 parse/usage error.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "trop/discrete.hpp"
#include "trop/embedding.hpp"
#include "trop/io_json.hpp"
#include "trop/jacobian.hpp"

namespace {

using trop::io::json;

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw trop::Error("ParseError", "cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& ex) {
    throw trop::Error("ParseError", std::string("invalid JSON in ") + path + ": " + ex.what());
  }
  return j;
}

bool is_parse_kind(const std::string& kind) {
  return kind == "ParseError" || kind == "MalformedGraph" || kind == "MalformedFunction" ||
         kind == "MalformedInput";
}

std::string render_text(const json& doc) {
  std::ostringstream out;
  if (doc.contains("gram")) {
    // Aligned period matrix table.
    const json& gram = doc["gram"];
    size_t width = 1;
    for (const json& row : gram) {
      for (const json& x : row) width = std::max(width, x.get<std::string>().size());
    }
    for (const json& row : gram) {
      for (size_t i = 0; i < row.size(); ++i) {
        out << (i ? "  " : "") << std::string(width - row[i].get<std::string>().size(), ' ')
            << row[i].get<std::string>();
      }
      out << "\n";
    }
    if (gram.empty()) out << "(empty: genus 0)\n";
  } else if (doc.contains("factors")) {
    std::string name;
    for (const json& d : doc["factors"]) {
      if (!name.empty()) name += " x ";
      name += "Z/" + std::to_string(d.get<long long>());
    }
    if (name.empty()) name = "0";
    out << name << "  (order " << doc["order"].get<long long>() << ")\n";
  } else {
    out << doc.dump(2) << "\n";
  }
  return out.str();
}

struct Options {
  std::string graph_file;
  std::string divisor_file;
  std::string base;
  std::string point;
  std::string gauge;
  std::string out_file;
  std::string plot_file;
  std::string format = "json";
};

void emit(const Options& opt, const json& doc) {
  std::string text = opt.format == "text" ? render_text(doc) : doc.dump() + "\n";
  if (opt.out_file.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(opt.out_file);
    out << text;
  }
}

// Float polyline export for external plotting; the only float output in
// the tool.
void write_plot(const std::string& path, const trop::Embedding3D& e) {
  std::ofstream out(path);
  out << "segment,x,y,z\n";
  int i = 0;
  for (const trop::Segment3& s : e.segments) {
    out << i << "," << s.a[0].get_d() << "," << s.a[1].get_d() << "," << s.a[2].get_d() << "\n";
    out << i << "," << s.b[0].get_d() << "," << s.b[1].get_d() << "," << s.b[2].get_d() << "\n";
    ++i;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact divisor theory on metric graphs"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* cmd, bool needs_divisor = false) {
    cmd->add_option("--graph", opt.graph_file, "graph JSON file")->required();
    if (needs_divisor) {
      cmd->add_option("--divisor", opt.divisor_file, "divisor JSON file")->required();
    }
    cmd->add_option("--out", opt.out_file, "write output document here instead of stdout");
    cmd->add_option("--format", opt.format, "json|text")
        ->check(CLI::IsMember({"json", "text"}));
  };

  CLI::App* jacobian = app.add_subcommand("jacobian", "period matrix of the edge-length pairing");
  add_common(jacobian);

  CLI::App* aj = app.add_subcommand("abel-jacobi", "Abel-Jacobi coordinates of a point");
  add_common(aj);
  aj->add_option("--base", opt.base, "base point (vertex id or edge@offset)")->required();
  aj->add_option("--point", opt.point, "target point")->required();

  CLI::App* isp = app.add_subcommand("is-principal", "decide principality of a divisor");
  add_common(isp, true);

  CLI::App* lift = app.add_subcommand("lift-function",
                                      "function with the given principal divisor");
  add_common(lift, true);
  lift->add_option("--gauge", opt.gauge, "point pinned to value 0 (default: smallest vertex)");

  CLI::App* djac = app.add_subcommand("discrete-jac", "Jacobian of a unit-length graph");
  add_common(djac);

  CLI::App* trees = app.add_subcommand("trees", "spanning tree count");
  add_common(trees);

  CLI::App* embed = app.add_subcommand("embed", "certified isometric embedding into R^3");
  add_common(embed);
  embed->add_option("--plot", opt.plot_file, "also write a float CSV of segment endpoints");

  CLI::App* check = app.add_subcommand("check-balance",
                                       "embed, add rays, verify the balancing condition");
  add_common(check);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    trop::MetricGraph g = trop::io::graph_from_json(load_json(opt.graph_file));

    if (jacobian->parsed()) {
      emit(opt, trop::io::period_matrix_to_json(
                    trop::period_matrix(g, trop::homology_basis(g))));
    } else if (aj->parsed()) {
      trop::CycleBasis basis = trop::homology_basis(g);
      trop::JacobianPoint p =
          trop::abel_jacobi(g, basis, trop::io::point_from_string(opt.base),
                            trop::io::point_from_string(opt.point));
      emit(opt, trop::io::jacobian_point_to_json(p));
    } else if (isp->parsed()) {
      trop::Divisor d = trop::io::divisor_from_json(g, load_json(opt.divisor_file));
      emit(opt, json{{"principal", trop::is_principal(g, d)}});
    } else if (lift->parsed()) {
      trop::Divisor d = trop::io::divisor_from_json(g, load_json(opt.divisor_file));
      trop::GraphPoint gauge = opt.gauge.empty()
                                   ? trop::GraphPoint::on_vertex(g.vertex_id(0))
                                   : trop::io::point_from_string(opt.gauge);
      emit(opt, trop::io::pl_function_to_json(trop::lift_to_function(g, d, gauge)));
    } else if (djac->parsed()) {
      emit(opt, trop::io::group_to_json(trop::discrete_jacobian_via_laplacian(g)));
    } else if (trees->parsed()) {
      emit(opt, json{{"count", std::stoll(trop::spanning_tree_count(g).get_str())}});
    } else if (embed->parsed()) {
      trop::Embedding3D e = trop::embed(g);
      if (!opt.plot_file.empty()) write_plot(opt.plot_file, e);
      emit(opt, trop::io::embedding_to_json(e));
    } else if (check->parsed()) {
      trop::BalancedComplex c = trop::balance(trop::embed(g));
      json doc = trop::io::balanced_complex_to_json(c);
      doc["balanced"] = trop::is_balanced(c);
      emit(opt, doc);
    }
  } catch (const trop::Error& e) {
    json err{{"error", {{"kind", e.kind()}, {"detail", e.what()}}}};
    std::cout << err.dump() << "\n";
    std::cerr << e.kind() << ": " << e.what() << "\n";
    return is_parse_kind(e.kind()) ? 2 : 1;
  }
  return 0;
}
