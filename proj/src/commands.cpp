#include "cpd/commands.hpp"

#include <ostream>

#include <json.hpp>

#include "cpd/computad.hpp"
#include "cpd/counterexample.hpp"
#include "cpd/dsl.hpp"
#include "cpd/report.hpp"

namespace cpd {

namespace {

using nlohmann::ordered_json;

bool is_cpd_path(const std::string& arg) {
  return arg.size() > 4 && arg.compare(arg.size() - 4, 4, ".cpd") == 0;
}

const Computad2& need_computad(const DslDocument& env, const std::string& name) {
  if (const Computad2* k = env.find_computad(name)) return *k;
  throw UnknownReference("unknown computad '" + name + "'");
}

const Computad2Morphism& need_morphism(const DslDocument& env,
                                       const std::string& name) {
  if (const Computad2Morphism* f = env.find_morphism(name)) return *f;
  throw UnknownReference("unknown morphism '" + name + "'");
}

void need_operands(const std::vector<std::string>& operands, std::size_t n,
                   const std::string& usage) {
  if (operands.size() != n) {
    throw ValidationError("expected " + usage);
  }
}

ordered_json computad_json(const std::string& name, const Computad2& K) {
  ordered_json j;
  j["name"] = name;
  j["vertices"] = ordered_json::array();
  for (const auto& v : K.skeleton.vertices) j["vertices"].push_back(v);
  j["edges"] = ordered_json::array();
  for (const auto& e : K.skeleton.edges) {
    j["edges"].push_back({{"name", e},
                          {"src", K.skeleton.source(e)},
                          {"tgt", K.skeleton.target(e)}});
  }
  j["gens2"] = ordered_json::array();
  for (const auto& g : K.indets2) {
    const Boundary2& b = K.boundary_of(g);
    j["gens2"].push_back({{"name", g},
                          {"src", path_label(b.src1)},
                          {"tgt", path_label(b.tgt1)}});
  }
  return j;
}

int cmd_validate(const std::vector<std::string>& paths,
                 const std::vector<std::string>& operands,
                 const RunConfig& config, std::ostream& out) {
  need_operands(operands, 0, "only .cpd files, e.g. `validate defs.cpd`");
  DslDocument env = builtin_document();
  ordered_json files = ordered_json::array();
  for (const auto& path : paths) {
    DslDocument parsed = parse_dsl_file(path, &env);
    std::size_t n = parsed.order.size();
    files.push_back({{"path", path}, {"definitions", n}});
    if (config.format == "text") {
      out << "ok: " << path << ": " << n << " definition"
          << (n == 1 ? "" : "s") << "\n";
    }
    for (const auto& name : parsed.order) {
      if (env.has(name)) continue;  // a redefinition of a built-in is fine
      env.order.push_back(name);
      if (const Computad2* k = parsed.find_computad(name)) {
        env.computads.emplace(name, *k);
      } else if (auto ic = parsed.com3s.find(name); ic != parsed.com3s.end()) {
        env.com3s.emplace(name, ic->second);
      } else if (auto im = parsed.morphisms.find(name); im != parsed.morphisms.end()) {
        env.morphisms.emplace(name, im->second);
      }
    }
  }
  if (config.format == "text") {
    if (paths.empty()) out << "ok: built-in definitions\n";
  } else {
    out << ordered_json{{"ok", true}, {"files", files}}.dump(2) << "\n";
  }
  return 0;
}

int cmd_product(const DslDocument& env, const std::vector<std::string>& operands,
                const RunConfig& config, std::ostream& out) {
  need_operands(operands, 2, "two computad names, e.g. `product paper_A paper_B`");
  const Computad2& A = need_computad(env, operands[0]);
  const Computad2& B = need_computad(env, operands[1]);
  Product2 P = product2(A, B);
  std::string name = operands[0] + "_x_" + operands[1];
  if (config.format == "text") {
    DslDocument doc;
    doc.order.push_back(name);
    doc.computads.emplace(name, P.computad);
    out << print_dsl(doc);
    out << "# " << P.computad.indets2.size() << " 2-indets, "
        << P.computad.skeleton.vertices.size() << " vertices, "
        << P.computad.skeleton.edges.size() << " edges\n";
  } else {
    out << computad_json(name, P.computad).dump(2) << "\n";
  }
  return 0;
}

int cmd_cells(const DslDocument& env, const std::vector<std::string>& operands,
              const RunConfig& config, std::ostream& out) {
  need_operands(operands, 1, "one computad name, e.g. `cells paper_A`");
  const Computad2& K = need_computad(env, operands[0]);
  GradedCells cells = enumerate_cells(K, config.max_degree);
  if (config.format == "text") {
    out << "cells of " << operands[0] << " up to degree " << config.max_degree
        << " (" << cells.total() << " total)\n";
    for (Degree d = 0; d < cells.by_degree.size(); ++d) {
      out << "degree " << d << ":";
      for (const auto& cell : cells.by_degree[d]) out << " " << cell.label();
      out << "\n";
    }
  } else {
    ordered_json by_degree = ordered_json::array();
    for (const auto& level : cells.by_degree) {
      ordered_json names = ordered_json::array();
      for (const auto& cell : level) names.push_back(cell.label());
      by_degree.push_back(names);
    }
    out << ordered_json{{"computad", operands[0]},
                        {"max_degree", config.max_degree},
                        {"total", cells.total()},
                        {"by_degree", by_degree}}
               .dump(2)
        << "\n";
  }
  return 0;
}

int cmd_pi2(const DslDocument& env, const std::vector<std::string>& operands,
            const RunConfig& config, std::ostream& out) {
  need_operands(operands, 1, "one computad name, e.g. `pi2 paper_A`");
  const Computad2& K = need_computad(env, operands[0]);
  Pi2Set pairs = pi2_bounded(K, config.max_degree);
  if (config.format == "text") {
    out << "parallel pairs of " << operands[0] << " up to degree "
        << config.max_degree << " (" << pairs.pairs.size() << " total)\n";
    for (const auto& p : pairs.pairs) out << p.label() << "\n";
  } else {
    ordered_json names = ordered_json::array();
    for (const auto& p : pairs.pairs) names.push_back(p.label());
    out << ordered_json{{"computad", operands[0]},
                        {"max_degree", config.max_degree},
                        {"total", pairs.pairs.size()},
                        {"pairs", names}}
               .dump(2)
        << "\n";
  }
  return 0;
}

int cmd_normalize(const DslDocument& env, const std::vector<std::string>& operands,
                  const RunConfig& config, std::ostream& out) {
  need_operands(operands, 2,
                "a computad name and a cell expression, e.g. "
                "`normalize paper_A \"v(a1, a2)\"`");
  const Computad2& K = need_computad(env, operands[0]);
  TermPtr term = parse_cell_term(operands[1], K);
  EHNormalForm nf = normalize(term, K);
  if (config.format == "text") {
    out << nf.label() << "\n";
    out << "vertex: " << nf.at_vertex << "\n";
    out << "degree: " << nf.degree() << "\n";
  } else {
    ordered_json content;
    for (const auto& [name, count] : nf.content) content[name] = count;
    out << ordered_json{{"label", nf.label()},
                        {"vertex", nf.at_vertex},
                        {"degree", nf.degree()},
                        {"content", content}}
               .dump(2)
        << "\n";
  }
  return 0;
}

int cmd_check_pullback(const DslDocument& env,
                       const std::vector<std::string>& operands,
                       const RunConfig& config, std::ostream& out) {
  need_operands(operands, 2,
                "two morphism names forming a cospan, e.g. "
                "`check-pullback paper_alpha paper_beta`");
  const Computad2Morphism& f = need_morphism(env, operands[0]);
  const Computad2Morphism& g = need_morphism(env, operands[1]);
  Pullback2 pb = pullback2(f, g);
  SetSquare square(cell_map_bounded(pb.to_first, config.max_degree),
                   cell_map_bounded(pb.to_second, config.max_degree),
                   cell_map_bounded(f, config.max_degree),
                   cell_map_bounded(g, config.max_degree));
  PullbackReport report = check_pullback_square(square);
  if (config.format == "text") {
    out << "cell-level pullback check for (" << operands[0] << ", "
        << operands[1] << ") at degree bound " << config.max_degree << "\n";
  }
  out << emit_report(report, config.format);
  return report.is_pullback ? 0 : 1;
}

int cmd_verify_counterexample(const std::vector<std::string>& operands,
                              const RunConfig& config, std::ostream& out) {
  need_operands(operands, 0, "no arguments, e.g. `verify-counterexample`");
  CounterexampleReport report = verify_counterexample(config.max_degree);
  out << emit_report(report, config.format);
  bool confirmed = !report.star3.is_pullback && report.witness.has_value();
  return confirmed ? 0 : 1;
}

}  // namespace

int run_command(const std::string& command, const std::vector<std::string>& args,
                const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.format != "text" && config.format != "json") {
      throw ValidationError("unknown format '" + config.format + "'");
    }
    std::vector<std::string> paths, operands;
    for (const auto& arg : args) {
      (is_cpd_path(arg) ? paths : operands).push_back(arg);
    }
    if (command == "validate") {
      return cmd_validate(paths, operands, config, out);
    }
    DslDocument env = load_documents(paths);
    if (command == "product") return cmd_product(env, operands, config, out);
    if (command == "cells") return cmd_cells(env, operands, config, out);
    if (command == "pi2") return cmd_pi2(env, operands, config, out);
    if (command == "normalize") return cmd_normalize(env, operands, config, out);
    if (command == "check-pullback") {
      return cmd_check_pullback(env, operands, config, out);
    }
    if (command == "verify-counterexample") {
      if (!paths.empty()) {
        throw ValidationError("verify-counterexample takes no arguments");
      }
      return cmd_verify_counterexample(operands, config, out);
    }
    throw ValidationError("unknown command '" + command + "'");
  } catch (const NotEHClass& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace cpd
