#include "cpd/counterexample.hpp"

#include <unordered_map>

namespace cpd {

PaperScene build_scene(const std::vector<std::string>& a_names,
                       const std::vector<std::string>& b_names) {
  auto one_vertex = [](const std::string& vertex,
                       const std::vector<std::string>& names) {
    std::vector<Gen2Decl> gens;
    for (const auto& n : names) {
      gens.push_back(Gen2Decl{n, identity_path(vertex), identity_path(vertex)});
    }
    return make_computad2({vertex}, {}, std::move(gens));
  };
  PaperScene scene;
  scene.A = one_vertex("x", a_names);
  scene.B = one_vertex("y", b_names);
  scene.C = subcomputad_generated(Terminal2Handle{}, {{0, 0}});
  scene.AxB = product2(scene.A, scene.B);
  scene.bang_A = bang_map(scene.A);
  scene.bang_B = bang_map(scene.B);
  scene.alpha = factor_through(scene.C, scene.bang_A);
  scene.beta = factor_through(scene.C, scene.bang_B);
  return scene;
}

PaperScene build_paper_objects() {
  return build_scene({"a1", "a2"}, {"b1", "b2"});
}

Star3Square star3_square(const PaperScene& scene, Degree k) {
  Star3Square s{SetSquare(cell_map_bounded(scene.AxB.to_first, k),
                          cell_map_bounded(scene.AxB.to_second, k),
                          cell_map_bounded(scene.alpha, k),
                          cell_map_bounded(scene.beta, k)),
                enumerate_cells(scene.AxB.computad, k).flatten()};
  return s;
}

ReductionChecks verify_reductions(const PaperScene& scene, Degree k) {
  ReductionChecks checks;

  SetFun terminal_pairs = pi2_through_terminal_bounded(scene.C, k);
  checks.mono_check = is_mono(terminal_pairs);

  SetSquare pair_square(pi2_on_morphism_bounded(scene.AxB.to_first, k),
                        pi2_on_morphism_bounded(scene.AxB.to_second, k),
                        pi2_on_morphism_bounded(scene.alpha, k),
                        pi2_on_morphism_bounded(scene.beta, k));
  checks.reduction_check = mono_reduction_check(pair_square, terminal_pairs);

  Pullback2 inner = pullback2(scene.alpha, scene.beta);
  Pullback2 outer = pullback2_over_terminal(scene.A, scene.B, scene.bang_A,
                                            scene.bang_B);
  checks.inner_outer_pullbacks =
      same_presentation(inner.computad, scene.AxB.computad) &&
      same_presentation(outer.computad, scene.AxB.computad);

  return checks;
}

std::vector<CardinalityRow> cardinality_table(const PaperScene& scene, Degree k) {
  GradedCells product_cells = enumerate_cells(scene.AxB.computad, k);
  GradedCells a_cells = enumerate_cells(scene.A, k);
  GradedCells b_cells = enumerate_cells(scene.B, k);
  SetFun to_a = cell_map_bounded(scene.AxB.to_first, k);
  SetFun to_b = cell_map_bounded(scene.AxB.to_second, k);
  SetFun a_to_c = cell_map_bounded(scene.alpha, k);
  SetFun b_to_c = cell_map_bounded(scene.beta, k);

  std::vector<CardinalityRow> table;
  for (Degree d = 0; d <= k; ++d) {
    CardinalityRow row;
    row.degree = d;
    row.product_cells = product_cells.by_degree[d].size();

    // Compatible pairs of this degree, in (A-cell, B-cell) enumeration order.
    std::vector<std::string> compatible;
    for (const auto& u : a_cells.by_degree[d]) {
      for (const auto& v : b_cells.by_degree[d]) {
        if (a_to_c(u.label()) != b_to_c(v.label())) continue;
        compatible.push_back(pair_label(u.label(), v.label()));
      }
    }
    row.pullback_elements = compatible.size();

    std::unordered_map<std::string, std::size_t> fiber;
    for (const auto& w : product_cells.by_degree[d]) {
      ++fiber[pair_label(to_a(w.label()), to_b(w.label()))];
    }
    row.surjective = true;
    for (const auto& p : compatible) {
      std::size_t size = fiber.count(p) ? fiber.at(p) : 0;
      if (size == 0) row.surjective = false;
      if (size > row.max_fiber) {
        row.max_fiber = size;
        row.max_fiber_over = p;
      }
    }
    table.push_back(std::move(row));
  }
  return table;
}

CounterexampleReport verify_scene(const PaperScene& scene, Degree k) {
  CounterexampleReport report;
  report.degree_bound = k;

  Star3Square s3 = star3_square(scene, k);
  report.star3 = check_pullback_square(s3.square);

  if (report.star3.collision) {
    std::unordered_map<std::string, const EHNormalForm*> by_label;
    for (const auto& cell : s3.apex_cells) by_label.emplace(cell.label(), &cell);
    const auto& [p, q] = *report.star3.collision;
    report.witness = std::make_pair(*by_label.at(p), *by_label.at(q));
    report.projections_agree = s3.square.top(p) == s3.square.top(q) &&
                               s3.square.left(p) == s3.square.left(q);
  } else {
    report.projections_agree = true;  // vacuous: nothing to compare
  }

  ReductionChecks checks = verify_reductions(scene, k);
  report.mono_check = checks.mono_check;
  report.reduction_check = checks.reduction_check;
  report.inner_outer_pullbacks = checks.inner_outer_pullbacks;

  report.table = cardinality_table(scene, k);
  return report;
}

CounterexampleReport verify_counterexample(Degree k) {
  if (k < 2) {
    throw DegreeTooSmall("the first collision appears at degree 2; "
                         "--max-degree must be at least 2");
  }
  return verify_scene(build_paper_objects(), k);
}

}  // namespace cpd
