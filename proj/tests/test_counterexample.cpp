#include <doctest.h>

#include <cstdint>
#include <string>
#include <vector>

#include "cpd/counterexample.hpp"
#include "cpd/errors.hpp"
#include "oracle.hpp"

using namespace cpd;

TEST_CASE("the standing scene wires the factors through the terminal") {
  PaperScene scene = build_paper_objects();
  CHECK(scene.A.indets2.elements() == std::vector<std::string>{"a1", "a2"});
  CHECK(scene.B.indets2.elements() == std::vector<std::string>{"b1", "b2"});
  CHECK(scene.C.indets2.elements() == std::vector<std::string>{"c"});
  CHECK(scene.C.skeleton.edges.empty());
  CHECK(scene.AxB.computad.indets2.size() == 4);
  CHECK(scene.alpha.indet_image("a1") == "c");
  CHECK(scene.alpha.indet_image("a2") == "c");
  CHECK(scene.beta.indet_image("b1") == "c");
  CHECK(scene.bang_A.image_of("a1") == std::pair<std::size_t, std::size_t>{0, 0});

  // The factorizations really compute the maps to the terminal.
  CHECK(compose(scene.alpha, scene.AxB.to_first).indet_image("<a2,b1>") == "c");
}

TEST_CASE("the cell-level square fails to be a pullback at degree 2") {
  PaperScene scene = build_paper_objects();
  Star3Square star = star3_square(scene, 2);
  CHECK(star.apex_cells.size() == 15);  // 1 + 4 + 10 cells of the product
  CHECK(star.square.top.dom().size() == 15);
  CHECK(star.square.right.dom().size() == 6);  // cells of A up to degree 2
  CHECK(star.square.right.cod().size() == 3);  // cells of C up to degree 2

  PullbackReport report = check_pullback_square(star.square);
  CHECK_FALSE(report.is_pullback);
  REQUIRE(report.collision.has_value());
  CHECK(report.collision->first == "{<a1,b1>, <a2,b2>}");
  CHECK(report.collision->second == "{<a1,b2>, <a2,b1>}");
  CHECK_FALSE(report.missing.has_value());  // the comparison stays surjective
}

TEST_CASE("the full verification finds the standard witness") {
  CounterexampleReport report = verify_counterexample(3);
  CHECK(report.degree_bound == 3);
  CHECK_FALSE(report.star3.is_pullback);
  REQUIRE(report.witness.has_value());
  CHECK(report.witness->first.label() == "{<a1,b1>, <a2,b2>}");
  CHECK(report.witness->second.label() == "{<a1,b2>, <a2,b1>}");
  CHECK(report.witness->first.degree() == 2);
  CHECK(report.projections_agree);
  CHECK(report.mono_check);
  CHECK(report.reduction_check);
  CHECK(report.inner_outer_pullbacks);

  // The witness cells agree on both projections, re-derived here.
  PaperScene scene = build_paper_objects();
  CHECK(cell_image(scene.AxB.to_first, report.witness->first) ==
        cell_image(scene.AxB.to_first, report.witness->second));
  CHECK(cell_image(scene.AxB.to_second, report.witness->first) ==
        cell_image(scene.AxB.to_second, report.witness->second));
  CHECK_FALSE(report.witness->first == report.witness->second);

  REQUIRE(report.table.size() == 4);
  CHECK(report.table[2].product_cells == 10);
  CHECK(report.table[2].pullback_elements == 9);
  CHECK(report.table[2].max_fiber == 2);
  CHECK(report.table[2].max_fiber_over == "<{a1, a2},{b1, b2}>");
  CHECK(report.table[3].product_cells == 20);
  CHECK(report.table[3].pullback_elements == 16);
}

TEST_CASE("the verdict and witness are stable across degree bounds") {
  for (Degree k = 2; k <= 5; ++k) {
    CounterexampleReport report = verify_counterexample(k);
    CHECK(report.degree_bound == k);
    CHECK_FALSE(report.star3.is_pullback);
    REQUIRE(report.witness.has_value());
    CHECK(report.witness->first.label() == "{<a1,b1>, <a2,b2>}");
    CHECK(report.witness->second.label() == "{<a1,b2>, <a2,b1>}");
    CHECK(report.mono_check);
    CHECK(report.reduction_check);
    CHECK(report.inner_outer_pullbacks);
    CHECK(report.table.size() == k + 1);
  }
}

TEST_CASE("bounds below the first collision are rejected") {
  CHECK_THROWS_AS(verify_counterexample(0), DegreeTooSmall);
  CHECK_THROWS_AS(verify_counterexample(1), DegreeTooSmall);
  CHECK_THROWS_WITH(verify_counterexample(1),
                    "the first collision appears at degree 2; --max-degree must "
                    "be at least 2");
}

TEST_CASE("per-degree counts match the independent enumeration") {
  PaperScene scene = build_paper_objects();
  CounterexampleReport report = verify_scene(scene, 5);
  REQUIRE(report.table.size() == 6);

  std::vector<oracle::PairItem> items = {
      {"a1", "b1"}, {"a1", "b2"}, {"a2", "b1"}, {"a2", "b2"}};
  for (Degree d = 0; d <= 5; ++d) {
    auto fibers = oracle::projection_fibers(items, d);
    std::uint64_t total = 0, max_fiber = 0;
    for (const auto& [image, count] : fibers) {
      total += count;
      if (count > max_fiber) max_fiber = count;
    }
    const CardinalityRow& row = report.table[d];
    CHECK(row.degree == d);
    CHECK(row.product_cells == total);
    CHECK(row.product_cells == oracle::multiset_count(4, d));
    CHECK(row.pullback_elements == fibers.size());
    CHECK(row.pullback_elements ==
          oracle::multiset_count(2, d) * oracle::multiset_count(2, d));
    CHECK(row.surjective);
    CHECK(row.max_fiber == max_fiber);
    // Non-injective exactly from degree 2 on.
    CHECK((row.max_fiber >= 2) == (d >= 2));
  }

  // The degree-2 fiber of size 2 sits over the split pair of doubletons.
  auto fibers2 = oracle::projection_fibers(items, 2);
  oracle::ProjImage split{{"a1", "a2"}, {"b1", "b2"}};
  REQUIRE(fibers2.count(split) == 1);
  CHECK(fibers2.at(split) == 2);
  CHECK(report.table[2].max_fiber_over == "<{a1, a2},{b1, b2}>");
}

TEST_CASE("single-generator factors do give a pullback") {
  PaperScene scene = build_scene({"a1"}, {"b1"});
  CHECK(scene.AxB.computad.indets2.size() == 1);
  for (Degree k = 2; k <= 5; ++k) {
    CounterexampleReport report = verify_scene(scene, k);
    CHECK(report.star3.is_pullback);
    CHECK_FALSE(report.witness.has_value());
    CHECK(report.mono_check);
    CHECK(report.reduction_check);
    CHECK(report.inner_outer_pullbacks);
    for (const CardinalityRow& row : report.table) {
      CHECK(row.product_cells == 1);
      CHECK(row.pullback_elements == 1);
      CHECK(row.max_fiber == 1);
      CHECK(row.surjective);
    }
  }
}

TEST_CASE("one factor with a single generator also gives a pullback") {
  PaperScene scene = build_scene({"a1", "a2"}, {"b1"});
  for (Degree k = 2; k <= 5; ++k) {
    CounterexampleReport report = verify_scene(scene, k);
    CHECK(report.star3.is_pullback);
    CHECK_FALSE(report.witness.has_value());
  }
}

TEST_CASE("the witness follows the generator names") {
  PaperScene scene = build_scene({"p", "q"}, {"r", "s"});
  CounterexampleReport report = verify_scene(scene, 2);
  CHECK_FALSE(report.star3.is_pullback);
  REQUIRE(report.witness.has_value());
  CHECK(report.witness->first.label() == "{<p,r>, <q,s>}");
  CHECK(report.witness->second.label() == "{<p,s>, <q,r>}");
}
