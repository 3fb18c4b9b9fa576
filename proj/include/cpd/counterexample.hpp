#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cpd/computad.hpp"
#include "cpd/finset.hpp"

namespace cpd {

// The standing example: two 2-computads A and B, each one vertex with
// identity-bounded 2-indets, the subcomputad C of the terminal generated by
// c, the product A x B, and the factorizations alpha : A -> C, beta : B -> C
// of the maps to the terminal.
struct PaperScene {
  Computad2 A;
  Computad2 B;
  Computad2 C;
  Product2 AxB;
  Computad2Morphism alpha;
  Computad2Morphism beta;
  Bang2 bang_A;
  Bang2 bang_B;
};

// Builds a scene from the given generator names for the two factors (each on
// the identity of a single vertex).
PaperScene build_scene(const std::vector<std::string>& a_names,
                       const std::vector<std::string>& b_names);

// The standard instance: a1, a2 against b1, b2.
PaperScene build_paper_objects();

// The cell-level square over the scene, bounded at degree k: apex = cells of
// A x B, legs = the two projections' cell maps, base = cells of C via the
// cell maps of alpha and beta.
struct Star3Square {
  SetSquare square;
  std::vector<EHNormalForm> apex_cells;  // aligned with square.top.dom()
};

Star3Square star3_square(const PaperScene& scene, Degree k);

// The three supporting checks for the reduction from the parallel-pair square
// to the cell-level square:
//   mono_check            — the bounded pair map induced by C -> terminal is
//                           injective;
//   reduction_check       — post-composing the parallel-pair square with that
//                           injection does not change its pullback verdict;
//   inner_outer_pullbacks — pullback2 along (alpha, beta) and the pullback
//                           over the terminal both reproduce product2(A, B).
struct ReductionChecks {
  bool mono_check = false;
  bool reduction_check = false;
  bool inner_outer_pullbacks = false;
};

ReductionChecks verify_reductions(const PaperScene& scene, Degree k);

// Per-degree counts for the comparison from product cells into the pullback
// of the cospan of cell maps.
struct CardinalityRow {
  Degree degree = 0;
  std::size_t product_cells = 0;      // cells of A x B of this degree
  std::size_t pullback_elements = 0;  // compatible cell pairs of this degree
  bool surjective = false;            // every compatible pair is hit
  std::size_t max_fiber = 0;          // largest preimage of a compatible pair
  std::string max_fiber_over;         // a pair label attaining max_fiber
};

std::vector<CardinalityRow> cardinality_table(const PaperScene& scene, Degree k);

struct CounterexampleReport {
  Degree degree_bound = 0;
  PullbackReport star3;
  // First collision of the comparison map, as normal forms, when present.
  std::optional<std::pair<EHNormalForm, EHNormalForm>> witness;
  bool projections_agree = false;
  bool mono_check = false;
  bool reduction_check = false;
  bool inner_outer_pullbacks = false;
  std::vector<CardinalityRow> table;
};

// Runs the whole pipeline over an arbitrary scene at bound k.
CounterexampleReport verify_scene(const PaperScene& scene, Degree k);

// The standard run.  Throws DegreeTooSmall when k < 2: the first collision
// appears at degree 2, so smaller bounds cannot decide the question.
CounterexampleReport verify_counterexample(Degree k);

}  // namespace cpd
