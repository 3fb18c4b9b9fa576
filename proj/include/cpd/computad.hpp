#pragma once

#include <cstddef>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cpd/cells2.hpp"
#include "cpd/errors.hpp"
#include "cpd/finset.hpp"
#include "cpd/freecat.hpp"

namespace cpd {

// ---------------------------------------------------------------------------
// 2-computads
// ---------------------------------------------------------------------------

// A 2-computad presentation: a graph (0- and 1-indets) plus a set of 2-indets
// with boundaries in the free category on the graph.
struct Computad2 {
  Graph skeleton;
  FinSet indets2;
  std::unordered_map<std::string, Boundary2> boundary2;

  const Boundary2& boundary_of(const std::string& indet) const;
};

struct Gen2Decl {
  std::string name;
  Path src1;
  Path tgt1;
};

// Builds and validates a presentation.  Names must be unique across all three
// dimensions; boundary paths must be well formed and parallel.
Computad2 make_computad2(std::vector<std::string> vertices,
                         std::vector<EdgeDecl> edges,
                         std::vector<Gen2Decl> gens2);

// Re-checks the invariants of an already-built value; names the first
// offending indet in `why`.
bool validate_computad2(const Computad2& K, std::string* why = nullptr);

// Same vertices, edges and 2-indets with identical boundaries (order ignored).
bool same_presentation(const Computad2& a, const Computad2& b);

// A morphism of 2-computads: a graph morphism on the skeletons plus an
// indet-to-indet assignment that preserves boundaries.
struct Computad2Morphism {
  Computad2 src;
  Computad2 dst;
  GraphMorphism on_graph;
  SetFun on_indets2;

  const std::string& vertex_image(const std::string& v) const;
  const std::string& edge_image(const std::string& e) const;
  const std::string& indet_image(const std::string& g) const;
};

bool is_computad2_morphism(
    const Computad2& src, const Computad2& dst,
    const std::unordered_map<std::string, std::string>& on_vertices,
    const std::unordered_map<std::string, std::string>& on_edges,
    const std::unordered_map<std::string, std::string>& on_indets2,
    std::string* why = nullptr);

Computad2Morphism make_computad2_morphism(
    Computad2 src, Computad2 dst,
    std::unordered_map<std::string, std::string> on_vertices,
    std::unordered_map<std::string, std::string> on_edges,
    std::unordered_map<std::string, std::string> on_indets2);

Computad2Morphism identity_computad2_morphism(const Computad2& K);

Computad2Morphism compose(const Computad2Morphism& g, const Computad2Morphism& f);

bool operator==(const Computad2Morphism& a, const Computad2Morphism& b);

// Structural image of a term under a morphism (generators renamed, boundary
// paths mapped through the skeleton part).
TermPtr apply_cell(const Computad2Morphism& f, const TermPtr& t);

// Image of a normal form: the multiset image under the indet assignment.
// Requires both ends in the identity-bounded class.
EHNormalForm cell_image(const Computad2Morphism& f, const EHNormalForm& nf);

// ---------------------------------------------------------------------------
// Products and pullbacks
// ---------------------------------------------------------------------------

// Binary product: skeleton is the graph product; 2-indets are the pairs (a,b)
// whose boundary paths pair componentwise (equal source lengths and equal
// target lengths), with boundaries given by pair_paths.
struct Product2 {
  Computad2 computad;
  Computad2Morphism to_first;
  Computad2Morphism to_second;
};

Product2 product2(const Computad2& A, const Computad2& B);

// The mediating morphism of a cone (f : T -> A, g : T -> B) into product2(A,B).
Computad2Morphism pair_computad2_morphisms(const Computad2Morphism& f,
                                           const Computad2Morphism& g,
                                           const Product2& prod);

// Pullback of a cospan (alpha : A -> C, beta : B -> C): the sub-presentation
// of the product on the pairs equalized by the two maps.
struct Pullback2 {
  Computad2 computad;
  Computad2Morphism to_first;
  Computad2Morphism to_second;
};

Pullback2 pullback2(const Computad2Morphism& alpha, const Computad2Morphism& beta);

// ---------------------------------------------------------------------------
// The parallel-pair construction, degree-bounded
// ---------------------------------------------------------------------------

// An ordered pair of parallel 2-cells.  In the identity-bounded class two
// cells are parallel exactly when they sit at the same vertex.
struct ParallelPair2 {
  ParallelPair2() = default;
  ParallelPair2(EHNormalForm first_, EHNormalForm second_);

  EHNormalForm first;
  EHNormalForm second;

  std::string label() const;

  bool operator==(const ParallelPair2&) const = default;
};

// All parallel pairs with both components of degree <= k, in deterministic
// order (cells in graded order, first component major).
struct Pi2Set {
  std::vector<ParallelPair2> pairs;
  FinSet labels;  // pair labels, same order as `pairs`
};

Pi2Set pi2_bounded(const Computad2& K, Degree k);

// The induced map on bounded cell sets: cells of f.src of degree <= k, by
// label, to cells of f.dst.  Degree-preserving, so the bound is exact.
SetFun cell_map_bounded(const Computad2Morphism& f, Degree k);

// The induced map on bounded parallel-pair sets (componentwise cell_map).
SetFun pi2_on_morphism_bounded(const Computad2Morphism& f, Degree k);

// ---------------------------------------------------------------------------
// The terminal 2-computad, kept symbolic
// ---------------------------------------------------------------------------

// The terminal 2-computad has one 0-indet x, one 1-indet xi, 1-cells the
// powers of xi (so identified with naturals), and one 2-indet for every pair
// (m,n) of naturals, bounded by xi^m => xi^n.  Its full 2-cell set is never
// materialized; only the presentation data below is used.
struct Terminal2Handle {
  static const std::string& vertex();  // "x"
  static const std::string& edge();    // "xi"
  // "c" for (0,0) — the unique indet on (id_x, id_x) — else "c<m,n>".
  static std::string indet_name(std::size_t m, std::size_t n);
};

// The unique morphism K -> terminal, described symbolically: every vertex to
// x, every edge to xi, and each 2-indet to the pair of its boundary lengths.
struct Bang2 {
  Computad2 src;
  std::unordered_map<std::string, std::pair<std::size_t, std::size_t>> indet_image;

  const std::pair<std::size_t, std::size_t>& image_of(const std::string& indet) const;
};

Bang2 bang_map(const Computad2& K);

// Materializes the subcomputad of the terminal generated by the given (m,n)
// pairs: vertex x; the edge xi only when some coordinate is nonzero; one
// 2-indet per pair, named by Terminal2Handle::indet_name.
Computad2 subcomputad_generated(const Terminal2Handle& handle,
                                const std::vector<std::pair<std::size_t, std::size_t>>& gens);

// Factors a morphism-to-terminal through a materialized subcomputad: the
// unique morphism f.src -> sub whose composite with the inclusion is f.
// Throws NotInImage when some image lies outside the subcomputad.
Computad2Morphism factor_through(const Computad2& sub, const Bang2& f);

// The bounded parallel-pair map induced by the inclusion sub -> terminal.
// Image pairs are written in the terminal's own vocabulary (multisets over
// the (m,n) indet indexing), so injectivity of the map is checked against an
// honestly relabelled codomain, not against the domain itself.
SetFun pi2_through_terminal_bounded(const Computad2& sub, Degree k);

// Pullback of K1 -> terminal <- K2 without materializing the terminal:
// the sub-presentation of the product on pairs with equal bang images.
Pullback2 pullback2_over_terminal(const Computad2& K1, const Computad2& K2,
                                  const Bang2& bang1, const Bang2& bang2);

// ---------------------------------------------------------------------------
// One dimension up
// ---------------------------------------------------------------------------

// A 3-computad presentation over an identity-bounded base: 3-indets with
// parallel pairs of base cells as boundaries (source cell => target cell).
struct Com3Object {
  Computad2 base;
  FinSet indets3;
  std::unordered_map<std::string, ParallelPair2> boundary3;

  const ParallelPair2& boundary_of(const std::string& indet) const;
};

struct Gen3Decl {
  std::string name;
  TermPtr src;
  TermPtr tgt;
};

// Normalizes the boundary terms over the base (so the base must be in the
// identity-bounded class) and validates name uniqueness.
Com3Object make_com3(Computad2 base, std::vector<Gen3Decl> gens3);

bool validate_com3(const Com3Object& M, std::string* why = nullptr);

bool same_presentation(const Com3Object& a, const Com3Object& b);

// Truncation: drop the 3-indets.
Computad2 tr2(const Com3Object& M);

// Inclusion: attach an empty 3-indet set.  tr2(i2(A)) = A.
Com3Object i2(const Computad2& A);

// Binary product one dimension up: base = product2 of the bases; 3-indets are
// the pairs (u,v) whose paired boundaries are realized by cells of the product
// base.  In the identity-bounded class a pair of cells is realizable exactly
// when the degrees agree; the boundary cell recorded is the lexicographically
// least realization (the sorted components zipped).
Com3Object product3(const Com3Object& M, const Com3Object& N);

}  // namespace cpd
