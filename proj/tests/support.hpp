#pragma once

// Shared helpers for the test suites: a seeded generator of random 2-cell
// terms over identity-bounded computads, the one-step rewrite relation used
// by the normal-form invariance tests, and brute-force enumeration of
// functions and morphisms between small presentations (for the
// universal-property checks).

#include <random>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "cpd/cells2.hpp"
#include "cpd/computad.hpp"
#include "cpd/finset.hpp"
#include "cpd/freecat.hpp"

namespace support {

// Random well-typed term over an identity-bounded computad, rooted at
// `vertex`, with nesting depth at most `depth`.  Leaves are generators at
// that vertex or the identity 2-cell on id(vertex); inner nodes are vertical
// or horizontal composites (over a single vertex with identity boundaries
// every combination typechecks).
inline cpd::TermPtr random_term(const cpd::Computad2& K, const std::string& vertex,
                                int depth, std::mt19937_64& rng) {
  std::vector<std::string> gens;
  for (const auto& g : K.indets2) {
    if (K.boundary_of(g).src1.start == vertex) gens.push_back(g);
  }
  std::uniform_int_distribution<int> four(0, 3);
  int roll = four(rng);
  if (depth <= 0 || roll == 0) {
    if (!gens.empty() && four(rng) != 0) {
      std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
      return cpd::gen(gens[pick(rng)]);
    }
    return cpd::id1(cpd::identity_path(vertex));
  }
  cpd::TermPtr a = random_term(K, vertex, depth - 1, rng);
  cpd::TermPtr b = random_term(K, vertex, depth - 1, rng);
  return roll % 2 == 0 ? cpd::vcomp(std::move(a), std::move(b))
                       : cpd::hcomp(std::move(a), std::move(b));
}

namespace detail {

inline const cpd::Cell2Term::VComp* as_v(const cpd::TermPtr& t) {
  return std::get_if<cpd::Cell2Term::VComp>(&t->node);
}
inline const cpd::Cell2Term::HComp* as_h(const cpd::TermPtr& t) {
  return std::get_if<cpd::Cell2Term::HComp>(&t->node);
}
inline bool is_id(const cpd::TermPtr& t) {
  return std::holds_alternative<cpd::Cell2Term::Id1>(t->node);
}

}  // namespace detail

// All terms reachable from `t` by one application, at any position, of a
// 2-category law (identity elimination, reassociation, interchange) or of the
// laws the Eckmann-Hilton argument derives for identity-bounded cells
// (commuting either composition, exchanging vertical for horizontal).  Every
// result denotes the same cell as `t`, so its normal form must not change.
inline std::vector<cpd::TermPtr> one_step_rewrites(const cpd::TermPtr& t) {
  using cpd::hcomp;
  using cpd::vcomp;
  using detail::as_h;
  using detail::as_v;
  using detail::is_id;

  std::vector<cpd::TermPtr> out;
  if (const auto* v = as_v(t)) {
    const cpd::TermPtr& a = v->top;
    const cpd::TermPtr& b = v->bottom;
    out.push_back(vcomp(b, a));
    out.push_back(hcomp(a, b));
    if (is_id(a)) out.push_back(b);
    if (is_id(b)) out.push_back(a);
    if (const auto* va = as_v(a)) out.push_back(vcomp(va->top, vcomp(va->bottom, b)));
    if (const auto* vb = as_v(b)) out.push_back(vcomp(vcomp(a, vb->top), vb->bottom));
    const auto* ha = as_h(a);
    const auto* hb = as_h(b);
    if (ha && hb) {
      out.push_back(hcomp(vcomp(ha->left, hb->left), vcomp(ha->right, hb->right)));
    }
    for (const auto& r : one_step_rewrites(a)) out.push_back(vcomp(r, b));
    for (const auto& r : one_step_rewrites(b)) out.push_back(vcomp(a, r));
  } else if (const auto* h = as_h(t)) {
    const cpd::TermPtr& a = h->left;
    const cpd::TermPtr& b = h->right;
    out.push_back(hcomp(b, a));
    out.push_back(vcomp(a, b));
    if (is_id(a)) out.push_back(b);
    if (is_id(b)) out.push_back(a);
    if (const auto* ha = as_h(a)) out.push_back(hcomp(ha->left, hcomp(ha->right, b)));
    if (const auto* hb = as_h(b)) out.push_back(hcomp(hcomp(a, hb->left), hb->right));
    const auto* va = as_v(a);
    const auto* vb = as_v(b);
    if (va && vb) {
      out.push_back(vcomp(hcomp(va->top, vb->top), hcomp(va->bottom, vb->bottom)));
    }
    for (const auto& r : one_step_rewrites(a)) out.push_back(hcomp(r, b));
    for (const auto& r : one_step_rewrites(b)) out.push_back(hcomp(a, r));
  }
  return out;
}

// Every total assignment dom -> cod, in cod-digit counting order.  The empty
// domain yields exactly the empty assignment; an empty codomain under a
// nonempty domain yields nothing.
inline std::vector<std::unordered_map<std::string, std::string>> all_assignments(
    const cpd::FinSet& dom, const cpd::FinSet& cod) {
  std::vector<std::unordered_map<std::string, std::string>> out;
  if (dom.empty()) {
    out.emplace_back();
    return out;
  }
  if (cod.empty()) return out;
  std::vector<std::size_t> digits(dom.size(), 0);
  while (true) {
    std::unordered_map<std::string, std::string> assignment;
    for (std::size_t i = 0; i < dom.size(); ++i) assignment[dom.at(i)] = cod.at(digits[i]);
    out.push_back(std::move(assignment));
    std::size_t i = 0;
    while (i < digits.size() && ++digits[i] == cod.size()) digits[i++] = 0;
    if (i == digits.size()) break;
  }
  return out;
}

inline std::vector<cpd::SetFun> all_set_funs(const cpd::FinSet& dom, const cpd::FinSet& cod) {
  std::vector<cpd::SetFun> out;
  for (auto& a : all_assignments(dom, cod)) out.emplace_back(dom, cod, std::move(a));
  return out;
}

// Exhaustive morphism enumeration, for presentations small enough that the
// assignment space is tractable.
inline std::vector<cpd::GraphMorphism> all_graph_morphisms(const cpd::Graph& dom,
                                                           const cpd::Graph& cod) {
  std::vector<cpd::GraphMorphism> out;
  for (const auto& on_v : all_assignments(dom.vertices, cod.vertices)) {
    for (const auto& on_e : all_assignments(dom.edges, cod.edges)) {
      if (cpd::is_graph_morphism(dom, cod, on_v, on_e)) {
        out.push_back(cpd::make_graph_morphism(dom, cod, on_v, on_e));
      }
    }
  }
  return out;
}

inline std::vector<cpd::Computad2Morphism> all_computad2_morphisms(
    const cpd::Computad2& dom, const cpd::Computad2& cod) {
  std::vector<cpd::Computad2Morphism> out;
  for (const auto& on_v : all_assignments(dom.skeleton.vertices, cod.skeleton.vertices)) {
    for (const auto& on_e : all_assignments(dom.skeleton.edges, cod.skeleton.edges)) {
      for (const auto& on_i : all_assignments(dom.indets2, cod.indets2)) {
        if (cpd::is_computad2_morphism(dom, cod, on_v, on_e, on_i)) {
          out.push_back(cpd::make_computad2_morphism(dom, cod, on_v, on_e, on_i));
        }
      }
    }
  }
  return out;
}

}  // namespace support
