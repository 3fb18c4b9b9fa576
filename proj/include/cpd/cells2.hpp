#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "cpd/errors.hpp"
#include "cpd/freecat.hpp"

namespace cpd {

struct Computad2;  // defined in computad.hpp

using Degree = std::size_t;

// Formal 2-cell expressions over a 2-computad: generators, identities on
// 1-cells, and vertical / horizontal composites.  Terms are immutable and
// shared, so subterms can be reused freely.
struct Cell2Term;
using TermPtr = std::shared_ptr<const Cell2Term>;

struct Cell2Term {
  struct Gen {
    std::string name;
  };
  struct Id1 {
    Path on;
  };
  struct VComp {  // first `top`, then `bottom` (along the 1-cell direction)
    TermPtr top;
    TermPtr bottom;
  };
  struct HComp {  // `left` followed by `right` (along the 0-cell direction)
    TermPtr left;
    TermPtr right;
  };

  std::variant<Gen, Id1, VComp, HComp> node;
};

TermPtr gen(std::string name);
TermPtr id1(Path on);
TermPtr vcomp(TermPtr top, TermPtr bottom);
TermPtr hcomp(TermPtr left, TermPtr right);

// DSL-style rendering: a1, id(p), v(t,u), h(t,u).
std::string term_to_string(const TermPtr& t);

// The 1-cell boundary of a 2-cell.
struct Boundary2 {
  Path src1;
  Path tgt1;

  bool operator==(const Boundary2&) const = default;
};

// Computes the boundary of a term over K, checking that every composite is
// well typed.  Throws UnknownGenerator for names K does not declare,
// IllTypedVComp / IllTypedHComp for composites that do not meet.
Boundary2 boundary(const TermPtr& t, const Computad2& K);

// A 2-computad is in the identity-bounded class when it has no 1-indets;
// every 2-indet is then bounded by identity 1-cells at a single vertex, and
// cell equality is decidable by multiset normal forms.
bool is_eh_class(const Computad2& K, std::string* why = nullptr);

// Normal form of a 2-cell in the identity-bounded class: the vertex it sits
// at plus the multiset of generator occurrences.  By the Eckmann-Hilton
// argument the order and the composition pattern are immaterial.
struct EHNormalForm {
  std::string at_vertex;
  std::map<std::string, std::size_t> content;  // generator name -> multiplicity

  Degree degree() const;
  // "id(v)" for the empty multiset, otherwise "{g1, g2, ...}" with each
  // generator repeated per its multiplicity, in lexicographic order.
  std::string label() const;
  // A canonical term denoting this cell: the generators in label order,
  // vertically composed; id1 at the vertex when empty.
  TermPtr expansion() const;

  bool operator==(const EHNormalForm&) const = default;
  bool operator<(const EHNormalForm& o) const;
};

// Throws NotEHClass when K has 1-indets, otherwise typechecks `t` and folds
// it to its normal form.
EHNormalForm normalize(const TermPtr& t, const Computad2& K);

bool eq_cells(const TermPtr& a, const TermPtr& b, const Computad2& K);

// All cells of K of degree <= max_degree, graded by degree.  Within a degree
// cells are ordered by vertex (declaration order), then lexicographically by
// multiset content over the sorted generator names.
struct GradedCells {
  std::vector<std::vector<EHNormalForm>> by_degree;

  std::vector<EHNormalForm> flatten() const;
  std::size_t total() const;
};

GradedCells enumerate_cells(const Computad2& K, Degree max_degree);

}  // namespace cpd
