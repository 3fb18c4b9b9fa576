#pragma once

// Finite sets and functions with deterministic element order, canonical
// pullbacks, and commuting-square checks that extract explicit witnesses.

#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cpd/errors.hpp"

namespace cpd {

/// Canonical label for an ordered pair of labels: "<a,b>".
std::string pair_label(const std::string& a, const std::string& b);

/// A finite set of distinct opaque labels. Iteration order is insertion
/// order and is part of the value: enumerations built on top of FinSet are
/// reproducible run to run.
class FinSet {
 public:
  FinSet() = default;
  explicit FinSet(std::vector<std::string> elements);

  /// Throws ValidationError on a duplicate label.
  void add(std::string label);

  bool contains(const std::string& label) const;
  std::size_t index_of(const std::string& label) const;
  std::size_t size() const { return elems_.size(); }
  bool empty() const { return elems_.empty(); }
  const std::string& at(std::size_t i) const { return elems_.at(i); }
  const std::vector<std::string>& elements() const { return elems_; }
  auto begin() const { return elems_.begin(); }
  auto end() const { return elems_.end(); }

  /// Exact equality, including element order.
  bool operator==(const FinSet& other) const { return elems_ == other.elems_; }
  /// Equality as sets, ignoring element order.
  bool same_elements(const FinSet& other) const;

 private:
  std::vector<std::string> elems_;
  std::unordered_map<std::string, std::size_t> index_;
};

/// A total function between finite sets. Totality and codomain membership
/// are checked at construction.
class SetFun {
 public:
  SetFun() = default;  // the empty function between empty sets
  SetFun(FinSet dom, FinSet cod,
         std::unordered_map<std::string, std::string> assignment);

  const FinSet& dom() const { return dom_; }
  const FinSet& cod() const { return cod_; }
  const std::string& operator()(const std::string& x) const;

  static SetFun identity(const FinSet& s);

  /// Pointwise equality on a shared domain (element order ignored).
  bool operator==(const SetFun& other) const;

 private:
  FinSet dom_, cod_;
  std::unordered_map<std::string, std::string> map_;
};

/// g after f. Requires f.cod and g.dom to have the same elements.
SetFun compose(const SetFun& g, const SetFun& f);

bool is_mono(const SetFun& f);

struct CanonicalPullback {
  FinSet apex;  // labels pair_label(x, y) with f(x) = g(y), x-major order
  SetFun proj1;
  SetFun proj2;
};

/// Canonical pullback of the cospan f : X -> Z <- Y : g.
/// Throws CodomainMismatch unless f and g share a codomain.
CanonicalPullback pullback(const SetFun& f, const SetFun& g);

/// A commuting square
///
///     P --top--> X
///     |          |
///   left       right
///     v          v
///     Y -bottom> Z
///
/// Commutation (right . top == bottom . left) is checked at construction;
/// NotCommuting names the first offending apex element.
struct SetSquare {
  SetSquare(SetFun top, SetFun left, SetFun right, SetFun bottom);

  SetFun top, left, right, bottom;
};

struct PullbackReport {
  bool is_pullback = false;
  /// Two distinct apex elements with equal images under top and left.
  std::optional<std::pair<std::string, std::string>> collision;
  /// A compatible pair (element of the canonical pullback) not hit by the
  /// comparison map.
  std::optional<std::string> missing;
};

/// Compares the square's apex with the canonical pullback of (right, bottom)
/// via the comparison map p |-> <top(p), left(p)>. The square is a pullback
/// iff the comparison is a bijection; otherwise the report carries the first
/// collision and/or first missing element in enumeration order.
PullbackReport check_pullback_square(const SetSquare& s);

/// Post-composing both legs of a commuting square with a mono m does not
/// change whether the square is a pullback. Evaluates both sides and returns
/// true when the verdicts agree. Throws NotMono if m is not injective.
bool mono_reduction_check(const SetSquare& inner, const SetFun& m);

}  // namespace cpd
