#include "cpd/finset.hpp"

#include <algorithm>
#include <unordered_set>

namespace cpd {

std::string pair_label(const std::string& a, const std::string& b) {
  return "<" + a + "," + b + ">";
}

FinSet::FinSet(std::vector<std::string> elements) {
  for (auto& e : elements) add(std::move(e));
}

void FinSet::add(std::string label) {
  auto [it, inserted] = index_.emplace(label, elems_.size());
  if (!inserted) {
    throw ValidationError("duplicate element '" + label + "'");
  }
  elems_.push_back(std::move(label));
}

bool FinSet::contains(const std::string& label) const {
  return index_.count(label) != 0;
}

std::size_t FinSet::index_of(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) {
    throw ValidationError("element '" + label + "' not in set");
  }
  return it->second;
}

bool FinSet::same_elements(const FinSet& other) const {
  if (size() != other.size()) return false;
  for (const auto& e : elems_) {
    if (!other.contains(e)) return false;
  }
  return true;
}

SetFun::SetFun(FinSet dom, FinSet cod,
               std::unordered_map<std::string, std::string> assignment)
    : dom_(std::move(dom)), cod_(std::move(cod)), map_(std::move(assignment)) {
  for (const auto& x : dom_) {
    auto it = map_.find(x);
    if (it == map_.end()) {
      throw ValidationError("no value assigned to '" + x + "'");
    }
    if (!cod_.contains(it->second)) {
      throw ValidationError("value '" + it->second + "' of '" + x +
                            "' is not in the codomain");
    }
  }
  // Drop assignments outside the domain so equality is purely pointwise.
  for (auto it = map_.begin(); it != map_.end();) {
    it = dom_.contains(it->first) ? std::next(it) : map_.erase(it);
  }
}

const std::string& SetFun::operator()(const std::string& x) const {
  auto it = map_.find(x);
  if (it == map_.end()) {
    throw ValidationError("'" + x + "' is not in the domain");
  }
  return it->second;
}

SetFun SetFun::identity(const FinSet& s) {
  std::unordered_map<std::string, std::string> m;
  for (const auto& e : s) m.emplace(e, e);
  return SetFun(s, s, std::move(m));
}

bool SetFun::operator==(const SetFun& other) const {
  if (!dom_.same_elements(other.dom_) || !cod_.same_elements(other.cod_)) {
    return false;
  }
  for (const auto& x : dom_) {
    if ((*this)(x) != other(x)) return false;
  }
  return true;
}

SetFun compose(const SetFun& g, const SetFun& f) {
  if (!f.cod().same_elements(g.dom())) {
    throw CodomainMismatch("cannot compose: codomain of inner map differs "
                           "from domain of outer map");
  }
  std::unordered_map<std::string, std::string> m;
  for (const auto& x : f.dom()) m.emplace(x, g(f(x)));
  return SetFun(f.dom(), g.cod(), std::move(m));
}

bool is_mono(const SetFun& f) {
  std::unordered_set<std::string> seen;
  for (const auto& x : f.dom()) {
    if (!seen.insert(f(x)).second) return false;
  }
  return true;
}

CanonicalPullback pullback(const SetFun& f, const SetFun& g) {
  if (!f.cod().same_elements(g.cod())) {
    throw CodomainMismatch("pullback legs must share a codomain");
  }
  FinSet apex;
  std::unordered_map<std::string, std::string> p1, p2;
  for (const auto& x : f.dom()) {
    for (const auto& y : g.dom()) {
      if (f(x) == g(y)) {
        std::string e = pair_label(x, y);
        p1.emplace(e, x);
        p2.emplace(e, y);
        apex.add(std::move(e));
      }
    }
  }
  SetFun proj1(apex, f.dom(), std::move(p1));
  SetFun proj2(apex, g.dom(), std::move(p2));
  return CanonicalPullback{std::move(apex), std::move(proj1), std::move(proj2)};
}

SetSquare::SetSquare(SetFun top_, SetFun left_, SetFun right_, SetFun bottom_)
    : top(std::move(top_)),
      left(std::move(left_)),
      right(std::move(right_)),
      bottom(std::move(bottom_)) {
  if (!top.dom().same_elements(left.dom())) {
    throw ValidationError("square legs disagree on the apex");
  }
  if (!top.cod().same_elements(right.dom())) {
    throw ValidationError("top codomain differs from right domain");
  }
  if (!left.cod().same_elements(bottom.dom())) {
    throw ValidationError("left codomain differs from bottom domain");
  }
  if (!right.cod().same_elements(bottom.cod())) {
    throw ValidationError("right and bottom codomains differ");
  }
  for (const auto& p : top.dom()) {
    if (right(top(p)) != bottom(left(p))) {
      throw NotCommuting("square does not commute at '" + p + "'");
    }
  }
}

PullbackReport check_pullback_square(const SetSquare& s) {
  CanonicalPullback q = pullback(s.right, s.bottom);

  PullbackReport report;
  std::unordered_map<std::string, std::string> first_hit;  // image -> apex elt
  for (const auto& p : s.top.dom()) {
    std::string image = pair_label(s.top(p), s.left(p));
    auto [it, inserted] = first_hit.emplace(image, p);
    if (!inserted && !report.collision) {
      report.collision = std::make_pair(it->second, p);
    }
  }
  for (const auto& e : q.apex) {
    if (!first_hit.count(e)) {
      report.missing = e;
      break;
    }
  }
  report.is_pullback = !report.collision && !report.missing;
  return report;
}

bool mono_reduction_check(const SetSquare& inner, const SetFun& m) {
  if (!m.dom().same_elements(inner.right.cod())) {
    throw CodomainMismatch("mono domain differs from the square's base");
  }
  if (!is_mono(m)) {
    throw NotMono("the given map is not injective");
  }
  SetSquare outer(inner.top, inner.left, compose(m, inner.right),
                  compose(m, inner.bottom));
  return check_pullback_square(inner).is_pullback ==
         check_pullback_square(outer).is_pullback;
}

}  // namespace cpd
