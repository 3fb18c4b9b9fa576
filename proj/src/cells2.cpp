#include "cpd/cells2.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "cpd/computad.hpp"

namespace cpd {

TermPtr gen(std::string name) {
  return std::make_shared<const Cell2Term>(
      Cell2Term{Cell2Term::Gen{std::move(name)}});
}

TermPtr id1(Path on) {
  return std::make_shared<const Cell2Term>(
      Cell2Term{Cell2Term::Id1{std::move(on)}});
}

TermPtr vcomp(TermPtr top, TermPtr bottom) {
  return std::make_shared<const Cell2Term>(
      Cell2Term{Cell2Term::VComp{std::move(top), std::move(bottom)}});
}

TermPtr hcomp(TermPtr left, TermPtr right) {
  return std::make_shared<const Cell2Term>(
      Cell2Term{Cell2Term::HComp{std::move(left), std::move(right)}});
}

std::string term_to_string(const TermPtr& t) {
  struct Visitor {
    std::string operator()(const Cell2Term::Gen& g) const { return g.name; }
    std::string operator()(const Cell2Term::Id1& i) const {
      return "id(" + path_label(i.on) + ")";
    }
    std::string operator()(const Cell2Term::VComp& c) const {
      return "v(" + term_to_string(c.top) + ", " + term_to_string(c.bottom) + ")";
    }
    std::string operator()(const Cell2Term::HComp& c) const {
      return "h(" + term_to_string(c.left) + ", " + term_to_string(c.right) + ")";
    }
  };
  return std::visit(Visitor{}, t->node);
}

Boundary2 boundary(const TermPtr& t, const Computad2& K) {
  struct Visitor {
    const Computad2& K;

    Boundary2 operator()(const Cell2Term::Gen& g) const {
      if (!K.indets2.contains(g.name)) {
        throw UnknownGenerator("unknown generator '" + g.name + "'");
      }
      return K.boundary_of(g.name);
    }
    Boundary2 operator()(const Cell2Term::Id1& i) const {
      std::string why;
      if (!path_ok(K.skeleton, i.on, &why)) {
        throw IllTyped("identity on ill-formed path: " + why);
      }
      return Boundary2{i.on, i.on};
    }
    Boundary2 operator()(const Cell2Term::VComp& c) const {
      Boundary2 top = boundary(c.top, K);
      Boundary2 bottom = boundary(c.bottom, K);
      if (top.tgt1 != bottom.src1) {
        throw IllTypedVComp("vertical composite does not meet: target '" +
                            path_label(top.tgt1) + "' vs source '" +
                            path_label(bottom.src1) + "'");
      }
      return Boundary2{std::move(top.src1), std::move(bottom.tgt1)};
    }
    Boundary2 operator()(const Cell2Term::HComp& c) const {
      Boundary2 left = boundary(c.left, K);
      Boundary2 right = boundary(c.right, K);
      if (path_end(K.skeleton, left.src1) != right.src1.start) {
        throw IllTypedHComp("horizontal composite does not meet: left ends at '" +
                            path_end(K.skeleton, left.src1) +
                            "', right starts at '" + right.src1.start + "'");
      }
      return Boundary2{path_compose(K.skeleton, left.src1, right.src1),
                       path_compose(K.skeleton, left.tgt1, right.tgt1)};
    }
  };
  return std::visit(Visitor{K}, t->node);
}

bool is_eh_class(const Computad2& K, std::string* why) {
  auto fail = [&](std::string msg) {
    if (why) *why = std::move(msg);
    return false;
  };
  if (K.skeleton.edges.size() != 0) {
    return fail("has a 1-indet ('" + *K.skeleton.edges.begin() + "')");
  }
  for (const auto& g : K.indets2) {
    const Boundary2& b = K.boundary_of(g);
    if (!b.src1.edges.empty() || !b.tgt1.edges.empty() ||
        b.src1.start != b.tgt1.start) {
      return fail("2-indet '" + g + "' is not bounded by an identity 1-cell");
    }
  }
  return true;
}

Degree EHNormalForm::degree() const {
  Degree d = 0;
  for (const auto& [name, count] : content) d += count;
  return d;
}

std::string EHNormalForm::label() const {
  if (content.empty()) return "id(" + at_vertex + ")";
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (const auto& [name, count] : content) {
    for (std::size_t i = 0; i < count; ++i) {
      if (!first) out << ", ";
      out << name;
      first = false;
    }
  }
  out << '}';
  return out.str();
}

TermPtr EHNormalForm::expansion() const {
  TermPtr t;
  for (const auto& [name, count] : content) {
    for (std::size_t i = 0; i < count; ++i) {
      t = t ? vcomp(t, gen(name)) : gen(name);
    }
  }
  return t ? t : id1(identity_path(at_vertex));
}

bool EHNormalForm::operator<(const EHNormalForm& o) const {
  if (degree() != o.degree()) return degree() < o.degree();
  if (at_vertex != o.at_vertex) return at_vertex < o.at_vertex;
  return content < o.content;
}

EHNormalForm normalize(const TermPtr& t, const Computad2& K) {
  std::string why;
  if (!is_eh_class(K, &why)) {
    throw NotEHClass("cell equality is only decided without 1-indets: " + why);
  }
  Boundary2 b = boundary(t, K);  // establishes well-typedness
  EHNormalForm nf;
  nf.at_vertex = b.src1.start;
  std::function<void(const TermPtr&)> collect = [&](const TermPtr& u) {
    if (const auto* g = std::get_if<Cell2Term::Gen>(&u->node)) {
      ++nf.content[g->name];
    } else if (const auto* v = std::get_if<Cell2Term::VComp>(&u->node)) {
      collect(v->top);
      collect(v->bottom);
    } else if (const auto* h = std::get_if<Cell2Term::HComp>(&u->node)) {
      collect(h->left);
      collect(h->right);
    }
  };
  collect(t);
  return nf;
}

bool eq_cells(const TermPtr& a, const TermPtr& b, const Computad2& K) {
  return normalize(a, K) == normalize(b, K);
}

std::vector<EHNormalForm> GradedCells::flatten() const {
  std::vector<EHNormalForm> all;
  for (const auto& level : by_degree) {
    all.insert(all.end(), level.begin(), level.end());
  }
  return all;
}

std::size_t GradedCells::total() const {
  std::size_t n = 0;
  for (const auto& level : by_degree) n += level.size();
  return n;
}

namespace {

// All multisets of `remaining` items drawn from names[first..], appended to
// `acc`, in lexicographic order of their sorted expansions.
void multisets_into(const std::vector<std::string>& names, std::size_t first,
                    Degree remaining, EHNormalForm& acc,
                    std::vector<EHNormalForm>& out) {
  if (remaining == 0) {
    out.push_back(acc);
    return;
  }
  for (std::size_t i = first; i < names.size(); ++i) {
    ++acc.content[names[i]];
    multisets_into(names, i, remaining - 1, acc, out);
    if (--acc.content[names[i]] == 0) acc.content.erase(names[i]);
  }
}

}  // namespace

GradedCells enumerate_cells(const Computad2& K, Degree max_degree) {
  std::string why;
  if (!is_eh_class(K, &why)) {
    throw NotEHClass("cannot enumerate cells: " + why);
  }
  std::unordered_map<std::string, std::vector<std::string>> at_vertex;
  for (const auto& g : K.indets2) {
    at_vertex[K.boundary_of(g).src1.start].push_back(g);
  }
  for (auto& [v, names] : at_vertex) std::sort(names.begin(), names.end());

  GradedCells graded;
  graded.by_degree.resize(max_degree + 1);
  for (Degree d = 0; d <= max_degree; ++d) {
    for (const auto& v : K.skeleton.vertices) {
      EHNormalForm acc;
      acc.at_vertex = v;
      auto it = at_vertex.find(v);
      if (it == at_vertex.end()) {
        if (d == 0) graded.by_degree[d].push_back(acc);
        continue;
      }
      multisets_into(it->second, 0, d, acc, graded.by_degree[d]);
    }
  }
  return graded;
}

}  // namespace cpd
