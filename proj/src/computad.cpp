#include "cpd/computad.hpp"

#include <algorithm>
#include <functional>

namespace cpd {

namespace {

const char* kReserved[] = {"id", "v", "h"};

bool is_reserved(const std::string& name) {
  for (const char* r : kReserved) {
    if (name == r) return true;
  }
  return false;
}

void check_fresh_name(const Computad2& K, const std::string& name,
                      const char* what) {
  if (is_reserved(name)) {
    throw ValidationError(std::string(what) + " '" + name +
                          "' uses a reserved word");
  }
  if (K.skeleton.vertices.contains(name) || K.skeleton.edges.contains(name) ||
      K.indets2.contains(name)) {
    throw ValidationError(std::string(what) + " '" + name +
                          "' reuses a name from another dimension");
  }
}

// Checks that a declared boundary path refers only to known elements, then
// that it is connected; distinguishes the two failure modes.
void check_boundary_path(const Graph& skeleton, const std::string& owner,
                         const Path& p) {
  if (!skeleton.vertices.contains(p.start)) {
    throw UnknownReference("2-indet '" + owner + "': unknown vertex '" +
                           p.start + "'");
  }
  for (const auto& e : p.edges) {
    if (!skeleton.edges.contains(e)) {
      throw UnknownReference("2-indet '" + owner + "': unknown edge '" + e + "'");
    }
  }
  std::string why;
  if (!path_ok(skeleton, p, &why)) {
    throw ValidationError("2-indet '" + owner + "': " + why);
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// 2-computads
// ---------------------------------------------------------------------------

const Boundary2& Computad2::boundary_of(const std::string& indet) const {
  auto it = boundary2.find(indet);
  if (it == boundary2.end()) {
    throw UnknownReference("unknown 2-indet '" + indet + "'");
  }
  return it->second;
}

Computad2 make_computad2(std::vector<std::string> vertices,
                         std::vector<EdgeDecl> edges,
                         std::vector<Gen2Decl> gens2) {
  for (const auto& v : vertices) {
    if (is_reserved(v)) {
      throw ValidationError("vertex '" + v + "' uses a reserved word");
    }
  }
  for (const auto& e : edges) {
    if (is_reserved(e.name)) {
      throw ValidationError("edge '" + e.name + "' uses a reserved word");
    }
  }
  Computad2 K;
  K.skeleton = make_graph(std::move(vertices), std::move(edges));
  for (const auto& e : K.skeleton.edges) {
    if (K.skeleton.vertices.contains(e)) {
      throw ValidationError("edge '" + e +
                            "' reuses a name from another dimension");
    }
  }
  for (auto& g : gens2) {
    check_fresh_name(K, g.name, "2-indet");
    check_boundary_path(K.skeleton, g.name, g.src1);
    check_boundary_path(K.skeleton, g.name, g.tgt1);
    if (g.src1.start != g.tgt1.start ||
        path_end(K.skeleton, g.src1) != path_end(K.skeleton, g.tgt1)) {
      throw ValidationError("2-indet '" + g.name +
                            "': source and target paths are not parallel");
    }
    K.boundary2.emplace(g.name, Boundary2{std::move(g.src1), std::move(g.tgt1)});
    K.indets2.add(std::move(g.name));
  }
  return K;
}

bool validate_computad2(const Computad2& K, std::string* why) {
  auto fail = [&](std::string msg) {
    if (why) *why = std::move(msg);
    return false;
  };
  if (K.boundary2.size() != K.indets2.size()) {
    return fail("boundary assignment does not match the 2-indet set");
  }
  for (const auto& g : K.indets2) {
    auto it = K.boundary2.find(g);
    if (it == K.boundary2.end()) return fail("2-indet '" + g + "' has no boundary");
    const Boundary2& b = it->second;
    std::string path_why;
    if (!path_ok(K.skeleton, b.src1, &path_why) ||
        !path_ok(K.skeleton, b.tgt1, &path_why)) {
      return fail("2-indet '" + g + "': " + path_why);
    }
    if (b.src1.start != b.tgt1.start ||
        path_end(K.skeleton, b.src1) != path_end(K.skeleton, b.tgt1)) {
      return fail("2-indet '" + g + "': source and target paths are not parallel");
    }
  }
  return true;
}

bool same_presentation(const Computad2& a, const Computad2& b) {
  if (!same_graph(a.skeleton, b.skeleton)) return false;
  if (!a.indets2.same_elements(b.indets2)) return false;
  for (const auto& g : a.indets2) {
    if (!(a.boundary_of(g) == b.boundary_of(g))) return false;
  }
  return true;
}

const std::string& Computad2Morphism::vertex_image(const std::string& v) const {
  return on_graph.vertex_image(v);
}

const std::string& Computad2Morphism::edge_image(const std::string& e) const {
  return on_graph.edge_image(e);
}

const std::string& Computad2Morphism::indet_image(const std::string& g) const {
  return on_indets2(g);
}

bool is_computad2_morphism(
    const Computad2& src, const Computad2& dst,
    const std::unordered_map<std::string, std::string>& on_vertices,
    const std::unordered_map<std::string, std::string>& on_edges,
    const std::unordered_map<std::string, std::string>& on_indets2,
    std::string* why) {
  if (!is_graph_morphism(src.skeleton, dst.skeleton, on_vertices, on_edges, why)) {
    return false;
  }
  auto fail = [&](std::string msg) {
    if (why) *why = std::move(msg);
    return false;
  };
  GraphMorphism skel{src.skeleton, dst.skeleton, on_vertices, on_edges};
  for (const auto& g : src.indets2) {
    auto it = on_indets2.find(g);
    if (it == on_indets2.end()) return fail("2-indet '" + g + "' has no image");
    if (!dst.indets2.contains(it->second)) {
      return fail("2-indet '" + g + "' maps to unknown 2-indet '" + it->second + "'");
    }
    const Boundary2& b = src.boundary_of(g);
    const Boundary2& image = dst.boundary_of(it->second);
    if (!(image.src1 == apply_path(skel, b.src1)) ||
        !(image.tgt1 == apply_path(skel, b.tgt1))) {
      return fail("2-indet '" + g + "': image does not preserve the boundary");
    }
  }
  return true;
}

Computad2Morphism make_computad2_morphism(
    Computad2 src, Computad2 dst,
    std::unordered_map<std::string, std::string> on_vertices,
    std::unordered_map<std::string, std::string> on_edges,
    std::unordered_map<std::string, std::string> on_indets2) {
  std::string why;
  if (!is_computad2_morphism(src, dst, on_vertices, on_edges, on_indets2, &why)) {
    throw ValidationError("not a computad morphism: " + why);
  }
  GraphMorphism skel{src.skeleton, dst.skeleton, std::move(on_vertices),
                     std::move(on_edges)};
  SetFun indets(src.indets2, dst.indets2, std::move(on_indets2));
  return Computad2Morphism{std::move(src), std::move(dst), std::move(skel),
                           std::move(indets)};
}

Computad2Morphism identity_computad2_morphism(const Computad2& K) {
  return Computad2Morphism{K, K, identity_graph_morphism(K.skeleton),
                           SetFun::identity(K.indets2)};
}

Computad2Morphism compose(const Computad2Morphism& g, const Computad2Morphism& f) {
  if (!same_presentation(f.dst, g.src)) {
    throw CodomainMismatch("cannot compose computad morphisms: codomain of the "
                           "inner map differs from domain of the outer map");
  }
  return Computad2Morphism{f.src, g.dst, compose(g.on_graph, f.on_graph),
                           compose(g.on_indets2, f.on_indets2)};
}

bool operator==(const Computad2Morphism& a, const Computad2Morphism& b) {
  return same_presentation(a.src, b.src) && same_presentation(a.dst, b.dst) &&
         a.on_graph == b.on_graph && a.on_indets2 == b.on_indets2;
}

TermPtr apply_cell(const Computad2Morphism& f, const TermPtr& t) {
  struct Visitor {
    const Computad2Morphism& f;

    TermPtr operator()(const Cell2Term::Gen& g) const {
      return gen(f.indet_image(g.name));
    }
    TermPtr operator()(const Cell2Term::Id1& i) const {
      return id1(apply_path(f.on_graph, i.on));
    }
    TermPtr operator()(const Cell2Term::VComp& c) const {
      return vcomp(apply_cell(f, c.top), apply_cell(f, c.bottom));
    }
    TermPtr operator()(const Cell2Term::HComp& c) const {
      return hcomp(apply_cell(f, c.left), apply_cell(f, c.right));
    }
  };
  return std::visit(Visitor{f}, t->node);
}

EHNormalForm cell_image(const Computad2Morphism& f, const EHNormalForm& nf) {
  EHNormalForm image;
  image.at_vertex = f.vertex_image(nf.at_vertex);
  for (const auto& [name, count] : nf.content) {
    image.content[f.indet_image(name)] += count;
  }
  return image;
}

// ---------------------------------------------------------------------------
// Products and pullbacks
// ---------------------------------------------------------------------------

Product2 product2(const Computad2& A, const Computad2& B) {
  GraphProduct gp = graph_product(A.skeleton, B.skeleton);
  Computad2 P;
  P.skeleton = gp.graph;
  std::unordered_map<std::string, std::string> to_a, to_b;
  for (const auto& a : A.indets2) {
    const Boundary2& ba = A.boundary_of(a);
    for (const auto& b : B.indets2) {
      const Boundary2& bb = B.boundary_of(b);
      if (ba.src1.edges.size() != bb.src1.edges.size()) continue;
      if (ba.tgt1.edges.size() != bb.tgt1.edges.size()) continue;
      std::string name = pair_label(a, b);
      P.boundary2.emplace(name, Boundary2{pair_paths(ba.src1, bb.src1),
                                          pair_paths(ba.tgt1, bb.tgt1)});
      to_a.emplace(name, a);
      to_b.emplace(name, b);
      P.indets2.add(std::move(name));
    }
  }
  Computad2Morphism pa{P, A, gp.to_first, SetFun(P.indets2, A.indets2, std::move(to_a))};
  Computad2Morphism pb{P, B, gp.to_second, SetFun(P.indets2, B.indets2, std::move(to_b))};
  return Product2{std::move(P), std::move(pa), std::move(pb)};
}

Computad2Morphism pair_computad2_morphisms(const Computad2Morphism& f,
                                           const Computad2Morphism& g,
                                           const Product2& prod) {
  if (!same_presentation(f.src, g.src)) {
    throw ValidationError("cone legs have different domains");
  }
  if (!same_presentation(f.dst, prod.to_first.dst) ||
      !same_presentation(g.dst, prod.to_second.dst)) {
    throw CodomainMismatch("cone legs do not match the product's factors");
  }
  std::unordered_map<std::string, std::string> on_v, on_e, on_i;
  for (const auto& v : f.src.skeleton.vertices) {
    on_v.emplace(v, pair_label(f.vertex_image(v), g.vertex_image(v)));
  }
  for (const auto& e : f.src.skeleton.edges) {
    on_e.emplace(e, pair_label(f.edge_image(e), g.edge_image(e)));
  }
  for (const auto& t : f.src.indets2) {
    on_i.emplace(t, pair_label(f.indet_image(t), g.indet_image(t)));
  }
  return make_computad2_morphism(f.src, prod.computad, std::move(on_v),
                                 std::move(on_e), std::move(on_i));
}

Pullback2 pullback2(const Computad2Morphism& alpha, const Computad2Morphism& beta) {
  if (!same_presentation(alpha.dst, beta.dst)) {
    throw CodomainMismatch("pullback legs must share a codomain");
  }
  const Computad2& A = alpha.src;
  const Computad2& B = beta.src;
  Computad2 P;
  std::unordered_map<std::string, std::string> v_a, v_b, e_a, e_b, i_a, i_b;
  for (const auto& x : A.skeleton.vertices) {
    for (const auto& y : B.skeleton.vertices) {
      if (alpha.vertex_image(x) != beta.vertex_image(y)) continue;
      std::string v = pair_label(x, y);
      v_a.emplace(v, x);
      v_b.emplace(v, y);
      P.skeleton.vertices.add(std::move(v));
    }
  }
  for (const auto& d : A.skeleton.edges) {
    for (const auto& e : B.skeleton.edges) {
      if (alpha.edge_image(d) != beta.edge_image(e)) continue;
      std::string name = pair_label(d, e);
      P.skeleton.src.emplace(name, pair_label(A.skeleton.source(d), B.skeleton.source(e)));
      P.skeleton.tgt.emplace(name, pair_label(A.skeleton.target(d), B.skeleton.target(e)));
      e_a.emplace(name, d);
      e_b.emplace(name, e);
      P.skeleton.edges.add(std::move(name));
    }
  }
  for (const auto& a : A.indets2) {
    for (const auto& b : B.indets2) {
      if (alpha.indet_image(a) != beta.indet_image(b)) continue;
      // Boundary preservation forces the two boundaries to have equal
      // lengths and equalized components, so the pairing stays inside P.
      const Boundary2& ba = A.boundary_of(a);
      const Boundary2& bb = B.boundary_of(b);
      std::string name = pair_label(a, b);
      P.boundary2.emplace(name, Boundary2{pair_paths(ba.src1, bb.src1),
                                          pair_paths(ba.tgt1, bb.tgt1)});
      i_a.emplace(name, a);
      i_b.emplace(name, b);
      P.indets2.add(std::move(name));
    }
  }
  GraphMorphism skel_a{P.skeleton, A.skeleton, v_a, e_a};
  GraphMorphism skel_b{P.skeleton, B.skeleton, v_b, e_b};
  Computad2Morphism to_a{P, A, std::move(skel_a), SetFun(P.indets2, A.indets2, std::move(i_a))};
  Computad2Morphism to_b{P, B, std::move(skel_b), SetFun(P.indets2, B.indets2, std::move(i_b))};
  return Pullback2{std::move(P), std::move(to_a), std::move(to_b)};
}

// ---------------------------------------------------------------------------
// The parallel-pair construction, degree-bounded
// ---------------------------------------------------------------------------

ParallelPair2::ParallelPair2(EHNormalForm first_, EHNormalForm second_)
    : first(std::move(first_)), second(std::move(second_)) {
  if (first.at_vertex != second.at_vertex) {
    throw ValidationError("pair components are not parallel: vertices '" +
                          first.at_vertex + "' and '" + second.at_vertex + "'");
  }
}

std::string ParallelPair2::label() const {
  return pair_label(first.label(), second.label());
}

Pi2Set pi2_bounded(const Computad2& K, Degree k) {
  std::vector<EHNormalForm> cells = enumerate_cells(K, k).flatten();
  Pi2Set result;
  for (const auto& u : cells) {
    for (const auto& v : cells) {
      if (u.at_vertex != v.at_vertex) continue;
      ParallelPair2 p(u, v);
      result.labels.add(p.label());
      result.pairs.push_back(std::move(p));
    }
  }
  return result;
}

SetFun cell_map_bounded(const Computad2Morphism& f, Degree k) {
  std::vector<EHNormalForm> dom_cells = enumerate_cells(f.src, k).flatten();
  std::vector<EHNormalForm> cod_cells = enumerate_cells(f.dst, k).flatten();
  FinSet dom, cod;
  for (const auto& u : dom_cells) dom.add(u.label());
  for (const auto& u : cod_cells) cod.add(u.label());
  std::unordered_map<std::string, std::string> m;
  for (const auto& u : dom_cells) {
    m.emplace(u.label(), cell_image(f, u).label());
  }
  return SetFun(std::move(dom), std::move(cod), std::move(m));
}

SetFun pi2_on_morphism_bounded(const Computad2Morphism& f, Degree k) {
  Pi2Set dom = pi2_bounded(f.src, k);
  Pi2Set cod = pi2_bounded(f.dst, k);
  std::unordered_map<std::string, std::string> m;
  for (const auto& p : dom.pairs) {
    ParallelPair2 image(cell_image(f, p.first), cell_image(f, p.second));
    m.emplace(p.label(), image.label());
  }
  return SetFun(dom.labels, cod.labels, std::move(m));
}

// ---------------------------------------------------------------------------
// The terminal 2-computad, kept symbolic
// ---------------------------------------------------------------------------

const std::string& Terminal2Handle::vertex() {
  static const std::string v = "x";
  return v;
}

const std::string& Terminal2Handle::edge() {
  static const std::string e = "xi";
  return e;
}

std::string Terminal2Handle::indet_name(std::size_t m, std::size_t n) {
  if (m == 0 && n == 0) return "c";
  return "c" + pair_label(std::to_string(m), std::to_string(n));
}

const std::pair<std::size_t, std::size_t>& Bang2::image_of(
    const std::string& indet) const {
  auto it = indet_image.find(indet);
  if (it == indet_image.end()) {
    throw UnknownReference("unknown 2-indet '" + indet + "'");
  }
  return it->second;
}

Bang2 bang_map(const Computad2& K) {
  Bang2 bang;
  bang.src = K;
  for (const auto& g : K.indets2) {
    const Boundary2& b = K.boundary_of(g);
    bang.indet_image.emplace(g, std::make_pair(b.src1.edges.size(),
                                               b.tgt1.edges.size()));
  }
  return bang;
}

Computad2 subcomputad_generated(
    const Terminal2Handle& handle,
    const std::vector<std::pair<std::size_t, std::size_t>>& gens) {
  bool need_edge = false;
  for (const auto& [m, n] : gens) {
    if (m > 0 || n > 0) need_edge = true;
  }
  std::vector<EdgeDecl> edges;
  if (need_edge) {
    edges.push_back(EdgeDecl{handle.edge(), handle.vertex(), handle.vertex()});
  }
  auto xi_power = [&](std::size_t len) {
    Path p = identity_path(handle.vertex());
    p.edges.assign(len, handle.edge());
    return p;
  };
  std::vector<Gen2Decl> gens2;
  for (const auto& [m, n] : gens) {
    gens2.push_back(Gen2Decl{handle.indet_name(m, n), xi_power(m), xi_power(n)});
  }
  return make_computad2({handle.vertex()}, std::move(edges), std::move(gens2));
}

Computad2Morphism factor_through(const Computad2& sub, const Bang2& f) {
  Terminal2Handle handle;
  std::unordered_map<std::string, std::string> on_v, on_e, on_i;
  for (const auto& v : f.src.skeleton.vertices) {
    if (!sub.skeleton.vertices.contains(handle.vertex())) {
      throw NotInImage("vertex '" + v + "' maps outside the subcomputad");
    }
    on_v.emplace(v, handle.vertex());
  }
  for (const auto& e : f.src.skeleton.edges) {
    if (!sub.skeleton.edges.contains(handle.edge())) {
      throw NotInImage("edge '" + e + "' maps outside the subcomputad");
    }
    on_e.emplace(e, handle.edge());
  }
  for (const auto& g : f.src.indets2) {
    const auto& [m, n] = f.image_of(g);
    std::string name = handle.indet_name(m, n);
    if (!sub.indets2.contains(name)) {
      throw NotInImage("2-indet '" + g + "' maps to '" + name +
                       "', which is outside the subcomputad");
    }
    on_i.emplace(g, std::move(name));
  }
  return make_computad2_morphism(f.src, sub, std::move(on_v), std::move(on_e),
                                 std::move(on_i));
}

SetFun pi2_through_terminal_bounded(const Computad2& sub, Degree k) {
  Pi2Set dom = pi2_bounded(sub, k);
  Bang2 bang = bang_map(sub);
  // Write a cell of the subcomputad in the terminal's own vocabulary: the
  // multiset of (m,n) indices of its generator occurrences.
  auto terminal_cell_label = [&](const EHNormalForm& u) {
    EHNormalForm image;
    image.at_vertex = Terminal2Handle::vertex();
    for (const auto& [name, count] : u.content) {
      const auto& [m, n] = bang.image_of(name);
      image.content[pair_label(std::to_string(m), std::to_string(n))] += count;
    }
    return image.label();
  };
  FinSet cod;
  std::unordered_map<std::string, std::string> m;
  for (const auto& p : dom.pairs) {
    std::string image = pair_label(terminal_cell_label(p.first),
                                   terminal_cell_label(p.second));
    if (!cod.contains(image)) cod.add(image);
    m.emplace(p.label(), std::move(image));
  }
  return SetFun(dom.labels, std::move(cod), std::move(m));
}

Pullback2 pullback2_over_terminal(const Computad2& K1, const Computad2& K2,
                                  const Bang2& bang1, const Bang2& bang2) {
  if (!same_presentation(bang1.src, K1) || !same_presentation(bang2.src, K2)) {
    throw ValidationError("bang descriptions do not match the given computads");
  }
  // Every vertex and edge is equalized over the terminal, so the skeleton is
  // the full graph product; 2-indets are the pairs with equal image indices.
  GraphProduct gp = graph_product(K1.skeleton, K2.skeleton);
  Computad2 P;
  P.skeleton = gp.graph;
  std::unordered_map<std::string, std::string> i_a, i_b;
  for (const auto& a : K1.indets2) {
    for (const auto& b : K2.indets2) {
      if (bang1.image_of(a) != bang2.image_of(b)) continue;
      const Boundary2& ba = K1.boundary_of(a);
      const Boundary2& bb = K2.boundary_of(b);
      std::string name = pair_label(a, b);
      P.boundary2.emplace(name, Boundary2{pair_paths(ba.src1, bb.src1),
                                          pair_paths(ba.tgt1, bb.tgt1)});
      i_a.emplace(name, a);
      i_b.emplace(name, b);
      P.indets2.add(std::move(name));
    }
  }
  Computad2Morphism to_a{P, K1, gp.to_first, SetFun(P.indets2, K1.indets2, std::move(i_a))};
  Computad2Morphism to_b{P, K2, gp.to_second, SetFun(P.indets2, K2.indets2, std::move(i_b))};
  return Pullback2{std::move(P), std::move(to_a), std::move(to_b)};
}

// ---------------------------------------------------------------------------
// One dimension up
// ---------------------------------------------------------------------------

const ParallelPair2& Com3Object::boundary_of(const std::string& indet) const {
  auto it = boundary3.find(indet);
  if (it == boundary3.end()) {
    throw UnknownReference("unknown 3-indet '" + indet + "'");
  }
  return it->second;
}

Com3Object make_com3(Computad2 base, std::vector<Gen3Decl> gens3) {
  Com3Object M;
  M.base = std::move(base);
  for (auto& g : gens3) {
    check_fresh_name(M.base, g.name, "3-indet");
    if (M.indets3.contains(g.name)) {
      throw ValidationError("duplicate 3-indet '" + g.name + "'");
    }
    ParallelPair2 b(normalize(g.src, M.base), normalize(g.tgt, M.base));
    M.boundary3.emplace(g.name, std::move(b));
    M.indets3.add(std::move(g.name));
  }
  return M;
}

bool validate_com3(const Com3Object& M, std::string* why) {
  if (!validate_computad2(M.base, why)) return false;
  auto fail = [&](std::string msg) {
    if (why) *why = std::move(msg);
    return false;
  };
  if (M.boundary3.size() != M.indets3.size()) {
    return fail("boundary assignment does not match the 3-indet set");
  }
  for (const auto& g : M.indets3) {
    auto it = M.boundary3.find(g);
    if (it == M.boundary3.end()) return fail("3-indet '" + g + "' has no boundary");
    for (const EHNormalForm* cell : {&it->second.first, &it->second.second}) {
      if (!M.base.skeleton.vertices.contains(cell->at_vertex)) {
        return fail("3-indet '" + g + "': boundary cell at unknown vertex '" +
                    cell->at_vertex + "'");
      }
      for (const auto& [name, count] : cell->content) {
        if (!M.base.indets2.contains(name)) {
          return fail("3-indet '" + g + "': boundary cell uses unknown 2-indet '" +
                      name + "'");
        }
        if (M.base.boundary_of(name).src1.start != cell->at_vertex) {
          return fail("3-indet '" + g + "': boundary cell mixes vertices");
        }
      }
    }
    if (it->second.first.at_vertex != it->second.second.at_vertex) {
      return fail("3-indet '" + g + "': boundary cells are not parallel");
    }
  }
  return true;
}

bool same_presentation(const Com3Object& a, const Com3Object& b) {
  if (!same_presentation(a.base, b.base)) return false;
  if (!a.indets3.same_elements(b.indets3)) return false;
  for (const auto& g : a.indets3) {
    if (!(a.boundary_of(g) == b.boundary_of(g))) return false;
  }
  return true;
}

Computad2 tr2(const Com3Object& M) { return M.base; }

Com3Object i2(const Computad2& A) { return Com3Object{A, {}, {}}; }

namespace {

// The lexicographically least cell of the product base projecting to u and v:
// sort both expansions and zip them componentwise.
EHNormalForm least_realization(const EHNormalForm& u, const EHNormalForm& v) {
  std::vector<std::string> xs, ys;
  for (const auto& [name, count] : u.content) {
    xs.insert(xs.end(), count, name);
  }
  for (const auto& [name, count] : v.content) {
    ys.insert(ys.end(), count, name);
  }
  EHNormalForm r;
  r.at_vertex = pair_label(u.at_vertex, v.at_vertex);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    ++r.content[pair_label(xs[i], ys[i])];
  }
  return r;
}

}  // namespace

Com3Object product3(const Com3Object& M, const Com3Object& N) {
  std::string why;
  if (!is_eh_class(M.base, &why) || !is_eh_class(N.base, &why)) {
    throw NotEHClass("product of 3-computads needs identity-bounded bases: " + why);
  }
  Com3Object P;
  P.base = product2(M.base, N.base).computad;
  for (const auto& u : M.indets3) {
    const ParallelPair2& bu = M.boundary_of(u);
    for (const auto& v : N.indets3) {
      const ParallelPair2& bv = N.boundary_of(v);
      // A pair of cells is realized by a cell of the product base exactly
      // when the degrees agree (their common vertex pair always exists).
      if (bu.first.degree() != bv.first.degree()) continue;
      if (bu.second.degree() != bv.second.degree()) continue;
      std::string name = pair_label(u, v);
      P.boundary3.emplace(name,
                          ParallelPair2(least_realization(bu.first, bv.first),
                                        least_realization(bu.second, bv.second)));
      P.indets3.add(std::move(name));
    }
  }
  return P;
}

}  // namespace cpd
