#include "cpd/freecat.hpp"

#include <sstream>

namespace cpd {

const std::string& Graph::source(const std::string& edge) const {
  auto it = src.find(edge);
  if (it == src.end()) throw UnknownReference("unknown edge '" + edge + "'");
  return it->second;
}

const std::string& Graph::target(const std::string& edge) const {
  auto it = tgt.find(edge);
  if (it == tgt.end()) throw UnknownReference("unknown edge '" + edge + "'");
  return it->second;
}

Graph make_graph(std::vector<std::string> vertices, std::vector<EdgeDecl> edges) {
  Graph g;
  g.vertices = FinSet(std::move(vertices));
  for (auto& e : edges) {
    if (!g.vertices.contains(e.src)) {
      throw UnknownReference("edge '" + e.name + "': unknown source vertex '" +
                             e.src + "'");
    }
    if (!g.vertices.contains(e.tgt)) {
      throw UnknownReference("edge '" + e.name + "': unknown target vertex '" +
                             e.tgt + "'");
    }
    g.edges.add(e.name);
    g.src.emplace(e.name, std::move(e.src));
    g.tgt.emplace(e.name, std::move(e.tgt));
  }
  return g;
}

bool same_graph(const Graph& a, const Graph& b) {
  if (!a.vertices.same_elements(b.vertices)) return false;
  if (!a.edges.same_elements(b.edges)) return false;
  for (const auto& e : a.edges) {
    if (a.source(e) != b.source(e) || a.target(e) != b.target(e)) return false;
  }
  return true;
}

Path identity_path(const std::string& vertex) { return Path{vertex, {}}; }

bool path_ok(const Graph& g, const Path& p, std::string* why) {
  auto fail = [&](std::string msg) {
    if (why) *why = std::move(msg);
    return false;
  };
  if (!g.vertices.contains(p.start)) {
    return fail("unknown start vertex '" + p.start + "'");
  }
  const std::string* at = &p.start;
  for (const auto& e : p.edges) {
    if (!g.edges.contains(e)) return fail("unknown edge '" + e + "'");
    if (g.source(e) != *at) {
      return fail("edge '" + e + "' starts at '" + g.source(e) +
                  "', expected '" + *at + "'");
    }
    at = &g.target(e);
  }
  return true;
}

const std::string& path_end(const Graph& g, const Path& p) {
  return p.edges.empty() ? p.start : g.target(p.edges.back());
}

Path path_compose(const Graph& g, const Path& p, const Path& q) {
  std::string why;
  if (!path_ok(g, p, &why) || !path_ok(g, q, &why)) {
    throw NotComposable("ill-formed path: " + why);
  }
  if (path_end(g, p) != q.start) {
    throw NotComposable("paths do not meet: first ends at '" + path_end(g, p) +
                        "', second starts at '" + q.start + "'");
  }
  Path r = p;
  r.edges.insert(r.edges.end(), q.edges.begin(), q.edges.end());
  return r;
}

std::string path_label(const Path& p) {
  if (p.edges.empty()) return "id(" + p.start + ")";
  std::ostringstream out;
  for (std::size_t i = 0; i < p.edges.size(); ++i) {
    if (i) out << ' ';
    out << p.edges[i];
  }
  return out.str();
}

const std::string& GraphMorphism::vertex_image(const std::string& v) const {
  auto it = on_vertices.find(v);
  if (it == on_vertices.end()) {
    throw UnknownReference("vertex '" + v + "' has no image");
  }
  return it->second;
}

const std::string& GraphMorphism::edge_image(const std::string& e) const {
  auto it = on_edges.find(e);
  if (it == on_edges.end()) {
    throw UnknownReference("edge '" + e + "' has no image");
  }
  return it->second;
}

bool is_graph_morphism(const Graph& dom, const Graph& cod,
                       const std::unordered_map<std::string, std::string>& on_vertices,
                       const std::unordered_map<std::string, std::string>& on_edges,
                       std::string* why) {
  auto fail = [&](std::string msg) {
    if (why) *why = std::move(msg);
    return false;
  };
  for (const auto& v : dom.vertices) {
    auto it = on_vertices.find(v);
    if (it == on_vertices.end()) return fail("vertex '" + v + "' has no image");
    if (!cod.vertices.contains(it->second)) {
      return fail("vertex '" + v + "' maps to unknown vertex '" + it->second + "'");
    }
  }
  for (const auto& e : dom.edges) {
    auto it = on_edges.find(e);
    if (it == on_edges.end()) return fail("edge '" + e + "' has no image");
    if (!cod.edges.contains(it->second)) {
      return fail("edge '" + e + "' maps to unknown edge '" + it->second + "'");
    }
    if (cod.source(it->second) != on_vertices.at(dom.source(e))) {
      return fail("edge '" + e + "': image does not preserve the source");
    }
    if (cod.target(it->second) != on_vertices.at(dom.target(e))) {
      return fail("edge '" + e + "': image does not preserve the target");
    }
  }
  return true;
}

GraphMorphism make_graph_morphism(
    Graph dom, Graph cod,
    std::unordered_map<std::string, std::string> on_vertices,
    std::unordered_map<std::string, std::string> on_edges) {
  std::string why;
  if (!is_graph_morphism(dom, cod, on_vertices, on_edges, &why)) {
    throw ValidationError("not a graph morphism: " + why);
  }
  return GraphMorphism{std::move(dom), std::move(cod), std::move(on_vertices),
                       std::move(on_edges)};
}

GraphMorphism identity_graph_morphism(const Graph& g) {
  std::unordered_map<std::string, std::string> on_v, on_e;
  for (const auto& v : g.vertices) on_v.emplace(v, v);
  for (const auto& e : g.edges) on_e.emplace(e, e);
  return GraphMorphism{g, g, std::move(on_v), std::move(on_e)};
}

GraphMorphism compose(const GraphMorphism& g, const GraphMorphism& f) {
  if (!same_graph(f.cod, g.dom)) {
    throw CodomainMismatch("cannot compose graph morphisms: codomain of the "
                           "inner map differs from domain of the outer map");
  }
  std::unordered_map<std::string, std::string> on_v, on_e;
  for (const auto& v : f.dom.vertices) {
    on_v.emplace(v, g.vertex_image(f.vertex_image(v)));
  }
  for (const auto& e : f.dom.edges) {
    on_e.emplace(e, g.edge_image(f.edge_image(e)));
  }
  return GraphMorphism{f.dom, g.cod, std::move(on_v), std::move(on_e)};
}

bool operator==(const GraphMorphism& a, const GraphMorphism& b) {
  if (!same_graph(a.dom, b.dom) || !same_graph(a.cod, b.cod)) return false;
  for (const auto& v : a.dom.vertices) {
    if (a.vertex_image(v) != b.vertex_image(v)) return false;
  }
  for (const auto& e : a.dom.edges) {
    if (a.edge_image(e) != b.edge_image(e)) return false;
  }
  return true;
}

Path apply_path(const GraphMorphism& m, const Path& p) {
  Path q;
  q.start = m.vertex_image(p.start);
  q.edges.reserve(p.edges.size());
  for (const auto& e : p.edges) q.edges.push_back(m.edge_image(e));
  return q;
}

GraphProduct graph_product(const Graph& g1, const Graph& g2) {
  Graph p;
  std::unordered_map<std::string, std::string> v1, v2, e1, e2;
  for (const auto& x : g1.vertices) {
    for (const auto& y : g2.vertices) {
      std::string v = pair_label(x, y);
      v1.emplace(v, x);
      v2.emplace(v, y);
      p.vertices.add(std::move(v));
    }
  }
  for (const auto& a : g1.edges) {
    for (const auto& b : g2.edges) {
      std::string e = pair_label(a, b);
      p.src.emplace(e, pair_label(g1.source(a), g2.source(b)));
      p.tgt.emplace(e, pair_label(g1.target(a), g2.target(b)));
      e1.emplace(e, a);
      e2.emplace(e, b);
      p.edges.add(std::move(e));
    }
  }
  GraphMorphism to1{p, g1, std::move(v1), std::move(e1)};
  GraphMorphism to2{p, g2, std::move(v2), std::move(e2)};
  return GraphProduct{std::move(p), std::move(to1), std::move(to2)};
}

GraphMorphism pair_graph_morphisms(const GraphMorphism& f,
                                   const GraphMorphism& g,
                                   const GraphProduct& prod) {
  if (!same_graph(f.dom, g.dom)) {
    throw ValidationError("cone legs have different domains");
  }
  if (!same_graph(f.cod, prod.to_first.cod) ||
      !same_graph(g.cod, prod.to_second.cod)) {
    throw CodomainMismatch("cone legs do not match the product's factors");
  }
  std::unordered_map<std::string, std::string> on_v, on_e;
  for (const auto& v : f.dom.vertices) {
    on_v.emplace(v, pair_label(f.vertex_image(v), g.vertex_image(v)));
  }
  for (const auto& e : f.dom.edges) {
    on_e.emplace(e, pair_label(f.edge_image(e), g.edge_image(e)));
  }
  return make_graph_morphism(f.dom, prod.graph, std::move(on_v), std::move(on_e));
}

Path pair_paths(const Path& p, const Path& q) {
  if (p.edges.size() != q.edges.size()) {
    throw LengthMismatch("cannot pair paths of lengths " +
                         std::to_string(p.edges.size()) + " and " +
                         std::to_string(q.edges.size()));
  }
  Path r;
  r.start = pair_label(p.start, q.start);
  r.edges.reserve(p.edges.size());
  for (std::size_t i = 0; i < p.edges.size(); ++i) {
    r.edges.push_back(pair_label(p.edges[i], q.edges[i]));
  }
  return r;
}

}  // namespace cpd
