#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "cpd/errors.hpp"
#include "cpd/finset.hpp"

namespace cpd {

// A finite graph (quiver): a parallel pair of maps src, tgt : edges -> vertices.
struct Graph {
  FinSet vertices;
  FinSet edges;
  std::unordered_map<std::string, std::string> src;
  std::unordered_map<std::string, std::string> tgt;

  const std::string& source(const std::string& edge) const;
  const std::string& target(const std::string& edge) const;
};

struct EdgeDecl {
  std::string name;
  std::string src;
  std::string tgt;
};

Graph make_graph(std::vector<std::string> vertices, std::vector<EdgeDecl> edges);

// Two graphs have the same presentation when they have the same vertices and
// the same edges with the same endpoints (element order is ignored).
bool same_graph(const Graph& a, const Graph& b);

// A morphism of the free category on a graph: a (possibly empty) head-to-tail
// chain of edges.  The start vertex is kept explicitly so identity paths at
// different vertices stay distinct.
struct Path {
  std::string start;
  std::vector<std::string> edges;

  bool operator==(const Path&) const = default;
};

Path identity_path(const std::string& vertex);

// True when `p` is a well-formed path in `g`; on failure `why` (if non-null)
// receives the first problem found.
bool path_ok(const Graph& g, const Path& p, std::string* why = nullptr);

// End vertex of a path: the target of its last edge, or its start when empty.
const std::string& path_end(const Graph& g, const Path& p);

// Diagrammatic composition: `p` followed by `q`.
Path path_compose(const Graph& g, const Path& p, const Path& q);

// "id(v)" for an identity path, otherwise the edge names separated by spaces.
std::string path_label(const Path& p);

// A graph morphism dom -> cod: vertex and edge assignments commuting with
// src and tgt.  Constructed through make_graph_morphism, which validates.
struct GraphMorphism {
  Graph dom;
  Graph cod;
  std::unordered_map<std::string, std::string> on_vertices;
  std::unordered_map<std::string, std::string> on_edges;

  const std::string& vertex_image(const std::string& v) const;
  const std::string& edge_image(const std::string& e) const;
};

bool is_graph_morphism(const Graph& dom, const Graph& cod,
                       const std::unordered_map<std::string, std::string>& on_vertices,
                       const std::unordered_map<std::string, std::string>& on_edges,
                       std::string* why = nullptr);

GraphMorphism make_graph_morphism(
    Graph dom, Graph cod,
    std::unordered_map<std::string, std::string> on_vertices,
    std::unordered_map<std::string, std::string> on_edges);

GraphMorphism identity_graph_morphism(const Graph& g);

// Composition g . f (first f, then g).
GraphMorphism compose(const GraphMorphism& g, const GraphMorphism& f);

bool operator==(const GraphMorphism& a, const GraphMorphism& b);

// The functor on free categories induced by a graph morphism, on one path.
Path apply_path(const GraphMorphism& m, const Path& p);

// Binary product of graphs: vertices and edges are pairs, endpoints are taken
// componentwise.  Pair elements are labelled "<x,y>" in x-major order.
struct GraphProduct {
  Graph graph;
  GraphMorphism to_first;
  GraphMorphism to_second;
};

GraphProduct graph_product(const Graph& g1, const Graph& g2);

// The mediating morphism <f,g> : dom(f) -> prod.graph of a cone (f, g).
// Throws ValidationError when f and g have different domains or the product
// was not built from their codomains.
GraphMorphism pair_graph_morphisms(const GraphMorphism& f,
                                   const GraphMorphism& g,
                                   const GraphProduct& prod);

// Componentwise pairing of two paths of equal length into the product graph.
// Throws LengthMismatch otherwise.
Path pair_paths(const Path& p, const Path& q);

}  // namespace cpd
