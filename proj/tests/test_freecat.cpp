#include <doctest.h>

#include <random>
#include <string>
#include <vector>

#include "cpd/errors.hpp"
#include "cpd/freecat.hpp"
#include "support.hpp"

using namespace cpd;

namespace {

// One vertex with a single loop: the skeleton of the terminal 2-computad.
Graph loop_graph() { return make_graph({"x"}, {{"xi", "x", "x"}}); }

// A linear chain v0 -e1-> v1 -e2-> ... -e5-> v5.
Graph chain_graph() {
  return make_graph({"v0", "v1", "v2", "v3", "v4", "v5"},
                    {{"e1", "v0", "v1"},
                     {"e2", "v1", "v2"},
                     {"e3", "v2", "v3"},
                     {"e4", "v3", "v4"},
                     {"e5", "v4", "v5"}});
}

}  // namespace

TEST_CASE("graph construction validates endpoints") {
  Graph g = loop_graph();
  CHECK(g.source("xi") == "x");
  CHECK(g.target("xi") == "x");
  CHECK_THROWS_AS(make_graph({"x"}, {{"e", "x", "nowhere"}}), UnknownReference);
  CHECK_THROWS_AS(make_graph({"x"}, {{"e", "nowhere", "x"}}), UnknownReference);
  CHECK_THROWS_AS(make_graph({"x", "x"}, {}), ValidationError);
}

TEST_CASE("graph equality ignores declaration order") {
  Graph g = make_graph({"u", "v"}, {{"e", "u", "v"}, {"d", "v", "u"}});
  Graph h = make_graph({"v", "u"}, {{"d", "v", "u"}, {"e", "u", "v"}});
  CHECK(same_graph(g, h));
  Graph k = make_graph({"u", "v"}, {{"e", "u", "v"}, {"d", "u", "v"}});
  CHECK_FALSE(same_graph(g, k));
}

TEST_CASE("paths compose like free-category morphisms") {
  Graph g = loop_graph();
  Path idx = identity_path("x");
  CHECK(path_compose(g, idx, idx) == idx);
  CHECK(path_label(idx) == "id(x)");

  Path xi{"x", {"xi"}};
  Path xixi = path_compose(g, xi, xi);
  CHECK(xixi.edges.size() == 2);
  CHECK(xixi == Path{"x", {"xi", "xi"}});
  CHECK(path_label(xixi) == "xi xi");
  CHECK(path_compose(g, idx, xi) == xi);
  CHECK(path_compose(g, xi, idx) == xi);
}

TEST_CASE("path lengths add along a chain") {
  Graph g = chain_graph();
  Path p{"v0", {"e1", "e2"}};
  Path q{"v2", {"e3", "e4", "e5"}};
  Path pq = path_compose(g, p, q);
  CHECK(pq.edges.size() == 5);
  CHECK(pq.start == "v0");
  CHECK(path_end(g, pq) == "v5");
  CHECK_THROWS_AS(path_compose(g, q, p), NotComposable);
  CHECK_THROWS_AS(path_compose(g, p, p), NotComposable);
}

TEST_CASE("path well-formedness is diagnosed") {
  Graph g = chain_graph();
  std::string why;
  CHECK(path_ok(g, Path{"v0", {"e1", "e2"}}, &why));
  CHECK_FALSE(path_ok(g, Path{"ghost", {}}, &why));
  CHECK_FALSE(why.empty());
  CHECK_FALSE(path_ok(g, Path{"v0", {"ghost"}}, &why));
  CHECK_FALSE(path_ok(g, Path{"v1", {"e1"}}, &why));       // starts at the wrong vertex
  CHECK_FALSE(path_ok(g, Path{"v0", {"e1", "e3"}}, &why)); // gap between e1 and e3
}

TEST_CASE("random composable path triples associate") {
  Graph g = loop_graph();
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> len(0, 4);
  for (int t = 0; t < 50; ++t) {
    auto random_path = [&] {
      Path p = identity_path("x");
      int n = len(rng);
      for (int i = 0; i < n; ++i) p.edges.push_back("xi");
      return p;
    };
    Path p = random_path(), q = random_path(), r = random_path();
    CHECK(path_compose(g, path_compose(g, p, q), r) ==
          path_compose(g, p, path_compose(g, q, r)));
  }
}

TEST_CASE("graph morphisms preserve incidence") {
  Graph chain = chain_graph();
  Graph loop = loop_graph();
  std::unordered_map<std::string, std::string> on_v, on_e;
  for (const auto& v : chain.vertices) on_v[v] = "x";
  for (const auto& e : chain.edges) on_e[e] = "xi";
  std::string why;
  CHECK(is_graph_morphism(chain, loop, on_v, on_e, &why));
  GraphMorphism f = make_graph_morphism(chain, loop, on_v, on_e);
  CHECK(f.vertex_image("v3") == "x");
  CHECK(f.edge_image("e2") == "xi");

  // Collapsing a genuine edge to a vertex mismatch is rejected.
  Graph two = make_graph({"u", "w"}, {{"d", "u", "w"}});
  CHECK_FALSE(is_graph_morphism(two, two, {{"u", "u"}, {"w", "u"}}, {{"d", "d"}}, &why));
  CHECK_FALSE(why.empty());
  CHECK_THROWS_AS(make_graph_morphism(two, two, {{"u", "u"}, {"w", "u"}}, {{"d", "d"}}),
                  ValidationError);

  // Identity and composition behave.
  GraphMorphism id_loop = identity_graph_morphism(loop);
  CHECK(compose(id_loop, f) == f);
  Path p{"v0", {"e1", "e2", "e3"}};
  CHECK(apply_path(f, p) == Path{"x", {"xi", "xi", "xi"}});
  CHECK(apply_path(f, identity_path("v2")) == identity_path("x"));
}

TEST_CASE("products of edgeless one-vertex graphs stay trivial") {
  Graph a = make_graph({"x"}, {});
  Graph b = make_graph({"y"}, {});
  GraphProduct prod = graph_product(a, b);
  CHECK(prod.graph.vertices.elements() == std::vector<std::string>{"<x,y>"});
  CHECK(prod.graph.edges.empty());
  CHECK(prod.to_first.vertex_image("<x,y>") == "x");
  CHECK(prod.to_second.vertex_image("<x,y>") == "y");
}

TEST_CASE("the loop graph squared is a loop graph") {
  GraphProduct prod = graph_product(loop_graph(), loop_graph());
  CHECK(prod.graph.vertices.elements() == std::vector<std::string>{"<x,x>"});
  CHECK(prod.graph.edges.elements() == std::vector<std::string>{"<xi,xi>"});
  CHECK(prod.graph.source("<xi,xi>") == "<x,x>");
  CHECK(prod.graph.target("<xi,xi>") == "<x,x>");
}

TEST_CASE("edges with no partner disappear from the product") {
  Graph g = make_graph({"u", "w"}, {{"d", "u", "w"}});
  Graph h = make_graph({"y"}, {});
  GraphProduct prod = graph_product(g, h);
  CHECK(prod.graph.vertices.size() == 2);
  CHECK(prod.graph.edges.empty());
}

TEST_CASE("graph product satisfies the universal property") {
  // Exhaustive: every cone from T factors uniquely through the product.
  Graph G = loop_graph();
  Graph H = make_graph({"u", "w"}, {{"d", "u", "w"}, {"l", "w", "w"}, {"k", "u", "u"}});
  GraphProduct prod = graph_product(G, H);
  Graph T = make_graph({"t"}, {{"e", "t", "t"}});

  auto to_G = support::all_graph_morphisms(T, G);
  auto to_H = support::all_graph_morphisms(T, H);
  auto to_P = support::all_graph_morphisms(T, prod.graph);
  REQUIRE(!to_G.empty());
  REQUIRE(!to_H.empty());
  for (const auto& f : to_G) {
    for (const auto& g : to_H) {
      int matches = 0;
      for (const auto& h : to_P) {
        if (compose(prod.to_first, h) == f && compose(prod.to_second, h) == g) {
          ++matches;
          CHECK(h == pair_graph_morphisms(f, g, prod));
        }
      }
      CHECK(matches == 1);
    }
  }
}

TEST_CASE("pairing a cone with mismatched domains is rejected") {
  Graph G = loop_graph();
  GraphProduct prod = graph_product(G, G);
  GraphMorphism idg = identity_graph_morphism(G);
  Graph other = make_graph({"u"}, {});
  GraphMorphism from_other =
      make_graph_morphism(other, G, {{"u", "x"}}, {});
  CHECK_THROWS_AS(pair_graph_morphisms(idg, from_other, prod), ValidationError);
}

TEST_CASE("paths pair synchronously") {
  Graph G = loop_graph();
  Graph H = make_graph({"u", "w"}, {{"d", "u", "w"}});
  GraphProduct prod = graph_product(G, H);

  Path left{"x", {"xi"}};
  Path right{"u", {"d"}};
  Path paired = pair_paths(left, right);
  CHECK(paired == Path{"<x,u>", {"<xi,d>"}});
  CHECK(apply_path(prod.to_first, paired) == left);
  CHECK(apply_path(prod.to_second, paired) == right);

  CHECK(pair_paths(identity_path("x"), identity_path("u")) == identity_path("<x,u>"));
  CHECK_THROWS_AS(pair_paths(left, identity_path("u")), LengthMismatch);
}
