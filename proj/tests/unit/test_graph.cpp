#include <doctest.h>

#include "../oracles.hpp"
#include "edgecount/error.hpp"
#include "edgecount/gadgets.hpp"
#include "edgecount/graph.hpp"

using namespace edgecount;

namespace {
const char *k4_text = "v 4\ne 0 1\ne 1 2\ne 2 3\ne 3 0\ne 0 2\ne 1 3";
const char *b3_text = "v 2\ne 0 1\ne 0 1\ne 0 1";
const char *h3_text = "v 4\ne 0 2\ne 0 3\ne 1 2\ne 1 3\ne 2 3\nd 0\nd 1";
} // namespace

TEST_SUITE("graph") {

TEST_CASE("parse keeps file order and builds the right variant") {
  const auto b3 = parse_graph(b3_text);
  REQUIRE(std::holds_alternative<MultiGraph>(b3));
  CHECK(std::get<MultiGraph>(b3).vertex_count() == 2);
  CHECK(std::get<MultiGraph>(b3).edge_count() == 3);

  const MultiGraph k4 = parse_multigraph(k4_text);
  CHECK(k4.edge_count() == 6);
  CHECK(k4.edge(4) == Edge{0, 2});

  const auto h3 = parse_graph(h3_text);
  REQUIRE(std::holds_alternative<GadgetGraph>(h3));
  const auto &g = std::get<GadgetGraph>(h3);
  CHECK(g.dangling() == std::vector<Vertex>{0, 1});
  CHECK(g.base().edges() == build_h3().gadget.base().edges());
}

TEST_CASE("parse accepts comments, blank lines and CRLF") {
  const MultiGraph g = parse_multigraph("# hi\r\n\r\nv 3\r\n# mid\r\ne 0 1\r\ne 1 2  \r\n");
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 2);
}

TEST_CASE("parse errors name the line") {
  auto line_of = [](const char *text) {
    try {
      parse_graph(text);
    } catch (const ParseError &e) {
      return e.line();
    }
    return std::size_t{0};
  };
  CHECK(line_of("v 2\ne 0 0") == 2);
  CHECK(line_of("v 2\ne 0 2") == 2);
  CHECK(line_of("v 2\ne 0") == 2);
  CHECK(line_of("v 2\ne 0 1 7") == 2);
  CHECK(line_of("e 0 1") == 1);
  CHECK(line_of("v 2\nv 3") == 2);
  CHECK(line_of("v 2\nx 1") == 2);
  CHECK(line_of("v 2\nd 5") == 2);
  CHECK(line_of("v -1") == 1);
  CHECK(line_of("# only comment") == 0);
  CHECK_THROWS_AS(MultiGraph(2, {{1, 1}}), PreconditionError);
  CHECK_THROWS_AS(parse_multigraph(h3_text), ParseError);
}

TEST_CASE("degree counts dangling edges") {
  const MultiGraph b3 = parse_multigraph(b3_text);
  CHECK(degree(b3, 0) == 3);
  const GadgetGraph h3 = parse_gadget(h3_text);
  CHECK(degree(h3, 0) == 3);
  CHECK(degree(MultiGraph(2, {{0, 1}}), 0) == 1);
  CHECK_THROWS(degree(b3, 7));
}

TEST_CASE("regular and simple") {
  const MultiGraph k4 = parse_multigraph(k4_text);
  const MultiGraph b3 = parse_multigraph(b3_text);
  CHECK(is_regular(k4, 3));
  CHECK(is_simple(k4));
  CHECK(is_regular(b3, 3));
  CHECK_FALSE(is_simple(b3));
  CHECK(is_regular(build_h4().gadget, 4));
  CHECK_FALSE(is_regular(k4, 2));
  CHECK(is_simple(MultiGraph(3)));
}

TEST_CASE("bridges") {
  CHECK(has_bridge(MultiGraph(3, {{0, 1}, {1, 2}})));
  CHECK_FALSE(has_bridge(MultiGraph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}})));
  CHECK_FALSE(has_bridge(parse_multigraph(b3_text)));
  CHECK_FALSE(has_bridge(MultiGraph(5)));
}

TEST_CASE("has_bridge agrees with deletion on random graphs") {
  std::mt19937 rng(11);
  for (int t = 0; t < 400; ++t) {
    const std::size_t n = 2 + rng() % 5, m = rng() % 9;
    const MultiGraph g = oracle::random_multigraph(rng, n, m);
    CHECK_MESSAGE(has_bridge(g) == oracle::bridge_by_deletion(g), render(g));
  }
}

TEST_CASE("render round trip") {
  std::mt19937 rng(5);
  for (int t = 0; t < 50; ++t) {
    const MultiGraph g = oracle::random_multigraph(rng, 2 + rng() % 6, rng() % 10);
    const MultiGraph back = parse_multigraph(render(g));
    CHECK(back.vertex_count() == g.vertex_count());
    CHECK(back.edges() == g.edges());
  }
  const GadgetGraph h4 = build_h4().gadget;
  const GadgetGraph back = parse_gadget(render(h4));
  CHECK(back.dangling() == h4.dangling());
  CHECK(back.base().edges() == h4.base().edges());
}

TEST_CASE("edge selectors") {
  const MultiGraph g(3, {{0, 1}, {1, 2}, {1, 0}, {0, 2}});
  CHECK(EdgeSelector::all().resolve(g) == std::vector<EdgeIndex>{0, 1, 2, 3});
  CHECK(EdgeSelector::parallel_only().resolve(g) == std::vector<EdgeIndex>{0, 2});
  CHECK(EdgeSelector::explicit_list({3, 1, 3}).resolve(g) ==
        std::vector<EdgeIndex>{1, 3});
  CHECK_THROWS(EdgeSelector::explicit_list({4}).resolve(g));
}

TEST_CASE("replace_edges") {
  const MultiGraph b3 = parse_multigraph(b3_text);
  const MultiGraph k4 = parse_multigraph(k4_text);
  const GadgetGraph h3 = build_h3().gadget;

  const Replacement r = replace_edges(b3, h3, EdgeSelector::all());
  CHECK(r.graph.vertex_count() == 14);
  CHECK(r.graph.edge_count() == 21);
  CHECK(is_simple(r.graph));
  CHECK(is_regular(r.graph, 3));
  REQUIRE(r.blocks.size() == 3);
  CHECK(r.blocks[1].original_edge == 1);
  CHECK(r.blocks[1].first_vertex == 6);
  CHECK(r.blocks[1].vertex_count == 4);

  const Replacement none = replace_edges(k4, h3, EdgeSelector::parallel_only());
  CHECK(none.graph.edges() == k4.edges());
  CHECK(none.blocks.empty());

  const Replacement wrong = replace_edges(b3, build_h4().gadget, EdgeSelector::all());
  CHECK_FALSE(is_regular(wrong.graph, 4));

  const GadgetGraph unary(MultiGraph(1), {0});
  CHECK_THROWS_AS(replace_edges(b3, unary, EdgeSelector::all()), PreconditionError);
}

TEST_CASE("replacement preserves regularity on random inputs") {
  std::mt19937 rng(3);
  for (int t = 0; t < 20; ++t) {
    const MultiGraph g = oracle::random_regular_multigraph(rng, 2 * (1 + rng() % 3), 3);
    const MultiGraph out = replace_edges(g, build_h3().gadget, EdgeSelector::all()).graph;
    CHECK(is_regular(out, 3));
    CHECK(is_simple(out));
  }
}

} // TEST_SUITE
