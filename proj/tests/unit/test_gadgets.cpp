#include <doctest.h>

#include "../oracles.hpp"
#include "edgecount/colorcount.hpp"
#include "edgecount/error.hpp"
#include "edgecount/gadgets.hpp"

#include <set>

using namespace edgecount;

namespace {

void check_shape(const GadgetSpec &g) {
  INFO(g.name);
  CHECK(g.gadget.arity() == 2);
  CHECK(is_regular(g.gadget, g.r));
  CHECK(is_simple(g.gadget));
  CHECK(is_connected(g.gadget.base()));
}

// Triangle with danglers at two corners: at kappa = 4 every boundary pair
// has 6 extensions, so a = b.
GadgetSpec flat_triangle() {
  return {"tri", 4, 3, false, GadgetGraph(MultiGraph(3, {{0, 1}, {0, 2}, {1, 2}}), {0, 1})};
}

} // namespace

TEST_SUITE("gadgets") {

TEST_CASE("h3") {
  const GadgetSpec h3 = build_h3();
  check_shape(h3);
  CHECK(h3.gadget.base().vertex_count() == 4);
  CHECK(h3.gadget.base().edge_count() == 5);
  const auto r3 = verify_key_property(h3, 3);
  CHECK(r3.holds);
  CHECK(r3.c == 2);
  CHECK(r3.matrix == BigInt(2) * SignatureMatrix::identity(3));
  const auto r4 = verify_key_property(h3, 4);
  CHECK_FALSE(r4.holds);
  CHECK(r4.domain_invariant);
  CHECK(r4.b > 0);
  CHECK(r4.a != r4.b);
}

TEST_CASE("h4") {
  const GadgetSpec h4 = build_h4();
  check_shape(h4);
  CHECK(h4.gadget.base().vertex_count() == 6);
  CHECK(h4.gadget.base().edge_count() == 11);
  const auto r = verify_key_property(h4, 4);
  CHECK(r.holds);
  CHECK(r.c == 12);
  const std::array<Color, 2> differ{1, 3};
  CHECK(count_extensions(h4.gadget, 4, differ) == 0);
}

TEST_CASE("h5 structure") {
  const GadgetSpec h5 = build_h5_icosahedron();
  check_shape(h5);
  CHECK(h5.gadget.base().vertex_count() == 12);
  CHECK(h5.gadget.base().edge_count() == 29);
  const MultiGraph ico = icosahedron();
  CHECK(ico.edge_count() == 30);
  CHECK(is_regular(ico, 5));
  CHECK(is_simple(ico));
  CHECK(h5.gadget.dangling() == std::vector<Vertex>{ico.edge(0).u, ico.edge(0).v});
}

TEST_CASE("h5 constant") {
  const auto rep = verify_key_property(build_h5_icosahedron(), 5);
  CHECK(rep.holds);
  CHECK(rep.c == 18720);
  CHECK(count_assignments(icosahedron(), 5) == 5 * rep.c);
}

TEST_CASE("the drawn 5-regular gadget has the same constant") {
  // Vertices: u, v, a5, b1..b6, c1..c3, as drawn with u, v the attachments.
  const MultiGraph base(12, {{0, 2}, {2, 1}, {0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 7}, {1, 8},
                             {2, 5}, {2, 6}, {2, 8}, {9, 10}, {10, 11}, {9, 11},
                             {3, 4}, {3, 7}, {3, 9}, {4, 5}, {4, 9}, {4, 10}, {5, 6},
                             {5, 10}, {6, 10}, {6, 11}, {6, 8}, {8, 7}, {8, 11}, {7, 9},
                             {7, 11}});
  const GadgetSpec drawn{"drawn", 5, 5, true, GadgetGraph(base, {0, 1})};
  check_shape(drawn);
  const auto rep = verify_key_property(drawn, 5);
  CHECK(rep.holds);
  CHECK(rep.c == verify_key_property(build_h5_icosahedron(), 5).c);
}

TEST_CASE("matchings on Z_n") {
  for (auto [kappa, n] : {std::pair{3u, 6ull}, {4u, 8ull}, {5u, 120ull}, {6u, 24ull}}) {
    const auto ms = build_matchings(kappa, n);
    CHECK(ms.size() == kappa);
    std::set<std::pair<Vertex, Vertex>> seen;
    std::vector<Edge> all;
    for (const auto &m : ms) {
      CHECK(m.edges.size() == n / 2);
      std::vector<int> hit(n, 0);
      for (const Edge &e : m.edges) {
        ++hit[e.u];
        ++hit[e.v];
        CHECK(seen.insert(std::minmax(e.u, e.v)).second);
        all.push_back(e);
      }
      CHECK(std::all_of(hit.begin(), hit.end(), [](int h) { return h == 1; }));
    }
    const MultiGraph u(n, all);
    CHECK(is_regular(u, kappa));
    CHECK(is_simple(u));
  }
  CHECK(build_matchings(3, 6)[2].label == "M");
  CHECK_THROWS_AS(build_matchings(3, 7), PreconditionError);
  CHECK_THROWS_AS(build_matchings(4, 6), PreconditionError);  // 4 does not divide 6
  CHECK_THROWS_AS(build_matchings(3, 4), PreconditionError);  // n/2 < kappa
  CHECK_THROWS_AS(build_matchings(2, 4), PreconditionError);
}

TEST_CASE("h-star") {
  const GadgetSpec h = build_h_star(3, 6);
  check_shape(h);
  const auto r = verify_key_property(h, 3);
  CHECK(r.holds);
  CHECK(r.c > 0);
  CHECK(build_h_star(3).gadget.base().vertex_count() == 6);
  check_shape(build_h_star(4, 8));
  CHECK(verify_key_property(build_h_star(4, 8), 4).holds);
}

TEST_CASE("nonplanar f") {
  for (auto [kappa, r] : {std::pair{4u, 3u}, {5u, 3u}, {5u, 4u}, {6u, 5u}}) {
    const NonplanarGadget f = build_f_nonplanar(kappa, r);
    check_shape(f.spec);
    CHECK(f.spec.gadget.base().vertex_count() == 2 * r);
    CHECK(is_proper_coloring(f.spec.gadget, f.witness, f.dangling_colors, r));
    CHECK(f.dangling_colors == std::array<Color, 2>{0, 0});
    const auto rep = verify_key_property(f.spec, kappa);
    CHECK(rep.domain_invariant);
    CHECK(rep.b > 0);
  }
  CHECK_THROWS_AS(build_f_nonplanar(3, 3), PreconditionError);
  CHECK_THROWS_AS(build_f_nonplanar(5, 2), PreconditionError);

  const NonplanarGadget f = build_f_nonplanar(4, 3);
  auto broken = f.witness;
  broken[0] = broken[1];
  CHECK_FALSE(is_proper_coloring(f.spec.gadget, broken, f.dangling_colors, 3));
}

TEST_CASE("key property matches the oracle on the small gadgets") {
  for (const GadgetSpec &g : {build_h3(), build_h_star(3, 6)}) {
    const auto rep = verify_key_property(g, 3);
    for (Color a = 0; a < 3; ++a)
      for (Color b = 0; b < 3; ++b)
        CHECK(rep.matrix.at(a, b) == oracle::naive_extensions(g.gadget, 3, {a, b}));
  }
}

TEST_CASE("every gadget is domain invariant above its regularity") {
  for (const GadgetSpec &g : {build_h3(), build_h4(), build_f_nonplanar(4, 3).spec})
    for (unsigned kappa = g.r; kappa <= 5; ++kappa)
      CHECK(verify_key_property(g, kappa).domain_invariant);
}

TEST_CASE("dangling path") {
  const auto [vs, es] = dangling_path(build_h3().gadget);
  CHECK(vs == std::vector<Vertex>{0, 2, 1});
  CHECK(es == std::vector<EdgeIndex>{0, 2});
}

TEST_CASE("derive distinct diagonal") {
  const GadgetSpec tri = flat_triangle();
  const auto before = verify_key_property(tri, 4);
  REQUIRE(before.domain_invariant);
  CHECK(before.a == before.b);
  CHECK(before.b == 6);

  const GadgetSpec g = derive_distinct_diagonal(tri, 4);
  CHECK(g.name == "g(tri)");
  const auto after = verify_key_property(g, 4);
  CHECK(after.domain_invariant);
  CHECK(after.a != after.b);
  CHECK(derive_distinct_diagonal(tri, 4).gadget.base().edges() == g.gadget.base().edges());

  CHECK_THROWS_WITH_AS(derive_distinct_diagonal(build_h3(), 4), doctest::Contains("not needed"),
                       PreconditionError);
  const GadgetSpec split{"split", 4, 3, false,
                         GadgetGraph(MultiGraph(2), {0, 1})};
  CHECK_THROWS_AS(derive_distinct_diagonal(split, 4), PreconditionError);
}

TEST_CASE("chains") {
  const GadgetSpec h3 = build_h3();
  const GadgetSpec c2 = chain_gadget(h3, 2);
  CHECK(c2.name == "h3^2");
  CHECK(verify_key_property(c2, 3).matrix == BigInt(4) * SignatureMatrix::identity(3));
  CHECK(chain_gadget(h3, 1).gadget.base().edges() == h3.gadget.base().edges());
  const SignatureMatrix m4 = verify_key_property(h3, 4).matrix;
  CHECK(verify_key_property(chain_gadget(h3, 3, 4u), 4).matrix == matrix_power(m4, 3));
  for (unsigned n = 1; n <= 4; ++n)
    CHECK(verify_key_property(chain_gadget(h3, n), 3).matrix == matrix_power(BigInt(2) * SignatureMatrix::identity(3), n));
  CHECK_THROWS_AS(chain_gadget(h3, 0), PreconditionError);
}

TEST_CASE("chain matrices are powers across the gadget set") {
  for (const GadgetSpec &f : {build_h3(), build_h4(), build_f_nonplanar(4, 3).spec}) {
    const unsigned kappa = f.r + 1;
    const SignatureMatrix m = verify_key_property(f, kappa).matrix;
    for (unsigned n = 1; n <= 4; ++n)
      CHECK_MESSAGE(verify_key_property(chain_gadget(f, n, kappa), kappa).matrix ==
                        matrix_power(m, n),
                    f.name << " n=" << n);
  }
}

TEST_CASE("gadget names") {
  CHECK(gadget_by_name("h3").name == "h3");
  CHECK(gadget_by_name("hstar:3:6").gadget.base().vertex_count() == 6);
  CHECK(gadget_by_name("fnp:4:3").r == 3);
  CHECK_THROWS_AS(gadget_by_name("h9"), ParseError);
  CHECK_THROWS_AS(gadget_by_name("hstar:x"), ParseError);
  CHECK_THROWS_AS(gadget_by_name("fnp:4"), ParseError);
}

} // TEST_SUITE
