#include <doctest.h>

#include "../oracles.hpp"
#include "edgecount/colorcount.hpp"
#include "edgecount/error.hpp"
#include "edgecount/reduction.hpp"

using namespace edgecount;

namespace {
MultiGraph banana(unsigned k) { return MultiGraph(2, std::vector<Edge>(k, Edge{0, 1})); }
MultiGraph k4() { return MultiGraph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}, {1, 3}}); }
} // namespace

TEST_SUITE("reduction") {

TEST_CASE("equal case certificates") {
  const auto cert = simplify_equal_case(banana(3), 3, build_h3());
  CHECK(cert.output.vertex_count() == 14);
  CHECK(is_simple(cert.output));
  CHECK(is_regular(cert.output, 3));
  CHECK(cert.c == 2);
  CHECK(cert.edge_count == 3);
  CHECK(cert.multiplier() == 8);
  CHECK(count_assignments(cert.output, 3) == 48);

  const auto k = simplify_equal_case(k4(), 3, build_h3());
  CHECK(count_assignments(k.output, 3) == 384);
  CHECK(count_assignments(k.output, 3) == k.multiplier() * count_assignments(k4(), 3));

  CHECK_THROWS_WITH_AS(simplify_equal_case(banana(3), 3, build_h4()),
                       doctest::Contains("key property"), PreconditionError);
  CHECK_THROWS_AS(simplify_equal_case(MultiGraph(3, {{0, 1}, {1, 2}, {2, 0}}), 3, build_h3()),
                  PreconditionError);
}

TEST_CASE("certificates hold on random cubic multigraphs") {
  std::mt19937 rng(31);
  for (int t = 0; t < 10; ++t) {
    const MultiGraph g = oracle::random_regular_multigraph(rng, 2 + 2 * (rng() % 2), 3);
    const auto cert = simplify_equal_case(g, 3, build_h3());
    CHECK(count_assignments(cert.output, 3) == cert.multiplier() * count_assignments(g, 3));
  }
}

TEST_CASE("gadget selection") {
  CHECK(select_gadget(3, 3, true).name == "h3");
  CHECK(select_gadget(4, 4, true).name == "h4");
  CHECK(select_gadget(5, 5, true).name == "h5");
  CHECK(select_gadget(6, 6, false).name == "hstar:6");
  CHECK(select_gadget(4, 3, true).name == "h3");
  CHECK(select_gadget(4, 3, true).kappa == 4);
  CHECK(select_gadget(5, 4, false).name == "fnp:5:4");
  CHECK_THROWS_WITH_AS(select_gadget(5, 6, true), doctest::Contains("r > 5 planar impossible"),
                       PreconditionError);
  CHECK_THROWS_AS(select_gadget(2, 3, false), PreconditionError);
}

TEST_CASE("vandermonde") {
  CHECK(solve_vandermonde({1}, {7}) == std::vector<Rational>{7});
  CHECK(solve_vandermonde({1, 2}, {3, 5}) == std::vector<Rational>{1, 1});
  CHECK_THROWS_AS(solve_vandermonde({2, 2}, {1, 1}), PreconditionError);
  CHECK_THROWS_AS(solve_vandermonde({0, 2}, {1, 1}), PreconditionError);
  CHECK_THROWS_AS(solve_vandermonde({1, 2}, {1}), PreconditionError);

  std::mt19937 rng(32);
  for (int t = 0; t < 50; ++t) {
    const std::size_t k = 1 + rng() % 5;
    std::vector<BigInt> nodes;
    while (nodes.size() < k) {
      const BigInt x = static_cast<long>(rng() % 13) - 6;
      if (x != 0 && std::find(nodes.begin(), nodes.end(), x) == nodes.end())
        nodes.push_back(x);
    }
    std::vector<Rational> x(k);
    for (auto &v : x)
      v = Rational(static_cast<long>(rng() % 21) - 10, 1 + rng() % 4);
    std::vector<BigInt> rhs;
    std::vector<Rational> xs = x;
    // Scale so the right-hand side is integral.
    BigInt den = 1;
    for (auto &v : xs) {
      v.canonicalize();
      den = lcm(den, BigInt(v.get_den()));
    }
    for (auto &v : xs)
      v *= den;
    for (std::size_t n = 1; n <= k; ++n) {
      Rational s = 0;
      for (std::size_t j = 0; j < k; ++j)
        s += xs[j] * pow(nodes[j], n);
      rhs.push_back(s.get_num());
    }
    CHECK(solve_vandermonde(nodes, rhs) == xs);
  }
}

TEST_CASE("interpolation recovers direct counts") {
  const auto b4 = interpolation_pipeline(banana(3), 4, build_h3());
  CHECK(b4.recovered == 24);
  CHECK(b4.system.m == 3);
  CHECK(b4.system.columns.size() == 4);
  CHECK(b4.system.rows.size() == 4);
  CHECK(b4.system.lambda1 == b4.system.a + 3 * b4.system.b);

  CHECK(interpolation_pipeline(banana(3), 5, build_h3()).recovered == 60);

  const auto k = interpolation_pipeline(k4(), 4, build_h3());
  CHECK(k.system.m == 0);
  CHECK(k.system.columns == std::vector<BigInt>{1});
  CHECK(k.recovered == eval_grid(ad_grid(k4(), 4)));

  // b = 0 makes lambda1 = lambda2, so every column merges into one.
  const auto flat = interpolation_pipeline(banana(3), 3, build_h3());
  CHECK(flat.system.columns == std::vector<BigInt>{8});
  CHECK(flat.system.merged_from == std::vector<std::vector<std::size_t>>{{0, 1, 2, 3}});
  CHECK(flat.recovered == 6);
}

TEST_CASE("interpolation on random multigraphs") {
  std::mt19937 rng(33);
  for (int t = 0; t < 10; ++t) {
    const MultiGraph g = oracle::random_multigraph(rng, 3 + rng() % 2, 3 + rng() % 3);
    if (EdgeSelector::parallel_only().resolve(g).size() > 4)
      continue;
    const unsigned kappa = 4 + rng() % 2;
    CHECK(interpolation_pipeline(g, kappa, build_h3()).recovered == count_assignments(g, kappa));
  }
}

TEST_CASE("omega_n cross validation") {
  CHECK(cross_validate_omega_n(banana(3), 4, build_h3(), EdgeSelector::all(), 1));
  CHECK(cross_validate_omega_n(banana(3), 4, build_h3(), EdgeSelector::all(), 2));
  CHECK(cross_validate_omega_n(banana(3), 3, build_h3(), EdgeSelector::all(), 1));
}

} // TEST_SUITE
