#include <doctest.h>

#include "../oracles.hpp"
#include "edgecount/colorcount.hpp"
#include "edgecount/error.hpp"
#include "edgecount/gadgets.hpp"
#include "edgecount/holant.hpp"

using namespace edgecount;

namespace {
SignatureMatrix j_minus_i(unsigned kappa) {
  return SignatureMatrix::all_ones(kappa) - SignatureMatrix::identity(kappa);
}
MultiGraph banana(unsigned k) { return MultiGraph(2, std::vector<Edge>(k, Edge{0, 1})); }
} // namespace

TEST_SUITE("holant") {

TEST_CASE("all-distinct and equality signatures") {
  CHECK(ad_signature(2, 3).matrix() == j_minus_i(3));
  CHECK(ad_signature(1, 5).values() == std::vector<BigInt>(5, 1));
  CHECK(ad_signature(4, 3).is_identically_zero());
  CHECK(ad_signature(0, 3).values() == std::vector<BigInt>{1});
  CHECK(ad_signature(3, 4).symmetric());

  CHECK(equality_signature(2, 4).matrix() == SignatureMatrix::identity(4));
  CHECK(equality_signature(1, 3).values() == std::vector<BigInt>(3, 1));
  const Signature eq3 = equality_signature(3, 2);
  int nonzero = 0;
  for (const auto &x : eq3.values())
    nonzero += x != 0;
  CHECK(nonzero == 2);
  const std::array<Color, 3> zeros{0, 0, 0}, ones{1, 1, 1};
  CHECK(eq3.at(zeros) == 1);
  CHECK(eq3.at(ones) == 1);
}

TEST_CASE("signature validation") {
  CHECK_THROWS_AS(Signature(2, 3, std::vector<BigInt>(8, 0)), PreconditionError);
  std::vector<BigInt> v(9, 0);
  v[1] = 1; // (0,1) but not (1,0)
  CHECK_THROWS_AS(Signature(2, 3, v, true), PreconditionError);
  const Signature asym(2, 3, v);
  CHECK_FALSE(asym.is_permutation_invariant());
  const std::array<Color, 2> in{0, 1};
  CHECK(asym.index_of(in) == 1);
}

TEST_CASE("eval_grid examples") {
  const MultiGraph c3(3, {{0, 1}, {1, 2}, {2, 0}});
  CHECK(eval_grid(SignatureGrid(c3, std::vector<Signature>(3, ad_signature(2, 3)))) == 6);
  CHECK(eval_grid(ad_grid(banana(3), 4)) == 24);
  std::vector<Signature> sigs{ad_signature(2, 3), ad_signature(2, 3), ad_signature(2, 3)};
  sigs[1] = Signature(2, 3, std::vector<BigInt>(9, 0), true);
  CHECK(eval_grid(SignatureGrid(c3, sigs)) == 0);
  CHECK_THROWS_AS(SignatureGrid(c3, std::vector<Signature>(3, ad_signature(3, 3))),
                  PreconditionError);
}

TEST_CASE("eval_grid matches naive Holant on random grids") {
  std::mt19937 rng(21);
  for (int t = 0; t < 120; ++t) {
    const unsigned kappa = 2 + rng() % 3;
    const std::size_t n = 2 + rng() % 4;
    const MultiGraph g = oracle::random_multigraph(rng, n, rng() % 7);
    std::vector<Signature> sigs;
    std::uniform_int_distribution<int> val(-1, 3);
    for (Vertex v = 0; v < n; ++v) {
      const auto arity = static_cast<unsigned>(g.degree(v));
      std::size_t size = 1;
      for (unsigned i = 0; i < arity; ++i)
        size *= kappa;
      std::vector<BigInt> table(size);
      for (auto &x : table)
        x = val(rng);
      sigs.emplace_back(arity, kappa, table);
    }
    const SignatureGrid grid(g, sigs);
    CHECK(eval_grid(grid) == oracle::naive_holant(grid));
  }
}

TEST_CASE("eval_grid is invariant under renumbering") {
  std::mt19937 rng(22);
  for (int t = 0; t < 20; ++t) {
    const MultiGraph g = oracle::random_regular_multigraph(rng, 6, 3);
    std::vector<Vertex> perm{0, 1, 2, 3, 4, 5};
    std::shuffle(perm.begin(), perm.end(), rng);
    auto edges = g.edges();
    for (auto &e : edges)
      e = {perm[e.u], perm[e.v]};
    std::shuffle(edges.begin(), edges.end(), rng);
    CHECK(eval_grid(ad_grid(g, 4)) == eval_grid(ad_grid(MultiGraph(6, edges), 4)));
  }
}

TEST_CASE("ad_grid agrees with count_assignments") {
  std::mt19937 rng(23);
  for (int t = 0; t < 60; ++t) {
    const unsigned kappa = 1 + rng() % 5;
    const MultiGraph g = oracle::random_multigraph(rng, 2 + rng() % 6, rng() % 9);
    CHECK(eval_grid(ad_grid(g, kappa)) == count_assignments(g, kappa));
  }
}

TEST_CASE("gate signatures") {
  CHECK(ad_gate_signature(build_h3().gadget, 3).matrix() ==
        BigInt(2) * SignatureMatrix::identity(3));
  const GadgetGraph single(MultiGraph(1), {0, 0});
  for (unsigned kappa = 2; kappa <= 5; ++kappa)
    CHECK(ad_gate_signature(single, kappa).matrix() == j_minus_i(kappa));
  const GadgetGraph path(MultiGraph(2, {{0, 1}}), {0, 1});
  const SignatureMatrix sq = ad_gate_signature(path, 3).matrix();
  CHECK(sq == SignatureMatrix::identity(3) + SignatureMatrix::all_ones(3));
  CHECK_THROWS_AS(gate_signature(path, {ad_signature(3, 3), ad_signature(2, 3)}, 3),
                  PreconditionError);
}

TEST_CASE("gate_signature matches extension counts") {
  for (const GadgetSpec &g : {build_h3(), build_h4()})
    for (unsigned kappa = g.r; kappa <= g.r + 1; ++kappa) {
      const Signature sig = ad_gate_signature(g.gadget, kappa);
      for (Color a = 0; a < kappa; ++a)
        for (Color b = 0; b < kappa; ++b) {
          const std::array<Color, 2> bd{a, b};
          CHECK(sig.at(bd) == count_extensions(g.gadget, kappa, bd));
        }
    }
}

TEST_CASE("domain invariant decomposition") {
  auto two_i = decompose_domain_invariant(BigInt(2) * SignatureMatrix::identity(3));
  REQUIRE(two_i);
  CHECK(two_i->a == 2);
  CHECK(two_i->b == 0);
  auto jm = decompose_domain_invariant(ad_signature(2, 4));
  REQUIRE(jm);
  CHECK(jm->a == 0);
  CHECK(jm->b == 1);
  SignatureMatrix odd = j_minus_i(3);
  odd.at(1, 2) = 5;
  CHECK_FALSE(decompose_domain_invariant(odd));
}

TEST_CASE("eigenvalues") {
  auto e = eigenvalues_ab(0, 1, 3);
  CHECK(e.lambda1 == 2);
  CHECK(e.lambda_rest == -1);
  e = eigenvalues_ab(2, 0, 7);
  CHECK(e.lambda1 == 2);
  CHECK(e.lambda_rest == 2);
  e = eigenvalues_ab(1, 1, 4);
  CHECK(e.lambda1 == 4);
  CHECK(e.lambda_rest == 0);
}

TEST_CASE("eigenvalues verified by matrix-vector products") {
  std::mt19937 rng(24);
  for (int t = 0; t < 100; ++t) {
    const unsigned kappa = 1 + rng() % 6;
    const BigInt a = static_cast<long>(rng() % 21) - 10, b = static_cast<long>(rng() % 21) - 10;
    const SignatureMatrix m = SignatureMatrix::domain_invariant(kappa, a, b);
    const auto e = eigenvalues_ab(a, b, kappa);
    for (Color i = 0; i < kappa; ++i) {
      BigInt row = 0;
      for (Color j = 0; j < kappa; ++j)
        row += m.at(i, j);
      CHECK(row == e.lambda1);
    }
    for (Color k = 1; k < kappa; ++k) // v = e_0 - e_k
      for (Color i = 0; i < kappa; ++i) {
        const BigInt got = m.at(i, 0) - m.at(i, k);
        const BigInt want = e.lambda_rest * ((i == 0) - (i == k));
        CHECK(got == want);
      }
  }
}

TEST_CASE("(J - I)^s closed form") {
  for (unsigned kappa = 3; kappa <= 6; ++kappa)
    for (unsigned s = 0; s <= 6; ++s) {
      const BigInt sign = s % 2 ? -1 : 1;
      const BigInt c = (pow(BigInt(kappa - 1), s) - sign) / kappa;
      const SignatureMatrix want =
          sign * SignatureMatrix::identity(kappa) + c * SignatureMatrix::all_ones(kappa);
      const SignatureMatrix got = matrix_power(j_minus_i(kappa), s);
      CHECK(got == want);
      CHECK(got.at(0, 0) - got.at(0, 1) == sign);
    }
}

TEST_CASE("contracting the all-ones unary into AD") {
  for (unsigned kappa = 1; kappa <= 6; ++kappa)
    for (unsigned n = 1; n <= kappa; ++n) {
      const Signature got = contract_unary(ad_signature(n, kappa), 0, ad_signature(1, kappa));
      std::vector<BigInt> scaled = ad_signature(n - 1, kappa).values();
      for (auto &x : scaled)
        x *= kappa - n + 1;
      CHECK(got.values() == scaled);
    }
}

TEST_CASE("edge placement") {
  const MultiGraph b3 = banana(3);
  CHECK(eval_grid(place_binary_on_edges(ad_grid(b3, 3), EdgeSelector::all(),
                                        Signature::from_matrix(BigInt(2) *
                                                               SignatureMatrix::identity(3)))) ==
        48);
  std::mt19937 rng(25);
  for (int t = 0; t < 20; ++t) {
    const MultiGraph g = oracle::random_regular_multigraph(rng, 4, 3);
    const SignatureGrid grid = ad_grid(g, 4);
    CHECK(eval_grid(place_binary_on_edges(grid, EdgeSelector::all(),
                                          equality_signature(2, 4))) == eval_grid(grid));
  }
  std::vector<BigInt> v(9, 0);
  v[1] = 1;
  CHECK_THROWS_AS(place_binary_on_edges(ad_grid(b3, 3), EdgeSelector::all(), Signature(2, 3, v)),
                  PreconditionError);
}

TEST_CASE("matrix power") {
  CHECK(matrix_power(j_minus_i(3), 2) ==
        SignatureMatrix::identity(3) + SignatureMatrix::all_ones(3));
  CHECK(matrix_power(j_minus_i(4), 0) == SignatureMatrix::identity(4));
  const SignatureMatrix m = SignatureMatrix::domain_invariant(3, 5, 2);
  CHECK(matrix_power(m, 5) == m * m * m * m * m);
}

} // TEST_SUITE
