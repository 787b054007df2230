#include "edgecount/reduction.hpp"

#include "edgecount/error.hpp"
#include "edgecount/holant.hpp"

#include <algorithm>
#include <array>

namespace edgecount {

namespace {

std::string describe(const KeyPropertyReport &report) {
  std::string out = "matrix rows:";
  const unsigned kappa = report.matrix.kappa();
  for (Color i = 0; i < kappa; ++i) {
    out += " [";
    for (Color j = 0; j < kappa; ++j)
      out += (j ? " " : "") + report.matrix.at(i, j).get_str();
    out += "]";
  }
  return out;
}

} // namespace

ReductionCertificate simplify_equal_case(const MultiGraph &g, unsigned kappa,
                                         const GadgetSpec &gadget) {
  const KeyPropertyReport report = verify_key_property(gadget, kappa);
  if (!report.holds)
    throw PreconditionError("gadget " + gadget.name +
                            " lacks the key property at kappa " +
                            std::to_string(kappa) + " (" + describe(report) +
                            ")");
  if (!is_regular(g, gadget.r))
    throw PreconditionError("input graph is not " + std::to_string(gadget.r) +
                            "-regular, as gadget " + gadget.name + " requires");

  ReductionCertificate cert;
  cert.input = g;
  cert.output = replace_edges(g, gadget.gadget, EdgeSelector::all()).graph;
  cert.gadget = gadget.name;
  cert.kappa = kappa;
  cert.r = gadget.r;
  cert.c = report.c;
  cert.edge_count = g.edge_count();
  return cert;
}

GadgetSpec select_gadget(unsigned kappa, unsigned r, bool want_planar) {
  if (want_planar && r > 5)
    throw PreconditionError("r > 5 planar impossible: by Euler's formula "
                            "every planar simple graph has a vertex of "
                            "degree <= 5");
  if (r < 3 || kappa < r)
    throw PreconditionError("select_gadget needs kappa >= r >= 3");

  GadgetSpec f;
  if (want_planar) {
    f = r == 3 ? build_h3() : r == 4 ? build_h4() : build_h5_icosahedron();
  } else if (kappa == r) {
    return build_h_star(kappa);
  } else {
    f = build_f_nonplanar(kappa, r).spec;
  }
  if (kappa == r)
    return f;

  // Domain invariance of AD makes two entries enough to read off (a, b).
  const std::array<Color, 2> same{0, 0}, differ{0, 1};
  const BigInt a = count_extensions_frontier(f.gadget, kappa, same);
  const BigInt b = count_extensions_frontier(f.gadget, kappa, differ);
  if (a == b)
    return derive_distinct_diagonal(f, kappa);
  f.kappa = kappa;
  return f;
}

std::vector<Rational> solve_vandermonde(const std::vector<BigInt> &nodes,
                                        const std::vector<BigInt> &rhs) {
  const std::size_t k = nodes.size();
  if (rhs.size() != k)
    throw PreconditionError("solve_vandermonde needs as many rows as nodes");
  for (std::size_t i = 0; i < k; ++i) {
    if (nodes[i] == 0)
      throw PreconditionError("solve_vandermonde: node " + std::to_string(i) +
                              " is zero");
    for (std::size_t j = 0; j < i; ++j)
      if (nodes[i] == nodes[j])
        throw PreconditionError("solve_vandermonde: repeated node " +
                                nodes[i].get_str());
  }

  // Row n-1 holds node_j^n; augmented with rhs.
  std::vector<std::vector<Rational>> a(k, std::vector<Rational>(k + 1));
  for (std::size_t j = 0; j < k; ++j) {
    BigInt power = nodes[j];
    for (std::size_t n = 0; n < k; ++n) {
      a[n][j] = power;
      power *= nodes[j];
    }
  }
  for (std::size_t n = 0; n < k; ++n)
    a[n][k] = rhs[n];

  for (std::size_t col = 0; col < k; ++col) {
    std::size_t pivot = col;
    while (pivot < k && a[pivot][col] == 0)
      ++pivot;
    if (pivot == k)
      throw InvariantViolation("singular Vandermonde system");
    std::swap(a[pivot], a[col]);
    for (std::size_t row = 0; row < k; ++row) {
      if (row == col || a[row][col] == 0)
        continue;
      const Rational factor = a[row][col] / a[col][col];
      for (std::size_t j = col; j <= k; ++j)
        a[row][j] -= factor * a[col][j];
    }
  }
  std::vector<Rational> x(k);
  for (std::size_t j = 0; j < k; ++j) {
    x[j] = a[j][k] / a[j][j];
    x[j].canonicalize();
  }
  return x;
}

BigInt omega_n_by_placement(const MultiGraph &g, unsigned kappa,
                            const SignatureMatrix &f_matrix,
                            const std::vector<EdgeIndex> &selected,
                            std::uint64_t n) {
  const Signature placed = Signature::from_matrix(matrix_power(f_matrix, n));
  return eval_grid(place_binary_on_edges(
      ad_grid(g, kappa), EdgeSelector::explicit_list(selected), placed));
}

InterpolationResult interpolation_pipeline(const MultiGraph &g, unsigned kappa,
                                           const GadgetSpec &f,
                                           const EdgeSelector &sel) {
  const KeyPropertyReport report = verify_key_property(f, kappa);
  if (!report.domain_invariant)
    throw PreconditionError(f.name + " is not domain invariant at kappa " +
                            std::to_string(kappa));
  if (report.a == report.b)
    throw PreconditionError(f.name + " has a = b at kappa " +
                            std::to_string(kappa) +
                            "; apply derive_distinct_diagonal first");

  InterpolationResult out;
  StratifiedSystem &sys = out.system;
  sys.a = report.a;
  sys.b = report.b;
  const EigenvaluesAB eig = eigenvalues_ab(report.a, report.b, kappa);
  sys.lambda1 = eig.lambda1;
  sys.lambda2 = eig.lambda_rest;
  if (sys.lambda1 <= 0)
    throw InvariantViolation("lambda1 = " + sys.lambda1.get_str() +
                             " is not positive");

  const std::vector<EdgeIndex> selected = sel.resolve(g);
  sys.m = selected.size();

  // Column i carries lambda1^i lambda2^(m-i); equal columns are merged into
  // one unknown (their sum).
  for (std::size_t i = 0; i <= sys.m; ++i) {
    const BigInt value = pow(sys.lambda1, i) * pow(sys.lambda2, sys.m - i);
    auto hit = std::find(sys.columns.begin(), sys.columns.end(), value);
    if (hit == sys.columns.end()) {
      sys.columns.push_back(value);
      sys.merged_from.push_back({i});
    } else {
      sys.merged_from[static_cast<std::size_t>(hit - sys.columns.begin())]
          .push_back(i);
    }
  }
  if (sys.lambda1 != sys.lambda2 && sys.columns.size() != sys.m + 1)
    throw InvariantViolation("column values lambda1^i lambda2^(m-i) collide "
                             "although lambda1 != lambda2");

  for (std::size_t n = 1; n <= sys.columns.size(); ++n)
    sys.rows.push_back(
        omega_n_by_placement(g, kappa, report.matrix, selected, n));
  sys.solution = solve_vandermonde(sys.columns, sys.rows);

  Rational sum = 0;
  for (const Rational &x : sys.solution)
    sum += x;
  sum.canonicalize();
  if (sum.get_den() != 1)
    throw InvariantViolation("recovered Holant value " + sum.get_str() +
                             " is not an integer");
  out.recovered = sum.get_num();
  return out;
}

bool cross_validate_omega_n(const MultiGraph &g, unsigned kappa,
                            const GadgetSpec &f, const EdgeSelector &sel,
                            unsigned n) {
  const std::vector<EdgeIndex> selected = sel.resolve(g);
  const GadgetSpec chained = chain_gadget(f, n, kappa);
  const MultiGraph expanded =
      replace_edges(g, chained.gadget, EdgeSelector::explicit_list(selected))
          .graph;
  const BigInt direct = eval_grid(ad_grid(expanded, kappa));
  const BigInt placed = omega_n_by_placement(
      g, kappa, verify_key_property(f, kappa).matrix, selected, n);
  return direct == placed;
}

} // namespace edgecount
