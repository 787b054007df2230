#ifndef EDGECOUNT_REDUCTION_HPP
#define EDGECOUNT_REDUCTION_HPP

#include "edgecount/bigint.hpp"
#include "edgecount/gadgets.hpp"
#include "edgecount/graph.hpp"

#include <optional>
#include <string>
#include <vector>

namespace edgecount {

/// Edge replacement with a key-property gadget: N(G') = c^E * N(G).
struct ReductionCertificate {
  MultiGraph input;
  MultiGraph output;
  std::string gadget;
  unsigned kappa = 0;
  unsigned r = 0;
  BigInt c = 0;
  std::size_t edge_count = 0; // E, the number of edges of the input

  /// c^E.
  BigInt multiplier() const { return pow(c, edge_count); }
};

/// Replaces every edge of the r-regular `g` by `gadget`, after checking the
/// key property at kappa. Throws PreconditionError (with the key property
/// report in the message) when the gadget does not qualify.
ReductionCertificate simplify_equal_case(const MultiGraph &g, unsigned kappa,
                                         const GadgetSpec &gadget);

/// Decision table: H_r for planar r in {3,4,5}; hstar:kappa (n = kappa!)
/// for nonplanar kappa = r; H_r or fnp:kappa:r for kappa > r, replaced by
/// derive_distinct_diagonal when its diagonal equals its off-diagonal.
/// Planar requests with r > 5 are refused: no planar r-regular simple
/// graph exists for r > 5.
GadgetSpec select_gadget(unsigned kappa, unsigned r, bool want_planar);

struct StratifiedSystem {
  std::size_t m = 0; // replaced edges
  BigInt a = 0;
  BigInt b = 0;
  BigInt lambda1 = 0;
  BigInt lambda2 = 0;
  /// Distinct values lambda1^i lambda2^(m-i) after merging equal columns.
  std::vector<BigInt> columns;
  /// For each merged column, the exponents i it absorbed.
  std::vector<std::vector<std::size_t>> merged_from;
  /// rows[n-1] = Holant(Omega_n), n = 1..columns.size().
  std::vector<BigInt> rows;
  std::vector<Rational> solution;
};

struct InterpolationResult {
  BigInt recovered;
  StratifiedSystem system;
};

/// Recovers Holant(G; AD_kappa) from the Holant values of the instances
/// whose selected edges carry matrix(f)^n, n = 1..(#columns). Requires f's
/// signature at kappa to be domain invariant with a != b.
InterpolationResult
interpolation_pipeline(const MultiGraph &g, unsigned kappa, const GadgetSpec &f,
                       const EdgeSelector &sel = EdgeSelector::parallel_only());

/// Exact solution of sum_j x_j * nodes[j]^n = rhs[n-1] for n = 1..|nodes|.
/// Nodes must be pairwise distinct and nonzero.
std::vector<Rational> solve_vandermonde(const std::vector<BigInt> &nodes,
                                        const std::vector<BigInt> &rhs);

/// Holant(Omega_n) by placing matrix(f)^n on each selected edge.
BigInt omega_n_by_placement(const MultiGraph &g, unsigned kappa,
                            const SignatureMatrix &f_matrix,
                            const std::vector<EdgeIndex> &selected,
                            std::uint64_t n);

/// Compares omega_n_by_placement with a direct evaluation of the graph in
/// which every selected edge is replaced by n chained copies of f.
bool cross_validate_omega_n(const MultiGraph &g, unsigned kappa,
                            const GadgetSpec &f, const EdgeSelector &sel,
                            unsigned n);

} // namespace edgecount

#endif // EDGECOUNT_REDUCTION_HPP
