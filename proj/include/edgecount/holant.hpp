#ifndef EDGECOUNT_HOLANT_HPP
#define EDGECOUNT_HOLANT_HPP

#include "edgecount/bigint.hpp"
#include "edgecount/colorcount.hpp"
#include "edgecount/graph.hpp"

#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace edgecount {

/// kappa x kappa integer matrix, row-major.
class SignatureMatrix {
public:
  SignatureMatrix() = default;
  explicit SignatureMatrix(unsigned kappa);
  SignatureMatrix(unsigned kappa, std::vector<BigInt> entries);

  static SignatureMatrix identity(unsigned kappa);
  static SignatureMatrix all_ones(unsigned kappa);
  /// (a - b) I + b J.
  static SignatureMatrix domain_invariant(unsigned kappa, const BigInt &a,
                                         const BigInt &b);

  unsigned kappa() const noexcept { return kappa_; }
  const BigInt &at(Color i, Color j) const { return entries_[i * kappa_ + j]; }
  BigInt &at(Color i, Color j) { return entries_[i * kappa_ + j]; }
  const std::vector<BigInt> &entries() const noexcept { return entries_; }

  bool is_symmetric() const;

  friend SignatureMatrix operator*(const SignatureMatrix &x,
                                   const SignatureMatrix &y);
  friend SignatureMatrix operator+(const SignatureMatrix &x,
                                   const SignatureMatrix &y);
  friend SignatureMatrix operator-(const SignatureMatrix &x,
                                   const SignatureMatrix &y);
  friend SignatureMatrix operator*(const BigInt &s, const SignatureMatrix &x);
  friend bool operator==(const SignatureMatrix &x, const SignatureMatrix &y);

private:
  unsigned kappa_ = 0;
  std::vector<BigInt> entries_;
};

SignatureMatrix matrix_power(const SignatureMatrix &m, std::uint64_t n);

/// Integer-valued function on [kappa]^arity, stored densely with the first
/// input as the most significant digit.
class Signature {
public:
  Signature() = default;
  /// Throws PreconditionError if the table has the wrong size, or if
  /// `symmetric` is set but the table is not permutation invariant.
  Signature(unsigned arity, unsigned kappa, std::vector<BigInt> values,
            bool symmetric = false);

  static Signature
  from_function(unsigned arity, unsigned kappa,
                const std::function<BigInt(std::span<const Color>)> &fn,
                bool symmetric = false);
  static Signature from_matrix(const SignatureMatrix &m);
  /// Unary signature that is 1 on `color` and 0 elsewhere.
  static Signature pin(unsigned kappa, Color color);

  unsigned arity() const noexcept { return arity_; }
  unsigned kappa() const noexcept { return kappa_; }
  bool symmetric() const noexcept { return symmetric_; }
  const std::vector<BigInt> &values() const noexcept { return values_; }

  const BigInt &at(std::span<const Color> inputs) const;
  std::size_t index_of(std::span<const Color> inputs) const;

  bool is_permutation_invariant() const;
  bool is_identically_zero() const;

  /// The binary signature as a matrix; throws unless arity is 2.
  SignatureMatrix matrix() const;

  friend bool operator==(const Signature &x, const Signature &y);

private:
  unsigned arity_ = 0;
  unsigned kappa_ = 1;
  bool symmetric_ = false;
  std::vector<BigInt> values_;
};

/// AD_{r,kappa}: 1 when all r inputs are pairwise distinct.
Signature ad_signature(unsigned r, unsigned kappa);
/// =_r: 1 when all r inputs are equal.
Signature equality_signature(unsigned r, unsigned kappa);

/// Sums out input `position` of `sig` against the unary `unary`.
Signature contract_unary(const Signature &sig, unsigned position,
                         const Signature &unary);

/// A graph with one signature per vertex. `ports[v][i]` is the incident
/// edge that feeds input i of the signature at v.
class SignatureGrid {
public:
  SignatureGrid() = default;
  /// Ports default to each vertex's incident edges in ascending order.
  SignatureGrid(MultiGraph graph, std::vector<Signature> signatures);
  SignatureGrid(MultiGraph graph, std::vector<Signature> signatures,
                std::vector<std::vector<EdgeIndex>> ports);

  const MultiGraph &graph() const noexcept { return graph_; }
  const std::vector<Signature> &signatures() const noexcept {
    return signatures_;
  }
  const std::vector<std::vector<EdgeIndex>> &ports() const noexcept {
    return ports_;
  }
  unsigned kappa() const noexcept { return kappa_; }

private:
  void validate();

  MultiGraph graph_;
  std::vector<Signature> signatures_;
  std::vector<std::vector<EdgeIndex>> ports_;
  unsigned kappa_ = 0;
};

/// Grid with AD_{deg(v), kappa} at every vertex.
SignatureGrid ad_grid(const MultiGraph &g, unsigned kappa);

/// Holant value: sum over edge assignments of the product of vertex values.
///
/// Backtracks over a static edge order, pruning as soon as a vertex's
/// partial inputs admit no nonzero completion. Sub-results are memoized on
/// the colors of the frontier edges (assigned edges at vertices that still
/// have unassigned edges), which is what the remaining sum depends on.
BigInt eval_grid(const SignatureGrid &grid);

/// Signature of an F-gate: the i-th external input is the i-th dangling
/// edge. Each vertex's inputs are its internal edges in ascending index
/// order followed by its dangling edges in dangling order.
Signature gate_signature(const GadgetGraph &g,
                         const std::vector<Signature> &vertex_signatures,
                         unsigned kappa);
/// gate_signature with AD_{deg(v), kappa} at every vertex.
Signature ad_gate_signature(const GadgetGraph &g, unsigned kappa);

struct DomainInvariantForm {
  BigInt a; // diagonal
  BigInt b; // off-diagonal
};

/// (a, b) when the binary signature has the form (a - b) I + b J.
std::optional<DomainInvariantForm>
decompose_domain_invariant(const Signature &sig);
std::optional<DomainInvariantForm>
decompose_domain_invariant(const SignatureMatrix &m);

struct EigenvaluesAB {
  BigInt lambda1;     // a + (kappa - 1) b, multiplicity 1
  BigInt lambda_rest; // a - b, multiplicity kappa - 1
};
EigenvaluesAB eigenvalues_ab(const BigInt &a, const BigInt &b, unsigned kappa);

/// Splits every selected edge with a fresh degree-2 vertex carrying `sig`.
/// `sig` must be binary and symmetric, since the edge has no orientation.
SignatureGrid place_binary_on_edges(const SignatureGrid &grid,
                                    const EdgeSelector &sel,
                                    const Signature &sig);

} // namespace edgecount

#endif // EDGECOUNT_HOLANT_HPP
