#ifndef EDGECOUNT_PARSIMONY_HPP
#define EDGECOUNT_PARSIMONY_HPP

#include "edgecount/bigint.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace edgecount {

struct Literal {
  std::uint32_t var; // 0-based
  bool negated = false;

  friend bool operator==(const Literal &, const Literal &) = default;
};

using Clause = std::vector<Literal>;

/// CNF over variables 0..variable_count-1. An empty clause is allowed and
/// makes the formula unsatisfiable.
struct CnfFormula {
  std::uint32_t variable_count = 0;
  std::vector<Clause> clauses;

  friend bool operator==(const CnfFormula &, const CnfFormula &) = default;
};

/// DIMACS subset: `c` comments, one `p cnf <vars> <clauses>` header, then
/// clauses of nonzero integers each terminated by 0 (may span lines).
CnfFormula parse_dimacs(std::string_view text);
std::string render_dimacs(const CnfFormula &f);

/// Adds a fresh variable y = variable_count and returns
/// { !y or C_i for every clause } + { y or x_j for every variable }.
/// The result has exactly one more model than the input.
CnfFormula transform_phi_prime(const CnfFormula &f);

constexpr std::uint32_t default_sat_cap = 24;

/// Number of satisfying assignments by exhaustive enumeration. Throws
/// PreconditionError when variable_count exceeds `cap`.
BigInt count_sat(const CnfFormula &f, std::uint32_t cap = default_sat_cap);

} // namespace edgecount

#endif // EDGECOUNT_PARSIMONY_HPP
