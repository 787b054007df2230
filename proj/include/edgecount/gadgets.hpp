#ifndef EDGECOUNT_GADGETS_HPP
#define EDGECOUNT_GADGETS_HPP

#include "edgecount/bigint.hpp"
#include "edgecount/colorcount.hpp"
#include "edgecount/graph.hpp"
#include "edgecount/holant.hpp"

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace edgecount {

/// A named binary gadget with the kappa and regularity it is built for.
/// `planar_claimed` is metadata only; nothing here tests planarity.
struct GadgetSpec {
  std::string name;
  unsigned kappa = 0;
  unsigned r = 0;
  bool planar_claimed = false;
  GadgetGraph gadget;
};

struct KeyPropertyReport {
  bool holds = false; // matrix == c * I with c > 0
  BigInt c = 0;
  SignatureMatrix matrix;
  bool domain_invariant = false;
  BigInt a = 0;
  BigInt b = 0;
};

/// K_4 minus one edge, dangling edges at the two degree-2 vertices.
GadgetSpec build_h3();
/// Octahedron minus one edge, dangling edges at its endpoints.
GadgetSpec build_h4();
/// Icosahedron minus one outer edge (u, v), dangling edges at u and v.
GadgetSpec build_h5_icosahedron();
/// The closed icosahedron that build_h5_icosahedron breaks; the removed edge
/// is edge 0.
MultiGraph icosahedron();

struct NamedMatching {
  std::string label; // "M1", "M'1", ..., "M" for the diameter matching
  std::vector<Edge> edges;
};

/// The kappa edge-disjoint perfect matchings on Z_n: orbits M_l, M'_l of
/// {(i, i+l)} and {(i+l, i+2l)} (0 <= i < l) under (2l)Z_n for
/// 1 <= l <= kappa/2, plus the diameter matching when kappa is odd.
/// Requires kappa >= 3, n even, 2l | n for every l, and n/2 >= kappa.
/// Every matching is validated; overlaps raise InvariantViolation naming the
/// colliding pair.
std::vector<NamedMatching> build_matchings(unsigned kappa, std::uint64_t n);

/// Union of build_matchings(kappa, n) minus the edge (0, 1), with dangling
/// edges at 0 and 1. `n` defaults to kappa!.
GadgetSpec build_h_star(unsigned kappa, std::optional<std::uint64_t> n = {});

struct NonplanarGadget {
  GadgetSpec spec;
  /// Witness r-coloring: one color per internal edge, plus the dangling
  /// edge colors (both 0).
  std::vector<Color> witness;
  std::array<Color, 2> dangling_colors{0, 0};
};

/// U = {u_1..u_r}, V = {v_1..v_r}: hub edges (u_r, u_i), (v_r, v_i), the
/// complete bipartite block between u_1..u_{r-1} and v_1..v_{r-1}, and
/// dangling edges at u_r and v_r. Requires kappa > r >= 3.
NonplanarGadget build_f_nonplanar(unsigned kappa, unsigned r);

/// True iff the colors are in [kappa] and no two edges (dangling included)
/// meeting at a vertex share a color.
bool is_proper_coloring(const GadgetGraph &g, std::span<const Color> internal,
                        std::span<const Color> dangling, unsigned kappa);

/// Computes the binary signature of the gadget at `kappa` (AD at every
/// vertex) with gate_signature and checks the key property.
KeyPropertyReport verify_key_property(const GadgetSpec &spec, unsigned kappa);

/// Shortest path between the two dangling attachments, lexicographically
/// smallest among shortest ones, as (vertices, edges).
std::pair<std::vector<Vertex>, std::vector<EdgeIndex>>
dangling_path(const GadgetGraph &g);

/// Replaces every internal edge off dangling_path(f) by a copy of f. When f
/// has matrix b J at kappa (a = b, b != 0), the result behaves like a path
/// of s disequalities and so has diagonal != off-diagonal.
GadgetSpec derive_distinct_diagonal(const GadgetSpec &f, unsigned kappa);

/// n copies of f in series; the signature matrix is matrix(f)^n. Requires
/// a symmetric signature matrix at `kappa` (default f.kappa).
GadgetSpec chain_gadget(const GadgetSpec &f, unsigned n,
                        std::optional<unsigned> kappa = {});

/// Resolves h3, h4, h5, hstar:<kappa>[:<n>] and fnp:<kappa>:<r>. Throws
/// ParseError for anything else.
GadgetSpec gadget_by_name(std::string_view name);

} // namespace edgecount

#endif // EDGECOUNT_GADGETS_HPP
