#ifndef EDGECOUNT_COLORCOUNT_HPP
#define EDGECOUNT_COLORCOUNT_HPP

#include "edgecount/bigint.hpp"
#include "edgecount/graph.hpp"

#include <span>
#include <vector>

namespace edgecount {

using Color = unsigned;

/// P_m for m = 0..kappa: the number of partitions of the edge set into
/// exactly m nonempty pairwise disjoint matchings.
struct PartitionSpectrum {
  std::vector<BigInt> counts;

  BigInt total() const;
};

/// Number of maps edges -> [kappa] that give incident edges distinct colors.
///
/// Backtracking with a dynamic most-constrained-edge order (ties broken by
/// the smaller edge index) and forward checking. Colors that have not been
/// used yet are interchangeable, so a single representative is explored and
/// its subtree weighted by the number of unused colors.
BigInt count_assignments(const MultiGraph &g, unsigned kappa);

/// Proper colorings of the internal edges of `g` with the dangling edges
/// fixed to `boundary` (one color per dangling edge, in dangling order).
BigInt count_extensions(const GadgetGraph &g, unsigned kappa,
                        std::span<const Color> boundary);

/// Same count as count_extensions, by dynamic programming over the edges.
/// The state records, for each vertex that is partly processed, the set of
/// colors already used there; states that differ only by a permutation of
/// the colors absent from the boundary are merged. Cost grows with the
/// number of partly processed vertices rather than with the count, so this
/// handles gadgets whose extension counts are far too large to enumerate.
BigInt count_extensions_frontier(const GadgetGraph &g, unsigned kappa,
                                 std::span<const Color> boundary);

/// All perfect matchings of `g`, each as ascending edge indices. Parallel
/// edges yield distinct matchings.
std::vector<std::vector<EdgeIndex>> perfect_matchings(const MultiGraph &g);

/// Counts ordered kappa-tuples of pairwise disjoint perfect matchings that
/// cover E. When g is r-regular with kappa = r every color class of a proper
/// coloring is a perfect matching, so this equals count_assignments.
/// Throws PreconditionError otherwise.
BigInt count_by_matching_decomposition(const MultiGraph &g, unsigned kappa,
                                       unsigned r);

/// Recovers P_0..P_kappa from A(j) = count_assignments(g, j), j = 0..kappa,
/// using A(j) = sum_m P_m * j(j-1)...(j-m+1).
PartitionSpectrum partition_spectrum(const MultiGraph &g, unsigned kappa);

/// Whether `g` has exactly one partition into at most kappa matchings.
/// For kappa >= 4 this holds iff g minus isolated vertices is empty, C_3 or
/// a star K_{1,j} with j <= kappa (linear time). Non-simple graphs whose
/// edges do not pairwise intersect are decided by partition_spectrum. Throws PreconditionError for kappa < 4;
/// use partition_spectrum there.
bool is_uniquely_partition_colorable(const MultiGraph &g, unsigned kappa);

} // namespace edgecount

#endif // EDGECOUNT_COLORCOUNT_HPP
