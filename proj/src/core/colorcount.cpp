#include "edgecount/colorcount.hpp"

#include "edgecount/error.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <unordered_map>

namespace edgecount {

BigInt PartitionSpectrum::total() const {
  BigInt sum = 0;
  for (const BigInt &p : counts)
    sum += p;
  return sum;
}

namespace {

using Mask = std::uint64_t;
constexpr unsigned max_labels = 64;

// Colors are tracked as labels in order of first use; the actual color
// values only matter for the fixed boundary, which is labelled up front.
class ColoringSearch {
public:
  ColoringSearch(const MultiGraph &g, unsigned kappa)
      : g_(g), kappa_(kappa), blocked_(g.vertex_count(), 0),
        colored_(g.edge_count(), false) {}

  // Returns false when the boundary is already contradictory.
  bool fix_boundary(const std::vector<Vertex> &attach,
                    std::span<const Color> colors) {
    std::map<Color, unsigned> label_of;
    for (std::size_t i = 0; i < attach.size(); ++i) {
      auto [it, inserted] =
          label_of.emplace(colors[i], static_cast<unsigned>(label_of.size()));
      Mask bit = Mask{1} << it->second;
      if (blocked_[attach[i]] & bit)
        return false;
      blocked_[attach[i]] |= bit;
    }
    labels_ = static_cast<unsigned>(label_of.size());
    return true;
  }

  BigInt run() { return search(g_.edge_count()); }

private:
  Mask used_mask() const {
    return labels_ == max_labels ? ~Mask{0} : (Mask{1} << labels_) - 1;
  }

  BigInt search(std::size_t remaining) {
    if (remaining == 0)
      return 1;
    const Mask used = used_mask();
    const unsigned fresh = kappa_ - labels_;

    EdgeIndex best = 0;
    unsigned best_options = UINT32_MAX;
    for (EdgeIndex e = 0; e < colored_.size(); ++e) {
      if (colored_[e])
        continue;
      const Edge &ed = g_.edge(e);
      Mask free = used & ~(blocked_[ed.u] | blocked_[ed.v]);
      unsigned options = static_cast<unsigned>(std::popcount(free)) + (fresh > 0 ? 1u : 0u);
      if (options == 0)
        return 0;
      // Real number of colors available decides the order; the fresh
      // representative stands for `fresh` colors.
      unsigned real = static_cast<unsigned>(std::popcount(free)) + fresh;
      if (real < best_options) {
        best_options = real;
        best = e;
      }
    }

    const Edge &ed = g_.edge(best);
    BigInt total = 0;
    colored_[best] = true;
    Mask free = used & ~(blocked_[ed.u] | blocked_[ed.v]);
    while (free) {
      Mask bit = free & (~free + 1);
      free ^= bit;
      blocked_[ed.u] |= bit;
      blocked_[ed.v] |= bit;
      total += search(remaining - 1);
      blocked_[ed.u] &= ~bit;
      blocked_[ed.v] &= ~bit;
    }
    if (fresh > 0) {
      if (labels_ == max_labels)
        throw PreconditionError("more than 64 distinct colors in use");
      Mask bit = Mask{1} << labels_;
      ++labels_;
      blocked_[ed.u] |= bit;
      blocked_[ed.v] |= bit;
      BigInt sub = search(remaining - 1);
      if (sub != 0)
        total += sub * static_cast<unsigned long>(fresh);
      blocked_[ed.u] &= ~bit;
      blocked_[ed.v] &= ~bit;
      --labels_;
    }
    colored_[best] = false;
    return total;
  }

  const MultiGraph &g_;
  unsigned kappa_;
  unsigned labels_ = 0;
  std::vector<Mask> blocked_;
  std::vector<bool> colored_;
};

} // namespace

BigInt count_assignments(const MultiGraph &g, unsigned kappa) {
  ColoringSearch search(g, kappa);
  return search.run();
}

namespace {

void check_boundary(const GadgetGraph &g, unsigned kappa,
                    std::span<const Color> boundary) {
  if (boundary.size() != g.arity())
    throw PreconditionError("boundary has " + std::to_string(boundary.size()) +
                            " colors but the gadget has " +
                            std::to_string(g.arity()) + " dangling edges");
  for (Color c : boundary)
    if (c >= kappa)
      throw PreconditionError("boundary color " + std::to_string(c) +
                              " outside [0, " + std::to_string(kappa) + ")");
}

// Edges in an order that keeps few vertices half finished. Greedy: prefer
// edges whose endpoints are already open, then edges that close a vertex;
// remaining ties go to the vertex reached first breadth first from the
// dangling vertices.
std::vector<EdgeIndex> frontier_order(const GadgetGraph &g) {
  const MultiGraph &base = g.base();
  const std::size_t n = base.vertex_count();
  std::vector<std::size_t> rank(n, n);
  std::vector<Vertex> queue;
  std::size_t next = 0;
  auto visit_from = [&](Vertex s) {
    if (rank[s] != n)
      return;
    rank[s] = next++;
    queue.push_back(s);
    for (std::size_t head = queue.size() - 1; head < queue.size(); ++head)
      for (EdgeIndex e : base.incident(queue[head])) {
        const Vertex w = base.other(e, queue[head]);
        if (rank[w] == n) {
          rank[w] = next++;
          queue.push_back(w);
        }
      }
  };
  for (Vertex d : g.dangling())
    visit_from(d);
  for (Vertex v = 0; v < n; ++v)
    visit_from(v);

  std::vector<bool> open(n, false), done(base.edge_count(), false);
  for (Vertex d : g.dangling())
    open[d] = true;
  std::vector<std::size_t> left(n, 0);
  for (const Edge &e : base.edges()) {
    ++left[e.u];
    ++left[e.v];
  }
  std::vector<EdgeIndex> order;
  while (order.size() < base.edge_count()) {
    EdgeIndex best = 0;
    std::tuple<int, int, std::size_t, std::size_t, EdgeIndex> best_key{};
    bool found = false;
    for (EdgeIndex e = 0; e < base.edge_count(); ++e) {
      if (done[e])
        continue;
      const Edge &ed = base.edge(e);
      const int opened = int(open[ed.u]) + int(open[ed.v]);
      const int closes = int(left[ed.u] == 1) + int(left[ed.v] == 1);
      const auto [lo, hi] = std::minmax(rank[ed.u], rank[ed.v]);
      // Larger is better for the first two, smaller for the rest.
      const auto key = std::tuple(-opened, -closes, hi, lo, e);
      if (!found || key < best_key) {
        best_key = key;
        best = e;
        found = true;
      }
    }
    done[best] = true;
    order.push_back(best);
    for (Vertex w : {base.edge(best).u, base.edge(best).v}) {
      open[w] = true;
      --left[w];
    }
  }
  return order;
}

} // namespace

BigInt count_extensions_frontier(const GadgetGraph &g, unsigned kappa,
                                 std::span<const Color> boundary) {
  check_boundary(g, kappa, boundary);
  if (kappa > max_labels)
    throw PreconditionError("count_extensions_frontier supports kappa <= 64");
  const MultiGraph &base = g.base();
  const std::size_t n = base.vertex_count();

  // Colors on the boundary keep their identity; the rest are interchangeable
  // and are listed after them, sorted, in every stored state.
  std::vector<Color> fixed;
  for (Color c : boundary)
    if (std::find(fixed.begin(), fixed.end(), c) == fixed.end())
      fixed.push_back(c);
  std::sort(fixed.begin(), fixed.end());
  const std::size_t nfixed = fixed.size();

  std::vector<std::size_t> remaining(n, 0);
  for (const Edge &e : base.edges()) {
    if (e.u == e.v)
      return 0;
    ++remaining[e.u];
    ++remaining[e.v];
  }

  // A state holds one column per color (fixed colors first); bit s of a
  // column is set when the vertex in slot s already has that color.
  using State = std::vector<Mask>;
  std::vector<Vertex> slots;
  std::vector<Mask> start_used(n, 0);
  for (std::size_t i = 0; i < g.arity(); ++i) {
    const Vertex v = g.dangling()[i];
    const Mask bit = Mask{1} << boundary[i];
    if (start_used[v] & bit)
      return 0;
    start_used[v] |= bit;
    if (remaining[v] > 0 && std::find(slots.begin(), slots.end(), v) == slots.end())
      slots.push_back(v);
  }
  State start(kappa, 0);
  for (std::size_t s = 0; s < slots.size(); ++s)
    for (std::size_t i = 0; i < nfixed; ++i)
      if (start_used[slots[s]] >> fixed[i] & 1)
        start[i] |= Mask{1} << s;

  struct StateHash {
    std::size_t operator()(const State &st) const {
      std::size_t h = st.size();
      for (Mask m : st)
        h = (h ^ std::hash<Mask>{}(m)) * 0x100000001b3ull;
      return h;
    }
  };
  using Layer = std::unordered_map<State, BigInt, StateHash>;
  Layer layer{{start, 1}};
  State out(kappa);

  for (EdgeIndex e : frontier_order(g)) {
    const Vertex u = base.edge(e).u, v = base.edge(e).v;
    for (Vertex w : {u, v})
      if (std::find(slots.begin(), slots.end(), w) == slots.end()) {
        if (slots.size() >= max_labels)
          throw PreconditionError("count_extensions_frontier: more than 64 open vertices");
        slots.push_back(w);
      }
    const std::size_t su = std::find(slots.begin(), slots.end(), u) - slots.begin();
    const std::size_t sv = std::find(slots.begin(), slots.end(), v) - slots.begin();
    const Mask hit = (Mask{1} << su) | (Mask{1} << sv);
    --remaining[u];
    --remaining[v];

    // Slots that stay open keep their relative order.
    std::vector<Vertex> kept;
    std::vector<std::size_t> from;
    for (std::size_t s = 0; s < slots.size(); ++s)
      if (remaining[slots[s]] > 0) {
        kept.push_back(slots[s]);
        from.push_back(s);
      }
    auto compact = [&](Mask col) {
      Mask out = 0;
      for (std::size_t t = 0; t < from.size(); ++t)
        out |= (col >> from[t] & 1) << t;
      return out;
    };

    Layer next;
    next.reserve(layer.size() * 2);
    for (const auto &[st, weight] : layer) {
      for (std::size_t c = 0; c < kappa; ++c) {
        if (st[c] & hit)
          continue;
        // Free colors with equal columns lead to equivalent states.
        std::size_t copies = 1;
        if (c >= nfixed) {
          if (c > nfixed && st[c - 1] == st[c])
            continue;
          while (c + copies < kappa && st[c + copies] == st[c])
            ++copies;
        }
        for (std::size_t i = 0; i < kappa; ++i)
          out[i] = compact(i == c ? st[i] | hit : st[i]);
        std::sort(out.begin() + nfixed, out.end());
        BigInt &slot = next[out];
        if (copies == 1)
          slot += weight;
        else
          slot += weight * static_cast<unsigned long>(copies);
      }
    }
    layer = std::move(next);
    slots = std::move(kept);
    if (layer.empty())
      return 0;
  }
  BigInt total = 0;
  for (const auto &entry : layer)
    total += entry.second;
  return total;
}

BigInt count_extensions(const GadgetGraph &g, unsigned kappa,
                        std::span<const Color> boundary) {
  check_boundary(g, kappa, boundary);
  ColoringSearch search(g.base(), kappa);
  if (!search.fix_boundary(g.dangling(), boundary))
    return 0;
  return search.run();
}

std::vector<std::vector<EdgeIndex>> perfect_matchings(const MultiGraph &g) {
  std::vector<std::vector<EdgeIndex>> out;
  if (g.vertex_count() % 2 != 0)
    return out;
  std::vector<bool> matched(g.vertex_count(), false);
  std::vector<EdgeIndex> current;

  auto extend = [&](auto &self, Vertex from) -> void {
    while (from < g.vertex_count() && matched[from])
      ++from;
    if (from == g.vertex_count()) {
      out.push_back(current);
      std::sort(out.back().begin(), out.back().end());
      return;
    }
    matched[from] = true;
    for (EdgeIndex e : g.incident(from)) {
      Vertex w = g.other(e, from);
      if (matched[w])
        continue;
      matched[w] = true;
      current.push_back(e);
      self(self, from + 1);
      current.pop_back();
      matched[w] = false;
    }
    matched[from] = false;
  };
  extend(extend, 0);
  return out;
}

BigInt count_by_matching_decomposition(const MultiGraph &g, unsigned kappa,
                                       unsigned r) {
  if (kappa != r)
    throw PreconditionError("matching decomposition needs kappa = r (got "
                            "kappa " + std::to_string(kappa) + ", r " +
                            std::to_string(r) + ")");
  if (!is_regular(g, r))
    throw PreconditionError("matching decomposition needs an r-regular graph "
                            "(r = " + std::to_string(r) + ")");
  if (g.edge_count() == 0)
    return 1;

  const auto matchings = perfect_matchings(g);
  std::vector<std::vector<std::size_t>> containing(g.edge_count());
  for (std::size_t m = 0; m < matchings.size(); ++m)
    for (EdgeIndex e : matchings[m])
      containing[e].push_back(m);

  std::vector<bool> covered(g.edge_count(), false);
  // Unordered partitions of E into kappa perfect matchings: always branch on
  // the lowest uncovered edge so each partition is reached once.
  auto cover = [&](auto &self, unsigned depth) -> BigInt {
    auto first = std::find(covered.begin(), covered.end(), false);
    if (first == covered.end())
      return depth == kappa ? 1 : 0;
    if (depth == kappa)
      return 0;
    const auto e = static_cast<EdgeIndex>(first - covered.begin());
    BigInt total = 0;
    for (std::size_t m : containing[e]) {
      const auto &pm = matchings[m];
      if (std::any_of(pm.begin(), pm.end(),
                      [&](EdgeIndex x) { return covered[x]; }))
        continue;
      for (EdgeIndex x : pm)
        covered[x] = true;
      total += self(self, depth + 1);
      for (EdgeIndex x : pm)
        covered[x] = false;
    }
    return total;
  };
  // Nonempty matchings are pairwise distinct, so each partition has
  // kappa! orderings.
  return cover(cover, 0) * factorial(kappa);
}

PartitionSpectrum partition_spectrum(const MultiGraph &g, unsigned kappa) {
  PartitionSpectrum spectrum;
  spectrum.counts.resize(kappa + 1);
  for (unsigned j = 0; j <= kappa; ++j) {
    BigInt residual = count_assignments(g, j);
    for (unsigned m = 0; m < j; ++m)
      residual -= spectrum.counts[m] * falling_factorial(j, m);
    BigInt q, rem;
    BigInt jf = factorial(j);
    mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), residual.get_mpz_t(),
                jf.get_mpz_t());
    if (rem != 0 || q < 0)
      throw InvariantViolation("partition inversion produced a non-integral "
                               "or negative count at m = " + std::to_string(j));
    spectrum.counts[j] = q;
  }
  return spectrum;
}

bool is_uniquely_partition_colorable(const MultiGraph &g, unsigned kappa) {
  if (kappa < 4)
    throw PreconditionError("the uniqueness classifier needs kappa >= 4; "
                            "use partition_spectrum for kappa < 4");
  // When the edges pairwise intersect every block is a single edge, so the
  // singleton partition is the only candidate and fits iff m <= kappa. For
  // simple graphs that means a star or C_3, and by Thomason's theorem no
  // other simple graph qualifies. Multigraphs can be forced into a unique
  // partition by a vertex of degree kappa, so they fall back to the spectrum.
  const std::size_t m = g.edge_count();
  if (m == 0)
    return true;
  std::size_t active = 0;
  bool common_vertex = false;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    common_vertex |= g.degree(v) == m;
    active += g.degree(v) > 0;
  }
  if (common_vertex || active == 3)
    return m <= kappa;
  if (is_simple(g))
    return false;
  return partition_spectrum(g, kappa).total() == 1;
}

} // namespace edgecount
