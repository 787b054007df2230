#include "edgecount/holant.hpp"

#include "edgecount/error.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_map>

namespace edgecount {

namespace {

std::size_t table_size(unsigned arity, unsigned kappa) {
  std::size_t size = 1;
  for (unsigned i = 0; i < arity; ++i) {
    if (kappa != 0 && size > (std::size_t{1} << 26) / kappa)
      throw PreconditionError("signature table too large: " +
                              std::to_string(kappa) + "^" +
                              std::to_string(arity));
    size *= kappa;
  }
  return size;
}

// Iterates all tuples in [kappa]^arity in table order.
template <typename Fn> void for_each_tuple(unsigned arity, unsigned kappa, Fn fn) {
  std::vector<Color> x(arity, 0);
  const std::size_t size = table_size(arity, kappa);
  for (std::size_t idx = 0; idx < size; ++idx) {
    fn(idx, std::span<const Color>(x));
    for (unsigned i = arity; i-- > 0;) {
      if (++x[i] < kappa)
        break;
      x[i] = 0;
    }
  }
}

} // namespace

SignatureMatrix::SignatureMatrix(unsigned kappa)
    : kappa_(kappa), entries_(std::size_t{kappa} * kappa, 0) {}

SignatureMatrix::SignatureMatrix(unsigned kappa, std::vector<BigInt> entries)
    : kappa_(kappa), entries_(std::move(entries)) {
  if (entries_.size() != std::size_t{kappa} * kappa)
    throw PreconditionError("matrix needs kappa^2 entries");
}

SignatureMatrix SignatureMatrix::identity(unsigned kappa) {
  SignatureMatrix m(kappa);
  for (Color i = 0; i < kappa; ++i)
    m.at(i, i) = 1;
  return m;
}

SignatureMatrix SignatureMatrix::all_ones(unsigned kappa) {
  SignatureMatrix m(kappa);
  std::fill(m.entries_.begin(), m.entries_.end(), 1);
  return m;
}

SignatureMatrix SignatureMatrix::domain_invariant(unsigned kappa,
                                                  const BigInt &a,
                                                  const BigInt &b) {
  SignatureMatrix m(kappa);
  for (Color i = 0; i < kappa; ++i)
    for (Color j = 0; j < kappa; ++j)
      m.at(i, j) = i == j ? a : b;
  return m;
}

bool SignatureMatrix::is_symmetric() const {
  for (Color i = 0; i < kappa_; ++i)
    for (Color j = i + 1; j < kappa_; ++j)
      if (at(i, j) != at(j, i))
        return false;
  return true;
}

SignatureMatrix operator*(const SignatureMatrix &x, const SignatureMatrix &y) {
  if (x.kappa_ != y.kappa_)
    throw PreconditionError("matrix size mismatch");
  SignatureMatrix out(x.kappa_);
  for (Color i = 0; i < x.kappa_; ++i)
    for (Color k = 0; k < x.kappa_; ++k) {
      if (x.at(i, k) == 0)
        continue;
      for (Color j = 0; j < x.kappa_; ++j)
        out.at(i, j) += x.at(i, k) * y.at(k, j);
    }
  return out;
}

SignatureMatrix operator+(const SignatureMatrix &x, const SignatureMatrix &y) {
  if (x.kappa_ != y.kappa_)
    throw PreconditionError("matrix size mismatch");
  SignatureMatrix out(x.kappa_);
  for (std::size_t i = 0; i < out.entries_.size(); ++i)
    out.entries_[i] = x.entries_[i] + y.entries_[i];
  return out;
}

SignatureMatrix operator-(const SignatureMatrix &x, const SignatureMatrix &y) {
  if (x.kappa_ != y.kappa_)
    throw PreconditionError("matrix size mismatch");
  SignatureMatrix out(x.kappa_);
  for (std::size_t i = 0; i < out.entries_.size(); ++i)
    out.entries_[i] = x.entries_[i] - y.entries_[i];
  return out;
}

SignatureMatrix operator*(const BigInt &s, const SignatureMatrix &x) {
  SignatureMatrix out(x.kappa_);
  for (std::size_t i = 0; i < out.entries_.size(); ++i)
    out.entries_[i] = s * x.entries_[i];
  return out;
}

bool operator==(const SignatureMatrix &x, const SignatureMatrix &y) {
  return x.kappa_ == y.kappa_ && x.entries_ == y.entries_;
}

SignatureMatrix matrix_power(const SignatureMatrix &m, std::uint64_t n) {
  SignatureMatrix result = SignatureMatrix::identity(m.kappa());
  SignatureMatrix base = m;
  while (n > 0) {
    if (n & 1)
      result = result * base;
    n >>= 1;
    if (n > 0)
      base = base * base;
  }
  return result;
}

Signature::Signature(unsigned arity, unsigned kappa, std::vector<BigInt> values,
                     bool symmetric)
    : arity_(arity), kappa_(kappa), symmetric_(symmetric),
      values_(std::move(values)) {
  if (values_.size() != table_size(arity, kappa))
    throw PreconditionError("signature table has " +
                            std::to_string(values_.size()) + " entries, " +
                            "expected " + std::to_string(kappa) + "^" +
                            std::to_string(arity));
  if (symmetric_ && !is_permutation_invariant())
    throw PreconditionError("signature flagged symmetric is not invariant "
                            "under input permutations");
}

Signature Signature::from_function(
    unsigned arity, unsigned kappa,
    const std::function<BigInt(std::span<const Color>)> &fn, bool symmetric) {
  std::vector<BigInt> values(table_size(arity, kappa));
  for_each_tuple(arity, kappa, [&](std::size_t idx, std::span<const Color> x) {
    values[idx] = fn(x);
  });
  return Signature(arity, kappa, std::move(values), symmetric);
}

Signature Signature::from_matrix(const SignatureMatrix &m) {
  return Signature(2, m.kappa(), m.entries(), m.is_symmetric());
}

Signature Signature::pin(unsigned kappa, Color color) {
  std::vector<BigInt> values(kappa, 0);
  values.at(color) = 1;
  return Signature(1, kappa, std::move(values));
}

std::size_t Signature::index_of(std::span<const Color> inputs) const {
  if (inputs.size() != arity_)
    throw PreconditionError("signature of arity " + std::to_string(arity_) +
                            " applied to " + std::to_string(inputs.size()) +
                            " inputs");
  std::size_t idx = 0;
  for (Color c : inputs)
    idx = idx * kappa_ + c;
  return idx;
}

const BigInt &Signature::at(std::span<const Color> inputs) const {
  return values_[index_of(inputs)];
}

bool Signature::is_permutation_invariant() const {
  if (arity_ < 2)
    return true;
  // Adjacent transpositions generate the symmetric group.
  bool ok = true;
  std::vector<Color> y(arity_);
  for_each_tuple(arity_, kappa_, [&](std::size_t idx, std::span<const Color> x) {
    if (!ok)
      return;
    for (unsigned i = 0; i + 1 < arity_ && ok; ++i) {
      std::copy(x.begin(), x.end(), y.begin());
      std::swap(y[i], y[i + 1]);
      if (values_[index_of(y)] != values_[idx])
        ok = false;
    }
  });
  return ok;
}

bool Signature::is_identically_zero() const {
  return std::all_of(values_.begin(), values_.end(),
                     [](const BigInt &v) { return v == 0; });
}

SignatureMatrix Signature::matrix() const {
  if (arity_ != 2)
    throw PreconditionError("only binary signatures have a matrix form");
  return SignatureMatrix(kappa_, values_);
}

bool operator==(const Signature &x, const Signature &y) {
  return x.arity_ == y.arity_ && x.kappa_ == y.kappa_ && x.values_ == y.values_;
}

Signature ad_signature(unsigned r, unsigned kappa) {
  return Signature::from_function(
      r, kappa,
      [](std::span<const Color> x) -> BigInt {
        for (std::size_t i = 0; i < x.size(); ++i)
          for (std::size_t j = i + 1; j < x.size(); ++j)
            if (x[i] == x[j])
              return 0;
        return 1;
      },
      true);
}

Signature equality_signature(unsigned r, unsigned kappa) {
  return Signature::from_function(
      r, kappa,
      [](std::span<const Color> x) -> BigInt {
        return std::adjacent_find(x.begin(), x.end(), std::not_equal_to<>()) ==
                       x.end()
                   ? 1
                   : 0;
      },
      true);
}

Signature contract_unary(const Signature &sig, unsigned position,
                         const Signature &unary) {
  if (unary.arity() != 1 || unary.kappa() != sig.kappa())
    throw PreconditionError("contract_unary needs a unary on the same domain");
  if (position >= sig.arity())
    throw PreconditionError("contraction position out of range");
  const unsigned kappa = sig.kappa();
  std::vector<Color> full(sig.arity());
  return Signature::from_function(
      sig.arity() - 1, kappa, [&](std::span<const Color> x) -> BigInt {
        std::copy(x.begin(), x.begin() + position, full.begin());
        std::copy(x.begin() + position, x.end(), full.begin() + position + 1);
        BigInt sum = 0;
        for (Color c = 0; c < kappa; ++c) {
          full[position] = c;
          const Color cc = c;
          sum += sig.at(full) * unary.at(std::span<const Color>(&cc, 1));
        }
        return sum;
      });
}

SignatureGrid::SignatureGrid(MultiGraph graph, std::vector<Signature> signatures)
    : graph_(std::move(graph)), signatures_(std::move(signatures)) {
  ports_.resize(graph_.vertex_count());
  for (Vertex v = 0; v < graph_.vertex_count(); ++v)
    ports_[v] = graph_.incident(v);
  validate();
}

SignatureGrid::SignatureGrid(MultiGraph graph, std::vector<Signature> signatures,
                             std::vector<std::vector<EdgeIndex>> ports)
    : graph_(std::move(graph)), signatures_(std::move(signatures)),
      ports_(std::move(ports)) {
  validate();
}

void SignatureGrid::validate() {
  const std::size_t n = graph_.vertex_count();
  if (signatures_.size() != n || ports_.size() != n)
    throw PreconditionError("grid needs one signature and one port list per "
                            "vertex");
  kappa_ = n == 0 ? 0 : signatures_[0].kappa();
  for (Vertex v = 0; v < n; ++v) {
    if (signatures_[v].kappa() != kappa_)
      throw PreconditionError("signatures disagree on the domain size");
    if (signatures_[v].arity() != graph_.degree(v))
      throw PreconditionError("vertex " + std::to_string(v) + " has degree " +
                              std::to_string(graph_.degree(v)) +
                              " but its signature has arity " +
                              std::to_string(signatures_[v].arity()));
    auto sorted = ports_[v];
    std::sort(sorted.begin(), sorted.end());
    if (sorted != graph_.incident(v))
      throw PreconditionError("ports of vertex " + std::to_string(v) +
                              " are not its incident edges");
  }
}

SignatureGrid ad_grid(const MultiGraph &g, unsigned kappa) {
  std::vector<Signature> sigs;
  sigs.reserve(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    sigs.push_back(ad_signature(static_cast<unsigned>(g.degree(v)), kappa));
  return SignatureGrid(g, std::move(sigs));
}

namespace {

class GridEvaluator {
public:
  explicit GridEvaluator(const SignatureGrid &grid)
      : grid_(grid), g_(grid.graph()), kappa_(grid.kappa()) {
    plan_order();
    plan_vertices();
    plan_frontiers();
  }

  BigInt run() {
    BigInt scalar = 1;
    for (Vertex v = 0; v < g_.vertex_count(); ++v)
      if (g_.degree(v) == 0)
        scalar *= grid_.signatures()[v].values()[0];
    if (scalar == 0 || g_.edge_count() == 0)
      return scalar;
    if (kappa_ == 0)
      return 0;
    color_.assign(g_.edge_count(), 0);
    memo_.assign(g_.edge_count(), {});
    return scalar * search(0);
  }

private:
  // Greedy vertex order: next is the vertex with the most already-ordered
  // incident edges (ties: fewest new edges, then smallest index). Each
  // vertex contributes its not-yet-ordered edges.
  void plan_order() {
    const std::size_t n = g_.vertex_count();
    std::vector<bool> ordered(g_.edge_count(), false), done(n, false);
    for (std::size_t step = 0; step < n; ++step) {
      Vertex best = 0;
      long best_key0 = -1, best_key1 = 0;
      bool any = false;
      for (Vertex v = 0; v < n; ++v) {
        if (done[v])
          continue;
        long seen = 0, fresh = 0;
        for (EdgeIndex e : g_.incident(v))
          (ordered[e] ? seen : fresh) += 1;
        if (!any || seen > best_key0 || (seen == best_key0 && fresh < best_key1)) {
          any = true;
          best = v;
          best_key0 = seen;
          best_key1 = fresh;
        }
      }
      done[best] = true;
      for (EdgeIndex e : g_.incident(best))
        if (!ordered[e]) {
          ordered[e] = true;
          order_.push_back(e);
        }
    }
    position_.assign(g_.edge_count(), 0);
    for (std::size_t k = 0; k < order_.size(); ++k)
      position_[order_[k]] = k;
  }

  // For each vertex: the order its ports get assigned, and for every prefix
  // length the set of prefixes that extend to a nonzero value.
  void plan_vertices() {
    const std::size_t n = g_.vertex_count();
    vertices_.resize(n);
    for (Vertex v = 0; v < n; ++v) {
      VertexPlan &plan = vertices_[v];
      const auto &ports = grid_.ports()[v];
      const unsigned d = static_cast<unsigned>(ports.size());
      plan.port_by_rank.resize(d);
      std::iota(plan.port_by_rank.begin(), plan.port_by_rank.end(), 0u);
      std::sort(plan.port_by_rank.begin(), plan.port_by_rank.end(),
                [&](unsigned x, unsigned y) {
                  return position_[ports[x]] < position_[ports[y]];
                });
      plan.last_edge = d ? ports[plan.port_by_rank.back()] : 0;
      plan.feasible.resize(d + 1);
      for (unsigned t = 0; t <= d; ++t)
        plan.feasible[t].assign(table_size(t, kappa_), false);
      const Signature &sig = grid_.signatures()[v];
      for_each_tuple(d, kappa_, [&](std::size_t idx, std::span<const Color> x) {
        if (sig.values()[idx] == 0)
          return;
        std::size_t code = 0;
        plan.feasible[0][0] = true;
        for (unsigned t = 0; t < d; ++t) {
          code = code * kappa_ + x[plan.port_by_rank[t]];
          plan.feasible[t + 1][code] = true;
        }
      });
      for (unsigned i = 0; i < d; ++i)
        plan.rank_of_edge.emplace_back(ports[plan.port_by_rank[i]], i);
    }
  }

  void plan_frontiers() {
    const std::size_t m = order_.size();
    frontier_.resize(m);
    for (std::size_t k = 0; k < m; ++k) {
      for (std::size_t j = 0; j < k; ++j) {
        const Edge &ed = g_.edge(order_[j]);
        bool open = position_[vertices_[ed.u].last_edge] >= k ||
                    position_[vertices_[ed.v].last_edge] >= k;
        if (open)
          frontier_[k].push_back(order_[j]);
      }
    }
  }

  // Prefix code of vertex v's assigned inputs, in assignment order.
  std::size_t prefix_code(Vertex v, std::size_t upto) const {
    std::size_t code = 0;
    for (const auto &[edge, rank] : vertices_[v].rank_of_edge) {
      (void)rank;
      if (position_[edge] <= upto)
        code = code * kappa_ + color_[edge];
    }
    return code;
  }

  std::size_t assigned_count(Vertex v, std::size_t upto) const {
    std::size_t count = 0;
    for (const auto &entry : vertices_[v].rank_of_edge)
      if (position_[entry.first] <= upto)
        ++count;
    return count;
  }

  BigInt vertex_value(Vertex v) const {
    const auto &ports = grid_.ports()[v];
    std::vector<Color> inputs(ports.size());
    for (std::size_t i = 0; i < ports.size(); ++i)
      inputs[i] = color_[ports[i]];
    return grid_.signatures()[v].at(inputs);
  }

  BigInt search(std::size_t k) {
    if (k == order_.size())
      return 1;
    std::string key;
    key.reserve(frontier_[k].size());
    for (EdgeIndex e : frontier_[k])
      key.push_back(static_cast<char>(color_[e]));
    auto hit = memo_[k].find(key);
    if (hit != memo_[k].end())
      return hit->second;

    const EdgeIndex e = order_[k];
    const Edge &ed = g_.edge(e);
    BigInt total = 0;
    for (Color c = 0; c < kappa_; ++c) {
      color_[e] = c;
      BigInt factor = 1;
      bool alive = true;
      for (Vertex w : {ed.u, ed.v}) {
        if (vertices_[w].last_edge == e) {
          factor *= vertex_value(w);
          if (factor == 0) {
            alive = false;
            break;
          }
        } else {
          std::size_t t = assigned_count(w, k);
          if (!vertices_[w].feasible[t][prefix_code(w, k)]) {
            alive = false;
            break;
          }
        }
      }
      if (!alive)
        continue;
      BigInt sub = search(k + 1);
      if (sub != 0)
        total += factor * sub;
    }
    color_[e] = 0;
    memo_[k].emplace(std::move(key), total);
    return total;
  }

  struct VertexPlan {
    std::vector<unsigned> port_by_rank;
    // (edge, rank) sorted by rank, i.e. by assignment position.
    std::vector<std::pair<EdgeIndex, unsigned>> rank_of_edge;
    EdgeIndex last_edge = 0;
    std::vector<std::vector<bool>> feasible;
  };

  const SignatureGrid &grid_;
  const MultiGraph &g_;
  unsigned kappa_;
  std::vector<EdgeIndex> order_;
  std::vector<std::size_t> position_;
  std::vector<VertexPlan> vertices_;
  std::vector<std::vector<EdgeIndex>> frontier_;
  std::vector<Color> color_;
  std::vector<std::unordered_map<std::string, BigInt>> memo_;
};

} // namespace

BigInt eval_grid(const SignatureGrid &grid) {
  if (grid.kappa() > 255)
    throw PreconditionError("eval_grid supports domains of size <= 255");
  GridEvaluator evaluator(grid);
  return evaluator.run();
}

Signature gate_signature(const GadgetGraph &g,
                         const std::vector<Signature> &vertex_signatures,
                         unsigned kappa) {
  const MultiGraph &base = g.base();
  const std::size_t n = base.vertex_count();
  if (vertex_signatures.size() != n)
    throw PreconditionError("gate_signature needs one signature per vertex");
  for (Vertex v = 0; v < n; ++v)
    if (vertex_signatures[v].arity() != g.degree(v) ||
        vertex_signatures[v].kappa() != kappa)
      throw PreconditionError(
          "signature at vertex " + std::to_string(v) + " has arity " +
          std::to_string(vertex_signatures[v].arity()) + " but the vertex has "
          "degree " + std::to_string(g.degree(v)) + " (dangling included)");

  // Each dangling edge becomes an edge to a pin vertex; pin edges get the
  // highest indices, so default ports put them after the internal edges.
  const unsigned arity = static_cast<unsigned>(g.arity());
  std::vector<Edge> edges = base.edges();
  for (unsigned i = 0; i < arity; ++i)
    edges.push_back({g.dangling()[i], static_cast<Vertex>(n + i)});
  MultiGraph closed(n + arity, std::move(edges));

  std::vector<Signature> sigs = vertex_signatures;
  sigs.resize(n + arity);
  return Signature::from_function(arity, kappa, [&](std::span<const Color> y) {
    for (unsigned i = 0; i < arity; ++i)
      sigs[n + i] = Signature::pin(kappa, y[i]);
    return eval_grid(SignatureGrid(closed, sigs));
  });
}

Signature ad_gate_signature(const GadgetGraph &g, unsigned kappa) {
  std::vector<Signature> sigs;
  for (Vertex v = 0; v < g.base().vertex_count(); ++v)
    sigs.push_back(ad_signature(static_cast<unsigned>(g.degree(v)), kappa));
  return gate_signature(g, sigs, kappa);
}

std::optional<DomainInvariantForm>
decompose_domain_invariant(const SignatureMatrix &m) {
  const unsigned kappa = m.kappa();
  if (kappa == 0)
    return std::nullopt;
  DomainInvariantForm out{m.at(0, 0), kappa > 1 ? m.at(0, 1) : BigInt(0)};
  for (Color i = 0; i < kappa; ++i)
    for (Color j = 0; j < kappa; ++j)
      if (m.at(i, j) != (i == j ? out.a : out.b))
        return std::nullopt;
  return out;
}

std::optional<DomainInvariantForm>
decompose_domain_invariant(const Signature &sig) {
  return decompose_domain_invariant(sig.matrix());
}

EigenvaluesAB eigenvalues_ab(const BigInt &a, const BigInt &b, unsigned kappa) {
  if (kappa == 0)
    throw PreconditionError("eigenvalues_ab needs kappa >= 1");
  return {a + BigInt(kappa - 1) * b, a - b};
}

SignatureGrid place_binary_on_edges(const SignatureGrid &grid,
                                    const EdgeSelector &sel,
                                    const Signature &sig) {
  if (sig.arity() != 2)
    throw PreconditionError("only binary signatures can be placed on edges");
  if (!sig.matrix().is_symmetric())
    throw PreconditionError("cannot place a non-symmetric binary signature "
                            "on an undirected edge");
  if (sig.kappa() != grid.kappa() && grid.graph().vertex_count() > 0)
    throw PreconditionError("signature domain differs from the grid's");

  const MultiGraph &g = grid.graph();
  const auto selected = sel.resolve(g);
  std::vector<Edge> edges = g.edges();
  auto ports = grid.ports();
  auto sigs = grid.signatures();
  std::size_t next = g.vertex_count();

  // Edge e = (u, v) becomes (u, w) in place plus a new edge (w, v).
  for (EdgeIndex e : selected) {
    const Vertex u = g.edge(e).u, v = g.edge(e).v;
    const auto w = static_cast<Vertex>(next++);
    const EdgeIndex tail = edges.size();
    edges[e] = {u, w};
    edges.push_back({w, v});
    for (EdgeIndex &p : ports[v])
      if (p == e) {
        p = tail;
        break;
      }
    ports.push_back({e, tail});
    sigs.push_back(sig);
  }
  return SignatureGrid(MultiGraph(next, std::move(edges)), std::move(sigs),
                       std::move(ports));
}

} // namespace edgecount
