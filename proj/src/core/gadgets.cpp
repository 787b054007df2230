#include "edgecount/gadgets.hpp"

#include "edgecount/error.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <limits>
#include <map>
#include <set>

namespace edgecount {

GadgetSpec build_h3() {
  MultiGraph base(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  return {"h3", 3, 3, true, GadgetGraph(std::move(base), {0, 1})};
}

GadgetSpec build_h4() {
  // Path 0-1-2-3 with both apexes 4 and 5 joined to all four path vertices.
  MultiGraph base(6, {{0, 1}, {1, 2}, {2, 3},
                      {4, 0}, {4, 1}, {4, 2}, {4, 3},
                      {5, 0}, {5, 1}, {5, 2}, {5, 3}});
  return {"h4", 4, 4, true, GadgetGraph(std::move(base), {0, 3})};
}

MultiGraph icosahedron() {
  // Outer hexagon a1..a6 = 0..5, inner triangles b1..b3 = 6..8 and
  // c1..c3 = 9..11. Edge 0 is (a1, a2), the edge H5 removes.
  return MultiGraph(12, {
      {0, 1},  {0, 5},  {0, 6},  {1, 6},  {1, 7},  {1, 2},
      {2, 3},  {2, 7},  {3, 7},  {3, 8},  {3, 4},  {4, 5},
      {4, 8},  {5, 6},  {5, 8},  {6, 8},  {7, 8},  {6, 7},
      {0, 10}, {0, 11}, {1, 10}, {2, 9},  {2, 10}, {3, 9},
      {4, 9},  {4, 11}, {5, 11}, {9, 10}, {10, 11}, {9, 11},
  });
}

GadgetSpec build_h5_icosahedron() {
  const MultiGraph closed = icosahedron();
  std::vector<Edge> edges(closed.edges().begin() + 1, closed.edges().end());
  const Edge removed = closed.edge(0);
  MultiGraph base(closed.vertex_count(), std::move(edges));
  return {"h5", 5, 5, true, GadgetGraph(std::move(base), {removed.u, removed.v})};
}

std::vector<NamedMatching> build_matchings(unsigned kappa, std::uint64_t n) {
  if (kappa < 3)
    throw PreconditionError("build_matchings needs kappa >= 3");
  if (n % 2 != 0 || n / 2 < kappa)
    throw PreconditionError("build_matchings needs n even with n/2 >= kappa "
                            "(n = " + std::to_string(n) + ")");
  if (n > std::numeric_limits<Vertex>::max())
    throw PreconditionError("n too large");
  for (unsigned l = 1; l <= kappa / 2; ++l)
    if (n % (2 * l) != 0)
      throw PreconditionError("build_matchings needs 2l | n for l = " +
                              std::to_string(l) + " (n = " + std::to_string(n) +
                              ")");

  auto mod = [n](std::uint64_t x) { return static_cast<Vertex>(x % n); };
  std::vector<NamedMatching> out;
  for (std::uint64_t l = 1; l <= kappa / 2; ++l) {
    NamedMatching m{"M" + std::to_string(l), {}};
    NamedMatching mp{"M'" + std::to_string(l), {}};
    for (std::uint64_t i = 0; i < l; ++i)
      for (std::uint64_t base = 0; base < n; base += 2 * l) {
        m.edges.push_back({mod(i + base), mod(i + base + l)});
        mp.edges.push_back({mod(i + base + l), mod(i + base + 2 * l)});
      }
    out.push_back(std::move(m));
    out.push_back(std::move(mp));
  }
  if (kappa % 2 == 1) {
    NamedMatching diameter{"M", {}};
    for (std::uint64_t j = 0; j < n / 2; ++j)
      diameter.edges.push_back({mod(j), mod(j + n / 2)});
    out.push_back(std::move(diameter));
  }

  std::map<std::pair<Vertex, Vertex>, std::size_t> owner;
  for (std::size_t k = 0; k < out.size(); ++k) {
    std::vector<bool> covered(n, false);
    for (const Edge &e : out[k].edges) {
      if (e.u == e.v || covered[e.u] || covered[e.v])
        throw InvariantViolation(out[k].label + " is not a matching");
      covered[e.u] = covered[e.v] = true;
      auto [it, inserted] = owner.emplace(std::minmax(e.u, e.v), k);
      if (!inserted)
        throw InvariantViolation(out[it->second].label + " and " +
                                 out[k].label + " share edge (" +
                                 std::to_string(e.u) + ", " +
                                 std::to_string(e.v) + ")");
    }
    if (std::find(covered.begin(), covered.end(), false) != covered.end())
      throw InvariantViolation(out[k].label + " is not perfect");
  }
  return out;
}

GadgetSpec build_h_star(unsigned kappa, std::optional<std::uint64_t> n) {
  if (kappa < 3)
    throw PreconditionError("build_h_star needs kappa >= 3");
  std::uint64_t order = 0;
  if (n) {
    order = *n;
  } else {
    if (kappa > 12)
      throw PreconditionError("kappa! vertices is too many; pass n");
    order = factorial(kappa).get_ui();
  }
  const auto matchings = build_matchings(kappa, order);
  std::vector<Edge> edges;
  bool removed = false;
  for (const auto &m : matchings)
    for (const Edge &e : m.edges) {
      if (!removed && std::min(e.u, e.v) == 0 && std::max(e.u, e.v) == 1) {
        removed = true;
        continue;
      }
      edges.push_back(e);
    }
  if (!removed)
    throw InvariantViolation("edge (0, 1) missing from the matching union");
  std::string name = "hstar:" + std::to_string(kappa);
  if (n)
    name += ":" + std::to_string(order);
  return {name, kappa, kappa, false,
          GadgetGraph(MultiGraph(order, std::move(edges)), {0, 1})};
}

NonplanarGadget build_f_nonplanar(unsigned kappa, unsigned r) {
  if (r < 3 || kappa <= r)
    throw PreconditionError("build_f_nonplanar needs kappa > r >= 3");
  // u_i = i - 1 and v_i = r + i - 1 for 1 <= i <= r.
  auto u = [](unsigned i) { return static_cast<Vertex>(i - 1); };
  auto v = [r](unsigned i) { return static_cast<Vertex>(r + i - 1); };

  std::vector<Edge> edges;
  std::vector<Color> witness;
  for (unsigned i = 1; i < r; ++i) {
    edges.push_back({u(r), u(i)});
    witness.push_back(i);
  }
  for (unsigned j = 1; j < r; ++j) {
    edges.push_back({v(j), v(r)});
    witness.push_back(j);
  }
  for (unsigned i = 1; i < r; ++i)
    for (unsigned j = 1; j < r; ++j) {
      edges.push_back({u(i), v(j)});
      witness.push_back((i + j) % r);
    }
  NonplanarGadget out;
  out.spec = {"fnp:" + std::to_string(kappa) + ":" + std::to_string(r), kappa,
              r, false,
              GadgetGraph(MultiGraph(2 * r, std::move(edges)), {u(r), v(r)})};
  out.witness = std::move(witness);
  return out;
}

bool is_proper_coloring(const GadgetGraph &g, std::span<const Color> internal,
                        std::span<const Color> dangling, unsigned kappa) {
  const MultiGraph &base = g.base();
  if (internal.size() != base.edge_count() || dangling.size() != g.arity())
    return false;
  std::vector<std::set<Color>> seen(base.vertex_count());
  auto place = [&](Vertex v, Color c) {
    return c < kappa && seen[v].insert(c).second;
  };
  for (EdgeIndex e = 0; e < base.edge_count(); ++e)
    if (!place(base.edge(e).u, internal[e]) || !place(base.edge(e).v, internal[e]))
      return false;
  for (std::size_t i = 0; i < g.arity(); ++i)
    if (!place(g.dangling()[i], dangling[i]))
      return false;
  return true;
}

KeyPropertyReport verify_key_property(const GadgetSpec &spec, unsigned kappa) {
  const GadgetGraph &g = spec.gadget;
  if (g.arity() != 2)
    throw PreconditionError("key property is defined for 2 dangling edges");
  KeyPropertyReport report;
  report.matrix = SignatureMatrix(kappa);
  for (Color x = 0; x < kappa; ++x)
    for (Color y = 0; y < kappa; ++y) {
      const std::array<Color, 2> boundary{x, y};
      report.matrix.at(x, y) = count_extensions_frontier(g, kappa, boundary);
    }
  if (auto form = decompose_domain_invariant(report.matrix)) {
    report.domain_invariant = true;
    report.a = form->a;
    report.b = form->b;
    report.holds = form->b == 0 && form->a > 0;
    if (report.holds)
      report.c = form->a;
  }
  return report;
}

std::pair<std::vector<Vertex>, std::vector<EdgeIndex>>
dangling_path(const GadgetGraph &g) {
  if (g.arity() != 2)
    throw PreconditionError("dangling_path needs exactly 2 dangling edges");
  const MultiGraph &base = g.base();
  const Vertex from = g.dangling()[0], to = g.dangling()[1];

  constexpr std::size_t unreached = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> dist(base.vertex_count(), unreached);
  std::deque<Vertex> queue{to};
  dist[to] = 0;
  while (!queue.empty()) {
    Vertex x = queue.front();
    queue.pop_front();
    for (EdgeIndex e : base.incident(x)) {
      Vertex y = base.other(e, x);
      if (dist[y] == unreached) {
        dist[y] = dist[x] + 1;
        queue.push_back(y);
      }
    }
  }
  if (dist[from] == unreached)
    throw PreconditionError("dangling attachments are not connected");

  // Walk toward `to`, always taking the smallest next vertex, and the
  // smallest edge index among parallel edges.
  std::vector<Vertex> vertices{from};
  std::vector<EdgeIndex> edges;
  Vertex at = from;
  while (at != to) {
    Vertex next = std::numeric_limits<Vertex>::max();
    EdgeIndex via = 0;
    for (EdgeIndex e : base.incident(at)) {
      Vertex y = base.other(e, at);
      if (dist[y] + 1 == dist[at] && y < next) {
        next = y;
        via = e;
      }
    }
    vertices.push_back(next);
    edges.push_back(via);
    at = next;
  }
  return {vertices, edges};
}

GadgetSpec derive_distinct_diagonal(const GadgetSpec &f, unsigned kappa) {
  if (f.gadget.arity() != 2)
    throw PreconditionError("derive_distinct_diagonal needs 2 dangling edges");
  if (!is_connected(f.gadget.base()))
    throw PreconditionError("derive_distinct_diagonal needs a connected "
                            "gadget");
  const KeyPropertyReport report = verify_key_property(f, kappa);
  if (!report.domain_invariant)
    throw PreconditionError(f.name + " is not domain invariant at kappa " +
                            std::to_string(kappa));
  if (report.a != report.b)
    throw PreconditionError("not needed: " + f.name + " already has a != b "
                            "at kappa " + std::to_string(kappa));
  if (report.b == 0)
    throw PreconditionError(f.name + " has the zero signature at kappa " +
                            std::to_string(kappa));

  const auto path_edges = dangling_path(f.gadget).second;
  std::vector<EdgeIndex> off_path;
  for (EdgeIndex e = 0; e < f.gadget.base().edge_count(); ++e)
    if (std::find(path_edges.begin(), path_edges.end(), e) == path_edges.end())
      off_path.push_back(e);
  Replacement rep = replace_edges(f.gadget.base(), f.gadget,
                                  EdgeSelector::explicit_list(off_path));
  return {"g(" + f.name + ")", kappa, f.r, f.planar_claimed,
          GadgetGraph(std::move(rep.graph), f.gadget.dangling())};
}

GadgetSpec chain_gadget(const GadgetSpec &f, unsigned n,
                        std::optional<unsigned> kappa) {
  if (n == 0)
    throw PreconditionError("chain_gadget needs n >= 1");
  if (f.gadget.arity() != 2)
    throw PreconditionError("chain_gadget needs 2 dangling edges");
  if (n == 1)
    return f;
  if (!ad_gate_signature(f.gadget, kappa.value_or(f.kappa))
           .matrix()
           .is_symmetric())
    throw PreconditionError(f.name + " has a non-symmetric signature; the "
                            "chain would depend on orientation");

  const MultiGraph &inner = f.gadget.base();
  const std::size_t block = inner.vertex_count();
  const Vertex in = f.gadget.dangling()[0], out = f.gadget.dangling()[1];
  std::vector<Edge> edges;
  for (unsigned copy = 0; copy < n; ++copy) {
    const auto offset = static_cast<Vertex>(copy * block);
    if (copy > 0)
      edges.push_back({static_cast<Vertex>(offset - block + out), offset + in});
    for (const Edge &e : inner.edges())
      edges.push_back({offset + e.u, offset + e.v});
  }
  const auto last = static_cast<Vertex>((n - 1) * block);
  return {f.name + "^" + std::to_string(n), f.kappa, f.r, f.planar_claimed,
          GadgetGraph(MultiGraph(n * block, std::move(edges)), {in, last + out})};
}

namespace {

std::vector<std::string_view> split_colon(std::string_view s) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    std::size_t end = s.find(':', start);
    parts.push_back(s.substr(start, end - start));
    if (end == std::string_view::npos)
      return parts;
    start = end + 1;
  }
}

std::uint64_t name_number(std::string_view tok, std::string_view name) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size() ||
      value > std::numeric_limits<unsigned>::max())
    throw ParseError(0, "bad number in gadget name '" + std::string(name) + "'");
  return value;
}

} // namespace

GadgetSpec gadget_by_name(std::string_view name) {
  if (name == "h3")
    return build_h3();
  if (name == "h4")
    return build_h4();
  if (name == "h5")
    return build_h5_icosahedron();
  const auto parts = split_colon(name);
  if (parts[0] == "hstar" && (parts.size() == 2 || parts.size() == 3)) {
    const auto kappa = static_cast<unsigned>(name_number(parts[1], name));
    if (parts.size() == 3)
      return build_h_star(kappa, name_number(parts[2], name));
    return build_h_star(kappa);
  }
  if (parts[0] == "fnp" && parts.size() == 3)
    return build_f_nonplanar(static_cast<unsigned>(name_number(parts[1], name)),
                             static_cast<unsigned>(name_number(parts[2], name)))
        .spec;
  throw ParseError(0, "unknown gadget '" + std::string(name) +
                          "' (expected h3, h4, h5, hstar:<k>[:<n>], "
                          "fnp:<k>:<r>)");
}

} // namespace edgecount
