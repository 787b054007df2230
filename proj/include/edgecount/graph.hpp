#ifndef EDGECOUNT_GRAPH_HPP
#define EDGECOUNT_GRAPH_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace edgecount {

using Vertex = std::uint32_t;
using EdgeIndex = std::size_t;

struct Edge {
  Vertex u;
  Vertex v;

  friend bool operator==(const Edge &, const Edge &) = default;
};

/// Undirected multigraph on vertices 0..n-1. Parallel edges are distinct
/// occurrences with stable indices; self-loops are rejected.
class MultiGraph {
public:
  MultiGraph() = default;
  explicit MultiGraph(std::size_t vertex_count, std::vector<Edge> edges = {});

  std::size_t vertex_count() const noexcept { return vertex_count_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<Edge> &edges() const noexcept { return edges_; }
  const Edge &edge(EdgeIndex e) const { return edges_.at(e); }

  /// Incident edge indices of `v`, ascending.
  const std::vector<EdgeIndex> &incident(Vertex v) const;
  std::size_t degree(Vertex v) const { return incident(v).size(); }

  /// The endpoint of `e` that is not `v`.
  Vertex other(EdgeIndex e, Vertex v) const;

private:
  std::size_t vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeIndex>> incidence_;
};

/// A multigraph with an ordered list of dangling edges. Entry i of
/// `dangling()` is the internal vertex the i-th dangling edge attaches to;
/// this order is the order of the external variables.
class GadgetGraph {
public:
  GadgetGraph() = default;
  GadgetGraph(MultiGraph base, std::vector<Vertex> dangling);

  const MultiGraph &base() const noexcept { return base_; }
  const std::vector<Vertex> &dangling() const noexcept { return dangling_; }
  std::size_t arity() const noexcept { return dangling_.size(); }

  /// Internal degree plus the dangling edges attached at `v`.
  std::size_t degree(Vertex v) const;

private:
  MultiGraph base_;
  std::vector<Vertex> dangling_;
};

class EdgeSelector {
public:
  enum class Mode { all, parallel_only, explicit_list };

  static EdgeSelector all() { return EdgeSelector(Mode::all, {}); }
  static EdgeSelector parallel_only() {
    return EdgeSelector(Mode::parallel_only, {});
  }
  static EdgeSelector explicit_list(std::vector<EdgeIndex> indices) {
    return EdgeSelector(Mode::explicit_list, std::move(indices));
  }

  Mode mode() const noexcept { return mode_; }

  /// Selected edge indices of `g`, ascending and without duplicates.
  std::vector<EdgeIndex> resolve(const MultiGraph &g) const;

private:
  EdgeSelector(Mode mode, std::vector<EdgeIndex> indices)
      : mode_(mode), indices_(std::move(indices)) {}

  Mode mode_;
  std::vector<EdgeIndex> indices_;
};

using ParsedGraph = std::variant<MultiGraph, GadgetGraph>;

/// Parses the line format `v <n>` / `e <u> <v>` / `d <u>` / `# ...`.
/// Returns a GadgetGraph when at least one `d` line is present.
ParsedGraph parse_graph(std::string_view text);

/// Like parse_graph but rejects dangling edges.
MultiGraph parse_multigraph(std::string_view text);
/// Like parse_graph but always yields a gadget (possibly with arity 0).
GadgetGraph parse_gadget(std::string_view text);

std::string render(const MultiGraph &g);
std::string render(const GadgetGraph &g);

std::size_t degree(const MultiGraph &g, Vertex v);
std::size_t degree(const GadgetGraph &g, Vertex v);

bool is_regular(const MultiGraph &g, std::size_t r);
bool is_regular(const GadgetGraph &g, std::size_t r);
bool is_simple(const MultiGraph &g);
bool is_simple(const GadgetGraph &g);

/// True when every vertex lies in a single component. Graphs with at most
/// one vertex are connected.
bool is_connected(const MultiGraph &g);

/// True iff removing some single edge disconnects its component.
bool has_bridge(const MultiGraph &g);

/// Where the gadget copy for one replaced edge landed in the output graph.
struct ReplacementBlock {
  EdgeIndex original_edge;
  Vertex first_vertex;
  std::size_t vertex_count;
};

struct Replacement {
  MultiGraph graph;
  std::vector<ReplacementBlock> blocks;
};

/// Replaces each selected edge (u, v) of `g` by a fresh copy of the gadget
/// base, joined through (u, attach_0) and (attach_1, v). Original vertices
/// keep their indices; copies are appended in selected-edge order.
Replacement replace_edges(const MultiGraph &g, const GadgetGraph &gadget,
                          const EdgeSelector &sel);

} // namespace edgecount

#endif // EDGECOUNT_GRAPH_HPP
