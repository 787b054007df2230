#include "edgecount/graph.hpp"

#include "edgecount/error.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <map>
#include <optional>
#include <sstream>

namespace edgecount {

MultiGraph::MultiGraph(std::size_t vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)),
      incidence_(vertex_count) {
  for (EdgeIndex e = 0; e < edges_.size(); ++e) {
    const Edge &ed = edges_[e];
    if (ed.u >= vertex_count_ || ed.v >= vertex_count_)
      throw PreconditionError("edge " + std::to_string(e) +
                              " has an endpoint outside 0.." +
                              std::to_string(vertex_count_));
    if (ed.u == ed.v)
      throw PreconditionError("edge " + std::to_string(e) + " is a self-loop");
    incidence_[ed.u].push_back(e);
    incidence_[ed.v].push_back(e);
  }
}

const std::vector<EdgeIndex> &MultiGraph::incident(Vertex v) const {
  if (v >= vertex_count_)
    throw PreconditionError("vertex " + std::to_string(v) + " out of range");
  return incidence_[v];
}

Vertex MultiGraph::other(EdgeIndex e, Vertex v) const {
  const Edge &ed = edge(e);
  return ed.u == v ? ed.v : ed.u;
}

GadgetGraph::GadgetGraph(MultiGraph base, std::vector<Vertex> dangling)
    : base_(std::move(base)), dangling_(std::move(dangling)) {
  for (Vertex v : dangling_)
    if (v >= base_.vertex_count())
      throw PreconditionError("dangling edge attached to vertex " +
                              std::to_string(v) + " which is out of range");
}

std::size_t GadgetGraph::degree(Vertex v) const {
  return base_.degree(v) +
         static_cast<std::size_t>(std::count(dangling_.begin(), dangling_.end(), v));
}

std::vector<EdgeIndex> EdgeSelector::resolve(const MultiGraph &g) const {
  std::vector<EdgeIndex> out;
  switch (mode_) {
  case Mode::all:
    out.resize(g.edge_count());
    for (EdgeIndex e = 0; e < out.size(); ++e)
      out[e] = e;
    break;
  case Mode::parallel_only: {
    std::map<std::pair<Vertex, Vertex>, int> multiplicity;
    for (const Edge &ed : g.edges())
      ++multiplicity[std::minmax(ed.u, ed.v)];
    for (EdgeIndex e = 0; e < g.edge_count(); ++e)
      if (multiplicity[std::minmax(g.edge(e).u, g.edge(e).v)] > 1)
        out.push_back(e);
    break;
  }
  case Mode::explicit_list:
    out = indices_;
    for (EdgeIndex e : out)
      if (e >= g.edge_count())
        throw PreconditionError("selected edge index " + std::to_string(e) +
                                " out of range");
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    break;
  }
  return out;
}

namespace {

std::optional<std::uint64_t> parse_number(std::string_view tok) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    return std::nullopt;
  return value;
}

std::vector<std::string_view> split_words(std::string_view line) {
  std::vector<std::string_view> words;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t'))
      ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t')
      ++j;
    if (j > i)
      words.push_back(line.substr(i, j - i));
    i = j;
  }
  return words;
}

} // namespace

ParsedGraph parse_graph(std::string_view text) {
  std::optional<std::size_t> n;
  std::vector<Edge> edges;
  std::vector<Vertex> dangling;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos)
      end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r')
      line.remove_suffix(1);

    auto words = split_words(line);
    if (words.empty() || words[0].front() == '#')
      continue;

    auto vertex_arg = [&](std::string_view tok) -> Vertex {
      auto value = parse_number(tok);
      if (!value)
        throw ParseError(line_no, "expected a vertex index, got '" +
                                      std::string(tok) + "'");
      if (*value >= *n)
        throw ParseError(line_no, "vertex " + std::string(tok) +
                                      " out of range (v " + std::to_string(*n) +
                                      ")");
      return static_cast<Vertex>(*value);
    };

    std::string_view kind = words[0];
    if (kind == "v") {
      if (n)
        throw ParseError(line_no, "duplicate 'v' directive");
      if (words.size() != 2)
        throw ParseError(line_no, "expected 'v <n>'");
      auto value = parse_number(words[1]);
      if (!value || *value > UINT32_MAX)
        throw ParseError(line_no, "invalid vertex count '" +
                                      std::string(words[1]) + "'");
      n = static_cast<std::size_t>(*value);
      continue;
    }
    if (!n)
      throw ParseError(line_no, "'v <n>' must be the first directive");
    if (kind == "e") {
      if (words.size() != 3)
        throw ParseError(line_no, "expected 'e <u> <v>'");
      Vertex u = vertex_arg(words[1]);
      Vertex v = vertex_arg(words[2]);
      if (u == v)
        throw ParseError(line_no, "self-loop at vertex " + std::to_string(u));
      edges.push_back({u, v});
    } else if (kind == "d") {
      if (words.size() != 2)
        throw ParseError(line_no, "expected 'd <u>'");
      dangling.push_back(vertex_arg(words[1]));
    } else {
      throw ParseError(line_no,
                       "unknown directive '" + std::string(kind) + "'");
    }
  }
  if (!n)
    throw ParseError(0, "missing 'v <n>' directive");

  MultiGraph g(*n, std::move(edges));
  if (dangling.empty())
    return g;
  return GadgetGraph(std::move(g), std::move(dangling));
}

MultiGraph parse_multigraph(std::string_view text) {
  ParsedGraph parsed = parse_graph(text);
  if (auto *g = std::get_if<MultiGraph>(&parsed))
    return std::move(*g);
  throw ParseError(0, "expected a graph without dangling edges");
}

GadgetGraph parse_gadget(std::string_view text) {
  ParsedGraph parsed = parse_graph(text);
  if (auto *g = std::get_if<GadgetGraph>(&parsed))
    return std::move(*g);
  return GadgetGraph(std::get<MultiGraph>(std::move(parsed)), {});
}

std::string render(const MultiGraph &g) {
  std::ostringstream out;
  out << "v " << g.vertex_count() << '\n';
  for (const Edge &e : g.edges())
    out << "e " << e.u << ' ' << e.v << '\n';
  return out.str();
}

std::string render(const GadgetGraph &g) {
  std::string out = render(g.base());
  for (Vertex v : g.dangling())
    out += "d " + std::to_string(v) + '\n';
  return out;
}

std::size_t degree(const MultiGraph &g, Vertex v) { return g.degree(v); }
std::size_t degree(const GadgetGraph &g, Vertex v) { return g.degree(v); }

bool is_regular(const MultiGraph &g, std::size_t r) {
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) != r)
      return false;
  return true;
}

bool is_regular(const GadgetGraph &g, std::size_t r) {
  for (Vertex v = 0; v < g.base().vertex_count(); ++v)
    if (g.degree(v) != r)
      return false;
  return true;
}

bool is_simple(const MultiGraph &g) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  pairs.reserve(g.edge_count());
  for (const Edge &e : g.edges())
    pairs.push_back(std::minmax(e.u, e.v));
  std::sort(pairs.begin(), pairs.end());
  return std::adjacent_find(pairs.begin(), pairs.end()) == pairs.end();
}

// Every dangling edge ends at its own external vertex, so only the base can
// contain parallel edges.
bool is_simple(const GadgetGraph &g) { return is_simple(g.base()); }

bool is_connected(const MultiGraph &g) {
  if (g.vertex_count() <= 1)
    return true;
  std::vector<bool> seen(g.vertex_count(), false);
  std::vector<Vertex> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (EdgeIndex e : g.incident(v)) {
      Vertex w = g.other(e, v);
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == g.vertex_count();
}

bool has_bridge(const MultiGraph &g) {
  const std::size_t n = g.vertex_count();
  constexpr std::size_t unvisited = SIZE_MAX;
  std::vector<std::size_t> order(n, unvisited), low(n, 0);
  std::size_t clock = 0;
  bool found = false;

  // Skipping the parent *edge* rather than the parent vertex keeps parallel
  // edges from being reported as bridges.
  std::function<void(Vertex, EdgeIndex)> dfs = [&](Vertex v, EdgeIndex via) {
    order[v] = low[v] = clock++;
    for (EdgeIndex e : g.incident(v)) {
      if (e == via)
        continue;
      Vertex w = g.other(e, v);
      if (order[w] == unvisited) {
        dfs(w, e);
        low[v] = std::min(low[v], low[w]);
        if (low[w] > order[v])
          found = true;
      } else {
        low[v] = std::min(low[v], order[w]);
      }
    }
  };
  for (Vertex v = 0; v < n && !found; ++v)
    if (order[v] == unvisited)
      dfs(v, SIZE_MAX);
  return found;
}

Replacement replace_edges(const MultiGraph &g, const GadgetGraph &gadget,
                          const EdgeSelector &sel) {
  if (gadget.arity() != 2)
    throw PreconditionError("replace_edges needs a gadget with exactly 2 "
                            "dangling edges, got " +
                            std::to_string(gadget.arity()));
  const std::vector<EdgeIndex> selected = sel.resolve(g);
  std::vector<bool> is_selected(g.edge_count(), false);
  for (EdgeIndex e : selected)
    is_selected[e] = true;

  const MultiGraph &inner = gadget.base();
  const std::size_t block = inner.vertex_count();
  Replacement out;
  std::vector<Edge> edges;
  std::size_t next_vertex = g.vertex_count();

  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    const Edge &ed = g.edge(e);
    if (!is_selected[e]) {
      edges.push_back(ed);
      continue;
    }
    const auto offset = static_cast<Vertex>(next_vertex);
    out.blocks.push_back({e, offset, block});
    next_vertex += block;
    edges.push_back({ed.u, offset + gadget.dangling()[0]});
    for (const Edge &ie : inner.edges())
      edges.push_back({offset + ie.u, offset + ie.v});
    edges.push_back({offset + gadget.dangling()[1], ed.v});
  }
  out.graph = MultiGraph(next_vertex, std::move(edges));
  return out;
}

} // namespace edgecount
