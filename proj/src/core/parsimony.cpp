#include "edgecount/parsimony.hpp"

#include "edgecount/error.hpp"

#include <charconv>
#include <optional>
#include <sstream>

namespace edgecount {

namespace {

std::optional<long long> parse_int(std::string_view tok) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
    return std::nullopt;
  return value;
}

} // namespace

CnfFormula parse_dimacs(std::string_view text) {
  CnfFormula f;
  bool have_header = false;
  long long declared_clauses = 0;
  Clause current;
  bool open_clause = false;

  std::size_t line_no = 0, pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos)
      end = text.size();
    std::string line(text.substr(pos, end - pos));
    pos = end + 1;
    ++line_no;

    std::istringstream in(line);
    std::string tok;
    if (!(in >> tok) || tok[0] == 'c' || tok[0] == '%')
      continue;
    if (tok == "p") {
      if (have_header)
        throw ParseError(line_no, "duplicate 'p' header");
      std::string format, vars, clauses, extra;
      in >> format >> vars >> clauses;
      auto v = parse_int(vars), c = parse_int(clauses);
      if (format != "cnf" || !v || !c || *v < 0 || *c < 0 || (in >> extra) ||
          *v > UINT32_MAX)
        throw ParseError(line_no, "expected 'p cnf <vars> <clauses>'");
      f.variable_count = static_cast<std::uint32_t>(*v);
      declared_clauses = *c;
      have_header = true;
      continue;
    }
    if (!have_header)
      throw ParseError(line_no, "clause before the 'p cnf' header");
    do {
      auto lit = parse_int(tok);
      if (!lit)
        throw ParseError(line_no, "expected an integer literal, got '" + tok +
                                      "'");
      if (*lit == 0) {
        f.clauses.push_back(std::move(current));
        current.clear();
        open_clause = false;
        continue;
      }
      long long var = *lit < 0 ? -*lit : *lit;
      if (var > f.variable_count)
        throw ParseError(line_no, "literal " + tok + " exceeds the declared " +
                                      std::to_string(f.variable_count) +
                                      " variables");
      current.push_back({static_cast<std::uint32_t>(var - 1), *lit < 0});
      open_clause = true;
    } while (in >> tok);
  }
  if (!have_header)
    throw ParseError(0, "missing 'p cnf' header");
  if (open_clause)
    throw ParseError(line_no, "last clause is not terminated by 0");
  if (static_cast<long long>(f.clauses.size()) != declared_clauses)
    throw ParseError(0, "header declares " + std::to_string(declared_clauses) +
                            " clauses but " + std::to_string(f.clauses.size()) +
                            " were given");
  return f;
}

std::string render_dimacs(const CnfFormula &f) {
  std::ostringstream out;
  out << "p cnf " << f.variable_count << ' ' << f.clauses.size() << '\n';
  for (const Clause &clause : f.clauses) {
    for (const Literal &lit : clause)
      out << (lit.negated ? "-" : "") << lit.var + 1 << ' ';
    out << "0\n";
  }
  return out.str();
}

CnfFormula transform_phi_prime(const CnfFormula &f) {
  CnfFormula out;
  const std::uint32_t y = f.variable_count;
  out.variable_count = f.variable_count + 1;
  for (const Clause &clause : f.clauses) {
    Clause c{{y, true}};
    c.insert(c.end(), clause.begin(), clause.end());
    out.clauses.push_back(std::move(c));
  }
  for (std::uint32_t x = 0; x < f.variable_count; ++x)
    out.clauses.push_back({{y, false}, {x, false}});
  return out;
}

BigInt count_sat(const CnfFormula &f, std::uint32_t cap) {
  if (f.variable_count > cap || cap > 62)
    throw PreconditionError("count_sat: " + std::to_string(f.variable_count) +
                            " variables exceeds the brute-force cap of " +
                            std::to_string(cap));
  // Clauses as (positive mask, negative mask) for a branch-free check.
  std::vector<std::pair<std::uint64_t, std::uint64_t>> masks;
  for (const Clause &clause : f.clauses) {
    std::uint64_t pos = 0, neg = 0;
    for (const Literal &lit : clause)
      (lit.negated ? neg : pos) |= std::uint64_t{1} << lit.var;
    masks.emplace_back(pos, neg);
  }
  std::uint64_t models = 0;
  const std::uint64_t total = std::uint64_t{1} << f.variable_count;
  for (std::uint64_t assignment = 0; assignment < total; ++assignment) {
    bool ok = true;
    for (const auto &[pos, neg] : masks)
      if (!((assignment & pos) | (~assignment & neg))) {
        ok = false;
        break;
      }
    models += ok;
  }
  return BigInt(static_cast<unsigned long>(models));
}

} // namespace edgecount
