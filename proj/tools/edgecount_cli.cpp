// Command-line front end. Everything goes through the C API; this file only
// handles arguments, files and the report envelope.

#include "edgecount/edgecount.h"

#include <CLI11.hpp>
#include <json.hpp>
#include <openssl/evp.h>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

namespace {

using nlohmann::json;

constexpr int exit_ok = 0;
constexpr int exit_input = 2;
constexpr int exit_precondition = 3;

struct Failure {
  int code;
  std::string message;
};

int exit_code_for(ec_status s) {
  switch (s) {
  case EC_ERR_INPUT:
    return exit_input;
  case EC_ERR_PRECONDITION:
    return exit_precondition;
  default:
    return 1;
  }
}

void check(ec_status s) {
  if (s != EC_OK)
    throw Failure{exit_code_for(s), ec_last_error()};
}

// Owns a string returned by the library.
std::string take(char *s) {
  std::string out = s ? s : "";
  ec_string_free(s);
  return out;
}

struct GraphDeleter {
  void operator()(ec_graph *g) const { ec_graph_free(g); }
};
struct GadgetDeleter {
  void operator()(ec_gadget *g) const { ec_gadget_free(g); }
};
struct CnfDeleter {
  void operator()(ec_cnf *f) const { ec_cnf_free(f); }
};
using GraphPtr = std::unique_ptr<ec_graph, GraphDeleter>;
using GadgetPtr = std::unique_ptr<ec_gadget, GadgetDeleter>;
using CnfPtr = std::unique_ptr<ec_cnf, CnfDeleter>;

std::string read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw Failure{exit_input, "cannot read " + path};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string &path, const std::string &text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text))
    throw Failure{exit_input, "cannot write " + path};
}

std::string sha256_hex(const std::string &data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("SHA-256 failed");
  static const char *hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[digest[i] >> 4];
    out += hex[digest[i] & 15];
  }
  return out;
}

GraphPtr parse_graph_file(const std::string &text) {
  ec_graph *g = nullptr;
  check(ec_graph_parse(text.c_str(), &g));
  return GraphPtr(g);
}

GadgetPtr load_gadget(const std::string &name) {
  ec_gadget *g = nullptr;
  check(ec_gadget_by_name(name.c_str(), &g));
  return GadgetPtr(g);
}

// The digest covers the command echo and the bytes of every input file, so
// identical invocations on identical files give identical reports.
json envelope(const json &command, const std::string &input_bytes, json result) {
  return {{"command", command},
          {"inputs_digest", "sha256:" + sha256_hex(command.dump() + "\n" + input_bytes)},
          {"result", std::move(result)}};
}

struct Options {
  std::string input;
  std::string output;
  std::string gadget;
  std::string method = "backtrack";
  unsigned kappa = 0;
  unsigned r = 0;
  bool planar = false;
  bool check = false;
  std::size_t check_cap = 40;
  std::size_t spectrum_cap = 12;
  unsigned sat_cap = 24;
};

json run_count(const Options &o) {
  const std::string text = read_file(o.input);
  auto g = parse_graph_file(text);
  const ec_count_method method =
      o.method == "matching" ? EC_METHOD_MATCHING : EC_METHOD_BACKTRACK;
  char *out = nullptr;
  check(ec_count(g.get(), o.kappa, method, &out));
  const json cmd{{"name", "count"}, {"input", o.input}, {"kappa", o.kappa}, {"method", o.method}};
  return envelope(cmd, text, {{"count", take(out)}});
}

json run_verify(const Options &o) {
  auto g = load_gadget(o.gadget);
  char *out = nullptr;
  check(ec_gadget_verify(g.get(), o.kappa, &out));
  const json cmd{{"name", "verify-gadget"}, {"gadget", o.gadget}, {"kappa", o.kappa}};
  return envelope(cmd, "", json::parse(take(out)));
}

json run_reduce(const Options &o) {
  const std::string text = read_file(o.input);
  auto g = parse_graph_file(text);
  ec_graph *raw = nullptr;
  char *out = nullptr;
  check(ec_reduce(g.get(), o.kappa, o.r, o.planar, o.check, o.check_cap, &raw, &out));
  GraphPtr reduced(raw);
  json result = json::parse(take(out));
  if (!o.output.empty()) {
    char *rendered = nullptr;
    check(ec_graph_render(reduced.get(), &rendered));
    write_file(o.output, take(rendered));
    result["output"] = o.output;
  }
  const json cmd{{"name", "reduce"}, {"input", o.input},   {"kappa", o.kappa},
                 {"r", o.r},         {"planar", o.planar}, {"check", o.check}};
  return envelope(cmd, text, std::move(result));
}

json run_interpolate(const Options &o) {
  const std::string text = read_file(o.input);
  auto g = parse_graph_file(text);
  GadgetPtr gadget;
  if (!o.gadget.empty())
    gadget = load_gadget(o.gadget);
  char *out = nullptr;
  check(ec_interpolate(g.get(), o.kappa, gadget.get(), o.check, o.check_cap, &out));
  json result = json::parse(take(out));
  if (result.contains("warning"))
    std::cerr << "warning: " << result["warning"].get<std::string>() << "\n";
  const json cmd{{"name", "interpolate"}, {"input", o.input}, {"kappa", o.kappa},
                 {"gadget", o.gadget.empty() ? json() : json(o.gadget)}, {"check", o.check}};
  return envelope(cmd, text, std::move(result));
}

json run_unique(const Options &o) {
  const std::string text = read_file(o.input);
  auto g = parse_graph_file(text);
  char *out = nullptr;
  check(ec_unique(g.get(), o.kappa, o.spectrum_cap, &out));
  const json cmd{{"name", "unique"}, {"input", o.input}, {"kappa", o.kappa}};
  return envelope(cmd, text, json::parse(take(out)));
}

json run_sat_transform(const Options &o) {
  const std::string text = read_file(o.input);
  ec_cnf *raw = nullptr;
  check(ec_cnf_parse(text.c_str(), &raw));
  CnfPtr f(raw);
  ec_cnf *transformed_raw = nullptr;
  char *out = nullptr;
  check(ec_sat_transform(f.get(), o.sat_cap, &transformed_raw, &out));
  CnfPtr transformed(transformed_raw);
  json result = json::parse(take(out));
  if (!o.output.empty()) {
    write_file(o.output, result["transformed"].get<std::string>());
    result["output"] = o.output;
  }
  const json cmd{{"name", "sat-transform"}, {"input", o.input}, {"cap", o.sat_cap}};
  return envelope(cmd, text, std::move(result));
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Exact edge-coloring counts, gadget checks and reductions"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(ec_version()));
  Options o;

  auto *count = app.add_subcommand("count", "Count proper edge kappa-colorings");
  count->add_option("--input", o.input, "Graph file")->required();
  count->add_option("--kappa", o.kappa, "Number of colors")->required();
  count->add_option("--method", o.method, "Counting method")
      ->check(CLI::IsMember({"backtrack", "matching"}));

  auto *verify = app.add_subcommand("verify-gadget", "Report a gadget's signature matrix");
  verify->add_option("--gadget", o.gadget, "h3, h4, h5, hstar:<k>[:<n>], fnp:<k>:<r>")
      ->required();
  verify->add_option("--kappa", o.kappa, "Number of colors")->required();

  auto *reduce = app.add_subcommand("reduce", "Replace every edge by a key-property gadget");
  reduce->add_option("--input", o.input, "r-regular graph file")->required();
  reduce->add_option("--kappa", o.kappa, "Number of colors")->required();
  reduce->add_option("--r", o.r, "Regularity of the input")->required();
  reduce->add_flag("--planar", o.planar, "Use the planar gadget family");
  reduce->add_flag("--check", o.check, "Count both sides when small enough");
  reduce->add_option("--check-cap", o.check_cap, "Largest G' edge count for --check");
  reduce->add_option("--output", o.output, "Write G' here");

  auto *interp = app.add_subcommand("interpolate", "Recover a count by interpolation");
  interp->add_option("--input", o.input, "Graph file")->required();
  interp->add_option("--kappa", o.kappa, "Number of colors")->required();
  interp->add_option("--gadget", o.gadget, "Gadget name; chosen automatically if omitted");
  interp->add_flag("--check", o.check, "Compare with a direct count when small enough");
  interp->add_option("--check-cap", o.check_cap, "Largest edge count for --check");

  auto *unique = app.add_subcommand("unique", "Is there exactly one partition into matchings?");
  unique->add_option("--input", o.input, "Graph file")->required();
  unique->add_option("--kappa", o.kappa, "Number of colors")->required();
  unique->add_option("--spectrum-cap", o.spectrum_cap,
                     "Largest edge count for the kappa < 4 spectrum fallback");

  auto *sat = app.add_subcommand("sat-transform", "Add exactly one model to a CNF");
  sat->add_option("--input", o.input, "DIMACS CNF file")->required();
  sat->add_option("--cap", o.sat_cap, "Largest variable count for model counting");
  sat->add_option("--output", o.output, "Write the transformed CNF here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int rc = app.exit(e);
    return rc == 0 ? exit_ok : exit_input;
  }

  try {
    json report;
    if (*count)
      report = run_count(o);
    else if (*verify)
      report = run_verify(o);
    else if (*reduce)
      report = run_reduce(o);
    else if (*interp)
      report = run_interpolate(o);
    else if (*unique)
      report = run_unique(o);
    else
      report = run_sat_transform(o);
    std::cout << report.dump(2) << "\n";
    return exit_ok;
  } catch (const Failure &f) {
    std::cerr << "error: " << f.message << "\n";
    return f.code;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
