#include "edgecount/edgecount.h"

#include "edgecount/colorcount.hpp"
#include "edgecount/error.hpp"
#include "edgecount/gadgets.hpp"
#include "edgecount/graph.hpp"
#include "edgecount/holant.hpp"
#include "edgecount/parsimony.hpp"
#include "edgecount/reduction.hpp"
#include "edgecount/report.hpp"

#include <json.hpp>

#include <array>
#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <optional>
#include <string>
#include <variant>

struct ec_graph {
  edgecount::ParsedGraph graph;
};

struct ec_gadget {
  edgecount::GadgetSpec spec;
};

struct ec_cnf {
  edgecount::CnfFormula formula;
};

namespace {

thread_local std::string last_error;

ec_status fail(ec_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

// Runs `body`, translating exceptions into status codes.
template <typename Fn> ec_status guarded(Fn &&body) {
  last_error.clear();
  try {
    body();
    return EC_OK;
  } catch (const edgecount::ParseError &e) {
    return fail(EC_ERR_INPUT, e.what());
  } catch (const edgecount::PreconditionError &e) {
    return fail(EC_ERR_PRECONDITION, e.what());
  } catch (const edgecount::InvariantViolation &e) {
    return fail(EC_ERR_INTERNAL, std::string("invariant violation: ") + e.what());
  } catch (const std::bad_alloc &) {
    return fail(EC_ERR_INTERNAL, "out of memory");
  } catch (const std::exception &e) {
    return fail(EC_ERR_INTERNAL, e.what());
  }
}

char *dup_string(const std::string &s) {
  char *out = static_cast<char *>(std::malloc(s.size() + 1));
  if (!out)
    throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename... Ptrs> void require(const Ptrs *...ptrs) {
  if (((ptrs == nullptr) || ...))
    throw edgecount::ParseError(0, "null argument");
}

const edgecount::MultiGraph &as_multigraph(const ec_graph *g) {
  if (const auto *mg = std::get_if<edgecount::MultiGraph>(&g->graph))
    return *mg;
  throw edgecount::PreconditionError("operation needs a graph without "
                                     "dangling edges");
}

const edgecount::MultiGraph &base_of(const ec_graph *g) {
  if (const auto *gg = std::get_if<edgecount::GadgetGraph>(&g->graph))
    return gg->base();
  return std::get<edgecount::MultiGraph>(g->graph);
}

std::optional<unsigned> regularity(const edgecount::MultiGraph &g) {
  if (g.vertex_count() == 0)
    return std::nullopt;
  const auto r = static_cast<unsigned>(g.degree(0));
  return edgecount::is_regular(g, r) ? std::optional<unsigned>(r)
                                     : std::nullopt;
}

} // namespace

extern "C" {

const char *ec_version(void) { return "0.1.0"; }

const char *ec_last_error(void) { return last_error.c_str(); }

void ec_string_free(char *s) { std::free(s); }

ec_status ec_graph_parse(const char *text, ec_graph **out) {
  return guarded([&] {
    require(text, out);
    *out = new ec_graph{edgecount::parse_graph(text)};
  });
}

void ec_graph_free(ec_graph *g) { delete g; }

ec_status ec_graph_render(const ec_graph *g, char **out) {
  return guarded([&] {
    require(g, out);
    *out = dup_string(
        std::visit([](const auto &x) { return edgecount::render(x); }, g->graph));
  });
}

ec_status ec_graph_info(const ec_graph *g, size_t *vertices, size_t *edges,
                        size_t *dangling) {
  return guarded([&] {
    require(g);
    const auto &base = base_of(g);
    if (vertices)
      *vertices = base.vertex_count();
    if (edges)
      *edges = base.edge_count();
    if (dangling) {
      const auto *gg = std::get_if<edgecount::GadgetGraph>(&g->graph);
      *dangling = gg ? gg->arity() : 0;
    }
  });
}

ec_status ec_graph_degree(const ec_graph *g, size_t v, size_t *out) {
  return guarded([&] {
    require(g, out);
    if (v >= base_of(g).vertex_count())
      throw edgecount::PreconditionError("vertex " + std::to_string(v) +
                                         " out of range");
    *out = std::visit(
        [v](const auto &x) {
          return edgecount::degree(x, static_cast<edgecount::Vertex>(v));
        },
        g->graph);
  });
}

ec_status ec_graph_is_regular(const ec_graph *g, unsigned r, int *out) {
  return guarded([&] {
    require(g, out);
    *out = std::visit([r](const auto &x) { return edgecount::is_regular(x, r); },
                      g->graph);
  });
}

ec_status ec_graph_is_simple(const ec_graph *g, int *out) {
  return guarded([&] {
    require(g, out);
    *out = edgecount::is_simple(base_of(g));
  });
}

ec_status ec_graph_has_bridge(const ec_graph *g, int *out) {
  return guarded([&] {
    require(g, out);
    *out = edgecount::has_bridge(base_of(g));
  });
}

ec_status ec_count(const ec_graph *g, unsigned kappa, ec_count_method method,
                   char **decimal) {
  return guarded([&] {
    require(g, decimal);
    const auto &mg = as_multigraph(g);
    edgecount::BigInt n;
    switch (method) {
    case EC_METHOD_BACKTRACK:
      n = edgecount::count_assignments(mg, kappa);
      break;
    case EC_METHOD_MATCHING:
      n = edgecount::count_by_matching_decomposition(mg, kappa, kappa);
      break;
    default:
      throw edgecount::ParseError(0, "unknown counting method");
    }
    *decimal = dup_string(n.get_str());
  });
}

ec_status ec_count_extensions(const ec_graph *gadget, unsigned kappa,
                              const unsigned *boundary, size_t boundary_len,
                              char **decimal) {
  return guarded([&] {
    require(gadget, decimal);
    if (boundary_len > 0)
      require(boundary);
    const auto *gg = std::get_if<edgecount::GadgetGraph>(&gadget->graph);
    const edgecount::GadgetGraph target =
        gg ? *gg : edgecount::GadgetGraph(as_multigraph(gadget), {});
    *decimal = dup_string(
        edgecount::count_extensions(
            target, kappa, std::span<const unsigned>(boundary, boundary_len))
            .get_str());
  });
}

ec_status ec_partition_spectrum(const ec_graph *g, unsigned kappa, char **json) {
  return guarded([&] {
    require(g, json);
    const auto spectrum = edgecount::partition_spectrum(as_multigraph(g), kappa);
    nlohmann::json p = nlohmann::json::array();
    for (const auto &x : spectrum.counts)
      p.push_back(x.get_str());
    *json = dup_string(nlohmann::json{{"kappa", kappa},
                                      {"P", p},
                                      {"total", spectrum.total().get_str()}}
                           .dump());
  });
}

ec_status ec_unique(const ec_graph *g, unsigned kappa, size_t spectrum_edge_cap,
                    char **json) {
  return guarded([&] {
    require(g, json);
    const auto &mg = as_multigraph(g);
    nlohmann::json out{{"kappa", kappa}};
    if (kappa >= 4) {
      out["unique"] = edgecount::is_uniquely_partition_colorable(mg, kappa);
      out["method"] = "classifier";
    } else {
      if (mg.edge_count() > spectrum_edge_cap)
        throw edgecount::PreconditionError(
            "kappa < 4 needs the partition spectrum, but the graph has " +
            std::to_string(mg.edge_count()) + " edges (cap " +
            std::to_string(spectrum_edge_cap) + ")");
      const auto spectrum = edgecount::partition_spectrum(mg, kappa);
      out["unique"] = spectrum.total() == 1;
      out["method"] = "spectrum";
      out["partitions"] = spectrum.total().get_str();
    }
    *json = dup_string(out.dump());
  });
}

ec_status ec_gadget_by_name(const char *name, ec_gadget **out) {
  return guarded([&] {
    require(name, out);
    *out = new ec_gadget{edgecount::gadget_by_name(name)};
  });
}

void ec_gadget_free(ec_gadget *g) { delete g; }

ec_status ec_gadget_export(const ec_gadget *g, char **text) {
  return guarded([&] {
    require(g, text);
    *text = dup_string(edgecount::render(g->spec.gadget));
  });
}

ec_status ec_gadget_verify(const ec_gadget *g, unsigned kappa, char **json) {
  return guarded([&] {
    require(g, json);
    const auto report = edgecount::verify_key_property(g->spec, kappa);
    *json = dup_string(
        edgecount::key_property_json(g->spec, kappa, report).dump());
  });
}

ec_status ec_reduce(const ec_graph *g, unsigned kappa, unsigned r,
                    int want_planar, int check, size_t check_edge_cap,
                    ec_graph **out_graph, char **json) {
  return guarded([&] {
    require(g, out_graph, json);
    const auto &mg = as_multigraph(g);
    if (kappa != r)
      throw edgecount::PreconditionError(
          "reduce performs the kappa = r edge replacement; for kappa > r use "
          "interpolate");
    const auto gadget = edgecount::select_gadget(kappa, r, want_planar != 0);
    if (!edgecount::is_regular(mg, r))
      throw edgecount::PreconditionError("input graph is not " +
                                         std::to_string(r) + "-regular");
    const auto cert = edgecount::simplify_equal_case(mg, kappa, gadget);

    nlohmann::json out = edgecount::certificate_json(cert);
    if (check) {
      if (cert.output.edge_count() > check_edge_cap) {
        out["check"] = "skipped";
        out["warning"] = "G' has " + std::to_string(cert.output.edge_count()) +
                         " edges, above the check cap of " +
                         std::to_string(check_edge_cap);
      } else {
        const auto n_in = edgecount::count_assignments(mg, kappa);
        const auto n_out = edgecount::count_assignments(cert.output, kappa);
        out["count_input"] = n_in.get_str();
        out["count_output"] = n_out.get_str();
        out["check"] = n_out == cert.multiplier() * n_in ? "pass" : "fail";
      }
    }
    auto result = std::make_unique<ec_graph>(ec_graph{cert.output});
    *json = dup_string(out.dump());
    *out_graph = result.release();
  });
}

ec_status ec_interpolate(const ec_graph *g, unsigned kappa,
                         const ec_gadget *gadget, int check,
                         size_t check_edge_cap, char **json) {
  return guarded([&] {
    require(g, json);
    const auto &mg = as_multigraph(g);
    edgecount::GadgetSpec f;
    if (gadget) {
      f = gadget->spec;
    } else {
      const auto r = regularity(mg);
      if (!r)
        throw edgecount::PreconditionError(
            "no gadget given and the input is not regular");
      f = edgecount::select_gadget(kappa, *r, *r <= 5);
    }

    bool derived = false;
    const std::array<edgecount::Color, 2> same{0, 0}, differ{0, 1};
    if (f.gadget.arity() == 2 && kappa >= 2 &&
        edgecount::count_extensions_frontier(f.gadget, kappa, same) ==
            edgecount::count_extensions_frontier(f.gadget, kappa, differ)) {
      f = edgecount::derive_distinct_diagonal(f, kappa);
      derived = true;
    }

    const auto result = edgecount::interpolation_pipeline(mg, kappa, f);
    nlohmann::json out =
        edgecount::interpolation_json(f.name, kappa, f.r, result);
    out["derived"] = derived;
    if (check) {
      if (mg.edge_count() > check_edge_cap) {
        out["check"] = "skipped";
        out["warning"] = "direct count infeasible: " +
                         std::to_string(mg.edge_count()) +
                         " edges, above the check cap of " +
                         std::to_string(check_edge_cap);
      } else {
        const auto direct = edgecount::eval_grid(edgecount::ad_grid(mg, kappa));
        out["direct_check"] = direct.get_str();
        out["check"] = direct == result.recovered ? "pass" : "fail";
      }
    }
    *json = dup_string(out.dump());
  });
}

ec_status ec_cnf_parse(const char *text, ec_cnf **out) {
  return guarded([&] {
    require(text, out);
    *out = new ec_cnf{edgecount::parse_dimacs(text)};
  });
}

void ec_cnf_free(ec_cnf *f) { delete f; }

ec_status ec_cnf_render(const ec_cnf *f, char **out) {
  return guarded([&] {
    require(f, out);
    *out = dup_string(edgecount::render_dimacs(f->formula));
  });
}

ec_status ec_count_sat(const ec_cnf *f, unsigned cap, char **decimal) {
  return guarded([&] {
    require(f, decimal);
    *decimal = dup_string(edgecount::count_sat(f->formula, cap).get_str());
  });
}

ec_status ec_sat_transform(const ec_cnf *f, unsigned cap, ec_cnf **out,
                           char **json) {
  return guarded([&] {
    require(f, out, json);
    auto transformed =
        std::make_unique<ec_cnf>(ec_cnf{edgecount::transform_phi_prime(f->formula)});
    const auto before = edgecount::count_sat(f->formula, cap);
    const auto after = edgecount::count_sat(transformed->formula, cap);
    nlohmann::json out_json{
        {"variables", f->formula.variable_count},
        {"clauses", f->formula.clauses.size()},
        {"transformed_variables", transformed->formula.variable_count},
        {"transformed_clauses", transformed->formula.clauses.size()},
        {"models", before.get_str()},
        {"transformed_models", after.get_str()},
        {"one_more", after == before + 1},
        {"transformed", edgecount::render_dimacs(transformed->formula)},
    };
    *json = dup_string(out_json.dump());
    *out = transformed.release();
  });
}

} // extern "C"
