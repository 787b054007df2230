#include "edgecount/report.hpp"

namespace edgecount {

nlohmann::json matrix_json(const SignatureMatrix &m) {
  nlohmann::json rows = nlohmann::json::array();
  for (Color i = 0; i < m.kappa(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (Color j = 0; j < m.kappa(); ++j)
      row.push_back(m.at(i, j).get_str());
    rows.push_back(std::move(row));
  }
  return rows;
}

nlohmann::json key_property_json(const GadgetSpec &spec, unsigned kappa,
                                 const KeyPropertyReport &report) {
  return {
      {"gadget", spec.name},
      {"kappa", kappa},
      {"r", spec.r},
      {"planar_claimed", spec.planar_claimed},
      {"holds", report.holds},
      {"c", report.c.get_str()},
      {"domain_invariant", report.domain_invariant},
      {"a", report.a.get_str()},
      {"b", report.b.get_str()},
      {"matrix", matrix_json(report.matrix)},
  };
}

nlohmann::json certificate_json(const ReductionCertificate &cert) {
  return {
      {"gadget", cert.gadget},
      {"kappa", cert.kappa},
      {"r", cert.r},
      {"c", cert.c.get_str()},
      {"E", cert.edge_count},
      {"multiplier", cert.multiplier().get_str()},
      {"relation", "N(G') = c^E * N(G)"},
      {"input_vertices", cert.input.vertex_count()},
      {"output_vertices", cert.output.vertex_count()},
      {"output_edges", cert.output.edge_count()},
  };
}

nlohmann::json interpolation_json(const std::string &gadget, unsigned kappa,
                                  unsigned r,
                                  const InterpolationResult &result) {
  const StratifiedSystem &sys = result.system;
  auto strings = [](const auto &values) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto &v : values)
      out.push_back(v.get_str());
    return out;
  };
  return {
      {"gadget", gadget},
      {"kappa", kappa},
      {"r", r},
      {"m", sys.m},
      {"a", sys.a.get_str()},
      {"b", sys.b.get_str()},
      {"lambda1", sys.lambda1.get_str()},
      {"lambda2", sys.lambda2.get_str()},
      {"columns", strings(sys.columns)},
      {"merged_from", sys.merged_from},
      {"rows", strings(sys.rows)},
      {"solution", strings(sys.solution)},
      {"recovered", result.recovered.get_str()},
  };
}

} // namespace edgecount
