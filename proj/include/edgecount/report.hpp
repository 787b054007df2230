#ifndef EDGECOUNT_REPORT_HPP
#define EDGECOUNT_REPORT_HPP

#include "edgecount/gadgets.hpp"
#include "edgecount/reduction.hpp"

#include <json.hpp>

namespace edgecount {

// Exact integers and rationals are emitted as decimal strings.

nlohmann::json matrix_json(const SignatureMatrix &m);
nlohmann::json key_property_json(const GadgetSpec &spec, unsigned kappa,
                                 const KeyPropertyReport &report);
nlohmann::json certificate_json(const ReductionCertificate &cert);
nlohmann::json interpolation_json(const std::string &gadget, unsigned kappa,
                                  unsigned r, const InterpolationResult &result);

} // namespace edgecount

#endif // EDGECOUNT_REPORT_HPP
