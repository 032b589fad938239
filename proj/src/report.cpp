#include "f5lab/report.hpp"

#include "f5lab/io.hpp"

namespace f5lab {

nlohmann::json to_json(const CertificateReport& r) {
    return {{"lemma", r.lemma}, {"parameter", r.parameter}, {"pass", r.pass}, {"details", r.details}};
}

nlohmann::json exact_json(const Rational& r) { return {{"exact", r.to_string()}, {"approx", r.to_double()}}; }

nlohmann::json exact_json(const ExactScalar& x) { return {{"exact", x.to_string()}, {"approx", x.to_double()}}; }

nlohmann::json to_json(const FactReport& r) {
    nlohmann::json v = nlohmann::json::array();
    for (const auto& viol : r.violations) v.push_back({{"subject", viol.subject}, {"witness", io::to_json(viol.witness)}});
    return {{"fact", r.fact}, {"holds", r.holds}, {"violations", v}};
}

}  // namespace f5lab
