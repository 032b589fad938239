#pragma once

#include "f5lab/detect.hpp"
#include "f5lab/exact.hpp"

#include <string>

#include <json.hpp>

namespace f5lab {

/// Verdict emitted by every lemma and audit verifier.
struct CertificateReport {
    std::string lemma;
    nlohmann::json parameter;  ///< null, an integer, or an object of named inputs
    bool pass = false;
    nlohmann::json details = nlohmann::json::object();
};

nlohmann::json to_json(const CertificateReport& r);

/// {"exact": "p/q", "approx": double}
nlohmann::json exact_json(const Rational& r);
nlohmann::json exact_json(const ExactScalar& x);

nlohmann::json to_json(const FactReport& r);

}  // namespace f5lab
