#pragma once

// JSON forms. Rationals are lowest-terms strings; generators use their labels;
// keys are emitted in basis order.

#include <json.hpp>

#include <vector>

#include "mgn/audit.hpp"
#include "mgn/certificates.hpp"
#include "mgn/test_curves.hpp"

namespace mgn {

using Json = nlohmann::ordered_json;

/// {"g","n","coeffs":{label:"p/q"},"unknown":[label...],"provenance"?}
Json to_json(const DivisorClass& c);
/// Throws InvalidSpec on a malformed document.
DivisorClass class_from_json(const Json& j);

/// {"name","g","n","pairings":{label:int},"pushforward_d0":int|null,"ambiguous":[],"unresolved":{},"note"?}
Json to_json(const TestCurve& curve);
TestCurve curve_from_json(const Json& j);
/// {"curves":[...]}; reading also accepts a bare array.
Json catalog_to_json(const std::vector<TestCurve>& catalog);
std::vector<TestCurve> catalog_from_json(const Json& j);

/// {"effectives":[class...],"labels":[...]}; reading also accepts a bare array.
Json effectives_to_json(const std::vector<DivisorClass>& effectives, const std::vector<std::string>& labels);
std::vector<DivisorClass> effectives_from_json(const Json& j, std::vector<std::string>* labels = nullptr);

/// {"target","effectives","labels","residual_cone":{"boundary":bool,"extra":[...]}}
Json to_json(const CertificateProblem& problem);
CertificateProblem problem_from_json(const Json& j);

Json to_json(const CheckReport& report, const CertificateProblem& problem);
Json to_json(const CertificateOutcome& outcome, const CertificateProblem& problem);
Json to_json(const SolveResult& result);
Json to_json(const AuditReport& report);

Json to_json(const Rational& r);
Rational rational_from_json(const Json& j);

/// Throws InvalidSpec when the file cannot be read or parsed.
Json read_json_file(const std::string& path);

}  // namespace mgn
