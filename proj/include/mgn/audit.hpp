#pragma once

// Fixed end-to-end scenarios: each recomputes the effective classes from the
// class library, compares their tracked coordinates with a stated form,
// checks a stated combination under both readings, and runs the certificate
// search on both.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mgn/certificates.hpp"

namespace mgn {

/// Comparison of one recomputed class with a stated form on l, d0 and the omegas.
struct StatedComparison {
  std::string name;         // "D1", "D1 on M(18,2)", ...
  std::string stated_form;  // formula text as stated
  DivisorClass stated;
  DivisorClass recomputed;
  std::vector<ComparisonReport::Entry> entries;
  bool agrees = true;
};

struct ClaimCheck {
  std::string stated_form;
  std::vector<Rational> x;
  CheckReport recomputed;  // against the recomputed effectives
  CheckReport stated;      // against the stated forms
};

struct AuditReport {
  std::string case_name;
  SpaceId space;
  std::string summary;
  std::vector<StatedComparison> comparisons;
  ClaimCheck claim;
  CertificateProblem recomputed_problem;
  CertificateOutcome recomputed_outcome;
  CertificateProblem stated_problem;
  CertificateOutcome stated_outcome;
  bool consistent = true;
  std::vector<std::string> findings;
};

/// "m16n11", "m18n9", "m22n3", "m22n4".
const std::vector<std::string>& audit_case_names();

/// Throws std::invalid_argument for an unknown case name.
AuditReport run_audit(std::string_view case_name);

/// The recomputed certificate problem of a case, for export.
CertificateProblem audit_problem(std::string_view case_name);

}  // namespace mgn
