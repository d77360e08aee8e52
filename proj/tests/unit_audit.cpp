#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "mgn/audit.hpp"

using namespace mgn;

namespace {

Rational q(long p, long d = 1) { return make_rational(p, d); }

bool has_finding(const AuditReport& r, const std::string& text) {
  return std::any_of(r.findings.begin(), r.findings.end(), [&](const std::string& f) { return f == text; });
}

const StatedComparison& comparison(const AuditReport& r, const std::string& name) {
  auto it = std::find_if(r.comparisons.begin(), r.comparisons.end(), [&](const auto& c) { return c.name == name; });
  REQUIRE(it != r.comparisons.end());
  return *it;
}

}  // namespace

TEST_CASE("case names") {
  CHECK(audit_case_names() == std::vector<std::string>{"m16n11", "m18n9", "m22n3", "m22n4"});
  CHECK_THROWS_AS(run_audit("m17n2"), std::invalid_argument);
  CHECK_THROWS_AS(audit_problem(""), std::invalid_argument);
}

TEST_CASE("m16n11 is consistent") {
  const AuditReport r = run_audit("m16n11");
  CHECK(r.consistent);
  CHECK(r.space == make_space(16, 11));
  REQUIRE(r.comparisons.size() == 3);
  for (const auto& c : r.comparisons) CHECK(c.agrees);
  CHECK(r.claim.recomputed.pass);
  CHECK(r.claim.stated.pass);
  REQUIRE(std::holds_alternative<Certificate>(r.recomputed_outcome));
  CHECK(std::get<Certificate>(r.recomputed_outcome).x == std::vector<Rational>{q(2, 3), q(1, 3)});
  CHECK(std::get<Certificate>(r.stated_outcome).x == std::vector<Rational>{q(2, 3), q(1, 3)});
  CHECK(has_finding(r, "recomputed classes: feasible at x = (2/3, 1/3), d0 residual 0"));
}

TEST_CASE("m18n9: the stated D1 and the claim disagree with the recomputation") {
  const AuditReport r = run_audit("m18n9");
  CHECK_FALSE(r.consistent);

  const StatedComparison& two = comparison(r, "D1 on M(18,2)");
  CHECK_FALSE(two.agrees);
  CHECK(two.recomputed.known(GeneratorIndex::omega(1)) == q(10, 3));
  CHECK(two.stated.known(GeneratorIndex::omega(1)) == 3);
  const StatedComparison& d1 = comparison(r, "D1");
  CHECK_FALSE(d1.agrees);
  CHECK(d1.recomputed.known(GeneratorIndex::omega(9)) == q(20, 27));
  CHECK(d1.recomputed.known(GeneratorIndex::delta_irr()) == q(-10, 3));
  CHECK(comparison(r, "D2").agrees);

  CHECK_FALSE(r.claim.recomputed.pass);
  CHECK_FALSE(r.claim.stated.pass);
  CHECK(r.claim.recomputed.residual(GeneratorIndex::lambda()) == q(4, 5));
  CHECK(r.claim.recomputed.residual(GeneratorIndex::omega(1)) == q(-22, 9));
  CHECK(r.claim.stated.residual(GeneratorIndex::omega(1)) == q(-12, 5));

  REQUIRE(std::holds_alternative<Infeasible>(r.recomputed_outcome));
  const InfeasibilityWitness& w = std::get<Infeasible>(r.recomputed_outcome).witness;
  CHECK(w.kind == WitnessKind::NegativeResidual);
  CHECK(w.coordinate == GeneratorIndex::delta_irr());
  CHECK(w.forced_x == std::vector<Rational>{q(540, 901), q(167, 901)});
  CHECK(w.value == q(-2, 901));
  CHECK(verify_witness(r.recomputed_problem, w));

  REQUIRE(std::holds_alternative<Certificate>(r.stated_outcome));
  CHECK(std::get<Certificate>(r.stated_outcome).x == std::vector<Rational>{q(3, 5), q(1, 5)});
}

TEST_CASE("m22n3: the equalities cannot be met") {
  const AuditReport r = run_audit("m22n3");
  CHECK_FALSE(r.consistent);
  CHECK_FALSE(comparison(r, "D1").agrees);
  REQUIRE(std::holds_alternative<Infeasible>(r.recomputed_outcome));
  const InfeasibilityWitness& w = std::get<Infeasible>(r.recomputed_outcome).witness;
  CHECK(w.kind == WitnessKind::EqualityConflict);
  CHECK(w.coordinate == GeneratorIndex::omega(1));
  CHECK(w.forced_x == std::vector<Rational>{q(1, 2)});
  CHECK(w.value == q(-1, 3));
  CHECK(verify_witness(r.recomputed_problem, w));
  CHECK(std::holds_alternative<Certificate>(r.stated_outcome));
}

TEST_CASE("m22n4 is consistent") {
  const AuditReport r = run_audit("m22n4");
  CHECK(r.consistent);
  CHECK(comparison(r, "D1").agrees);
  REQUIRE(std::holds_alternative<Certificate>(r.recomputed_outcome));
  const Certificate& c = std::get<Certificate>(r.recomputed_outcome);
  CHECK(c.x == std::vector<Rational>{q(1, 2)});
  CHECK(c.residual.at(GeneratorIndex::delta_irr()) == 0);
}

TEST_CASE("audit_problem matches the report") {
  const CertificateProblem p = audit_problem("m22n4");
  CHECK(p.effectives == run_audit("m22n4").recomputed_problem.effectives);
  CHECK(p.labels == std::vector<std::string>{"D1"});
}
