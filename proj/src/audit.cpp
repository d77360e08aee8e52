#include "mgn/audit.hpp"

#include <stdexcept>

#include "mgn/class_library.hpp"
#include "mgn/pullbacks.hpp"

namespace mgn {

namespace {

struct StatedTriple {
  std::string name;
  std::string form;
  SpaceId space;
  Rational lambda, delta0, omega;
};

struct CaseSpec {
  std::string name;
  int g = 0;
  int n = 0;
  std::optional<PointedBNSpec> dga;
  std::vector<StatedTriple> stated;  // "D1 on M(g,2)" first when present, then D1, D2
  std::string claim_form;
  std::vector<Rational> claim_x;
  std::string summary;
};

CaseSpec case_spec(std::string_view name) {
  if (name == "m16n11")
    return {"m16n11",
            16,
            11,
            PointedBNSpec{16, {2, 2, 2, 2, 2, 1, 1, 1, 1, 1, 1}},
            {{"D1 on M(16,2)", "20λ + 3(ω₁ + ω₂ − δ₀ + …)", SpaceId{16, 2}, 20, -3, 3},
             {"D1", "D₁ = 20λ + 6/11 Σω − 3δ₀", SpaceId{16, 11}, 20, -3, make_rational(6, 11)},
             {"D2", "D₂ = −λ + 21/11 Σω", SpaceId{16, 11}, -1, 0, make_rational(21, 11)}},
            "K = 2D₁/3 + D₂/3 + boundary",
            {make_rational(2, 3), make_rational(1, 3)},
            "BN(17) clutched to M(16,2), lifted and averaged to M(16,11); DGA(16;2^5,1^6) averaged over an 11-cycle"};
  if (name == "m18n9")
    return {"m18n9",
            18,
            9,
            PointedBNSpec{18, {2, 2, 2, 2, 2, 2, 2, 2, 2}},
            {{"D1 on M(18,2)", "22λ − 10δ₀/3 + 3ω", SpaceId{18, 2}, 22, make_rational(-10, 3), 3},
             {"D1", "22λ − 10δ₀/3 + 2/3 Σω", SpaceId{18, 9}, 22, make_rational(-10, 3), make_rational(2, 3)},
             {"D2", "−λ + 3Σω", SpaceId{18, 9}, -1, 0, 3}},
            "3D₁/5 + D₂ = 13λ − 2δ₀ + Σω",
            {make_rational(3, 5), Rational(1)},
            "BN(19) clutched to M(18,2), lifted and averaged to M(18,9); DGA(18;2^9)"};
  if (name == "m22n3" || name == "m22n4") {
    const int n = name == "m22n3" ? 3 : 4;
    return {std::string(name),
            22,
            n,
            std::nullopt,
            {{"D1", "26λ − 4δ₀ + 2Σω", SpaceId{22, n}, 26, -4, 2}},
            "K = D₁/2 + boundary, from 26λ − 4δ₀ + 2Σω",
            {make_rational(1, 2)},
            "BN(23) clutched to M(22,2), lifted and averaged to M(22," + std::to_string(n) + ")"};
  }
  throw std::invalid_argument("unknown audit case '" + std::string(name) + "'");
}

struct Recomputed {
  DivisorClass d1_two_pointed;
  std::vector<DivisorClass> effectives;
};

Recomputed recompute(const CaseSpec& spec) {
  DivisorClass d1_2 = clutch_pullback(brill_noether(spec.g + 1));
  d1_2.set_provenance("clutch(BN(" + std::to_string(spec.g + 1) + "))");
  DivisorClass d1 = lift_and_average(d1_2, spec.n);
  d1.set_provenance("D1");
  std::vector<DivisorClass> effectives{d1};
  if (spec.dga) {
    DivisorClass d2 = pointed_bn_partial(*spec.dga);
    if (spec.name == "m16n11") d2 = average_over(cyclic_group(Permutation::standard_cycle(spec.n, spec.n)), d2);
    d2.set_provenance("D2");
    effectives.push_back(std::move(d2));
  }
  return {std::move(d1_2), std::move(effectives)};
}

std::vector<std::string> effective_labels(std::size_t k) {
  std::vector<std::string> out;
  for (std::size_t j = 0; j < k; ++j) out.push_back("D" + std::to_string(j + 1));
  return out;
}

StatedComparison compare_tracked(const StatedTriple& s, const DivisorClass& recomputed) {
  StatedComparison out{s.name, s.form, tracked_class(s.space, s.lambda, s.delta0, s.omega), recomputed, {}, true};
  std::vector<GeneratorIndex> tracked{GeneratorIndex::lambda(), GeneratorIndex::delta_irr()};
  for (int i = 1; i <= s.space.n; ++i) tracked.push_back(GeneratorIndex::omega(i));
  for (const auto& x : tracked) {
    const Coefficient l = out.stated.coefficient(x);
    const Coefficient r = recomputed.coefficient(x);
    const ComparisonStatus st = (l.is_unknown() || r.is_unknown()) ? ComparisonStatus::Incomparable
                                : l == r                          ? ComparisonStatus::Equal
                                                                  : ComparisonStatus::Differ;
    if (st == ComparisonStatus::Differ) out.agrees = false;
    out.entries.push_back({x, st, l, r});
  }
  return out;
}

std::string format_x(const std::vector<Rational>& x) {
  std::string out = "(";
  for (std::size_t j = 0; j < x.size(); ++j) out += (j ? ", " : "") + to_string(x[j]);
  return out + ")";
}

std::string describe(const CertificateOutcome& outcome) {
  if (const auto* c = std::get_if<Certificate>(&outcome)) {
    std::string out = "feasible at x = " + format_x(c->x);
    auto it = c->residual.find(GeneratorIndex::delta_irr());
    out += ", d0 residual " + (it == c->residual.end() ? std::string("0") : to_string(it->second));
    return out;
  }
  return "infeasible: " + std::get<Infeasible>(outcome).witness.derivation;
}

std::string describe_failures(const CheckReport& report) {
  std::string out;
  for (const auto& e : report.failures()) {
    if (!out.empty()) out += "; ";
    out += e.kind == CheckKind::Multiplier ? "x" + std::to_string(e.multiplier + 1) + " = " + to_string(e.value)
                                           : to_string(*e.generator) + " residual " + to_string(e.value);
  }
  return out;
}

}  // namespace

const std::vector<std::string>& audit_case_names() {
  static const std::vector<std::string> names{"m16n11", "m18n9", "m22n3", "m22n4"};
  return names;
}

CertificateProblem audit_problem(std::string_view case_name) {
  const CaseSpec spec = case_spec(case_name);
  Recomputed rc = recompute(spec);
  const std::size_t k = rc.effectives.size();
  return CertificateProblem{canonical_tracked(make_space(spec.g, spec.n)), std::move(rc.effectives), {},
                            effective_labels(k)};
}

AuditReport run_audit(std::string_view case_name) {
  const CaseSpec spec = case_spec(case_name);
  const SpaceId space = make_space(spec.g, spec.n);
  Recomputed rc = recompute(spec);
  const DivisorClass target = canonical_tracked(space);
  const std::size_t k = rc.effectives.size();

  std::vector<StatedComparison> comparisons;
  std::vector<DivisorClass> stated_effectives;
  std::size_t next = 0;
  for (const auto& s : spec.stated) {
    const bool two_pointed = s.space.n == 2 && spec.n != 2;
    const DivisorClass& recomputed = two_pointed ? rc.d1_two_pointed : rc.effectives[next++];
    comparisons.push_back(compare_tracked(s, recomputed));
    if (!two_pointed) stated_effectives.push_back(comparisons.back().stated);
  }

  CertificateProblem recomputed_problem{target, rc.effectives, {}, effective_labels(k)};
  CertificateProblem stated_problem{target, std::move(stated_effectives), {}, effective_labels(k)};
  ClaimCheck claim{spec.claim_form, spec.claim_x, check_combination(recomputed_problem, spec.claim_x),
                   check_combination(stated_problem, spec.claim_x)};
  CertificateOutcome recomputed_outcome = find_certificate(recomputed_problem);
  CertificateOutcome stated_outcome = find_certificate(stated_problem);
  AuditReport report{spec.name,
                     space,
                     spec.summary,
                     std::move(comparisons),
                     std::move(claim),
                     std::move(recomputed_problem),
                     std::move(recomputed_outcome),
                     std::move(stated_problem),
                     std::move(stated_outcome),
                     true,
                     {}};

  for (const auto& c : report.comparisons) {
    if (c.agrees) continue;
    report.consistent = false;
    for (const auto& e : c.entries) {
      if (e.status != ComparisonStatus::Differ) continue;
      report.findings.push_back(c.name + ": " + to_string(e.generator) + " stated " + to_string(e.left) +
                                ", recomputed " + to_string(e.right));
      if (e.generator.kind == GeneratorKind::Omega) break;  // the omegas agree with each other
    }
  }
  if (!report.claim.recomputed.pass) {
    report.consistent = false;
    report.findings.push_back("claimed x = " + format_x(spec.claim_x) +
                              " fails on the recomputed classes: " + describe_failures(report.claim.recomputed));
  }
  if (!report.claim.stated.pass)
    report.findings.push_back("claimed x = " + format_x(spec.claim_x) +
                              " fails on the stated forms: " + describe_failures(report.claim.stated));
  if (!std::holds_alternative<Certificate>(report.recomputed_outcome)) report.consistent = false;
  report.findings.push_back("recomputed classes: " + describe(report.recomputed_outcome));
  report.findings.push_back("stated forms: " + describe(report.stated_outcome));
  return report;
}

}  // namespace mgn
