#pragma once

// Exact feasibility of  target = sum_j x_j E_j + residual,  x_j >= 0, with the
// residual nonnegative on a declared cone of boundary generators and zero
// elsewhere. Coordinates that are Unknown anywhere are not checked; they are
// returned as caveats.

#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "mgn/divisor_class.hpp"

namespace mgn {

/// Generators allowed to carry a nonnegative residual.
struct ResidualCone {
  bool include_boundary = true;  // delta_0 and every d_{i;S}
  std::set<GeneratorIndex> extra;

  bool contains(const GeneratorIndex& x) const {
    return (include_boundary && x.is_boundary()) || extra.count(x) > 0;
  }
};

struct CertificateProblem {
  DivisorClass target;
  std::vector<DivisorClass> effectives;
  ResidualCone residual_cone;
  std::vector<std::string> labels;  // optional names of the effectives

  std::string label(std::size_t j) const;
};

/// Throws SpaceMismatch when the classes do not share one space.
void validate(const CertificateProblem& problem);

enum class CheckKind { Multiplier, Equality, Residual, Caveat };

struct CheckEntry {
  CheckKind kind;
  std::optional<GeneratorIndex> generator;  // absent for Multiplier entries
  std::size_t multiplier = 0;               // Multiplier entries only
  Coefficient value;                        // residual, or x_j; Unknown for caveats
  bool pass = true;
};

struct CheckReport {
  std::vector<CheckEntry> entries;
  bool pass = true;

  std::vector<CheckEntry> failures() const;
  std::vector<GeneratorIndex> caveats() const;
  /// Residual on a checked coordinate; nullopt for caveats and unlisted coordinates.
  std::optional<Rational> residual(const GeneratorIndex& x) const;
};

/// Throws DimensionMismatch if x.size() != effectives.size().
CheckReport check_combination(const CertificateProblem& problem, std::span<const Rational> x);

struct Certificate {
  std::vector<Rational> x;
  std::map<GeneratorIndex, Rational> residual;  // checked cone coordinates
  std::vector<GeneratorIndex> caveats;
};

enum class WitnessKind {
  EqualityConflict,    // the equality constraints have no common solution
  NegativeResidual,    // the equalities force x and a cone coordinate goes negative
  NegativeMultiplier,  // the equalities force some x_j < 0
  Farkas,              // general nonnegative combination reaches 0 <= negative
};

/// Constraints are named by generator label ("l", "w3", "d0") or "x<j>" for x_j >= 0.
/// Farkas form: sum y_eq (e.x = t) + sum y_in (e.x <= t) vanishes in x and has
/// right-hand side `farkas_value` < 0, with every y_in >= 0.
struct InfeasibilityWitness {
  WitnessKind kind = WitnessKind::Farkas;
  std::optional<GeneratorIndex> coordinate;
  std::optional<std::size_t> multiplier;
  std::vector<Rational> forced_x;
  Rational value;  // violating residual (or x_j) at forced_x
  std::vector<std::pair<std::string, Rational>> equality_multipliers;
  std::vector<std::pair<std::string, Rational>> inequality_multipliers;
  Rational farkas_value;
  std::string derivation;
};

struct Infeasible {
  InfeasibilityWitness witness;
  std::vector<GeneratorIndex> caveats;
};

using CertificateOutcome = std::variant<Certificate, Infeasible>;

/// Deterministic: equalities are processed in basis order, free parameters
/// are eliminated by Fourier-Motzkin and chosen at their tightest lower bound.
/// Throws UnknownCoefficient if a tracked coordinate (l, d0, w_i) is Unknown.
CertificateOutcome find_certificate(const CertificateProblem& problem);

/// Re-evaluates the Farkas combination against the problem's constraints.
bool verify_witness(const CertificateProblem& problem, const InfeasibilityWitness& witness);

std::string to_string(WitnessKind kind);
std::string to_string(CheckKind kind);

}  // namespace mgn
