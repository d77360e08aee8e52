#pragma once

// Randomized invariant suites, shared by the unit tests and the acceptance run.

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "mgn/divisor_class.hpp"

namespace mgn::props {

struct SuiteResult {
  std::string name;
  std::size_t instances = 0;
  std::size_t failures = 0;
  std::string first_failure;

  bool ok(std::size_t minimum) const { return failures == 0 && instances >= minimum; }
};

using Rng = std::mt19937;

Rational random_rational(Rng& rng, int max_num = 9, int max_den = 6);
DivisorClass random_class(Rng& rng, const SpaceId& space, int terms, bool allow_unknown);
Permutation random_permutation(Rng& rng, int n);

SuiteResult pullback_linearity(Rng& rng, std::size_t count);
SuiteResult forget_functoriality(Rng& rng, std::size_t count);
SuiteResult canonicalize_laws(Rng& rng, std::size_t count);
SuiteResult group_action_laws(Rng& rng, std::size_t count);
SuiteResult psi_omega_round_trip(Rng& rng, std::size_t count);
SuiteResult push_pull(std::size_t minimum);
SuiteResult parser_round_trip(Rng& rng, std::size_t count);
SuiteResult json_round_trip(Rng& rng, std::size_t count);
SuiteResult average_invariance(Rng& rng, std::size_t count);
SuiteResult certificate_soundness(Rng& rng, std::size_t count);
SuiteResult certificate_scale_coherence(Rng& rng, std::size_t count);
SuiteResult certificate_matches_oracle(Rng& rng, std::size_t count);
SuiteResult solver_substitution(Rng& rng, std::size_t count);

/// The suites run by the acceptance binary.
std::vector<SuiteResult> core_suites(std::uint32_t seed, std::size_t count);

}  // namespace mgn::props
