#pragma once

#include <optional>
#include <vector>

#include "mgn/divisor_class.hpp"

namespace mgn {

/// Brill-Noether class on M_h: (h+3) l - (h+1)/6 d0 - sum_{i=1}^{floor(h/2)} i(h-i) d_i.
/// Requires h >= 3 and h+1 composite; throws NoBNClass otherwise.
DivisorClass brill_noether(int h);

struct PointedBNSpec {
  int g = 2;
  std::vector<int> a;  // nonnegative, summing to g
};

/// Throws InvalidSpec.
void validate(const PointedBNSpec& spec);

/// Tracked coordinates of D_{g;a_1..a_n}: l = -1, d0 = 0, w_i = a_i(a_i+1)/2,
/// d_{0;{i,j}} = -a_i a_j; every other boundary generator Unknown.
DivisorClass pointed_bn_partial(const PointedBNSpec& spec);

/// Canonical class on its tracked coordinates: 13 l - 2 d0 + sum w_i, every
/// d_{i;S} Unknown. A supplied full table replaces the default.
DivisorClass canonical_tracked(const SpaceId& space, const std::optional<DivisorClass>& full_table = std::nullopt);

/// Class with the given lambda, delta_0 and (uniform) omega coefficients and
/// every d_{i;S} Unknown.
DivisorClass tracked_class(const SpaceId& space, const Rational& lambda, const Rational& delta0, const Rational& omega);

bool is_prime(int value);

}  // namespace mgn
