#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "mgn/divisor_class.hpp"

namespace mgn {

/// Pullback along s: M_{g,2} -> M_{g+1} (glue the two marked points).
/// `c` lives on M_{g+1,0}; the result on M_{g,2}. Throws SpaceMismatch for
/// n != 0 and UnknownCoefficient when any coordinate is Unknown.
DivisorClass clutch_pullback(const DivisorClass& c);

/// s^* delta_0 on M_{g,2}: delta_0 - w1 - w2 - 2 d0;{1,2} + sum_{i=1}^{g-1} d_i;{1}.
DivisorClass pullback_of_delta_irr(int g);

/// Forgetful map M_{g,n} -> M_{g,m} along the injection phi: {1..m} -> {1..n}.
struct ForgetPullback {
  int g = 2;
  int m = 0;
  int n = 0;
  std::vector<int> embedding;  // embedding[j-1] = phi(j)

  SpaceId source() const { return SpaceId{g, m}; }
  SpaceId target() const { return SpaceId{g, n}; }
};

/// Throws InvalidEmbedding unless phi is an injection into {1..n}.
ForgetPullback make_forget_pullback(int g, int n, std::vector<int> embedding);

/// "1:3,2:7" -> {3, 7}. Keys must be exactly 1..m.
std::vector<int> parse_embedding(std::string_view text);
std::string format_embedding(const std::vector<int>& embedding);

/// lambda, delta_0 fixed; w_j -> w_phi(j); d_{i;S} -> sum of d_{i;T} with
/// T meeting image(phi) in phi(S). Unknown coordinates feed Unknown.
DivisorClass forget_pullback(const ForgetPullback& op, const DivisorClass& c);

/// Uniform average of forget_pullback over all injections {1,2} -> {1..n}.
DivisorClass lift_and_average(const DivisorClass& c, int n);

}  // namespace mgn
