#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mgn/class_library.hpp"
#include "mgn/divisor_class.hpp"
#include "mgn/errors.hpp"
#include "mgn/expression.hpp"
#include "mgn/pullbacks.hpp"
#include "properties.hpp"

using namespace mgn;

namespace {

const GeneratorIndex L = GeneratorIndex::lambda();
const GeneratorIndex D0 = GeneratorIndex::delta_irr();
GeneratorIndex w(int i) { return GeneratorIndex::omega(i); }
Rational q(long p, long d = 1) { return make_rational(p, d); }

// Shared between tests; the lift to 11 points is the expensive step.
const std::vector<DivisorClass>& m16n11_effectives() {
  static const std::vector<DivisorClass> e = [] {
    const DivisorClass d1 = lift_and_average(clutch_pullback(brill_noether(17)), 11);
    const DivisorClass d2 = average_over(cyclic_group(Permutation::standard_cycle(11, 11)),
                                         pointed_bn_partial({16, {2, 2, 2, 2, 2, 1, 1, 1, 1, 1, 1}}));
    return std::vector<DivisorClass>{d1, d2};
  }();
  return e;
}

}  // namespace

TEST_CASE("coefficients") {
  const Coefficient u = Coefficient::unknown();
  CHECK(u.is_unknown());
  CHECK((u + Coefficient(q(1))).is_unknown());
  CHECK((q(0) * u).is_zero());
  CHECK((q(2) * u).is_unknown());
  CHECK(to_string(u) == "?");
  CHECK(to_string(Coefficient(q(-6, 11))) == "-6/11");
}

TEST_CASE("divisor class storage") {
  const SpaceId s = make_space(3, 2);
  DivisorClass c(s);
  c.set(L, q(0));
  CHECK(c.is_zero());
  c.accumulate(L, q(1));
  c.accumulate(L, q(-1));
  CHECK(c.is_zero());
  CHECK_THROWS_AS(c.set(GeneratorIndex::delta_sep_raw(2, PointSet::of({1})), q(1)), InvalidGenerator);
  CHECK_THROWS_AS(c.set(w(3), q(1)), InvalidGenerator);
  c.set_unknown(D0);
  CHECK(c.has_unknown());
  CHECK_THROWS_AS(c.known(D0), UnknownCoefficient);
  CHECK(c.known(L) == 0);
}

TEST_CASE("add examples") {
  const SpaceId s = make_space(3, 2);
  CHECK((parse_class(s, "l") + parse_class(s, "-l")).is_zero());
  CHECK(parse_class(s, "3*w1 + ?*d1;{}") + parse_class(s, "w1") == parse_class(s, "4*w1 + ?*d1;{}"));
  CHECK_THROWS_AS(add(DivisorClass(s), DivisorClass(make_space(3, 1))), SpaceMismatch);
}

TEST_CASE("add: 2/3 D1 + 1/3 D2 on M(16,11)") {
  const auto& e = m16n11_effectives();
  const DivisorClass k = q(2, 3) * e[0] + q(1, 3) * e[1];
  CHECK(k.coefficient(L) == Coefficient(q(13)));
  CHECK(k.coefficient(D0) == Coefficient(q(-2)));
  for (int i = 1; i <= 11; ++i) CHECK(k.coefficient(w(i)) == Coefficient(q(1)));
}

TEST_CASE("scale examples") {
  const SpaceId s = make_space(16, 11);
  CHECK(scale(q(0), parse_class(s, "?*d1;{1} + 5*l")).is_zero());
  CHECK(q(3, 5) * parse_class(s, "22*l") == parse_class(s, "66/5*l"));
  const DivisorClass d1 = tracked_class(s, q(20), q(-3), q(6, 11));
  const DivisorClass scaled = q(2, 3) * d1;
  CHECK(scaled.coefficient(L) == Coefficient(q(40, 3)));
  CHECK(scaled.coefficient(D0) == Coefficient(q(-2)));
  CHECK(scaled.coefficient(w(7)) == Coefficient(q(4, 11)));
  CHECK(scaled.coefficient(GeneratorIndex::delta_sep_raw(1, PointSet{})).is_unknown());
}

TEST_CASE("average_over examples") {
  const DivisorClass dga = pointed_bn_partial({16, {2, 2, 2, 2, 2, 1, 1, 1, 1, 1, 1}});
  const std::vector<Permutation> id{Permutation::identity(11)};
  CHECK(average_over(id, dga) == dga);

  const DivisorClass a = average_over(cyclic_group(Permutation::standard_cycle(11, 11)), dga);
  CHECK(a.coefficient(L) == Coefficient(q(-1)));
  for (int i = 1; i <= 11; ++i) CHECK(a.coefficient(w(i)) == Coefficient(q(21, 11)));

  // Another 11-cycle generates a different group with the same tracked averages.
  const std::vector<int> order{1, 6, 2, 7, 3, 8, 4, 9, 5, 10, 11};
  const DivisorClass b = average_over(cyclic_group(Permutation::cycle(11, order)), dga);
  CHECK(b.coefficient(L) == Coefficient(q(-1)));
  CHECK(b.coefficient(D0).is_zero());
  for (int i = 1; i <= 11; ++i) CHECK(b.coefficient(w(i)) == Coefficient(q(21, 11)));
  // Orbit sums of -a_i a_j: 25 over cyclically adjacent pairs, 24 over pairs at distance 2.
  const GeneratorIndex d12 = GeneratorIndex::delta_sep_raw(0, PointSet::of({1, 2}));
  const GeneratorIndex d13 = GeneratorIndex::delta_sep_raw(0, PointSet::of({1, 3}));
  CHECK(a.coefficient(d12) == Coefficient(q(-25, 11)));
  CHECK(a.coefficient(d13) == Coefficient(q(-24, 11)));
  CHECK(b.coefficient(d12) == Coefficient(q(-25, 11)));

  CHECK_THROWS_AS(average_over(std::vector<Permutation>{}, dga), InvalidPermutation);
  CHECK_THROWS_AS(average_over(std::vector<Permutation>{Permutation::identity(3)}, dga), SpaceMismatch);
}

TEST_CASE("compare examples") {
  const SpaceId s = make_space(16, 11);
  const DivisorClass a = parse_class(s, "13*l + ?*d1;{}");
  const ComparisonReport self = compare(a, a);
  CHECK(self.equal_on_tracked);
  CHECK(self.count(ComparisonStatus::Differ) == 0);

  const ComparisonReport r = compare(a, parse_class(s, "13*l"));
  CHECK(r.equal_on_tracked);
  REQUIRE(r.entries.size() == 2);
  CHECK(r.entries[0].status == ComparisonStatus::Equal);
  CHECK(r.entries[1].status == ComparisonStatus::Incomparable);

  const ComparisonReport d = compare(parse_class(s, "13*l"), parse_class(s, "12*l"));
  CHECK_FALSE(d.equal_on_tracked);
  CHECK(d.differences().size() == 1);
  CHECK_THROWS_AS(compare(a, DivisorClass(make_space(16, 10))), SpaceMismatch);
}

TEST_CASE("compare: 2/3 D1 + 1/3 D2 against the tracked canonical class") {
  const auto& e = m16n11_effectives();
  const ComparisonReport r = compare(q(2, 3) * e[0] + q(1, 3) * e[1], canonical_tracked(make_space(16, 11)));
  CHECK(r.equal_on_tracked);
  for (const auto& entry : r.entries) {
    if (entry.generator.kind == GeneratorKind::DeltaSep) {
      CHECK(entry.status == ComparisonStatus::Incomparable);
    } else {
      CHECK(entry.status == ComparisonStatus::Equal);
    }
  }
}

TEST_CASE("vector-space laws on known coordinates") {
  props::Rng rng(7);
  for (int k = 0; k < 200; ++k) {
    const SpaceId s = make_space(3 + k % 4, k % 4);
    const DivisorClass x = props::random_class(rng, s, 4, false);
    const DivisorClass y = props::random_class(rng, s, 4, false);
    const DivisorClass z = props::random_class(rng, s, 4, false);
    const Rational a = props::random_rational(rng), b = props::random_rational(rng);
    CHECK((x + y) + z == x + (y + z));
    CHECK(x + y == y + x);
    CHECK(a * (x + y) == a * x + a * y);
    CHECK((a + b) * x == a * x + b * x);
    CHECK((x - x).is_zero());
  }
}

TEST_CASE("Unknown propagation is monotone") {
  props::Rng rng(11);
  for (int k = 0; k < 200; ++k) {
    const SpaceId s = make_space(4, 3);
    const DivisorClass x = props::random_class(rng, s, 5, true);
    const DivisorClass y = props::random_class(rng, s, 5, true);
    const DivisorClass sum = x + y;
    for (const auto& [g, c] : sum.terms())
      if (c.is_known()) CHECK((x.coefficient(g).is_known() && y.coefficient(g).is_known()));
  }
}

TEST_CASE("averaging invariants under random inputs") {
  props::Rng rng(12);
  const auto r = props::average_invariance(rng, 200);
  INFO(r.first_failure);
  CHECK(r.ok(200));
}
