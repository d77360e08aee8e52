#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mgn/class_library.hpp"
#include "mgn/errors.hpp"
#include "mgn/expression.hpp"
#include "properties.hpp"

using namespace mgn;

namespace {

Rational q(long p, long d = 1) { return make_rational(p, d); }

}  // namespace

TEST_CASE("Brill-Noether classes") {
  const DivisorClass bn17 = brill_noether(17);
  CHECK(bn17.space() == make_space(17, 0));
  CHECK(bn17.known(GeneratorIndex::lambda()) == 20);
  CHECK(bn17.known(GeneratorIndex::delta_irr()) == -3);
  CHECK(bn17.known(GeneratorIndex::delta_sep_raw(8, PointSet{})) == -72);
  CHECK(bn17.terms().size() == 10);
  CHECK_FALSE(bn17.has_unknown());

  const DivisorClass bn23 = brill_noether(23);
  CHECK(bn23.known(GeneratorIndex::lambda()) == 26);
  CHECK(bn23.known(GeneratorIndex::delta_irr()) == -4);
  CHECK(bn23.known(GeneratorIndex::delta_sep_raw(1, PointSet{})) == -22);
  CHECK(bn23.known(GeneratorIndex::delta_sep_raw(11, PointSet{})) == -132);

  // h + 1 = 4: non-integral delta_0 coefficient is kept exact.
  CHECK(brill_noether(3).known(GeneratorIndex::delta_irr()) == q(-2, 3));
}

TEST_CASE("Brill-Noether errors") {
  CHECK_THROWS_AS(brill_noether(16), NoBNClass);  // 17 is prime
  CHECK_THROWS_AS(brill_noether(22), NoBNClass);
  CHECK_THROWS_AS(brill_noether(2), NoBNClass);
  CHECK_THROWS_AS(brill_noether(-5), NoBNClass);
}

TEST_CASE("primality") {
  CHECK(is_prime(2));
  CHECK(is_prime(17));
  CHECK(is_prime(23));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(0));
  CHECK_FALSE(is_prime(18));
  CHECK_FALSE(is_prime(-7));
}

TEST_CASE("pointed Brill-Noether tracked coordinates") {
  const DivisorClass d = pointed_bn_partial({16, {2, 2, 2, 2, 2, 1, 1, 1, 1, 1, 1}});
  const SpaceId s = make_space(16, 11);
  CHECK(d.space() == s);
  CHECK(d.known(GeneratorIndex::lambda()) == -1);
  CHECK(d.coefficient(GeneratorIndex::delta_irr()).is_zero());
  CHECK(d.known(GeneratorIndex::omega(1)) == 3);
  CHECK(d.known(GeneratorIndex::omega(11)) == 1);
  CHECK(d.known(canonicalize(s, 0, PointSet::of({1, 2}))) == -4);
  CHECK(d.known(canonicalize(s, 0, PointSet::of({5, 6}))) == -2);
  CHECK(d.known(canonicalize(s, 0, PointSet::of({10, 11}))) == -1);
  CHECK(d.coefficient(canonicalize(s, 0, PointSet::of({1, 2, 3}))).is_unknown());
  CHECK(d.coefficient(canonicalize(s, 3, PointSet{})).is_unknown());

  const DivisorClass z = pointed_bn_partial({4, {4, 0}});
  CHECK(z.known(GeneratorIndex::omega(1)) == 10);
  CHECK(z.coefficient(GeneratorIndex::omega(2)).is_zero());
  CHECK(z.coefficient(canonicalize(z.space(), 0, PointSet::of({1, 2}))).is_zero());
}

TEST_CASE("pointed Brill-Noether weight errors") {
  CHECK_THROWS_AS(pointed_bn_partial({16, {2, 2}}), InvalidSpec);
  CHECK_THROWS_AS(pointed_bn_partial({4, {5, -1}}), InvalidSpec);
  CHECK_THROWS_AS(pointed_bn_partial({4, {}}), InvalidSpec);
  CHECK_THROWS_AS(pointed_bn_partial({1, {1}}), InvalidSpec);
  CHECK_NOTHROW(validate(PointedBNSpec{18, {2, 2, 2, 2, 2, 2, 2, 2, 2}}));
}

TEST_CASE("tracked classes") {
  const SpaceId s = make_space(16, 11);
  const DivisorClass k = canonical_tracked(s);
  CHECK(k == parse_class(s, "K(16,11)"));
  CHECK(k.known(GeneratorIndex::lambda()) == 13);
  CHECK(k.known(GeneratorIndex::delta_irr()) == -2);
  for (int i = 1; i <= 11; ++i) CHECK(k.known(GeneratorIndex::omega(i)) == 1);
  CHECK(k.unknown_generators().size() == enumerate_basis(s).size() - 13);
  CHECK(k.provenance() == "K(16,11)");

  const DivisorClass t = tracked_class(make_space(22, 3), q(26), q(-4), q(2));
  CHECK(t.known(GeneratorIndex::omega(3)) == 2);
  CHECK(t.unknown_generators().size() == enumerate_basis(make_space(22, 3)).size() - 5);

  CHECK_THROWS_AS(canonical_tracked(make_space(5, 0)), InvalidSpace);
}

TEST_CASE("canonical class from a full table") {
  const SpaceId s = make_space(4, 2);
  const DivisorClass table = parse_class(s, "13*l - 2*d0 + w1 + w2 - 2*d1;{}");
  const DivisorClass k = canonical_tracked(s, table);
  CHECK(k == table);
  CHECK_FALSE(k.has_unknown());
  CHECK_THROWS_AS(canonical_tracked(make_space(4, 3), table), SpaceMismatch);
}

TEST_CASE("equivariance of the symmetric classes") {
  props::Rng rng(5);
  for (int k = 0; k < 200; ++k) {
    const int n = 1 + static_cast<int>(rng() % 6);
    const SpaceId s = make_space(4 + static_cast<int>(rng() % 8), n);
    const Permutation sigma = props::random_permutation(rng, n);
    CHECK(permute(sigma, canonical_tracked(s)) == canonical_tracked(s));
  }
  for (int k = 0; k < 200; ++k) {
    std::vector<int> a(4, 0);
    int left = 9;
    for (std::size_t i = 0; i + 1 < a.size(); ++i) {
      a[i] = static_cast<int>(rng() % (left + 1));
      left -= a[i];
    }
    a.back() = left;
    const Permutation sigma = props::random_permutation(rng, 4);
    std::vector<int> b(4);
    // (sigma . D_a) = D_b with b_{sigma(i)} = a_i.
    for (int i = 1; i <= 4; ++i) b[static_cast<std::size_t>(sigma(i) - 1)] = a[static_cast<std::size_t>(i - 1)];
    CHECK(permute(sigma, pointed_bn_partial({9, a})) == pointed_bn_partial({9, b}));
  }
}
