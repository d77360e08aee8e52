#include "mgn/class_library.hpp"

#include <numeric>

#include "mgn/errors.hpp"

namespace mgn {

bool is_prime(int value) {
  if (value < 2) return false;
  for (int d = 2; d * d <= value; ++d)
    if (value % d == 0) return false;
  return true;
}

DivisorClass brill_noether(int h) {
  if (h < 3) throw NoBNClass("Brill-Noether class needs h >= 3, got " + std::to_string(h));
  if (is_prime(h + 1))
    throw NoBNClass("no effective Brill-Noether divisor on M_" + std::to_string(h) + ": h+1 = " +
                    std::to_string(h + 1) + " is prime");
  const SpaceId space = make_space(h, 0);
  DivisorClass c(space, "BN(" + std::to_string(h) + ")");
  c.set(GeneratorIndex::lambda(), Rational(h + 3));
  c.set(GeneratorIndex::delta_irr(), make_rational(-(h + 1), 6));
  for (int i = 1; i <= h / 2; ++i) c.set(canonicalize(space, i, PointSet{}), Rational(-i * (h - i)));
  return c;
}

void validate(const PointedBNSpec& spec) {
  if (spec.g < 2) throw InvalidSpec("pointed Brill-Noether spec needs g >= 2");
  if (spec.a.empty() || static_cast<int>(spec.a.size()) > kMaxMarkedPoints)
    throw InvalidSpec("pointed Brill-Noether spec needs 1.." + std::to_string(kMaxMarkedPoints) + " weights");
  for (int ai : spec.a)
    if (ai < 0) throw InvalidSpec("weights must be nonnegative");
  if (std::accumulate(spec.a.begin(), spec.a.end(), 0) != spec.g)
    throw InvalidSpec("weights must add up to g = " + std::to_string(spec.g));
}

namespace {

std::string spec_label(const PointedBNSpec& spec) {
  std::string out = "DGA(" + std::to_string(spec.g) + ";";
  for (std::size_t k = 0; k < spec.a.size(); ++k) out += (k ? "," : "") + std::to_string(spec.a[k]);
  return out + ")";
}

void mark_boundary_unknown(DivisorClass& c, bool keep_rational_pairs) {
  for (const auto& x : enumerate_basis(c.space())) {
    if (x.kind != GeneratorKind::DeltaSep) continue;
    if (keep_rational_pairs && x.index == 0 && x.points.size() == 2) continue;
    c.set_unknown(x);
  }
}

}  // namespace

DivisorClass pointed_bn_partial(const PointedBNSpec& spec) {
  validate(spec);
  const int n = static_cast<int>(spec.a.size());
  const SpaceId space = make_space(spec.g, n);
  DivisorClass c(space, spec_label(spec));
  mark_boundary_unknown(c, true);
  c.set(GeneratorIndex::lambda(), Rational(-1));
  for (int i = 1; i <= n; ++i) {
    const long ai = spec.a[static_cast<std::size_t>(i - 1)];
    c.set(GeneratorIndex::omega(i), make_rational(ai * (ai + 1), 2));
    for (int j = i + 1; j <= n; ++j)
      c.set(canonicalize(space, 0, PointSet::of({i, j})), Rational(-ai * spec.a[static_cast<std::size_t>(j - 1)]));
  }
  return c;
}

DivisorClass tracked_class(const SpaceId& space, const Rational& lambda, const Rational& delta0, const Rational& omega) {
  DivisorClass c(space);
  mark_boundary_unknown(c, false);
  c.set(GeneratorIndex::lambda(), lambda);
  c.set(GeneratorIndex::delta_irr(), delta0);
  for (int i = 1; i <= space.n; ++i) c.set(GeneratorIndex::omega(i), omega);
  return c;
}

DivisorClass canonical_tracked(const SpaceId& space, const std::optional<DivisorClass>& full_table) {
  validate(space);
  if (space.n < 1) throw InvalidSpace("canonical_tracked needs n >= 1");
  if (full_table) {
    if (!(full_table->space() == space))
      throw SpaceMismatch("canonical class table lives on " + to_string(full_table->space()) + ", expected " +
                          to_string(space));
    DivisorClass c = *full_table;
    c.set_provenance("K" + to_string(space).substr(1));
    return c;
  }
  DivisorClass c = tracked_class(space, Rational(13), Rational(-2), Rational(1));
  c.set_provenance("K(" + std::to_string(space.g) + "," + std::to_string(space.n) + ")");
  return c;
}

}  // namespace mgn
