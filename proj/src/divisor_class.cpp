#include "mgn/divisor_class.hpp"

#include "mgn/errors.hpp"

namespace mgn {

Coefficient operator+(const Coefficient& a, const Coefficient& b) {
  if (a.is_unknown() || b.is_unknown()) return Coefficient::unknown();
  return Coefficient(Rational(a.value() + b.value()));
}

Coefficient operator*(const Rational& c, const Coefficient& a) {
  if (c == 0) return Coefficient();
  if (a.is_unknown()) return Coefficient::unknown();
  return Coefficient(Rational(c * a.value()));
}

std::string to_string(const Coefficient& c) { return c.is_known() ? to_string(c.value()) : "?"; }

DivisorClass::DivisorClass(SpaceId space, std::string provenance)
    : space_(space), provenance_(std::move(provenance)) {
  validate(space_);
}

Coefficient DivisorClass::coefficient(const GeneratorIndex& x) const {
  auto it = terms_.find(x);
  return it == terms_.end() ? Coefficient() : it->second;
}

Rational DivisorClass::known(const GeneratorIndex& x) const {
  Coefficient c = coefficient(x);
  if (c.is_unknown()) throw UnknownCoefficient("coefficient of " + to_string(x) + " is Unknown");
  return c.value();
}

void DivisorClass::set(const GeneratorIndex& x, Coefficient value) {
  if (!is_canonical(space_, x))
    throw InvalidGenerator(to_string(x) + " is not a canonical generator of " + to_string(space_));
  if (value.is_zero()) {
    terms_.erase(x);
    return;
  }
  terms_[x] = std::move(value);
}

void DivisorClass::accumulate(const GeneratorIndex& x, const Coefficient& value) {
  if (value.is_zero()) return;
  if (!is_canonical(space_, x))
    throw InvalidGenerator(to_string(x) + " is not a canonical generator of " + to_string(space_));
  auto [it, inserted] = terms_.try_emplace(x, value);
  if (inserted) return;
  it->second = it->second + value;
  if (it->second.is_zero()) terms_.erase(it);
}

bool DivisorClass::has_unknown() const {
  for (const auto& [x, c] : terms_)
    if (c.is_unknown()) return true;
  return false;
}

std::vector<GeneratorIndex> DivisorClass::unknown_generators() const {
  std::vector<GeneratorIndex> out;
  for (const auto& [x, c] : terms_)
    if (c.is_unknown()) out.push_back(x);
  return out;
}

DivisorClass basis_vector(const SpaceId& space, const GeneratorIndex& x) {
  DivisorClass c(space, to_string(x));
  c.set(x, Rational(1));
  return c;
}

namespace {

void require_same_space(const DivisorClass& a, const DivisorClass& b) {
  if (!(a.space() == b.space()))
    throw SpaceMismatch("classes live on " + to_string(a.space()) + " and " + to_string(b.space()));
}

}  // namespace

DivisorClass add(const DivisorClass& a, const DivisorClass& b) {
  require_same_space(a, b);
  DivisorClass out = a;
  out.set_provenance({});
  for (const auto& [x, c] : b.terms()) out.accumulate(x, c);
  return out;
}

DivisorClass subtract(const DivisorClass& a, const DivisorClass& b) { return add(a, scale(Rational(-1), b)); }

DivisorClass scale(const Rational& c, const DivisorClass& a) {
  DivisorClass out(a.space());
  if (c == 0) return out;
  for (const auto& [x, v] : a.terms()) out.set(x, c * v);
  return out;
}

DivisorClass permute(const Permutation& sigma, const DivisorClass& a) {
  DivisorClass out(a.space(), a.provenance());
  for (const auto& [x, c] : a.terms()) out.accumulate(apply_permutation(a.space(), sigma, x), c);
  return out;
}

DivisorClass average_over(std::span<const Permutation> perms, const DivisorClass& a) {
  if (perms.empty()) throw InvalidPermutation("average_over needs at least one permutation");
  DivisorClass sum(a.space());
  for (const auto& sigma : perms) {
    if (sigma.degree() != a.space().n)
      throw SpaceMismatch("permutation of degree " + std::to_string(sigma.degree()) + " acting on " +
                          to_string(a.space()));
    for (const auto& [x, c] : a.terms()) sum.accumulate(apply_permutation(a.space(), sigma, x), c);
  }
  DivisorClass out = scale(make_rational(1, static_cast<long>(perms.size())), sum);
  out.set_provenance(a.provenance().empty() ? std::string{} : "average of " + a.provenance());
  return out;
}

std::vector<ComparisonReport::Entry> ComparisonReport::differences() const {
  std::vector<Entry> out;
  for (const auto& e : entries)
    if (e.status == ComparisonStatus::Differ) out.push_back(e);
  return out;
}

std::size_t ComparisonReport::count(ComparisonStatus s) const {
  std::size_t k = 0;
  for (const auto& e : entries)
    if (e.status == s) ++k;
  return k;
}

ComparisonReport compare(const DivisorClass& a, const DivisorClass& b) {
  require_same_space(a, b);
  ComparisonReport report;
  auto ia = a.terms().begin();
  auto ib = b.terms().begin();
  auto emit = [&](const GeneratorIndex& x, const Coefficient& l, const Coefficient& r) {
    ComparisonStatus s;
    if (l.is_unknown() || r.is_unknown())
      s = ComparisonStatus::Incomparable;
    else
      s = l == r ? ComparisonStatus::Equal : ComparisonStatus::Differ;
    if (s == ComparisonStatus::Differ) report.equal_on_tracked = false;
    report.entries.push_back({x, s, l, r});
  };
  while (ia != a.terms().end() || ib != b.terms().end()) {
    if (ib == b.terms().end() || (ia != a.terms().end() && ia->first < ib->first)) {
      emit(ia->first, ia->second, Coefficient());
      ++ia;
    } else if (ia == a.terms().end() || ib->first < ia->first) {
      emit(ib->first, Coefficient(), ib->second);
      ++ib;
    } else {
      emit(ia->first, ia->second, ib->second);
      ++ia;
      ++ib;
    }
  }
  return report;
}

namespace {

// Calls f(delta_{0;S}) for every valid S containing point i.
template <typename F>
void for_each_rational_tail_containing(const SpaceId& space, int i, F&& f) {
  const std::uint32_t rest = PointSet::full(space.n).bits() & ~(std::uint32_t{1} << (i - 1));
  for (std::uint32_t sub = rest; sub != 0; sub = (sub - 1) & rest)
    f(GeneratorIndex::delta_sep_raw(0, PointSet(sub).with(i)));
}

void check_point(const SpaceId& space, int i) {
  if (i < 1 || i > space.n)
    throw InvalidGenerator("marked point " + std::to_string(i) + " outside 1.." + std::to_string(space.n));
}

}  // namespace

DivisorClass psi_in_omega_basis(const SpaceId& space, int i) {
  check_point(space, i);
  DivisorClass c(space, "psi" + std::to_string(i));
  c.set(GeneratorIndex::omega(i), Rational(1));
  for_each_rational_tail_containing(space, i, [&](const GeneratorIndex& d) { c.set(d, Rational(1)); });
  return c;
}

PsiBasisClass omega_in_psi_basis(const SpaceId& space, int i) {
  check_point(space, i);
  PsiBasisClass p{space, {}};
  p.terms[GeneratorIndex::omega(i)] = Rational(1);
  for_each_rational_tail_containing(space, i, [&](const GeneratorIndex& d) { p.terms[d] = Rational(-1); });
  return p;
}

namespace {

// Adds sign * (coefficient of the Omega slots) onto every delta_{0;S} containing the point.
DivisorClass::Terms shift_rational_tails(const SpaceId& space, DivisorClass::Terms terms, int sign) {
  DivisorClass::Terms omegas;
  for (const auto& [x, c] : terms)
    if (x.kind == GeneratorKind::Omega) omegas.emplace(x, c);
  for (const auto& [x, c] : omegas) {
    const Coefficient shift = Rational(sign) * c;
    if (shift.is_zero()) continue;
    for_each_rational_tail_containing(space, x.index, [&](const GeneratorIndex& d) {
      auto [it, inserted] = terms.try_emplace(d, shift);
      if (!inserted) {
        it->second = it->second + shift;
        if (it->second.is_zero()) terms.erase(it);
      }
    });
  }
  return terms;
}

}  // namespace

PsiBasisClass to_psi_basis(const DivisorClass& c) {
  return PsiBasisClass{c.space(), shift_rational_tails(c.space(), c.terms(), -1)};
}

DivisorClass to_omega_basis(const PsiBasisClass& p) {
  DivisorClass out(p.space);
  for (const auto& [x, c] : shift_rational_tails(p.space, p.terms, +1)) out.set(x, c);
  return out;
}

}  // namespace mgn
