#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mgn/picard_basis.hpp"
#include "mgn/rational.hpp"

namespace mgn {

/// A coordinate value: an exact rational, or Unknown (untracked).
class Coefficient {
 public:
  Coefficient() : value_(Rational(0)) {}
  Coefficient(Rational value) : value_(std::move(value)) {}  // NOLINT: implicit by intent

  static Coefficient unknown() {
    Coefficient c;
    c.value_.reset();
    return c;
  }

  bool is_known() const { return value_.has_value(); }
  bool is_unknown() const { return !value_.has_value(); }
  bool is_zero() const { return value_ && *value_ == 0; }
  /// Precondition: is_known().
  const Rational& value() const { return *value_; }

  friend bool operator==(const Coefficient&, const Coefficient&) = default;

 private:
  std::optional<Rational> value_;
};

Coefficient operator+(const Coefficient& a, const Coefficient& b);
/// 0 * Unknown = 0.
Coefficient operator*(const Rational& c, const Coefficient& a);
std::string to_string(const Coefficient& c);  // "?" for Unknown

/// Sparse coefficient vector over the generator basis of one space.
/// Absent key = exactly zero; Unknown coordinates are stored explicitly.
class DivisorClass {
 public:
  using Terms = std::map<GeneratorIndex, Coefficient>;

  explicit DivisorClass(SpaceId space, std::string provenance = {});

  const SpaceId& space() const { return space_; }
  const Terms& terms() const { return terms_; }
  const std::string& provenance() const { return provenance_; }
  void set_provenance(std::string p) { provenance_ = std::move(p); }

  Coefficient coefficient(const GeneratorIndex& x) const;
  /// Throws UnknownCoefficient if the coordinate is Unknown.
  Rational known(const GeneratorIndex& x) const;

  /// Key must be canonical for the space; zero values are pruned.
  void set(const GeneratorIndex& x, Coefficient value);
  void accumulate(const GeneratorIndex& x, const Coefficient& value);
  void set_unknown(const GeneratorIndex& x) { set(x, Coefficient::unknown()); }

  bool is_zero() const { return terms_.empty(); }
  bool has_unknown() const;
  std::vector<GeneratorIndex> unknown_generators() const;

  /// Structural equality on space and coefficients; provenance is ignored.
  friend bool operator==(const DivisorClass& a, const DivisorClass& b) {
    return a.space_ == b.space_ && a.terms_ == b.terms_;
  }

 private:
  SpaceId space_;
  Terms terms_;
  std::string provenance_;
};

DivisorClass basis_vector(const SpaceId& space, const GeneratorIndex& x);

/// Throws SpaceMismatch.
DivisorClass add(const DivisorClass& a, const DivisorClass& b);
DivisorClass subtract(const DivisorClass& a, const DivisorClass& b);
DivisorClass scale(const Rational& c, const DivisorClass& a);

inline DivisorClass operator+(const DivisorClass& a, const DivisorClass& b) { return add(a, b); }
inline DivisorClass operator-(const DivisorClass& a, const DivisorClass& b) { return subtract(a, b); }
inline DivisorClass operator*(const Rational& c, const DivisorClass& a) { return scale(c, a); }

/// sigma . a, extending apply_permutation linearly.
DivisorClass permute(const Permutation& sigma, const DivisorClass& a);

/// Uniform mean of sigma . a over the supplied permutations (nonempty).
DivisorClass average_over(std::span<const Permutation> perms, const DivisorClass& a);

enum class ComparisonStatus { Equal, Differ, Incomparable };

struct ComparisonReport {
  struct Entry {
    GeneratorIndex generator;
    ComparisonStatus status;
    Coefficient left;
    Coefficient right;
  };
  std::vector<Entry> entries;  // every generator stored on either side, basis order
  bool equal_on_tracked = true;

  std::vector<Entry> differences() const;
  std::size_t count(ComparisonStatus s) const;
};

ComparisonReport compare(const DivisorClass& a, const DivisorClass& b);

// --- psi / omega change of basis -------------------------------------------
// psi_i = omega_i + sum over valid delta_{0;S} with i in S.

/// Coordinates in the psi basis: same key set as DivisorClass, with the
/// Omega(i) slot holding the coefficient of psi_i.
struct PsiBasisClass {
  SpaceId space;
  DivisorClass::Terms terms;

  friend bool operator==(const PsiBasisClass&, const PsiBasisClass&) = default;
};

DivisorClass psi_in_omega_basis(const SpaceId& space, int i);
PsiBasisClass omega_in_psi_basis(const SpaceId& space, int i);
PsiBasisClass to_psi_basis(const DivisorClass& c);
DivisorClass to_omega_basis(const PsiBasisClass& p);

}  // namespace mgn
