#pragma once

// Generator basis of Pic(M_{g,n}) (x) Q in the omega working basis:
// lambda, delta_0, omega_1..omega_n and the separating boundary classes
// delta_{i;S}, with delta_{i;S} = delta_{g-i;S^c}.

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mgn {

inline constexpr int kMaxMarkedPoints = 30;

struct SpaceId {
  int g = 2;
  int n = 0;

  friend bool operator==(const SpaceId&, const SpaceId&) = default;
};

/// Validated constructor: g >= 2, 0 <= n <= kMaxMarkedPoints.
SpaceId make_space(int g, int n);
void validate(const SpaceId& space);
std::string to_string(const SpaceId& space);

/// Subset of the marked points {1..n}, stored as a bitmask (bit k-1 = point k).
class PointSet {
 public:
  constexpr PointSet() = default;
  constexpr explicit PointSet(std::uint32_t bits) : bits_(bits) {}

  static PointSet of(std::initializer_list<int> points);
  static PointSet of(std::span<const int> points);
  static constexpr PointSet full(int n) {
    return PointSet(n >= 32 ? ~std::uint32_t{0} : ((std::uint32_t{1} << n) - 1));
  }

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(int point) const {
    return point >= 1 && point <= 32 && ((bits_ >> (point - 1)) & 1u) != 0;
  }
  constexpr bool subset_of(PointSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr PointSet with(int point) const { return PointSet(bits_ | (std::uint32_t{1} << (point - 1))); }
  constexpr PointSet complement_in(int n) const { return PointSet(full(n).bits_ & ~bits_); }
  std::vector<int> elements() const;

  friend constexpr PointSet operator|(PointSet a, PointSet b) { return PointSet(a.bits_ | b.bits_); }
  friend constexpr PointSet operator&(PointSet a, PointSet b) { return PointSet(a.bits_ & b.bits_); }
  friend constexpr bool operator==(PointSet, PointSet) = default;

 private:
  std::uint32_t bits_ = 0;
};

/// Basis order on subsets: by size, then lexicographically on the sorted elements.
std::strong_ordering basis_order(PointSet a, PointSet b);

std::string to_string(PointSet s);  // "{1,4}", "{}"

enum class GeneratorKind : std::uint8_t { Lambda, DeltaIrr, Omega, DeltaSep };

/// One basis element. For Omega, `index` is the marked point; for DeltaSep it
/// is the genus of the side carrying `points`. DeltaSep values are expected to
/// be canonical for their space (see canonicalize).
struct GeneratorIndex {
  GeneratorKind kind = GeneratorKind::Lambda;
  int index = 0;
  PointSet points;

  static constexpr GeneratorIndex lambda() { return {GeneratorKind::Lambda, 0, {}}; }
  static constexpr GeneratorIndex delta_irr() { return {GeneratorKind::DeltaIrr, 0, {}}; }
  static constexpr GeneratorIndex omega(int i) { return {GeneratorKind::Omega, i, {}}; }
  /// No normalization; prefer canonicalize().
  static constexpr GeneratorIndex delta_sep_raw(int genus, PointSet s) {
    return {GeneratorKind::DeltaSep, genus, s};
  }

  constexpr bool is_boundary() const {
    return kind == GeneratorKind::DeltaIrr || kind == GeneratorKind::DeltaSep;
  }

  friend bool operator==(const GeneratorIndex&, const GeneratorIndex&) = default;
  /// The fixed basis order: lambda, delta_0, omegas, then delta_{i;S} by (i, |S|, lex S).
  friend std::strong_ordering operator<=>(const GeneratorIndex& a, const GeneratorIndex& b);
};

/// Canonical representative of {(i,S), (g-i,S^c)}.
/// Throws InvalidGenerator when out of range or a genus-0 side carries < 2 points.
GeneratorIndex canonicalize(const SpaceId& space, int genus, PointSet s);

bool is_canonical(const SpaceId& space, const GeneratorIndex& x);

std::vector<GeneratorIndex> enumerate_basis(const SpaceId& space);

/// "l", "d0", "w3", "d2;{1,4}", "d1;{}".
std::string to_string(const GeneratorIndex& x);

/// Parses a canonical-name label (no whitespace) and canonicalizes it for `space`.
GeneratorIndex parse_generator(const SpaceId& space, std::string_view label);

struct RawDelta {
  int genus = 0;
  PointSet points;
};
/// Parses "dI;{...}" without any validity check.
std::optional<RawDelta> parse_raw_delta(std::string_view label);

/// Bijection of {1..n}; images()[k-1] is the image of k.
class Permutation {
 public:
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);
  static Permutation transposition(int n, int a, int b);
  /// The single cycle c[0] -> c[1] -> ... -> c[0] on {1..n}.
  static Permutation cycle(int n, std::span<const int> points);
  /// (1 2 ... length) on {1..n}.
  static Permutation standard_cycle(int n, int length);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int point) const { return images_[static_cast<std::size_t>(point - 1)]; }
  PointSet operator()(PointSet s) const;
  const std::vector<int>& images() const { return images_; }
  bool is_identity() const;
  Permutation inverse() const;

  /// Composition: (a * b)(k) = a(b(k)).
  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// All powers g^0, g^1, ..., g^{k-1} of `generator`, k its order.
std::vector<Permutation> cyclic_group(const Permutation& generator);

std::string to_string(const Permutation& p);  // one-line notation "[2,1,3]"

GeneratorIndex apply_permutation(const SpaceId& space, const Permutation& perm, const GeneratorIndex& x);

}  // namespace mgn
