#pragma once

// Test curves as integer-valued linear functionals on divisor classes, the
// builtin one-parameter families on M_{g,2}, and the exact solve that
// recovers a class from its pairings.

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "mgn/divisor_class.hpp"
#include "mgn/errors.hpp"

namespace mgn {

struct TestCurve {
  std::string name;
  SpaceId space;
  std::map<GeneratorIndex, std::int64_t> pairings;  // absent = 0
  std::optional<std::int64_t> pushforward_d0;       // recorded delta_0 . s_* C
  std::set<GeneratorIndex> ambiguous;               // flagged keys of `pairings`
  std::map<std::string, std::int64_t> unresolved;   // raw labels that name no generator
  std::string note;

  std::int64_t pairing(const GeneratorIndex& x) const;
  /// Adds `value` at the canonical form of d_{genus;s}.
  void add_pairing(int genus, PointSet s, std::int64_t value);
  void add_pairing(const GeneratorIndex& x, std::int64_t value);
  void set_pairing(const GeneratorIndex& x, std::int64_t value);
  bool has_ambiguity() const { return !ambiguous.empty() || !unresolved.empty(); }
};

/// Image of a curve under relabelling the marked points.
TestCurve relabel(const TestCurve& curve, const Permutation& sigma, std::string name);

enum class CatalogVariant {
  /// Verbatim data plus standard_amendments() and the S_2 mirror of every one-sided family.
  Amended,
  /// The recorded numbers exactly as stated, including "0 with the others".
  Verbatim,
};

/// Families on M_{g,2}: TC1, TC2, TC3, TC4(i) (1 <= i <= g-1), TC5a(i), TC5b(i)
/// (1 <= i <= g-2); the amended catalog adds "<name>.swap" mirrors.
/// Throws UnsupportedGenus for g < 3.
std::vector<TestCurve> builtin_catalog(int g, CatalogVariant variant = CatalogVariant::Amended);

/// Amends one pairing of a named curve. When `resolves` is set, the
/// unresolved raw entry of that label is removed and `generator` is flagged ambiguous.
struct PairingOverride {
  std::string curve;
  GeneratorIndex generator;
  std::int64_t value = 0;
  std::string resolves;
};

/// Throws std::invalid_argument if an override names no curve in the catalog.
std::vector<TestCurve> apply_overrides(std::vector<TestCurve> catalog, std::span<const PairingOverride> overrides);

/// The corrections turning the verbatim catalog into a consistent one:
/// TC4(i) gets w1 = 2i-1 and meets only d_{i;{2}} among the one-point classes;
/// TC5b(i)'s "d_{g;{j}}" entries are read as d_{g-i;{j}}.
std::vector<PairingOverride> standard_amendments(int g);

/// sum pairings(x) * coeff(x); Unknown if any paired coordinate is Unknown.
/// Unresolved raw entries never contribute. Throws SpaceMismatch.
Coefficient pair(const TestCurve& curve, const DivisorClass& c);

struct PairingEquation {
  TestCurve curve;
  Rational target;
};

/// One equation per curve with a recorded pushforward, target = pushforward_d0.
std::vector<PairingEquation> pushforward_equations(std::span<const TestCurve> catalog);

struct Ansatz {
  SpaceId space;
  std::set<GeneratorIndex> support;

  static Ansatz full(const SpaceId& space);
  static Ansatz all_except(const SpaceId& space, std::initializer_list<GeneratorIndex> excluded);
};

enum class AmbiguityPolicy {
  ExcludeCurves,  // default: drop every equation whose curve carries flagged or unresolved pairings
  IncludeFlagged, // use flagged pairings as recorded
  DropFlagged,    // keep the equation but zero its flagged pairings
};

struct SolveResult {
  DivisorClass solution;                      // particular solution, free generators set to 0
  std::vector<GeneratorIndex> free_generators;
  std::vector<std::string> excluded_curves;
  std::size_t equations_used = 0;
  std::size_t rank = 0;

  bool unique() const { return free_generators.empty(); }
};

/// Raised when no class on the ansatz satisfies every equation. The witness
/// is a combination sum mu_j * (curve_j) that vanishes on the ansatz while
/// sum mu_j * target_j = contradiction != 0.
class InconsistentSystem : public Error {
 public:
  InconsistentSystem(std::vector<std::pair<std::string, Rational>> multipliers, Rational contradiction);

  const std::vector<std::pair<std::string, Rational>>& multipliers() const { return multipliers_; }
  const Rational& contradiction() const { return contradiction_; }

 private:
  std::vector<std::pair<std::string, Rational>> multipliers_;
  Rational contradiction_;
};

/// Exact fraction-free (Bareiss) elimination, pivot columns in basis order.
SolveResult solve_for_class(std::span<const PairingEquation> equations, const Ansatz& ansatz,
                            AmbiguityPolicy policy = AmbiguityPolicy::ExcludeCurves);

}  // namespace mgn
