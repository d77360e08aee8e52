#include "mgn/certificates.hpp"

#include <stdexcept>

#include "mgn/errors.hpp"

namespace mgn {

std::string CertificateProblem::label(std::size_t j) const {
  if (j < labels.size() && !labels[j].empty()) return labels[j];
  return "E" + std::to_string(j + 1);
}

void validate(const CertificateProblem& problem) {
  for (const auto& e : problem.effectives)
    if (!(e.space() == problem.target.space()))
      throw SpaceMismatch("effective class on " + to_string(e.space()) + " but target on " +
                          to_string(problem.target.space()));
  for (const auto& x : problem.residual_cone.extra)
    if (!is_canonical(problem.target.space(), x))
      throw InvalidGenerator("residual cone generator " + to_string(x) + " is not canonical");
}

std::string to_string(WitnessKind kind) {
  switch (kind) {
    case WitnessKind::EqualityConflict:
      return "equality_conflict";
    case WitnessKind::NegativeResidual:
      return "negative_residual";
    case WitnessKind::NegativeMultiplier:
      return "negative_multiplier";
    case WitnessKind::Farkas:
      return "farkas";
  }
  return "?";
}

std::string to_string(CheckKind kind) {
  switch (kind) {
    case CheckKind::Multiplier:
      return "multiplier";
    case CheckKind::Equality:
      return "equality";
    case CheckKind::Residual:
      return "residual";
    case CheckKind::Caveat:
      return "caveat";
  }
  return "?";
}

std::vector<CheckEntry> CheckReport::failures() const {
  std::vector<CheckEntry> out;
  for (const auto& e : entries)
    if (!e.pass) out.push_back(e);
  return out;
}

std::vector<GeneratorIndex> CheckReport::caveats() const {
  std::vector<GeneratorIndex> out;
  for (const auto& e : entries)
    if (e.kind == CheckKind::Caveat) out.push_back(*e.generator);
  return out;
}

std::optional<Rational> CheckReport::residual(const GeneratorIndex& x) const {
  for (const auto& e : entries)
    if (e.generator && *e.generator == x && e.value.is_known()) return e.value.value();
  return std::nullopt;
}

namespace {

std::set<GeneratorIndex> coordinate_set(const CertificateProblem& problem) {
  const SpaceId& space = problem.target.space();
  std::set<GeneratorIndex> coords{GeneratorIndex::lambda(), GeneratorIndex::delta_irr()};
  for (int i = 1; i <= space.n; ++i) coords.insert(GeneratorIndex::omega(i));
  for (const auto& [x, c] : problem.target.terms()) coords.insert(x);
  for (const auto& e : problem.effectives)
    for (const auto& [x, c] : e.terms()) coords.insert(x);
  return coords;
}

std::string x_label(std::size_t j) { return "x" + std::to_string(j + 1); }

struct LinearRow {
  std::string label;
  std::optional<GeneratorIndex> generator;
  std::optional<std::size_t> multiplier;
  std::vector<Rational> a;
  Rational b;
};

struct Constraints {
  std::vector<LinearRow> equalities;    // a.x = b
  std::vector<LinearRow> inequalities;  // a.x <= b; residual rows, then -x_j <= 0
  std::vector<GeneratorIndex> caveats;
};

Constraints build_constraints(const CertificateProblem& problem) {
  const std::size_t k = problem.effectives.size();
  Constraints out;
  for (const auto& x : coordinate_set(problem)) {
    const Coefficient t = problem.target.coefficient(x);
    bool unknown = t.is_unknown();
    std::vector<Rational> a(k);
    for (std::size_t j = 0; j < k && !unknown; ++j) {
      const Coefficient e = problem.effectives[j].coefficient(x);
      if (e.is_unknown())
        unknown = true;
      else
        a[j] = e.value();
    }
    if (unknown) {
      out.caveats.push_back(x);
      continue;
    }
    LinearRow row{to_string(x), x, std::nullopt, std::move(a), t.value()};
    if (problem.residual_cone.contains(x))
      out.inequalities.push_back(std::move(row));
    else
      out.equalities.push_back(std::move(row));
  }
  for (std::size_t j = 0; j < k; ++j) {
    std::vector<Rational> a(k);
    a[j] = -1;
    out.inequalities.push_back({x_label(j), std::nullopt, j, std::move(a), Rational(0)});
  }
  return out;
}

void require_tracked_known(const CertificateProblem& problem) {
  const SpaceId& space = problem.target.space();
  std::vector<GeneratorIndex> tracked{GeneratorIndex::lambda(), GeneratorIndex::delta_irr()};
  for (int i = 1; i <= space.n; ++i) tracked.push_back(GeneratorIndex::omega(i));
  for (const auto& x : tracked) {
    if (problem.target.coefficient(x).is_unknown())
      throw UnknownCoefficient("target coefficient of " + to_string(x) + " is Unknown");
    for (std::size_t j = 0; j < problem.effectives.size(); ++j)
      if (problem.effectives[j].coefficient(x).is_unknown())
        throw UnknownCoefficient("coefficient of " + to_string(x) + " in " + problem.label(j) + " is Unknown");
  }
}

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  Rational s(0);
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

std::string format_vector(const std::vector<Rational>& x) {
  std::string out = "(";
  for (std::size_t j = 0; j < x.size(); ++j) out += (j ? ", " : "") + to_string(x[j]);
  return out + ")";
}

// Equalities in reduced row echelon form; each row remembers which
// combination of the original equality rows produced it.
struct ReducedRow {
  std::vector<Rational> a;
  Rational b;
  std::vector<Rational> combo;
  std::size_t pivot;
};

std::vector<Rational> particular_solution(const std::vector<ReducedRow>& rref, std::size_t k) {
  std::vector<Rational> x(k);
  for (const auto& r : rref) x[r.pivot] = r.b;
  return x;
}

// Row in the free parameters z, with its nonnegative multipliers over the inequality rows.
struct FmRow {
  std::vector<Rational> a;
  Rational b;
  std::vector<std::pair<std::size_t, Rational>> lambda;
};

std::vector<std::pair<std::size_t, Rational>> combine(const std::vector<std::pair<std::size_t, Rational>>& p,
                                                      const Rational& cp,
                                                      const std::vector<std::pair<std::size_t, Rational>>& q,
                                                      const Rational& cq) {
  std::map<std::size_t, Rational> acc;
  for (const auto& [i, v] : p) acc[i] += cp * v;
  for (const auto& [i, v] : q) acc[i] += cq * v;
  std::vector<std::pair<std::size_t, Rational>> out;
  for (auto& [i, v] : acc)
    if (v != 0) out.emplace_back(i, v);
  return out;
}

// Drops trivially true constant rows and keeps the tightest row per direction.
// Returns the multipliers of a violated constant row, if any.
std::optional<std::vector<std::pair<std::size_t, Rational>>> prune(std::vector<FmRow>& rows) {
  std::map<std::vector<Rational>, FmRow> tightest;
  for (auto& row : rows) {
    std::size_t lead = 0;
    while (lead < row.a.size() && row.a[lead] == 0) ++lead;
    if (lead == row.a.size()) {
      if (row.b < 0) return row.lambda;
      continue;
    }
    const Rational s = abs(row.a[lead]);
    for (auto& v : row.a) v /= s;
    row.b /= s;
    for (auto& [i, v] : row.lambda) v /= s;
    auto it = tightest.find(row.a);
    if (it == tightest.end())
      tightest.emplace(row.a, std::move(row));
    else if (row.b < it->second.b)
      it->second = std::move(row);
  }
  rows.clear();
  for (auto& [key, row] : tightest) rows.push_back(std::move(row));
  return std::nullopt;
}

struct FmOutcome {
  std::optional<std::vector<Rational>> point;
  std::vector<std::pair<std::size_t, Rational>> contradiction;
};

FmOutcome fourier_motzkin(std::vector<FmRow> rows, std::size_t vars) {
  std::vector<std::vector<FmRow>> stages;
  for (std::size_t v = vars; v-- > 0;) {
    if (auto bad = prune(rows)) return {std::nullopt, *bad};
    stages.push_back(rows);
    std::vector<FmRow> next, pos, neg;
    for (auto& row : rows) {
      if (row.a[v] > 0)
        pos.push_back(row);
      else if (row.a[v] < 0)
        neg.push_back(row);
      else
        next.push_back(row);
    }
    for (const auto& p : pos)
      for (const auto& q : neg) {
        const Rational cp = -q.a[v];
        const Rational cq = p.a[v];
        FmRow r{std::vector<Rational>(vars), cp * p.b + cq * q.b, combine(p.lambda, cp, q.lambda, cq)};
        for (std::size_t u = 0; u < vars; ++u) r.a[u] = cp * p.a[u] + cq * q.a[u];
        r.a[v] = 0;
        next.push_back(std::move(r));
      }
    rows = std::move(next);
  }
  if (auto bad = prune(rows)) return {std::nullopt, *bad};

  std::vector<Rational> z(vars);
  for (std::size_t v = 0; v < vars; ++v) {
    const auto& system = stages[vars - 1 - v];
    std::optional<Rational> lower, upper;
    for (const auto& row : system) {
      if (row.a[v] == 0) continue;
      Rational rest = row.b;
      for (std::size_t u = 0; u < v; ++u) rest -= row.a[u] * z[u];
      const Rational bound = rest / row.a[v];
      if (row.a[v] > 0) {
        if (!upper || bound < *upper) upper = bound;
      } else {
        if (!lower || bound > *lower) lower = bound;
      }
    }
    if (lower)
      z[v] = *lower;
    else if (upper)
      z[v] = *upper < 0 ? *upper : Rational(0);
    else
      z[v] = 0;
  }
  return {z, {}};
}

std::vector<std::pair<std::string, Rational>> labelled(const std::vector<LinearRow>& rows,
                                                        const std::vector<Rational>& y) {
  std::vector<std::pair<std::string, Rational>> out;
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (y[i] != 0) out.emplace_back(rows[i].label, y[i]);
  return out;
}

}  // namespace

CheckReport check_combination(const CertificateProblem& problem, std::span<const Rational> x) {
  validate(problem);
  const std::size_t k = problem.effectives.size();
  if (x.size() != k)
    throw DimensionMismatch("expected " + std::to_string(k) + " multipliers, got " + std::to_string(x.size()));
  CheckReport report;
  for (std::size_t j = 0; j < k; ++j) {
    CheckEntry e{CheckKind::Multiplier, std::nullopt, j, Coefficient(x[j]), x[j] >= 0};
    report.pass = report.pass && e.pass;
    report.entries.push_back(std::move(e));
  }
  for (const auto& c : coordinate_set(problem)) {
    // Unknown anywhere means unchecked, even where the multiplier is 0.
    Coefficient residual = problem.target.coefficient(c);
    for (std::size_t j = 0; j < k; ++j) {
      const Coefficient e = problem.effectives[j].coefficient(c);
      residual = e.is_unknown() ? e : residual + Rational(-x[j]) * e;
    }
    CheckEntry e{CheckKind::Caveat, c, 0, residual, true};
    if (residual.is_known()) {
      const bool cone = problem.residual_cone.contains(c);
      e.kind = cone ? CheckKind::Residual : CheckKind::Equality;
      e.pass = cone ? residual.value() >= 0 : residual.value() == 0;
    }
    report.pass = report.pass && e.pass;
    report.entries.push_back(std::move(e));
  }
  return report;
}

CertificateOutcome find_certificate(const CertificateProblem& problem) {
  validate(problem);
  require_tracked_known(problem);
  const std::size_t k = problem.effectives.size();
  const Constraints cons = build_constraints(problem);
  const std::size_t neq = cons.equalities.size();

  std::vector<ReducedRow> rref;
  for (std::size_t q = 0; q < neq; ++q) {
    const LinearRow& eq = cons.equalities[q];
    ReducedRow row{eq.a, eq.b, std::vector<Rational>(neq), 0};
    row.combo[q] = 1;
    for (const auto& r : rref) {
      const Rational f = row.a[r.pivot];
      if (f == 0) continue;
      for (std::size_t j = 0; j < k; ++j) row.a[j] -= f * r.a[j];
      row.b -= f * r.b;
      for (std::size_t j = 0; j < neq; ++j) row.combo[j] -= f * r.combo[j];
    }
    std::size_t p = 0;
    while (p < k && row.a[p] == 0) ++p;
    if (p == k) {
      if (row.b == 0) continue;
      InfeasibilityWitness w;
      w.kind = WitnessKind::EqualityConflict;
      w.coordinate = eq.generator;
      w.forced_x = particular_solution(rref, k);
      w.value = eq.b - dot(eq.a, w.forced_x);
      const Rational sign = row.b > 0 ? Rational(-1) : Rational(1);
      std::vector<Rational> y = row.combo;
      for (auto& v : y) v *= sign;
      w.equality_multipliers = labelled(cons.equalities, y);
      w.farkas_value = sign * row.b;
      w.derivation = "equalities before " + eq.label + " give x = " + format_vector(w.forced_x) +
                     "; then the " + eq.label + " residual is " + to_string(w.value) +
                     " but must be exactly 0 (" + eq.label + " is outside the residual cone)";
      return Infeasible{std::move(w), cons.caveats};
    }
    const Rational inv = 1 / row.a[p];
    for (auto& v : row.a) v *= inv;
    row.b *= inv;
    for (auto& v : row.combo) v *= inv;
    row.pivot = p;
    for (auto& r : rref) {
      const Rational f = r.a[p];
      if (f == 0) continue;
      for (std::size_t j = 0; j < k; ++j) r.a[j] -= f * row.a[j];
      r.b -= f * row.b;
      for (std::size_t j = 0; j < neq; ++j) r.combo[j] -= f * row.combo[j];
    }
    rref.push_back(std::move(row));
  }

  // x = x0 + N z over the free columns.
  const std::vector<Rational> x0 = particular_solution(rref, k);
  std::vector<bool> is_pivot(k, false);
  for (const auto& r : rref) is_pivot[r.pivot] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t j = 0; j < k; ++j)
    if (!is_pivot[j]) free_cols.push_back(j);
  const std::size_t f = free_cols.size();
  std::vector<std::vector<Rational>> null_basis(f, std::vector<Rational>(k));
  for (std::size_t t = 0; t < f; ++t) {
    null_basis[t][free_cols[t]] = 1;
    for (const auto& r : rref) null_basis[t][r.pivot] = -r.a[free_cols[t]];
  }

  std::vector<FmRow> rows;
  for (std::size_t i = 0; i < cons.inequalities.size(); ++i) {
    const LinearRow& in = cons.inequalities[i];
    FmRow row{std::vector<Rational>(f), in.b - dot(in.a, x0), {{i, Rational(1)}}};
    for (std::size_t t = 0; t < f; ++t) row.a[t] = dot(in.a, null_basis[t]);
    rows.push_back(std::move(row));
  }
  // Report the first violated row in constraint order when x is forced.
  if (f == 0) {
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].b >= 0) continue;
      rows = {rows[i]};
      break;
    }
  }
  FmOutcome fm = fourier_motzkin(std::move(rows), f);

  if (!fm.point) {
    // y_in = lambda; y_eq chosen so that the combination vanishes in x.
    std::vector<Rational> v(k);
    Rational rhs(0);
    for (const auto& [i, lam] : fm.contradiction) {
      for (std::size_t j = 0; j < k; ++j) v[j] += lam * cons.inequalities[i].a[j];
      rhs += lam * cons.inequalities[i].b;
    }
    std::vector<Rational> y_eq(neq);
    for (const auto& r : rref)
      for (std::size_t q = 0; q < neq; ++q) y_eq[q] -= v[r.pivot] * r.combo[q];
    for (std::size_t q = 0; q < neq; ++q) rhs += y_eq[q] * cons.equalities[q].b;

    InfeasibilityWitness w;
    w.equality_multipliers = labelled(cons.equalities, y_eq);
    for (const auto& [i, lam] : fm.contradiction) w.inequality_multipliers.emplace_back(cons.inequalities[i].label, lam);
    w.farkas_value = rhs;
    w.forced_x = x0;
    if (fm.contradiction.size() == 1 && f == 0) {
      const LinearRow& row = cons.inequalities[fm.contradiction.front().first];
      w.value = row.b - dot(row.a, x0);
      if (row.multiplier) {
        w.kind = WitnessKind::NegativeMultiplier;
        w.multiplier = row.multiplier;
        w.value = x0[*row.multiplier];
        w.derivation = "the equalities force x = " + format_vector(x0) + " with " + row.label + " = " +
                       to_string(w.value) + " < 0";
      } else {
        w.kind = WitnessKind::NegativeResidual;
        w.coordinate = row.generator;
        w.derivation = "the equalities force x = " + format_vector(x0) + "; then the " + row.label +
                       " residual is " + to_string(w.value) + " < 0";
      }
    } else {
      w.kind = WitnessKind::Farkas;
      w.value = rhs;
      w.derivation = "a nonnegative combination of the residual constraints reduces to 0 <= " + to_string(rhs);
    }
    if (w.farkas_value >= 0) throw std::logic_error("infeasibility witness does not certify");
    return Infeasible{std::move(w), cons.caveats};
  }

  std::vector<Rational> x = x0;
  for (std::size_t t = 0; t < f; ++t)
    for (std::size_t j = 0; j < k; ++j) x[j] += (*fm.point)[t] * null_basis[t][j];

  const CheckReport check = check_combination(problem, x);
  if (!check.pass) throw std::logic_error("certificate search produced a point that fails the check");
  Certificate cert{x, {}, check.caveats()};
  for (const auto& e : check.entries)
    if (e.kind == CheckKind::Residual) cert.residual.emplace(*e.generator, e.value.value());
  return cert;
}

bool verify_witness(const CertificateProblem& problem, const InfeasibilityWitness& witness) {
  const Constraints cons = build_constraints(problem);
  const std::size_t k = problem.effectives.size();
  std::vector<Rational> v(k);
  Rational rhs(0);
  auto find = [](const std::vector<LinearRow>& rows, const std::string& label) -> const LinearRow* {
    for (const auto& r : rows)
      if (r.label == label) return &r;
    return nullptr;
  };
  for (const auto& [label, y] : witness.equality_multipliers) {
    const LinearRow* r = find(cons.equalities, label);
    if (!r) return false;
    for (std::size_t j = 0; j < k; ++j) v[j] += y * r->a[j];
    rhs += y * r->b;
  }
  for (const auto& [label, y] : witness.inequality_multipliers) {
    const LinearRow* r = find(cons.inequalities, label);
    if (!r || y < 0) return false;
    for (std::size_t j = 0; j < k; ++j) v[j] += y * r->a[j];
    rhs += y * r->b;
  }
  for (const auto& vj : v)
    if (vj != 0) return false;
  return rhs < 0 && rhs == witness.farkas_value;
}

}  // namespace mgn
