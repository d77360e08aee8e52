// mgn: command-line front end for the divisor class library.
// Exit codes: 0 success or pass, 1 fail or infeasible, 2 usage error.

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "mgn/audit.hpp"
#include "mgn/class_library.hpp"
#include "mgn/errors.hpp"
#include "mgn/expression.hpp"
#include "mgn/json_io.hpp"
#include "mgn/pullbacks.hpp"
#include "mgn/test_curves.hpp"

namespace {

using namespace mgn;

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  int g = -1;
  int n = -1;
  bool json = false;
  std::string expr;
  std::string class_file;
  std::string map;
  bool all = false;
  int cycle = 0;
  std::string curves;
  std::string catalog = "amended";
  std::string write_catalog;
  bool include_lambda = false;
  std::string policy = "exclude";
  std::string target;
  std::string effectives;
  std::string x;
  std::vector<std::string> cone_extra;
  bool no_boundary_cone = false;
  std::string audit_case;
  std::string write_effectives;
};

void print_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write '" + path + "'");
  out << j.dump(2) << "\n";
}

SpaceId require_space(const Options& o) {
  if (o.g < 0) throw UsageError("--g is required");
  if (o.n < 0) throw UsageError("--n is required");
  return make_space(o.g, o.n);
}

DivisorClass read_class(const Options& o, const SpaceId& space) {
  if (!o.expr.empty() && !o.class_file.empty()) throw UsageError("give either --expr or --class, not both");
  if (!o.class_file.empty()) {
    DivisorClass c = class_from_json(read_json_file(o.class_file));
    if (!(c.space() == space))
      throw SpaceMismatch("class file is on " + to_string(c.space()) + ", expected " + to_string(space));
    return c;
  }
  if (o.expr.empty()) throw UsageError("--expr or --class is required");
  return parse_class(space, o.expr);
}

void emit_class(const Options& o, const DivisorClass& c) {
  if (o.json)
    print_json(to_json(c));
  else
    std::cout << format_class(c) << "\n";
}

std::vector<Rational> parse_x(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw UsageError("empty entry in --x");
    out.push_back(parse_rational(item.substr(b, e - b + 1)));
  }
  return out;
}

std::string join_x(const std::vector<Rational>& x) {
  std::string out;
  for (std::size_t j = 0; j < x.size(); ++j) out += (j ? ", " : "") + to_string(x[j]);
  return out;
}

// "d0;S x 2036, d1;S x 2048": caveat counts grouped by kind and genus.
std::string caveat_summary(const std::vector<GeneratorIndex>& caveats) {
  std::map<std::string, std::size_t> groups;
  std::vector<std::string> order;
  for (const auto& x : caveats) {
    const std::string key = x.kind == GeneratorKind::DeltaSep ? "d" + std::to_string(x.index) + ";S" : to_string(x);
    if (groups[key]++ == 0) order.push_back(key);
  }
  std::string out = std::to_string(caveats.size()) + " unchecked";
  if (!order.empty()) out += " (";
  for (std::size_t k = 0; k < order.size(); ++k)
    out += (k ? ", " : "") + order[k] + " x " + std::to_string(groups[order[k]]);
  if (!order.empty()) out += ")";
  return out;
}

// ---- subcommands ----------------------------------------------------------

int cmd_basis(const Options& o) {
  const SpaceId space = require_space(o);
  const auto basis = enumerate_basis(space);
  if (o.json) {
    Json gens = Json::array();
    for (const auto& x : basis) gens.push_back(to_string(x));
    print_json(Json{{"g", space.g}, {"n", space.n}, {"count", basis.size()}, {"generators", gens}});
    return kPass;
  }
  std::cout << to_string(space) << ": " << basis.size() << " generators\n";
  for (const auto& x : basis) std::cout << to_string(x) << "\n";
  return kPass;
}

int cmd_clutch(const Options& o) {
  if (o.g < 0) throw UsageError("--g is required");
  emit_class(o, clutch_pullback(read_class(o, make_space(o.g + 1, 0))));
  return kPass;
}

int cmd_forget(const Options& o) {
  if (o.g < 0 || o.n < 0) throw UsageError("--g and --n are required");
  if (o.all == !o.map.empty()) throw UsageError("give exactly one of --map or --all");
  if (o.all) {
    emit_class(o, lift_and_average(read_class(o, make_space(o.g, 2)), o.n));
    return kPass;
  }
  const ForgetPullback op = make_forget_pullback(o.g, o.n, parse_embedding(o.map));
  emit_class(o, forget_pullback(op, read_class(o, op.source())));
  return kPass;
}

int cmd_average(const Options& o) {
  const SpaceId space = require_space(o);
  if (o.cycle < 1) throw UsageError("--cycle N (1 <= N <= n) is required");
  const auto group = cyclic_group(Permutation::standard_cycle(space.n, o.cycle));
  emit_class(o, average_over(group, read_class(o, space)));
  return kPass;
}

std::vector<TestCurve> load_catalog(const Options& o) {
  if (!o.curves.empty()) return catalog_from_json(read_json_file(o.curves));
  if (o.g < 0) throw UsageError("--g is required with a builtin catalog");
  if (o.catalog == "amended" || o.catalog == "builtin") return builtin_catalog(o.g, CatalogVariant::Amended);
  if (o.catalog == "verbatim") return builtin_catalog(o.g, CatalogVariant::Verbatim);
  throw UsageError("--catalog must be amended, builtin or verbatim");
}

int cmd_pair(const Options& o) {
  const auto catalog = load_catalog(o);
  if (!o.write_catalog.empty()) write_json_file(o.write_catalog, catalog_to_json(catalog));
  if (o.expr.empty() && o.class_file.empty()) {
    if (o.write_catalog.empty()) throw UsageError("--expr or --class is required");
    return kPass;
  }
  if (catalog.empty()) throw UsageError("the catalog is empty");
  const SpaceId space = catalog.front().space;
  const DivisorClass c = read_class(o, space);
  Json rows = Json::array();
  for (const auto& curve : catalog) {
    const Coefficient v = pair(curve, c);
    Json row{{"curve", curve.name}, {"value", to_string(v)}};
    row["pushforward_d0"] = curve.pushforward_d0 ? Json(*curve.pushforward_d0) : Json(nullptr);
    row["ambiguous"] = curve.has_ambiguity();
    rows.push_back(std::move(row));
    if (!o.json) {
      std::cout << curve.name << ": " << to_string(v);
      if (curve.pushforward_d0) std::cout << " (pushforward " << *curve.pushforward_d0 << ")";
      if (curve.has_ambiguity()) std::cout << " [ambiguous]";
      std::cout << "\n";
    }
  }
  if (o.json) print_json(Json{{"class", format_class(c)}, {"pairings", rows}});
  return kPass;
}

int cmd_solve(const Options& o) {
  const auto catalog = load_catalog(o);
  if (catalog.empty()) throw UsageError("the catalog is empty");
  const SpaceId space = catalog.front().space;
  AmbiguityPolicy policy;
  if (o.policy == "exclude")
    policy = AmbiguityPolicy::ExcludeCurves;
  else if (o.policy == "include")
    policy = AmbiguityPolicy::IncludeFlagged;
  else if (o.policy == "drop")
    policy = AmbiguityPolicy::DropFlagged;
  else
    throw UsageError("--policy must be exclude, include or drop");
  const Ansatz ansatz =
      o.include_lambda ? Ansatz::full(space) : Ansatz::all_except(space, {GeneratorIndex::lambda()});
  const auto equations = pushforward_equations(catalog);
  try {
    const SolveResult r = solve_for_class(equations, ansatz, policy);
    if (o.json) {
      Json j = to_json(r);
      j["status"] = "solved";
      print_json(j);
    } else {
      std::cout << format_class(r.solution) << "\n";
      std::cout << "equations: " << r.equations_used << ", rank: " << r.rank << "\n";
      if (!r.excluded_curves.empty()) {
        std::cout << "excluded:";
        for (const auto& name : r.excluded_curves) std::cout << " " << name;
        std::cout << "\n";
      }
      if (!r.unique()) {
        std::cout << "free:";
        for (const auto& x : r.free_generators) std::cout << " " << to_string(x);
        std::cout << "\n";
      }
    }
    return kPass;
  } catch (const InconsistentSystem& e) {
    if (o.json) {
      Json mult = Json::object();
      for (const auto& [name, mu] : e.multipliers()) mult[name] = to_string(mu);
      print_json(Json{{"status", "inconsistent"}, {"multipliers", mult}, {"contradiction", to_string(e.contradiction())}});
    } else {
      std::cout << "inconsistent: " << e.what() << "\n";
    }
    return kFail;
  }
}

int cmd_certify(const Options& o) {
  const SpaceId space = require_space(o);
  if (o.target.empty()) throw UsageError("--target is required");
  if (o.effectives.empty()) throw UsageError("--effectives is required");
  CertificateProblem problem{parse_class(space, o.target), {}, {}, {}};
  problem.effectives = effectives_from_json(read_json_file(o.effectives), &problem.labels);
  problem.residual_cone.include_boundary = !o.no_boundary_cone;
  for (const auto& label : o.cone_extra) problem.residual_cone.extra.insert(parse_generator(space, label));
  validate(problem);

  if (!o.x.empty()) {
    const CheckReport report = check_combination(problem, parse_x(o.x));
    if (o.json) {
      print_json(to_json(report, problem));
    } else {
      std::cout << (report.pass ? "pass" : "fail") << "\n";
      for (const auto& e : report.entries) {
        if (e.kind == CheckKind::Caveat) continue;
        const std::string what =
            e.kind == CheckKind::Multiplier ? problem.label(e.multiplier) : to_string(*e.generator);
        std::cout << "  " << to_string(e.kind) << " " << what << " = " << to_string(e.value)
                  << (e.pass ? "" : "  FAIL") << "\n";
      }
      std::cout << "caveats: " << caveat_summary(report.caveats()) << "\n";
    }
    return report.pass ? kPass : kFail;
  }

  const CertificateOutcome outcome = find_certificate(problem);
  if (o.json) {
    print_json(to_json(outcome, problem));
  } else if (const auto* c = std::get_if<Certificate>(&outcome)) {
    std::cout << "feasible\n";
    std::cout << "x = " << join_x(c->x) << "\n";
    for (const auto& [x, v] : c->residual)
      if (v != 0 || x.kind == GeneratorKind::DeltaIrr) std::cout << "residual " << to_string(x) << " = " << to_string(v) << "\n";
    std::cout << "caveats: " << caveat_summary(c->caveats) << "\n";
  } else {
    const Infeasible& inf = std::get<Infeasible>(outcome);
    std::cout << "infeasible (" << to_string(inf.witness.kind) << ")\n" << inf.witness.derivation << "\n";
    std::cout << "caveats: " << caveat_summary(inf.caveats) << "\n";
  }
  return std::holds_alternative<Certificate>(outcome) ? kPass : kFail;
}

void print_outcome(const std::string& heading, const CertificateOutcome& outcome) {
  std::cout << heading << ": ";
  if (const auto* c = std::get_if<Certificate>(&outcome)) {
    std::cout << "feasible, x = " << join_x(c->x) << "\n";
    return;
  }
  const auto& w = std::get<Infeasible>(outcome).witness;
  std::cout << "infeasible (" << to_string(w.kind) << ")\n    " << w.derivation << "\n";
}

int cmd_audit(const Options& o) {
  if (o.audit_case.empty()) throw UsageError("--case is required");
  const auto& names = audit_case_names();
  if (std::find(names.begin(), names.end(), o.audit_case) == names.end())
    throw UsageError("unknown case '" + o.audit_case + "'");
  const AuditReport report = run_audit(o.audit_case);
  if (!o.write_effectives.empty())
    write_json_file(o.write_effectives,
                    effectives_to_json(report.recomputed_problem.effectives, report.recomputed_problem.labels));
  if (o.json) {
    print_json(to_json(report));
  } else {
    std::cout << "case " << report.case_name << " on " << to_string(report.space) << "\n";
    std::cout << "  " << report.summary << "\n";
    for (const auto& c : report.comparisons) {
      std::cout << c.name << ": stated " << c.stated_form << " -> " << (c.agrees ? "agrees" : "DIFFERS") << "\n";
      for (const auto& e : c.entries)
        if (e.status == ComparisonStatus::Differ)
          std::cout << "    " << to_string(e.generator) << ": stated " << to_string(e.left) << ", recomputed "
                    << to_string(e.right) << "\n";
    }
    std::cout << "claim " << report.claim.stated_form << " at x = " << join_x(report.claim.x) << ": recomputed "
              << (report.claim.recomputed.pass ? "pass" : "FAIL") << ", stated "
              << (report.claim.stated.pass ? "pass" : "FAIL") << "\n";
    print_outcome("certificate (recomputed)", report.recomputed_outcome);
    print_outcome("certificate (stated)", report.stated_outcome);
    std::cout << "findings:\n";
    for (const auto& f : report.findings) std::cout << "  - " << f << "\n";
    std::cout << (report.consistent ? "consistent" : "DISCREPANCY") << "\n";
  }
  return report.consistent ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact divisor class calculus on moduli spaces of pointed curves"};
  app.require_subcommand(1);
  Options o;

  auto add_space = [&](CLI::App* sub, bool with_n) {
    sub->add_option("--g", o.g, "genus");
    if (with_n) sub->add_option("--n", o.n, "number of marked points");
    sub->add_flag("--json", o.json, "JSON output");
  };
  auto add_class = [&](CLI::App* sub) {
    sub->add_option("--expr", o.expr, "class expression");
    sub->add_option("--class", o.class_file, "class as a JSON file");
  };

  auto* basis = app.add_subcommand("basis", "list the generator basis");
  add_space(basis, true);

  auto* clutch = app.add_subcommand("clutch", "pull back from M(g+1,0) to M(g,2)");
  add_space(clutch, false);
  add_class(clutch);

  auto* forget = app.add_subcommand("forget", "pull back along a forgetful map");
  add_space(forget, true);
  add_class(forget);
  forget->add_option("--map", o.map, "embedding \"1:3,2:7\"");
  forget->add_flag("--all", o.all, "average over all embeddings of a class on M(g,2)");

  auto* average = app.add_subcommand("average", "average over the powers of (1 2 ... N)");
  add_space(average, true);
  add_class(average);
  average->add_option("--cycle", o.cycle, "cycle length N");

  auto* pair_cmd = app.add_subcommand("pair", "pair a class with test curves");
  add_space(pair_cmd, false);
  add_class(pair_cmd);
  pair_cmd->add_option("--curves", o.curves, "catalog JSON file");
  pair_cmd->add_option("--catalog", o.catalog, "builtin catalog: amended (default) or verbatim");
  pair_cmd->add_option("--write-catalog", o.write_catalog, "write the catalog as JSON");

  auto* solve = app.add_subcommand("solve", "recover a class from recorded pushforward pairings");
  add_space(solve, false);
  solve->add_option("--curves", o.curves, "catalog JSON file");
  solve->add_option("--catalog", o.catalog, "builtin catalog: amended (default) or verbatim");
  solve->add_flag("--include-lambda", o.include_lambda, "keep lambda in the ansatz");
  solve->add_option("--policy", o.policy, "ambiguous curves: exclude (default), include, drop");

  auto* certify = app.add_subcommand("certify", "check or search an effectivity certificate");
  add_space(certify, true);
  certify->add_option("--target", o.target, "target class expression");
  certify->add_option("--effectives", o.effectives, "effective classes JSON file");
  certify->add_option("--x", o.x, "check this combination, e.g. \"2/3,1/3\"");
  certify->add_option("--cone-extra", o.cone_extra, "extra residual cone generators");
  certify->add_flag("--no-boundary-cone", o.no_boundary_cone, "drop the boundary from the residual cone");

  auto* audit = app.add_subcommand("audit", "run a fixed end-to-end case");
  audit->add_option("--case", o.audit_case, "m16n11, m18n9, m22n3 or m22n4");
  audit->add_option("--write-effectives", o.write_effectives, "write the recomputed effectives as JSON");
  audit->add_flag("--json", o.json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kPass : kUsage;
  }

  try {
    if (*basis) return cmd_basis(o);
    if (*clutch) return cmd_clutch(o);
    if (*forget) return cmd_forget(o);
    if (*average) return cmd_average(o);
    if (*pair_cmd) return cmd_pair(o);
    if (*solve) return cmd_solve(o);
    if (*certify) return cmd_certify(o);
    if (*audit) return cmd_audit(o);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const UnknownCoefficient& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFail;
  } catch (const Error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "usage error: malformed JSON input: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
