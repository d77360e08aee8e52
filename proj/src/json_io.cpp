#include "mgn/json_io.hpp"

#include <fstream>
#include <optional>

#include "mgn/errors.hpp"

namespace mgn {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InvalidSpec(std::string("missing field '") + key + "'");
  return j.at(key);
}

int int_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer()) throw InvalidSpec(std::string("field '") + key + "' must be an integer");
  return v.get<int>();
}

std::int64_t as_int64(const Json& v, const std::string& what) {
  if (!v.is_number_integer()) throw InvalidSpec(what + " must be an integer");
  return v.get<std::int64_t>();
}

SpaceId space_of(const Json& j, std::optional<int> default_n = std::nullopt) {
  try {
    const int n = (default_n && j.is_object() && !j.contains("n")) ? *default_n : int_field(j, "n");
    return make_space(int_field(j, "g"), n);
  } catch (const InvalidSpace& e) {
    throw InvalidSpec(e.what());
  }
}

Json labels_json(const std::vector<GeneratorIndex>& xs) {
  Json out = Json::array();
  for (const auto& x : xs) out.push_back(to_string(x));
  return out;
}

Json rationals_json(const std::vector<Rational>& xs) {
  Json out = Json::array();
  for (const auto& x : xs) out.push_back(to_json(x));
  return out;
}

Json multipliers_json(const std::vector<std::pair<std::string, Rational>>& ys) {
  Json out = Json::object();
  for (const auto& [label, y] : ys) out[label] = to_json(y);
  return out;
}

Json comparison_json(const ComparisonReport::Entry& e) {
  static const char* names[] = {"equal", "differ", "incomparable"};
  return Json{{"generator", to_string(e.generator)},
              {"status", names[static_cast<int>(e.status)]},
              {"stated", to_string(e.left)},
              {"recomputed", to_string(e.right)}};
}

}  // namespace

Json to_json(const Rational& r) { return to_string(r); }

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const ParseError& e) {
      throw InvalidSpec(e.what());
    }
  }
  throw InvalidSpec("rational must be a string \"p/q\" or an integer");
}

Json to_json(const DivisorClass& c) {
  Json coeffs = Json::object();
  Json unknown = Json::array();
  for (const auto& [x, v] : c.terms()) {
    if (v.is_unknown())
      unknown.push_back(to_string(x));
    else
      coeffs[to_string(x)] = to_json(v.value());
  }
  Json out{{"g", c.space().g}, {"n", c.space().n}, {"coeffs", coeffs}, {"unknown", unknown}};
  if (!c.provenance().empty()) out["provenance"] = c.provenance();
  return out;
}

DivisorClass class_from_json(const Json& j) {
  const SpaceId space = space_of(j);
  DivisorClass c(space, j.contains("provenance") ? j.at("provenance").get<std::string>() : std::string{});
  try {
    if (j.contains("coeffs")) {
      if (!j.at("coeffs").is_object()) throw InvalidSpec("'coeffs' must be an object");
      for (const auto& [label, v] : j.at("coeffs").items())
        c.accumulate(parse_generator(space, label), rational_from_json(v));
    }
    if (j.contains("unknown"))
      for (const auto& label : j.at("unknown")) c.set_unknown(parse_generator(space, label.get<std::string>()));
  } catch (const ParseError& e) {
    throw InvalidSpec(e.what());
  } catch (const InvalidGenerator& e) {
    throw InvalidSpec(e.what());
  } catch (const nlohmann::json::exception& e) {
    throw InvalidSpec(e.what());
  }
  return c;
}

Json to_json(const TestCurve& curve) {
  Json pairings = Json::object();
  for (const auto& [x, v] : curve.pairings) pairings[to_string(x)] = v;
  Json unresolved = Json::object();
  for (const auto& [label, v] : curve.unresolved) unresolved[label] = v;
  Json ambiguous = Json::array();
  for (const auto& x : curve.ambiguous) ambiguous.push_back(to_string(x));
  Json out{{"name", curve.name},
           {"g", curve.space.g},
           {"n", curve.space.n},
           {"pairings", pairings},
           {"pushforward_d0", curve.pushforward_d0 ? Json(*curve.pushforward_d0) : Json(nullptr)},
           {"ambiguous", ambiguous},
           {"unresolved", unresolved}};
  if (!curve.note.empty()) out["note"] = curve.note;
  return out;
}

TestCurve curve_from_json(const Json& j) {
  TestCurve c;
  c.name = field(j, "name").get<std::string>();
  c.space = space_of(j, 2);
  try {
    if (j.contains("pairings"))
      for (const auto& [label, v] : j.at("pairings").items())
        c.add_pairing(parse_generator(c.space, label), as_int64(v, "pairing '" + label + "'"));
    if (j.contains("pushforward_d0") && !j.at("pushforward_d0").is_null())
      c.pushforward_d0 = as_int64(j.at("pushforward_d0"), "pushforward_d0");
    if (j.contains("ambiguous"))
      for (const auto& label : j.at("ambiguous")) c.ambiguous.insert(parse_generator(c.space, label.get<std::string>()));
  } catch (const ParseError& e) {
    throw InvalidSpec(c.name + ": " + e.what());
  } catch (const InvalidGenerator& e) {
    throw InvalidSpec(c.name + ": " + e.what());
  } catch (const nlohmann::json::exception& e) {
    throw InvalidSpec(c.name + ": " + e.what());
  }
  if (j.contains("unresolved"))
    for (const auto& [label, v] : j.at("unresolved").items()) c.unresolved[label] = as_int64(v, "unresolved entry");
  if (j.contains("note")) c.note = j.at("note").get<std::string>();
  return c;
}

Json catalog_to_json(const std::vector<TestCurve>& catalog) {
  Json curves = Json::array();
  for (const auto& c : catalog) curves.push_back(to_json(c));
  return Json{{"curves", curves}};
}

std::vector<TestCurve> catalog_from_json(const Json& j) {
  const Json& arr = j.is_array() ? j : field(j, "curves");
  if (!arr.is_array()) throw InvalidSpec("'curves' must be an array");
  std::vector<TestCurve> out;
  for (const auto& c : arr) out.push_back(curve_from_json(c));
  return out;
}

Json effectives_to_json(const std::vector<DivisorClass>& effectives, const std::vector<std::string>& labels) {
  Json arr = Json::array();
  for (const auto& e : effectives) arr.push_back(to_json(e));
  Json out{{"effectives", arr}};
  if (!labels.empty()) out["labels"] = labels;
  return out;
}

std::vector<DivisorClass> effectives_from_json(const Json& j, std::vector<std::string>* labels) {
  const Json& arr = j.is_array() ? j : field(j, "effectives");
  if (!arr.is_array()) throw InvalidSpec("'effectives' must be an array");
  std::vector<DivisorClass> out;
  for (const auto& e : arr) out.push_back(class_from_json(e));
  if (labels && j.is_object() && j.contains("labels")) *labels = j.at("labels").get<std::vector<std::string>>();
  return out;
}

Json to_json(const CertificateProblem& problem) {
  Json extra = Json::array();
  for (const auto& x : problem.residual_cone.extra) extra.push_back(to_string(x));
  Json out = effectives_to_json(problem.effectives, problem.labels);
  out["target"] = to_json(problem.target);
  out["residual_cone"] = Json{{"boundary", problem.residual_cone.include_boundary}, {"extra", extra}};
  return out;
}

CertificateProblem problem_from_json(const Json& j) {
  CertificateProblem p{class_from_json(field(j, "target")), {}, {}, {}};
  p.effectives = effectives_from_json(j, &p.labels);
  if (j.contains("residual_cone")) {
    const Json& cone = j.at("residual_cone");
    try {
      if (cone.contains("boundary")) p.residual_cone.include_boundary = cone.at("boundary").get<bool>();
      if (cone.contains("extra"))
        for (const auto& label : cone.at("extra"))
          p.residual_cone.extra.insert(parse_generator(p.target.space(), label.get<std::string>()));
    } catch (const nlohmann::json::exception& e) {
      throw InvalidSpec(std::string("residual_cone: ") + e.what());
    } catch (const ParseError& e) {
      throw InvalidSpec(std::string("residual_cone: ") + e.what());
    } catch (const InvalidGenerator& e) {
      throw InvalidSpec(std::string("residual_cone: ") + e.what());
    }
  }
  return p;
}

Json to_json(const CheckReport& report, const CertificateProblem& problem) {
  Json entries = Json::array();
  for (const auto& e : report.entries) {
    if (e.kind == CheckKind::Caveat) continue;
    Json row{{"kind", to_string(e.kind)}};
    if (e.kind == CheckKind::Multiplier)
      row["multiplier"] = problem.label(e.multiplier);
    else
      row["generator"] = to_string(*e.generator);
    row["value"] = to_string(e.value);
    row["pass"] = e.pass;
    entries.push_back(std::move(row));
  }
  return Json{{"pass", report.pass}, {"entries", entries}, {"caveats", labels_json(report.caveats())}};
}

Json to_json(const CertificateOutcome& outcome, const CertificateProblem& problem) {
  Json labels = Json::array();
  for (std::size_t j = 0; j < problem.effectives.size(); ++j) labels.push_back(problem.label(j));
  if (const auto* c = std::get_if<Certificate>(&outcome)) {
    Json residual = Json::object();
    for (const auto& [x, v] : c->residual) residual[to_string(x)] = to_json(v);
    return Json{{"status", "feasible"},
                {"labels", labels},
                {"x", rationals_json(c->x)},
                {"residual", residual},
                {"caveats", labels_json(c->caveats)}};
  }
  const Infeasible& inf = std::get<Infeasible>(outcome);
  const InfeasibilityWitness& w = inf.witness;
  Json wj{{"kind", to_string(w.kind)}};
  wj["coordinate"] = w.coordinate ? Json(to_string(*w.coordinate)) : Json(nullptr);
  wj["multiplier"] = w.multiplier ? Json(problem.label(*w.multiplier)) : Json(nullptr);
  wj["forced_x"] = rationals_json(w.forced_x);
  wj["value"] = to_json(w.value);
  wj["equality_multipliers"] = multipliers_json(w.equality_multipliers);
  wj["inequality_multipliers"] = multipliers_json(w.inequality_multipliers);
  wj["farkas_value"] = to_json(w.farkas_value);
  wj["derivation"] = w.derivation;
  return Json{{"status", "infeasible"}, {"labels", labels}, {"witness", wj}, {"caveats", labels_json(inf.caveats)}};
}

Json to_json(const SolveResult& result) {
  return Json{{"solution", to_json(result.solution)},
              {"unique", result.unique()},
              {"free_generators", labels_json(result.free_generators)},
              {"excluded_curves", result.excluded_curves},
              {"equations_used", result.equations_used},
              {"rank", result.rank}};
}

Json to_json(const AuditReport& report) {
  Json comparisons = Json::array();
  for (const auto& c : report.comparisons) {
    Json entries = Json::array();
    for (const auto& e : c.entries) entries.push_back(comparison_json(e));
    comparisons.push_back(Json{{"name", c.name},
                               {"stated_form", c.stated_form},
                               {"g", c.stated.space().g},
                               {"n", c.stated.space().n},
                               {"agrees", c.agrees},
                               {"entries", entries}});
  }
  const Json claim{{"stated_form", report.claim.stated_form},
                   {"x", rationals_json(report.claim.x)},
                   {"recomputed", to_json(report.claim.recomputed, report.recomputed_problem)},
                   {"stated", to_json(report.claim.stated, report.stated_problem)}};
  return Json{{"case", report.case_name},
              {"g", report.space.g},
              {"n", report.space.n},
              {"summary", report.summary},
              {"consistent", report.consistent},
              {"comparisons", comparisons},
              {"claim", claim},
              {"recomputed_outcome", to_json(report.recomputed_outcome, report.recomputed_problem)},
              {"stated_outcome", to_json(report.stated_outcome, report.stated_problem)},
              {"findings", report.findings}};
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidSpec("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidSpec("'" + path + "': " + e.what());
  }
}

}  // namespace mgn
