#include "committee/document.hpp"

#include "committee/dp.hpp"
#include "committee/region.hpp"

#include <json.hpp>

#include <cmath>
#include <limits>

namespace committee {

using nlohmann::json;

std::string_view to_string(DiagnosticCode code) {
  switch (code) {
    case DiagnosticCode::malformed: return "malformed";
    case DiagnosticCode::unknown_candidate: return "unknown_candidate";
    case DiagnosticCode::unknown_label: return "unknown_label";
    case DiagnosticCode::invalid_bounds: return "invalid_bounds";
    case DiagnosticCode::non_permutation: return "non_permutation";
    case DiagnosticCode::illegal_combination: return "illegal_combination";
  }
  return "unknown";
}

ParseError::ParseError(DiagnosticCode c, std::string f, const std::string& message)
    : InputError(f.empty() ? message : f + ": " + message), code(c), field(std::move(f)) {}

namespace {

[[noreturn]] void fail(DiagnosticCode code, const std::string& field, const std::string& message) {
  throw ParseError(code, field, message);
}

const json& require(const json& obj, const char* key, const std::string& path) {
  const auto it = obj.find(key);
  if (it == obj.end()) fail(DiagnosticCode::malformed, path + key, "missing field");
  return *it;
}

std::string as_string(const json& v, const std::string& field) {
  if (!v.is_string()) fail(DiagnosticCode::malformed, field, "expected a string");
  return v.get<std::string>();
}

int as_int(const json& v, const std::string& field) {
  if (!v.is_number_integer()) fail(DiagnosticCode::malformed, field, "expected an integer");
  const auto x = v.get<std::int64_t>();
  if (x < std::numeric_limits<int>::min() || x > std::numeric_limits<int>::max())
    fail(DiagnosticCode::malformed, field, "integer out of range");
  return static_cast<int>(x);
}

std::vector<std::string> as_strings(const json& v, const std::string& field) {
  if (!v.is_array()) fail(DiagnosticCode::malformed, field, "expected an array of strings");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < v.size(); ++i)
    out.push_back(as_string(v[i], field + "[" + std::to_string(i) + "]"));
  return out;
}

Rational exact(double d) {
  int exponent = 0;
  const double mantissa = std::frexp(d, &exponent);
  const auto scaled = static_cast<std::int64_t>(std::ldexp(mantissa, 53));
  Rational r(scaled);
  exponent -= 53;
  boost::multiprecision::cpp_int power = 1;
  power <<= std::abs(exponent);
  if (exponent >= 0) return Rational(r * power);
  return Rational(r / power);
}

Rational as_rational(const json& v, const std::string& field) {
  if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
  if (v.is_number_unsigned()) return Rational(v.get<std::uint64_t>());
  if (v.is_number_float()) {
    const double d = v.get<double>();
    if (!std::isfinite(d)) fail(DiagnosticCode::malformed, field, "non-finite number");
    return exact(d);
  }
  if (v.is_string()) {
    try {
      return Rational(v.get<std::string>());
    } catch (const std::exception&) {
      fail(DiagnosticCode::malformed, field, "expected a number or \"p/q\"");
    }
  }
  fail(DiagnosticCode::malformed, field, "expected a number");
}

json number(const Rational& r) {
  if (denominator(r) == 1) {
    const auto& n = numerator(r);
    if (n >= std::numeric_limits<std::int64_t>::min() && n <= std::numeric_limits<std::int64_t>::max())
      return n.convert_to<std::int64_t>();
    return n.convert_to<double>();
  }
  const double d = r.convert_to<double>();
  if (std::isfinite(d) && exact(d) == r) return d;
  return r.str();
}

ScoringFunction parse_gamma(const json& v) {
  const std::string field = "rule.gamma";
  if (v.is_string()) {
    const auto name = v.get<std::string>();
    if (name == "sntv") return ScoringFunction::sntv();
    if (name == "borda") return ScoringFunction::borda();
    if (name == "bloc") return ScoringFunction::bloc();
    fail(DiagnosticCode::malformed, field, "unknown scoring preset '" + name + "'");
  }
  if (!v.is_array()) fail(DiagnosticCode::malformed, field, "expected a preset name or an array");
  std::vector<Rational> values;
  for (std::size_t i = 0; i < v.size(); ++i)
    values.push_back(as_rational(v[i], field + "[" + std::to_string(i) + "]"));
  return ScoringFunction::from_vector(std::move(values));
}

Rule parse_rule(const json& v) {
  if (!v.is_object()) fail(DiagnosticCode::malformed, "rule", "expected an object");
  const auto type = as_string(require(v, "type", "rule."), "rule.type");
  if (type == "weakly_separable") return WeaklySeparableRule{parse_gamma(require(v, "gamma", "rule."))};
  if (type == "stv") {
    const auto variant = as_string(require(v, "variant", "rule."), "rule.variant");
    if (variant == "simple") return StvRule{StvVariant::simple};
    if (variant == "droop_gregory") return StvRule{StvVariant::droop_gregory};
    fail(DiagnosticCode::malformed, "rule.variant", "unknown STV variant '" + variant + "'");
  }
  fail(DiagnosticCode::malformed, "rule.type", "unknown rule type '" + type + "'");
}

OrderKind parse_order(const json& v) {
  const auto name = as_string(v, "order");
  if (name == "score") return OrderKind::score;
  if (name == "leximax") return OrderKind::leximax;
  if (name == "leximin") return OrderKind::leximin;
  fail(DiagnosticCode::malformed, "order", "unknown order '" + name + "'");
}

std::vector<std::string> profile_ids(const ElectionProfile& profile, const CandidateSet& set) {
  return profile.names_of(set);
}

}  // namespace

ElectionInstance parse_instance(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    // Byte offset to line number.
    const auto offset = std::min<std::size_t>(e.byte, text.size());
    const auto line = 1 + std::count(text.begin(), text.begin() + offset, '\n');
    fail(DiagnosticCode::malformed, "line " + std::to_string(line), "invalid JSON");
  }
  if (!doc.is_object()) fail(DiagnosticCode::malformed, "", "document must be a JSON object");

  const auto candidates = as_strings(require(doc, "candidates", ""), "candidates");
  if (candidates.empty()) fail(DiagnosticCode::malformed, "candidates", "no candidates");
  {
    auto sorted = candidates;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      fail(DiagnosticCode::malformed, "candidates", "duplicate candidate identifier");
  }

  const auto& voters_json = require(doc, "voters", "");
  if (!voters_json.is_array() || voters_json.empty())
    fail(DiagnosticCode::malformed, "voters", "expected a non-empty array of rankings");
  std::vector<std::vector<std::string>> voters;
  for (std::size_t i = 0; i < voters_json.size(); ++i) {
    const auto field = "voters[" + std::to_string(i) + "]";
    auto ranking = as_strings(voters_json[i], field);
    auto sorted = ranking;
    std::sort(sorted.begin(), sorted.end());
    auto expected = candidates;
    std::sort(expected.begin(), expected.end());
    if (sorted != expected)
      fail(DiagnosticCode::non_permutation, field, "non-permutation ranking, voter index " + std::to_string(i));
    voters.push_back(std::move(ranking));
  }

  const int k = as_int(require(doc, "k", ""), "k");
  if (k < 0 || k > static_cast<int>(candidates.size()))
    fail(DiagnosticCode::invalid_bounds, "k", "committee size out of range");
  ElectionProfile profile(candidates, voters, k);

  const auto lookup = [&](const json& v, const std::string& field) {
    const auto id = as_string(v, field);
    const auto c = profile.find(id);
    if (!c) fail(DiagnosticCode::unknown_candidate, field, "unknown candidate '" + id + "'");
    return *c;
  };

  std::vector<std::pair<std::string, CandidateSet>> labels;
  if (const auto it = doc.find("labels"); it != doc.end()) {
    if (!it->is_object()) fail(DiagnosticCode::malformed, "labels", "expected an object");
    for (const auto& [name, members] : it->items()) {
      const auto field = "labels." + name;
      if (!members.is_array() || members.empty())
        fail(DiagnosticCode::malformed, field, "expected a non-empty array of candidates");
      std::vector<Candidate> set;
      for (std::size_t i = 0; i < members.size(); ++i)
        set.push_back(lookup(members[i], field + "[" + std::to_string(i) + "]"));
      auto canonical = make_set(set);
      if (canonical.size() != set.size()) fail(DiagnosticCode::malformed, field, "candidate listed twice");
      labels.emplace_back(name, std::move(canonical));
    }
  }
  Labeling labeling(profile.num_candidates(), std::move(labels));

  ConstraintSet constraints;
  if (const auto it = doc.find("constraints"); it != doc.end()) {
    if (!it->is_array()) fail(DiagnosticCode::malformed, "constraints", "expected an array");
    for (std::size_t i = 0; i < it->size(); ++i) {
      const auto path = "constraints[" + std::to_string(i) + "].";
      const auto& c = (*it)[i];
      if (!c.is_object()) fail(DiagnosticCode::malformed, path.substr(0, path.size() - 1), "expected an object");
      const auto label_ref = [&](const char* key) {
        const auto name = as_string(require(c, key, path), path + key);
        const auto l = labeling.find(name);
        if (!l) fail(DiagnosticCode::unknown_label, path + key, "unknown label '" + name + "'");
        return *l;
      };
      const auto type = as_string(require(c, "type", path), path + "type");
      if (type == "interval") {
        const int label = label_ref("label");
        const int lo = as_int(require(c, "min", path), path + "min");
        const int hi = as_int(require(c, "max", path), path + "max");
        if (lo < 0 || lo > hi) fail(DiagnosticCode::invalid_bounds, path + "min", "invalid interval bounds");
        constraints.intervals.push_back({label, lo, hi});
      } else if (type == "dominance") {
        constraints.dominances.push_back({label_ref("over"), label_ref("under")});
      } else {
        fail(DiagnosticCode::malformed, path + "type", "unknown constraint type '" + type + "'");
      }
    }
  }

  Rule rule = parse_rule(require(doc, "rule", ""));
  const OrderKind order = parse_order(require(doc, "order", ""));
  if (order == OrderKind::score && std::holds_alternative<StvRule>(rule))
    fail(DiagnosticCode::illegal_combination, "order", "score order requires a weakly separable rule");
  if (const auto* ws = std::get_if<WeaklySeparableRule>(&rule);
      ws && ws->gamma.preset() == ScoringFunction::Preset::explicit_vector &&
      static_cast<int>(ws->gamma.explicit_values().size()) != profile.num_candidates())
    fail(DiagnosticCode::malformed, "rule.gamma", "scoring vector needs one value per position");

  std::optional<CandidateSet> reference;
  if (const auto it = doc.find("reference"); it != doc.end() && !it->is_null()) {
    if (!it->is_array()) fail(DiagnosticCode::malformed, "reference", "expected an array of candidates");
    std::vector<Candidate> set;
    for (std::size_t i = 0; i < it->size(); ++i)
      set.push_back(lookup((*it)[i], "reference[" + std::to_string(i) + "]"));
    reference = make_set(set);
    if (reference->size() != set.size()) fail(DiagnosticCode::malformed, "reference", "candidate listed twice");
  }

  return {std::move(profile), std::move(labeling), std::move(constraints), std::move(rule), order,
          std::move(reference)};
}

std::string serialize_instance(const ElectionInstance& instance) {
  const auto& profile = instance.profile;
  const auto& labeling = instance.labeling;
  json doc;
  doc["candidates"] = profile.candidates();
  json voters = json::array();
  for (const auto& ranking : profile.rankings()) {
    json r = json::array();
    for (Candidate c : ranking) r.push_back(profile.name(c));
    voters.push_back(std::move(r));
  }
  doc["voters"] = std::move(voters);
  doc["k"] = profile.committee_size();

  json labels = json::object();
  for (int l = 0; l < labeling.size(); ++l) labels[labeling.name(l)] = profile_ids(profile, labeling.members(l));
  doc["labels"] = std::move(labels);

  json constraints = json::array();
  for (const auto& in : instance.constraints.intervals)
    constraints.push_back(
        {{"type", "interval"}, {"label", labeling.name(in.label)}, {"min", in.min}, {"max", in.max}});
  for (const auto& d : instance.constraints.dominances)
    constraints.push_back(
        {{"type", "dominance"}, {"over", labeling.name(d.over)}, {"under", labeling.name(d.under)}});
  doc["constraints"] = std::move(constraints);

  if (const auto* ws = std::get_if<WeaklySeparableRule>(&instance.rule)) {
    json gamma;
    switch (ws->gamma.preset()) {
      case ScoringFunction::Preset::sntv: gamma = "sntv"; break;
      case ScoringFunction::Preset::borda: gamma = "borda"; break;
      case ScoringFunction::Preset::bloc: gamma = "bloc"; break;
      case ScoringFunction::Preset::explicit_vector:
        gamma = json::array();
        for (const auto& v : ws->gamma.explicit_values()) gamma.push_back(number(v));
        break;
    }
    doc["rule"] = {{"type", "weakly_separable"}, {"gamma", std::move(gamma)}};
  } else {
    const auto variant = std::get<StvRule>(instance.rule).variant;
    doc["rule"] = {{"type", "stv"}, {"variant", variant == StvVariant::simple ? "simple" : "droop_gregory"}};
  }

  switch (instance.order) {
    case OrderKind::score: doc["order"] = "score"; break;
    case OrderKind::leximax: doc["order"] = "leximax"; break;
    case OrderKind::leximin: doc["order"] = "leximin"; break;
  }
  if (instance.reference) doc["reference"] = profile_ids(profile, *instance.reference);
  return doc.dump(2) + "\n";
}

SolverChoice parse_solver_choice(std::string_view name) {
  if (name == "auto") return SolverChoice::automatic;
  if (name == "dp") return SolverChoice::dp;
  if (name == "region") return SolverChoice::region;
  if (name == "oracle") return SolverChoice::oracle;
  throw InputError("unknown solver '" + std::string(name) + "'");
}

SolverChoice route(const ElectionInstance& instance) {
  const bool score = instance.order == OrderKind::score;
  if (score && instance.labeling.size() <= 8) return SolverChoice::region;
  if (instance.labeling.disjoint() && build_dominance_graph(instance.constraints, instance.labeling).tree_like)
    return SolverChoice::dp;
  if (score) return SolverChoice::region;
  return SolverChoice::oracle;
}

SolveOutcome run_solve(const ElectionInstance& instance, SolverChoice choice, const OracleBudget& budget) {
  SolveOutcome out;
  try {
    instance.constraints.validate(instance.labeling);
    if (choice == SolverChoice::automatic) choice = route(instance);
    const int k = instance.profile.committee_size();
    const auto order = make_order(instance);
    switch (choice) {
      case SolverChoice::dp:
        out.result = solve_dp(instance.labeling, instance.constraints, order, k);
        break;
      case SolverChoice::region: {
        const auto scores = rule_scores(instance);
        if (!scores || instance.order != OrderKind::score)
          throw ContractError("region solver requires a weakly separable rule with the score order");
        out.result = solve_region_ip(compute_regions(instance.labeling, *scores), instance.constraints, k);
        break;
      }
      case SolverChoice::oracle:
      case SolverChoice::automatic:
        out.result = solve_bruteforce(instance.profile, instance.labeling, instance.constraints, k, order, budget);
        break;
    }
    if (out.result.feasible()) {
      const auto report = check_committee(*out.result.committee, instance.labeling, instance.constraints, k);
      if (!report.valid())
        throw ContractError(out.result.solver + " returned a committee violating " +
                            describe(report.violations.front(), instance.labeling));
    }
    out.exit_code = out.result.feasible() ? 0 : 1;
  } catch (const ContractError& e) {
    out.error = e.what();
  } catch (const BudgetError& e) {
    out.error = e.what();
  } catch (const InputError& e) {
    out.error = e.what();
  }
  return out;
}

std::string result_document(const ElectionInstance& instance, const SolveResult& result) {
  json doc;
  doc["status"] = result.feasible() ? "optimal" : "infeasible";
  doc["committee"] = nullptr;
  doc["score"] = nullptr;
  if (result.committee) {
    doc["committee"] = instance.profile.names_of(*result.committee);
    std::optional<Rational> score = result.score;
    if (const auto* ws = std::get_if<WeaklySeparableRule>(&instance.rule); !score && ws)
      score = score_committee(instance.profile, ws->gamma, *result.committee);
    if (score) {
      doc["score"] = number(*score);
      if (doc["score"].is_string()) doc["score"] = score->convert_to<double>();
    }
  }
  doc["solver"] = result.solver;
  return doc.dump(2) + "\n";
}

CheckOutcome run_check(const ElectionInstance& instance, const std::vector<std::string>& committee) {
  CheckOutcome out;
  std::vector<Candidate> members;
  for (const auto& id : committee) {
    const auto c = instance.profile.find(id);
    if (!c) {
      out.document = json{{"error", "unknown candidate '" + id + "'"}}.dump(2) + "\n";
      return out;
    }
    members.push_back(*c);
  }
  auto set = make_set(members);
  if (set.size() != members.size()) {
    out.document = json{{"error", "committee lists a candidate twice"}}.dump(2) + "\n";
    return out;
  }

  out.report = check_committee(set, instance.labeling, instance.constraints, instance.profile.committee_size());
  json violations = json::array();
  for (const auto& v : out.report.violations) {
    json entry;
    entry["description"] = describe(v, instance.labeling);
    switch (v.kind) {
      case Violation::Kind::size:
        entry["kind"] = "size";
        entry["count"] = v.count;
        entry["expected"] = v.min;
        break;
      case Violation::Kind::interval:
        entry["kind"] = "interval";
        entry["label"] = instance.labeling.name(v.label);
        entry["count"] = v.count;
        entry["min"] = v.min;
        entry["max"] = v.max;
        break;
      case Violation::Kind::dominance:
        entry["kind"] = "dominance";
        entry["over"] = instance.labeling.name(v.label);
        entry["under"] = instance.labeling.name(v.other);
        entry["over_count"] = v.count;
        entry["under_count"] = v.other_count;
        break;
    }
    violations.push_back(std::move(entry));
  }
  out.document = json{{"valid", out.report.valid()}, {"violations", std::move(violations)}}.dump(2) + "\n";
  out.exit_code = out.report.valid() ? 0 : 1;
  return out;
}

}  // namespace committee
