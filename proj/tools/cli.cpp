#include "teamlogic/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "teamlogic/admissibility.hpp"
#include "teamlogic/normal_form.hpp"
#include "teamlogic/parser.hpp"
#include "teamlogic/projectivity.hpp"
#include "teamlogic/semantics.hpp"
#include "teamlogic/substitution.hpp"

namespace teamlogic::cli {
namespace {

using Json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Config {
  std::string fragment_name = "xpt";
  Fragment fragment = Fragment::XPT;
  std::optional<std::size_t> eval_cap;
  std::optional<std::size_t> family_cap;
  std::uint64_t seed = 1;
  bool json = false;
  Limits limits;

  void resolve() {
    const auto fr = parse_fragment(fragment_name);
    if (!fr) throw UsageError("unknown fragment '" + fragment_name + "' (expected pd, inql, pt, xpd or xpt)");
    fragment = *fr;
    limits = Limits::from_environment();
    if (eval_cap) limits.eval_cap = *eval_cap;
    if (family_cap) limits.family_cap = *family_cap;
  }

  Formula formula(const std::string& text) const {
    Formula f = parse(text, fragment);
    require_fragment(f, fragment, limits);
    return f;
  }

  std::vector<Formula> formulas(const std::vector<std::string>& texts) const {
    std::vector<Formula> out;
    out.reserve(texts.size());
    for (const std::string& t : texts) out.push_back(formula(t));
    return out;
  }
};

std::string yes_no(bool b) { return b ? "true" : "false"; }

Scope scope_from(const std::vector<std::string>& names, const Scope& fallback) {
  if (names.empty()) return fallback;
  Scope s(names);
  if (s.size() != names.size()) throw UsageError("duplicate variable in --scope");
  return s;
}

Json substitution_json(const Substitution& s) {
  Json j = Json::object();
  for (const auto& [var, image] : s.images()) j[var] = render(image);
  return j;
}

Json optional_substitution_json(const std::optional<Substitution>& s) {
  return s ? substitution_json(*s) : Json(nullptr);
}

Substitution read_substitution(const std::string& path, const Config& config) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read substitution file '" + path + "'");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw UsageError("substitution file '" + path + "': " + e.what());
  }
  if (!j.is_object()) throw UsageError("substitution file must hold a JSON object of formula strings");
  Substitution s;
  for (const auto& [var, image] : j.items()) {
    if (!image.is_string()) throw UsageError("image of '" + var + "' is not a string");
    const Formula v = parse(var);
    if (!v.is(Kind::Var)) throw UsageError("'" + var + "' is not a variable name");
    s.set(var, config.formula(image.get<std::string>()));
  }
  return s;
}

// premises... : conclusion
std::pair<std::vector<std::string>, std::string> split_rule(const std::vector<std::string>& args,
                                                            bool allow_pair) {
  const auto colon = std::find(args.begin(), args.end(), ":");
  if (colon == args.end()) {
    if (allow_pair && args.size() == 2) return {{args[0]}, args[1]};
    throw UsageError(allow_pair ? "expected <premise> <conclusion> or <premises...> : <conclusion>"
                                : "expected <premises...> : <conclusion>");
  }
  if (std::next(colon) == args.end() || std::next(colon, 2) != args.end()) {
    throw UsageError("expected exactly one conclusion after ':'");
  }
  return {std::vector<std::string>(args.begin(), colon), *std::next(colon)};
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

Json error_json(std::string_view kind, const std::string& message) {
  return Json{{"error", kind}, {"message", message}};
}

struct Runner {
  Config config;
  std::ostream& out;

  void check(const std::string& team_text, const std::string& formula_text, const std::vector<std::string>& names) {
    const Formula f = config.formula(formula_text);
    const Scope scope = scope_from(names, scope_of(f));
    const Team team = Team::parse(team_text, scope.size());
    const bool holds = evaluate(scope, team, f, config.limits);
    if (config.json) {
      emit(out, Json{{"formula", render(f)}, {"scope", scope.names()}, {"team", team.to_string()}, {"holds", holds}});
    } else {
      out << "check: " << yes_no(holds) << '\n';
    }
  }

  void valid(const std::string& text) {
    const Formula f = config.formula(text);
    const bool v = is_valid(f, config.limits);
    if (config.json) {
      emit(out, Json{{"formula", render(f)}, {"fragment", to_string(config.fragment)}, {"valid", v}});
    } else {
      out << "valid: " << yes_no(v) << '\n';
    }
  }

  void entails(const std::vector<std::string>& args) {
    const auto [premise_texts, conclusion_text] = split_rule(args, false);
    const std::vector<Formula> premises = config.formulas(premise_texts);
    const Formula conclusion = config.formula(conclusion_text);
    const bool e = consequence(premises, conclusion, config.limits);
    if (config.json) {
      Json ps = Json::array();
      for (const Formula& p : premises) ps.push_back(render(p));
      emit(out, Json{{"premises", ps}, {"conclusion", render(conclusion)}, {"entails", e}});
    } else {
      out << "entails: " << yes_no(e) << '\n';
    }
  }

  void nf(const std::string& text, const std::vector<std::string>& names) {
    const Formula f = config.formula(text);
    const NormalForm n = names.empty() ? normal_form(f, config.fragment, config.limits)
                                       : normal_form(f, config.fragment, scope_from(names, {}), config.limits);
    Json components = Json::array();
    for (const Team& t : n.components) components.push_back(t.to_string());
    emit(out, Json{{"components", components},
                   {"formula", n.formula ? Json(render(*n.formula)) : Json(nullptr)},
                   {"fragment", to_string(n.fragment)},
                   {"scope", n.scope.names()}});
  }

  void flat(const std::string& text) {
    const Formula f = config.formula(text);
    const FlatnessReport r = flat_characterization(f, config.fragment, config.limits);
    const Json theta = r.single_theta ? Json(r.single_theta->to_string()) : Json(nullptr);
    if (config.json) {
      emit(out, Json{{"formula", render(f)},
                     {"flat", r.flat},
                     {"single_theta", theta},
                     {"double_neg_equiv", r.double_neg_equiv},
                     {"tensor_excluded_middle", r.tensor_excluded_middle}});
    } else {
      out << "flat: " << yes_no(r.flat) << '\n'
          << "single_theta: " << (r.single_theta ? r.single_theta->to_string() : "none") << '\n'
          << "double_neg_equiv: " << yes_no(r.double_neg_equiv) << '\n'
          << "tensor_excluded_middle: " << yes_no(r.tensor_excluded_middle) << '\n';
    }
  }

  void unify(const std::string& text) {
    const Formula f = config.formula(text);
    const ProjectivityReport r = analyze_projectivity(f, config.fragment, config.limits);
    emit(out, Json{{"formula", render(f)},
                   {"fragment", to_string(config.fragment)},
                   {"style", r.unifier ? Json(to_string(default_style(config.fragment))) : Json(nullptr)},
                   {"substitution", optional_substitution_json(r.unifier)},
                   {"report",
                    {{"unifies", r.unifies},
                     {"fixes_vars_under_premise", r.fixes_vars_under_premise},
                     {"witness", r.witness ? Json(r.witness->to_string()) : Json(nullptr)}}}});
  }

  void subst(const std::string& path, const std::string& text, const std::optional<std::string>& team_text,
             const std::vector<std::string>& names) {
    const Formula f = config.formula(text);
    const Substitution s = read_substitution(path, config);
    const Formula image = apply(s, f, config.fragment, config.limits);

    std::vector<Formula> sources{image};
    for (const auto& [var, img] : s.images()) sources.push_back(img);
    const Scope source = scope_from(names, scope_of(sources));
    const Scope target = scope_of(f);
    if (source.size() > config.limits.eval_cap) {
      throw ScopeCapExceeded(source.size(), config.limits.eval_cap, "evaluation");
    }
    const Team x = team_text ? Team::parse(*team_text, source.size()) : Team::full(source.size());
    const Team xs = translate_team(x, s, source, target);
    const bool lhs = evaluate(source, x, image, config.limits);
    const bool rhs = evaluate(target, xs, f, config.limits);
    const bool flat_s = is_flat_substitution(s, config.limits);
    if (flat_s && lhs != rhs) throw InternalAssertionFailure("translation disagrees on a flat substitution");

    if (config.json) {
      emit(out, Json{{"substitution", substitution_json(s)},
                     {"formula", render(f)},
                     {"result", render(image)},
                     {"flat", flat_s},
                     {"source_scope", source.names()},
                     {"target_scope", target.names()},
                     {"team", x.to_string()},
                     {"translated_team", xs.to_string()},
                     {"holds", lhs},
                     {"translated_holds", rhs}});
    } else {
      out << "result: " << render(image) << '\n'
          << "flat: " << yes_no(flat_s) << '\n'
          << "team: " << x.to_string() << '\n'
          << "translated_team: " << xs.to_string() << '\n'
          << "holds: " << yes_no(lhs) << '\n'
          << "translated_holds: " << yes_no(rhs) << '\n';
    }
  }

  void counterexample(const std::vector<std::string>& args) {
    const auto [premise_texts, conclusion_text] = split_rule(args, true);
    const Formula premise = fold_premises(config.formulas(premise_texts));
    const Formula conclusion = config.formula(conclusion_text);
    const std::optional<Substitution> s =
        counterexample_substitution(premise, conclusion, config.fragment, config.limits);
    if (config.json) {
      emit(out, Json{{"premise", render(premise)},
                     {"conclusion", render(conclusion)},
                     {"derivable", !s.has_value()},
                     {"substitution", optional_substitution_json(s)}});
    } else if (s) {
      out << "derivable: false\ncounterexample: " << render(*s) << '\n';
    } else {
      out << "derivable: true\n";
    }
  }

  void admissible(const std::vector<std::string>& args, std::size_t bound) {
    const auto [premise_texts, conclusion_text] = split_rule(args, true);
    const Formula premise = fold_premises(config.formulas(premise_texts));
    const Formula conclusion = config.formula(conclusion_text);
    const std::vector<std::string> taken = scope_of(std::vector<Formula>{premise, conclusion}).names();
    const Scope bound_scope = fresh_scope(bound, taken);
    const RuleVerdict v = assess_rule(premise, conclusion, config.fragment, bound_scope, config.limits);
    const bool admissible = v.status == AdmissibilityStatus::AdmissibleWithinBound;
    if (config.json) {
      emit(out, Json{{"premise", render(premise)},
                     {"conclusion", render(conclusion)},
                     {"fragment", to_string(config.fragment)},
                     {"bound", v.bound},
                     {"bound_scope", bound_scope.names()},
                     {"derivable", v.derivable},
                     {"status", admissible ? "admissible_within_bound" : "not_admissible"},
                     {"witness", optional_substitution_json(v.witness)},
                     {"counterexample", optional_substitution_json(v.counterexample)}});
    } else {
      out << "derivable: " << yes_no(v.derivable) << '\n'
          << "admissible: " << (admissible ? "within bound " + std::to_string(v.bound) : "false") << '\n';
      if (v.witness) out << "witness: " << render(*v.witness) << '\n';
      if (v.counterexample) out << "counterexample: " << render(*v.counterexample) << '\n';
    }
  }

  int experiment(ExperimentConfig ec) {
    ec.fragment = config.fragment;
    ec.seed = config.seed;
    ec.limits = config.limits;
    const ExperimentReport r = structural_completeness_experiment(ec);
    Json failures = Json::array();
    for (const ExperimentFailure& f : r.failures) {
      failures.push_back(Json{{"sample", f.sample},
                              {"premise", render(f.premise)},
                              {"conclusion", render(f.conclusion)},
                              {"substitution", optional_substitution_json(f.substitution)},
                              {"reason", f.reason}});
    }
    emit(out, Json{{"fragment", to_string(ec.fragment)},
                   {"vars", ec.vars},
                   {"samples", r.samples},
                   {"seed", ec.seed},
                   {"depth", ec.depth},
                   {"bound_vars", ec.bound_vars},
                   {"derivable", r.derivable},
                   {"non_derivable", r.non_derivable},
                   {"witnesses_constructed", r.witnesses_constructed},
                   {"bounded_witnesses", r.bounded_witnesses},
                   {"assertion_failures", r.assertion_failures},
                   {"failures", failures}});
    return r.passed() ? kOk : kInternal;
  }
};

int dispatch(const std::vector<std::string>& args, std::ostream& out, bool& json_errors) {
  CLI::App app{"Team semantics toolkit for propositional dependence logics", "teamlogic"};
  app.require_subcommand(1);
  app.fallthrough();

  Config config;
  app.add_option("--fragment", config.fragment_name, "pd, inql, pt, xpd or xpt")->capture_default_str();
  app.add_option("--eval-cap", config.eval_cap, "largest scope for team evaluation")->check(CLI::PositiveNumber);
  app.add_option("--family-cap", config.family_cap, "largest scope for team enumeration")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", config.seed, "random seed")->capture_default_str();
  app.add_flag("--json", config.json, "print one JSON document");

  std::string formula_text, team_text, subst_path, conclusion_text;
  std::optional<std::string> subst_team;
  std::vector<std::string> scope_names, rule;
  std::size_t bound = 1;
  ExperimentConfig ec;

  auto* check = app.add_subcommand("check", "evaluate a formula on a team");
  check->add_option("team", team_text, "team literal such as \"{10, 01}\"")->required();
  check->add_option("formula", formula_text)->required();
  check->add_option("--scope", scope_names, "variable order of the team bits")->delimiter(',');

  auto* valid = app.add_subcommand("valid", "decide validity");
  valid->add_option("formula", formula_text)->required();

  auto* entails = app.add_subcommand("entails", "decide consequence: premises... : conclusion");
  entails->add_option("args", rule)->required();

  auto* nf = app.add_subcommand("nf", "normal form as JSON");
  nf->add_option("formula", formula_text)->required();
  nf->add_option("--scope", scope_names)->delimiter(',');

  auto* flat = app.add_subcommand("flat", "flatness characterization");
  flat->add_option("formula", formula_text)->required();

  auto* unify = app.add_subcommand("unify", "projective unifier as JSON");
  unify->add_option("formula", formula_text)->required();

  auto* subst = app.add_subcommand("subst", "apply a substitution and translate a team");
  subst->add_option("--subst", subst_path, "JSON object of variable images")->required();
  subst->add_option("formula", formula_text)->required();
  subst->add_option("--team", subst_team, "team on the source scope (default: full team)");
  subst->add_option("--scope", scope_names, "source scope")->delimiter(',');

  auto* cex = app.add_subcommand("counterexample", "refuting flat substitution of a non-derivable rule");
  cex->add_option("args", rule, "<premise> <conclusion> or <premises...> : <conclusion>")->required();

  auto* adm = app.add_subcommand("admissible", "admissibility within a bounded scope");
  adm->add_option("args", rule, "<premise> <conclusion> or <premises...> : <conclusion>")->required();
  adm->add_option("--bound", bound, "number of fresh variables for substitution images")->capture_default_str();

  auto* exp = app.add_subcommand("experiment", "random structural completeness experiment (JSON)");
  exp->add_option("--vars", ec.vars)->capture_default_str()->check(CLI::PositiveNumber);
  exp->add_option("--samples", ec.samples)->capture_default_str();
  exp->add_option("--depth", ec.depth)->capture_default_str()->check(CLI::PositiveNumber);
  exp->add_option("--bound", ec.bound_vars, "bounded search scope size, 0 to skip")->capture_default_str();
  exp->add_option("--threads", ec.threads)->capture_default_str()->check(CLI::PositiveNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    json_errors = config.json;
    throw UsageError(e.what());
  }
  json_errors = config.json;
  config.resolve();

  Runner r{config, out};
  if (check->parsed()) {
    r.check(team_text, formula_text, scope_names);
  } else if (valid->parsed()) {
    r.valid(formula_text);
  } else if (entails->parsed()) {
    r.entails(rule);
  } else if (nf->parsed()) {
    r.nf(formula_text, scope_names);
  } else if (flat->parsed()) {
    r.flat(formula_text);
  } else if (unify->parsed()) {
    r.unify(formula_text);
  } else if (subst->parsed()) {
    r.subst(subst_path, formula_text, subst_team, scope_names);
  } else if (cex->parsed()) {
    r.counterexample(rule);
  } else if (adm->parsed()) {
    r.admissible(rule, bound);
  } else if (exp->parsed()) {
    return r.experiment(ec);
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  bool json_errors = false;
  auto fail = [&](int code, std::string_view kind, const std::string& message) {
    if (json_errors) {
      err << error_json(kind, message).dump() << '\n';
    } else {
      err << "error: " << kind << ": " << message << '\n';
    }
    return code;
  };
  try {
    return dispatch(args, out, json_errors);
  } catch (const UsageError& e) {
    return fail(kUsage, "UsageError", e.what());
  } catch (const SyntaxError& e) {
    return fail(kUsage, "SyntaxError", e.what());
  } catch (const FragmentViolation& e) {
    return fail(kUsage, "FragmentViolation", e.what());
  } catch (const ScopeCapExceeded& e) {
    return fail(kCapExceeded, "ScopeCapExceeded", e.what());
  } catch (const BudgetExceeded& e) {
    return fail(kCapExceeded, "BudgetExceeded", e.what());
  } catch (const InternalAssertionFailure& e) {
    return fail(kInternal, "InternalAssertionFailure", e.what());
  } catch (const ScopeMismatch& e) {
    return fail(kUsage, "ScopeMismatch", e.what());
  } catch (const InconsistentInput& e) {
    return fail(kUsage, "InconsistentInput", e.what());
  } catch (const NotSubteam& e) {
    return fail(kUsage, "NotSubteam", e.what());
  } catch (const ValuationNotSupporting& e) {
    return fail(kUsage, "ValuationNotSupporting", e.what());
  } catch (const UnsupportedConnective& e) {
    return fail(kUsage, "UnsupportedConnective", e.what());
  } catch (const std::invalid_argument& e) {
    return fail(kUsage, "InvalidArgument", e.what());
  } catch (const std::exception& e) {
    return fail(kInternal, "InternalError", e.what());
  }
}

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace teamlogic::cli
