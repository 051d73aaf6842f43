#include "teamlogic/admissibility.hpp"

#include <algorithm>
#include <array>
#include <exception>
#include <thread>

#include "teamlogic/normal_form.hpp"
#include "teamlogic/projectivity.hpp"
#include "teamlogic/random_formula.hpp"

namespace teamlogic {

bool derivable(const Formula& premise, const Formula& conclusion, const Limits& limits) {
  return consequence({premise}, conclusion, limits);
}

Formula fold_premises(std::span<const Formula> premises) { return conj_all(premises); }

bool refutes(const Substitution& s, const Formula& premise, const Formula& conclusion, const Limits& limits) {
  return is_flat_substitution(s, limits) && is_valid(apply(s, premise), limits) &&
         !is_valid(apply(s, conclusion), limits);
}

std::optional<Substitution> counterexample_substitution(const Formula& premise, const Formula& conclusion,
                                                        Fragment fragment, const Limits& limits) {
  if (derivable(premise, conclusion, limits)) return std::nullopt;
  const NormalForm nf = normal_form(premise, fragment, limits);
  for (const Team& x : nf.components) {
    const Formula component = theta(x, fragment, nf.scope);
    if (consequence({component}, conclusion, limits)) continue;
    std::optional<Substitution> s = projective_unifier(component, fragment, limits);
    if (!s || !refutes(*s, premise, conclusion, limits)) {
      throw InternalAssertionFailure("unifier of component " + render(component) +
                                     " does not refute the rule " + render(premise) + " / " +
                                     render(conclusion));
    }
    return s;
  }
  throw InternalAssertionFailure("every normal form component of " + render(premise) + " entails " +
                                 render(conclusion) + ", yet the rule is not derivable");
}

std::optional<Substitution> bounded_admissibility_search(const Formula& premise, const Formula& conclusion,
                                                         const Scope& bound_scope, Fragment fragment,
                                                         const Limits& limits,
                                                         std::uint64_t max_candidates) {
  const std::size_t m = bound_scope.size();
  const std::size_t cap = std::min<std::size_t>(limits.family_cap, 5);
  if (m > cap) throw ScopeCapExceeded(m, cap, "family");
  const Formula both[] = {premise, conclusion};
  const Scope rule_scope = scope_of(both);

  const std::uint64_t per_var = std::uint64_t{1} << (std::uint64_t{1} << m);
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < rule_scope.size(); ++i) {
    if (total > max_candidates / per_var) {
      throw BudgetExceeded("bounded search needs more than " + std::to_string(max_candidates) +
                           " candidate substitutions");
    }
    total *= per_var;
  }

  std::vector<Formula> images;
  for (std::uint64_t bits = 0; bits < per_var; ++bits) {
    images.push_back(theta(Team::from_word(m, bits), fragment, bound_scope));
  }
  std::vector<std::uint64_t> digits(rule_scope.size(), 0);
  for (std::uint64_t n = 0; n < total; ++n) {
    Substitution s;
    for (std::size_t i = 0; i < digits.size(); ++i) s.set(rule_scope.names()[i], images[digits[i]]);
    if (is_valid(apply(s, premise), limits) && !is_valid(apply(s, conclusion), limits)) return s;
    for (std::size_t i = 0; i < digits.size(); ++i) {
      if (++digits[i] < per_var) break;
      digits[i] = 0;
    }
  }
  return std::nullopt;
}

RuleVerdict assess_rule(const Formula& premise, const Formula& conclusion, Fragment fragment,
                        const Scope& bound_scope, const Limits& limits) {
  RuleVerdict v{premise, conclusion, false, AdmissibilityStatus::AdmissibleWithinBound, 0, std::nullopt,
                std::nullopt};
  v.derivable = derivable(premise, conclusion, limits);
  v.bound = bound_scope.size();
  v.counterexample = counterexample_substitution(premise, conclusion, fragment, limits);
  v.witness = bounded_admissibility_search(premise, conclusion, bound_scope, fragment, limits);
  if (v.witness) v.status = AdmissibilityStatus::NotAdmissible;
  if (v.derivable && (v.counterexample || v.witness)) {
    throw InternalAssertionFailure("derivable rule " + render(premise) + " / " + render(conclusion) +
                                   " has a refuting substitution");
  }
  return v;
}

Scope fresh_scope(std::size_t m, std::span<const std::string> taken) {
  std::vector<std::string> names;
  for (std::size_t i = 1; names.size() < m; ++i) {
    std::string name = "x" + std::to_string(i);
    if (std::find(taken.begin(), taken.end(), name) == taken.end()) names.push_back(std::move(name));
  }
  return Scope(std::move(names));
}

namespace {

struct SampleResult {
  bool derivable = false;
  bool witness = false;
  bool bounded_witness = false;
  std::optional<ExperimentFailure> failure;
};

SampleResult run_sample(const ExperimentConfig& config, std::size_t index) {
  std::vector<std::string> vars;
  for (std::size_t i = 0; i < config.vars; ++i) vars.push_back(std::string(1, static_cast<char>('p' + i)));
  std::seed_seq seq{config.seed, static_cast<std::uint64_t>(index)};
  std::array<std::uint32_t, 2> words{};
  seq.generate(words.begin(), words.end());
  FormulaGenerator gen(config.fragment, vars, (std::uint64_t{words[0]} << 32) | words[1]);
  const Formula premise = gen.formula(config.depth);
  const Formula conclusion = gen.formula(config.depth);

  SampleResult out;
  auto fail = [&](std::optional<Substitution> s, std::string reason) {
    out.failure = ExperimentFailure{index, premise, conclusion, std::move(s), std::move(reason)};
    return out;
  };
  try {
    const Limits& limits = config.limits;
    out.derivable = derivable(premise, conclusion, limits);
    const std::optional<Substitution> cx =
        counterexample_substitution(premise, conclusion, config.fragment, limits);
    out.witness = cx.has_value();
    if (out.derivable == out.witness) {
      return fail(cx, out.derivable ? "derivable rule got a counterexample"
                                    : "non-derivable rule got no counterexample");
    }
    if (cx && !refutes(*cx, premise, conclusion, limits)) return fail(cx, "constructed witness does not refute");
    if (config.bound_vars > 0) {
      const std::vector<std::string> taken = free_vars(Formula::conj(premise, conclusion));
      const auto found = bounded_admissibility_search(premise, conclusion, fresh_scope(config.bound_vars, taken),
                                                      config.fragment, limits);
      out.bounded_witness = found.has_value();
      if (found && out.derivable) return fail(found, "bounded search refuted a derivable rule");
    }
  } catch (const std::exception& e) {
    return fail(std::nullopt, e.what());
  }
  return out;
}

}  // namespace

ExperimentReport structural_completeness_experiment(const ExperimentConfig& config) {
  std::vector<SampleResult> results(config.samples);
  const std::size_t threads = std::max<std::size_t>(1, std::min(config.threads, config.samples));
  auto work = [&](std::size_t first) {
    for (std::size_t i = first; i < config.samples; i += threads) results[i] = run_sample(config, i);
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(work, t);
    for (std::thread& t : pool) t.join();
  }

  ExperimentReport report;
  report.samples = config.samples;
  for (SampleResult& r : results) {
    if (r.failure) {
      ++report.assertion_failures;
      report.failures.push_back(std::move(*r.failure));
      continue;
    }
    ++(r.derivable ? report.derivable : report.non_derivable);
    if (r.witness) ++report.witnesses_constructed;
    if (r.bounded_witness) ++report.bounded_witnesses;
  }
  return report;
}

Formula ndk_instance(std::size_t k, const Formula& phi, std::span<const Formula> psis, Fragment fragment) {
  if (k == 0 || psis.size() != k) {
    throw std::invalid_argument("ND_k needs exactly k >= 1 formulas psi_i");
  }
  if (!has_connective(fragment, Kind::Imp) || !has_connective(fragment, Kind::Or)) {
    throw FragmentViolation("ND_k needs -> and || but " + std::string(to_string(fragment)) + " lacks them");
  }
  const Formula not_phi = Formula::neg(phi);
  std::vector<Formula> negs;
  std::vector<Formula> branches;
  for (const Formula& psi : psis) {
    negs.push_back(Formula::neg(psi));
    branches.push_back(Formula::imp(not_phi, negs.back()));
  }
  Formula out = Formula::imp(Formula::imp(not_phi, disj_all(negs)), disj_all(branches));
  require_fragment(out, fragment);
  return out;
}

}  // namespace teamlogic
