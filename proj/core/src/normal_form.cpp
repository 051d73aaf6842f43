#include "teamlogic/normal_form.hpp"

#include <algorithm>

namespace teamlogic {

namespace {

bool uses_tensor_rendering(Fragment fragment) {
  return fragment == Fragment::PD || fragment == Fragment::XPD;
}

Formula literal(const Formula& f, bool positive) { return positive ? f : Formula::neg(f); }

}  // namespace

Formula valuation_formula(std::uint64_t code, const Scope& scope) {
  std::vector<Formula> literals;
  for (std::size_t i = 0; i < scope.size(); ++i) {
    literals.push_back(literal(Formula::var(scope.names()[i]), ((code >> i) & 1U) != 0));
  }
  return conj_all(literals);
}

Formula theta(const Team& team, Fragment fragment, const Scope& scope) {
  if (team.num_vars() != scope.size()) throw ScopeMismatch("theta: team does not match the scope");
  if (team.empty()) return Formula::bot();
  std::vector<Formula> parts;
  for (std::uint64_t code : team.members()) parts.push_back(valuation_formula(code, scope));
  if (uses_tensor_rendering(fragment)) return tensor_all(parts);
  return Formula::neg(Formula::neg(disj_all(parts)));
}

std::vector<Team> maximal_teams(const TeamFamily& family) {
  std::vector<Team> out;
  const std::uint64_t universe = family.scope().universe();
  for (const Team& t : family.teams()) {
    if (t.empty()) continue;
    bool maximal = true;
    for (std::uint64_t code = 0; code < universe && maximal; ++code) {
      if (t.contains(code)) continue;
      Team bigger = t;
      bigger.insert(code);
      maximal = !family.contains(bigger);
    }
    if (maximal) out.push_back(t);
  }
  return out;
}

std::vector<Formula> NormalForm::thetas() const {
  std::vector<Formula> out;
  for (const Team& t : components) out.push_back(theta(t, fragment, scope));
  return out;
}

NormalForm normal_form(const Formula& f, Fragment fragment, const Limits& limits) {
  return normal_form(f, fragment, scope_of(f), limits);
}

NormalForm normal_form(const Formula& f, Fragment fragment, const Scope& scope, const Limits& limits) {
  const TeamFamily family = truth_family(f, scope, limits);
  NormalForm nf{scope, maximal_teams(family), fragment, std::nullopt};

  for (const Team& x : nf.components) {
    if (!evaluate(scope, x, f, limits) || !evaluate(scope, x, theta(x, fragment, scope), limits)) {
      throw InternalAssertionFailure("normal form component " + x.to_string() + " does not entail " +
                                     render(f));
    }
  }
  for (const Team& y : family.teams()) {
    const bool covered = std::any_of(nf.components.begin(), nf.components.end(),
                                     [&](const Team& x) { return y.subset_of(x); });
    if (!y.empty() && !covered) {
      throw InternalAssertionFailure("team " + y.to_string() + " escapes the normal form of " + render(f));
    }
  }
  if (has_connective(fragment, Kind::Or)) {
    nf.formula = disj_all(nf.thetas());
    if (!equivalent(f, *nf.formula, limits)) {
      throw InternalAssertionFailure("normal form of " + render(f) + " is not equivalent to it");
    }
  }
  return nf;
}

FlatnessReport flat_characterization(const Formula& f, Fragment fragment, const Limits& limits) {
  if (!is_consistent(f)) throw InconsistentInput(render(f) + " is not satisfied by any nonempty team");
  FlatnessReport report;
  report.flat = is_flat(f, limits);
  const NormalForm nf = normal_form(f, fragment, limits);
  if (nf.components.size() == 1) report.single_theta = nf.components.front();
  report.double_neg_equiv = equivalent(f, Formula::neg(Formula::neg(f)), limits);
  report.tensor_excluded_middle = is_valid(Formula::tensor(f, Formula::neg(f)), limits);

  const bool single = report.single_theta.has_value();
  if (report.flat != single || report.flat != report.double_neg_equiv ||
      report.flat != report.tensor_excluded_middle) {
    throw InternalAssertionFailure("flatness conditions disagree on " + render(f));
  }
  return report;
}

Formula dependence_normal_form(const Formula& dep) {
  if (!dep.is(Kind::Dep)) throw std::invalid_argument("expected a dependence atom, got " + render(dep));
  const std::span<const Formula> args = dep.antecedents();
  const std::size_t k = args.size();
  if (k > 4) throw BudgetExceeded("dependence normal form with more than 4 arguments");
  const std::uint64_t patterns = std::uint64_t{1} << k;
  const std::uint64_t functions = std::uint64_t{1} << patterns;

  std::vector<Formula> disjuncts;
  for (std::uint64_t fn = 0; fn < functions; ++fn) {
    std::vector<Formula> cells;
    for (std::uint64_t v = 0; v < patterns; ++v) {
      std::vector<Formula> lits;
      for (std::size_t i = 0; i < k; ++i) lits.push_back(literal(args[i], ((v >> i) & 1U) != 0));
      lits.push_back(literal(dep.consequent(), ((fn >> v) & 1U) != 0));
      cells.push_back(conj_all(lits));
    }
    disjuncts.push_back(tensor_all(cells));
  }
  return disj_all(disjuncts);
}

}  // namespace teamlogic
