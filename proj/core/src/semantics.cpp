#include "teamlogic/semantics.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "evaluator.hpp"

namespace teamlogic {

namespace {

// 2^(2^5) teams is already out of reach; anything beyond cannot even be indexed.
constexpr std::size_t kHardFamilyCap = 5;

void require_family_scope(const Scope& scope, const Limits& limits) {
  const std::size_t cap = std::min(limits.family_cap, kHardFamilyCap);
  if (scope.size() > cap) throw ScopeCapExceeded(scope.size(), cap, "family");
}

// Calls fn(team) for every team on an n-variable scope, in bitset order.
template <class Fn>
void for_each_team(std::size_t num_vars, Fn&& fn) {
  const std::uint64_t universe = std::uint64_t{1} << num_vars;
  const std::uint64_t count = std::uint64_t{1} << universe;
  for (std::uint64_t bits = 0; bits < count; ++bits) {
    if (!fn(Team::from_word(num_vars, bits))) return;
  }
}

std::size_t read_cap(const char* name, std::size_t fallback) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return fallback;
  char* end = nullptr;
  const unsigned long value = std::strtoul(raw, &end, 10);
  if (end == raw || *end != '\0' || value == 0) return fallback;
  return static_cast<std::size_t>(value);
}

int compile_dependence(detail::Evaluator& ev, const Formula& dep) {
  if (!dep.is(Kind::Dep)) throw std::invalid_argument("expected a dependence atom, got " + render(dep));
  return ev.add(dep);
}

void require_team_on(const Scope& scope, const Team& team) {
  if (team.num_vars() != scope.size()) {
    throw ScopeMismatch("team over " + std::to_string(team.num_vars()) + " variables used with a scope of " +
                        std::to_string(scope.size()));
  }
}

}  // namespace

Limits Limits::from_environment() {
  Limits limits;
  limits.eval_cap = read_cap("TEAMLOGIC_EVAL_CAP", limits.eval_cap);
  limits.family_cap = read_cap("TEAMLOGIC_FAMILY_CAP", limits.family_cap);
  return limits;
}

Scope scope_of(std::span<const Formula> formulas) {
  std::vector<std::string> names;
  for (const Formula& f : formulas) {
    for (std::string& v : free_vars(f)) {
      if (std::find(names.begin(), names.end(), v) == names.end()) names.push_back(std::move(v));
    }
  }
  return Scope(std::move(names));
}

Scope scope_of(const Formula& f) { return Scope(free_vars(f)); }

bool evaluate(const Scope& scope, const Team& team, const Formula& f, const Limits& limits) {
  require_team_on(scope, team);
  detail::Evaluator ev(scope, limits);
  return ev.holds(ev.add(f), team);
}

bool dependence_by_implication(const Scope& scope, const Team& team, const Formula& dep,
                               const Limits& limits) {
  require_team_on(scope, team);
  detail::Evaluator ev(scope, limits);
  return ev.dependence_by_implication(compile_dependence(ev, dep), team);
}

bool dependence_by_similarity(const Scope& scope, const Team& team, const Formula& dep,
                              const Limits& limits) {
  require_team_on(scope, team);
  detail::Evaluator ev(scope, limits);
  return ev.dependence_by_similarity(compile_dependence(ev, dep), team);
}

bool is_valid(const Formula& f, const Limits& limits) {
  const Scope scope = scope_of(f);
  detail::Evaluator ev(scope, limits);
  return ev.holds(ev.add(f), Team::full(scope.size()));
}

bool consequence(std::span<const Formula> gamma, const Formula& f, const Limits& limits) {
  std::vector<Formula> all(gamma.begin(), gamma.end());
  all.push_back(f);
  const Scope scope = scope_of(all);
  require_family_scope(scope, limits);
  detail::Evaluator ev(scope, limits);
  std::vector<int> premises;
  for (const Formula& g : gamma) premises.push_back(ev.add(g));
  const int goal = ev.add(f);
  bool entailed = true;
  for_each_team(scope.size(), [&](const Team& team) {
    const bool premises_hold =
        std::all_of(premises.begin(), premises.end(), [&](int p) { return ev.holds(p, team); });
    if (premises_hold && !ev.holds(goal, team)) entailed = false;
    return entailed;
  });
  return entailed;
}

bool consequence(std::initializer_list<Formula> gamma, const Formula& f, const Limits& limits) {
  return consequence(std::span<const Formula>(gamma.begin(), gamma.size()), f, limits);
}

TeamFamily truth_family(const Formula& f, const Scope& scope, const Limits& limits) {
  require_family_scope(scope, limits);
  detail::Evaluator ev(scope, limits);
  const int root = ev.add(f);
  std::vector<Team> members;
  for_each_team(scope.size(), [&](const Team& team) {
    if (ev.holds(root, team)) members.push_back(team);
    return true;
  });
  TeamFamily family(scope, std::move(members));
  if (!family.contains(Team(scope.size())) || !family.downward_closed()) {
    throw InternalAssertionFailure("truth family of " + render(f) + " is not downward closed");
  }
  return family;
}

bool equivalent(const Formula& f, const Formula& g, const Limits& limits) {
  const Formula both[] = {f, g};
  const Scope scope = scope_of(both);
  require_family_scope(scope, limits);
  detail::Evaluator ev(scope, limits);
  const int a = ev.add(f);
  const int b = ev.add(g);
  bool same = true;
  for_each_team(scope.size(), [&](const Team& team) {
    same = ev.holds(a, team) == ev.holds(b, team);
    return same;
  });
  return same;
}

Team singleton_support(const Formula& f, const Scope& scope) {
  Limits unbounded;
  unbounded.eval_cap = std::max(unbounded.eval_cap, scope.size());
  detail::Evaluator ev(scope, unbounded);
  return ev.support(ev.add(f));
}

bool is_flat(const Formula& f, const Limits& limits) {
  const Scope scope = scope_of(f);
  detail::Evaluator ev(scope, limits);
  const int root = ev.add(f);
  return ev.syntactically_flat(root) || ev.holds(root, ev.support(root));
}

bool is_consistent(const Formula& f) { return !singleton_support(f, scope_of(f)).empty(); }

std::vector<Violation> validate_fragment(const Formula& f, Fragment fragment, const Limits& limits) {
  std::vector<Violation> out;
  for (Violation& v : fragment_check(f, fragment)) {
    if (v.kind != ViolationKind::RequiresSemanticCheck) {
      out.push_back(std::move(v));
    } else if (!is_flat(v.node, limits)) {
      out.push_back({ViolationKind::DependenceArgumentNotFlat, v.node,
                     "XPD dependence atom arguments must be flat"});
    }
  }
  return out;
}

void require_fragment(const Formula& f, Fragment fragment, const Limits& limits) {
  std::vector<Violation> violations = validate_fragment(f, fragment, limits);
  if (!violations.empty()) throw FragmentViolation(fragment, std::move(violations));
}

}  // namespace teamlogic
