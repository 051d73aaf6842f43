#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "teamlogic/formula.hpp"
#include "teamlogic/team.hpp"

namespace teamlogic {

// Size limits that keep the exponential searches explicit.
struct Limits {
  // Largest scope a single team evaluation may use (teams of up to 2^16 valuations).
  std::size_t eval_cap = 16;
  // Largest scope for operations that enumerate all 2^(2^n) teams.
  std::size_t family_cap = 4;
  // Upper bound on memoized (subformula, team) verdicts per query.
  std::size_t memo_budget = std::size_t{1} << 24;

  static Limits from_environment();
};

// X |= f over `scope`. Throws ScopeMismatch when X is not a team on `scope`
// or f mentions a variable outside it.
bool evaluate(const Scope& scope, const Team& team, const Formula& f, const Limits& limits = {});

// The generalized dependence atom clause that reduces the atom to
//   /\_i (a_i || ~a_i) -> (b || ~b),
// valid for arbitrary arguments.
bool dependence_by_implication(const Scope& scope, const Team& team, const Formula& dep,
                               const Limits& limits = {});
// The clause through the equivalence ~_a on valuations: members that agree on
// every antecedent (singleton-wise) agree on the consequent. Throws
// FragmentViolation when an argument is not flat.
bool dependence_by_similarity(const Scope& scope, const Team& team, const Formula& dep,
                              const Limits& limits = {});

// Valid iff the full team on free_vars(f) satisfies f.
bool is_valid(const Formula& f, const Limits& limits = {});

// Every team on the joint scope that satisfies all of gamma satisfies f.
bool consequence(std::span<const Formula> gamma, const Formula& f, const Limits& limits = {});
bool consequence(std::initializer_list<Formula> gamma, const Formula& f, const Limits& limits = {});

TeamFamily truth_family(const Formula& f, const Scope& scope, const Limits& limits = {});

bool equivalent(const Formula& f, const Formula& g, const Limits& limits = {});

// {v : {v} |= f}
Team singleton_support(const Formula& f, const Scope& scope);

bool is_flat(const Formula& f, const Limits& limits = {});

// Satisfied by some nonempty team.
bool is_consistent(const Formula& f);

// fragment_check with the XPD flatness requirement on dependence arguments
// decided semantically.
std::vector<Violation> validate_fragment(const Formula& f, Fragment fragment,
                                         const Limits& limits = {});
// Throws FragmentViolation when validate_fragment reports anything.
void require_fragment(const Formula& f, Fragment fragment, const Limits& limits = {});

// The joint scope of several formulas, in first-occurrence order.
Scope scope_of(std::span<const Formula> formulas);
Scope scope_of(const Formula& f);

}  // namespace teamlogic
