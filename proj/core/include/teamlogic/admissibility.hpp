#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "teamlogic/formula.hpp"
#include "teamlogic/semantics.hpp"
#include "teamlogic/substitution.hpp"
#include "teamlogic/team.hpp"

namespace teamlogic {

// premise |= conclusion.
bool derivable(const Formula& premise, const Formula& conclusion, const Limits& limits = {});

// Premises of a multi-premise rule, folded with /\ (top when empty).
Formula fold_premises(std::span<const Formula> premises);

// None when the rule is derivable. Otherwise a flat substitution that makes
// the premise valid and the conclusion invalid, read off the projective
// unifier of the first normal form component that does not entail the
// conclusion. Throws InternalAssertionFailure if the witness fails its recheck.
std::optional<Substitution> counterexample_substitution(const Formula& premise, const Formula& conclusion,
                                                        Fragment fragment, const Limits& limits = {});

// True iff s is flat, s(premise) is valid and s(conclusion) is not.
bool refutes(const Substitution& s, const Formula& premise, const Formula& conclusion,
             const Limits& limits = {});

// Tries every assignment of flat images over `bound_scope` to the rule's
// variables, one theta per team in increasing bitset order (bot first), and
// returns the first refuting one. Throws BudgetExceeded past max_candidates.
std::optional<Substitution> bounded_admissibility_search(const Formula& premise, const Formula& conclusion,
                                                         const Scope& bound_scope, Fragment fragment,
                                                         const Limits& limits = {},
                                                         std::uint64_t max_candidates = 1'000'000);

enum class AdmissibilityStatus { AdmissibleWithinBound, NotAdmissible };

struct RuleVerdict {
  Formula premise;
  Formula conclusion;
  bool derivable = false;
  AdmissibilityStatus status = AdmissibilityStatus::AdmissibleWithinBound;
  std::size_t bound = 0;
  // The refuting substitution found by the bounded search, if any; status
  // follows it alone.
  std::optional<Substitution> witness;
  // The constructive counterexample, present iff the rule is not derivable.
  std::optional<Substitution> counterexample;
};

RuleVerdict assess_rule(const Formula& premise, const Formula& conclusion, Fragment fragment,
                        const Scope& bound_scope, const Limits& limits = {});

// Variable names for a bound scope of m fresh variables avoiding `taken`.
Scope fresh_scope(std::size_t m, std::span<const std::string> taken);

struct ExperimentConfig {
  Fragment fragment = Fragment::InqL;
  std::size_t vars = 2;
  std::size_t samples = 200;
  std::uint64_t seed = 1;
  std::size_t depth = 4;
  // Size of the bound scope for the bounded search; 0 skips it.
  std::size_t bound_vars = 1;
  std::size_t threads = 1;
  Limits limits{};
};

struct ExperimentFailure {
  std::size_t sample = 0;
  Formula premise;
  Formula conclusion;
  std::optional<Substitution> substitution;
  std::string reason;
};

struct ExperimentReport {
  std::size_t samples = 0;
  std::size_t derivable = 0;
  std::size_t non_derivable = 0;
  std::size_t witnesses_constructed = 0;
  std::size_t bounded_witnesses = 0;
  std::size_t assertion_failures = 0;
  std::vector<ExperimentFailure> failures;

  bool passed() const noexcept { return assertion_failures == 0; }
};

// Samples random rules and checks derivable <=> no constructed counterexample,
// that every constructed witness refutes the rule, and that bounded-search
// witnesses only occur for non-derivable rules. Deterministic in the seed
// whatever the thread count.
ExperimentReport structural_completeness_experiment(const ExperimentConfig& config);

// (~phi -> ~psi_1 || ... || ~psi_k) -> (~phi -> ~psi_1) || ... || (~phi -> ~psi_k)
Formula ndk_instance(std::size_t k, const Formula& phi, std::span<const Formula> psis, Fragment fragment);

}  // namespace teamlogic
