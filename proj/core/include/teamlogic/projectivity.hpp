#pragma once

#include <optional>

#include "teamlogic/formula.hpp"
#include "teamlogic/semantics.hpp"
#include "teamlogic/substitution.hpp"
#include "teamlogic/team.hpp"

namespace teamlogic {

enum class UnifierStyle { Implication, Tensor };

std::string_view to_string(UnifierStyle style);

// For each p in free_vars(f), with v a valuation over free_vars(f):
//   implication style: p := f /\ p if v(p) = 0, f -> p otherwise
//   tensor style:      p := f /\ p if v(p) = 0, ~f \/ p otherwise
// In tensor style ~f is pushed inward when f has no || or ->.
// Throws ValuationNotSupporting unless {v} |= f, and FragmentViolation when
// the style's connective is missing from `fragment`.
Substitution prucnal_unifier(const Formula& f, const Valuation& v, UnifierStyle style,
                             std::optional<Fragment> fragment = std::nullopt);

struct ProjectivityReport {
  Formula formula;
  std::optional<Substitution> unifier;
  bool unifies = false;
  bool fixes_vars_under_premise = false;
  std::optional<Valuation> witness;
};

// unifies: s(f) is valid. fixes_vars_under_premise: for each p in f,
// f, s(p) |= p and f, p |= s(p).
ProjectivityReport check_projective(const Formula& f, const Substitution& s, const Limits& limits = {});

// Tensor style for PD and XPD, implication style elsewhere.
UnifierStyle default_style(Fragment fragment);

// A flat unifier of f built from the lowest supporting valuation, checked
// with check_projective; none when f is not flat. Throws InconsistentInput.
ProjectivityReport analyze_projectivity(const Formula& f, Fragment fragment, const Limits& limits = {});
std::optional<Substitution> projective_unifier(const Formula& f, Fragment fragment,
                                               const Limits& limits = {});

}  // namespace teamlogic
