#pragma once

#include <optional>
#include <vector>

#include "teamlogic/formula.hpp"
#include "teamlogic/semantics.hpp"
#include "teamlogic/team.hpp"

namespace teamlogic {

// The formula whose satisfying teams are exactly the subteams of X. PD and XPD
// get the tensor of literal conjunctions, the other fragments the double
// negation of their disjunction. The empty team gives bot.
Formula theta(const Team& team, Fragment fragment, const Scope& scope);

// Literal conjunction describing one valuation: p for 1, ~p for 0, in scope order.
Formula valuation_formula(std::uint64_t code, const Scope& scope);

// The inclusion-maximal nonempty members of a downward closed family, in
// increasing bitset order. Empty iff the family is {{}}.
std::vector<Team> maximal_teams(const TeamFamily& family);

struct NormalForm {
  Scope scope;
  std::vector<Team> components;
  Fragment fragment = Fragment::PD;
  // The disjunction of the component thetas, for fragments with ||.
  std::optional<Formula> formula;

  std::vector<Formula> thetas() const;
};

NormalForm normal_form(const Formula& f, Fragment fragment, const Limits& limits = {});
NormalForm normal_form(const Formula& f, Fragment fragment, const Scope& scope,
                       const Limits& limits = {});

struct FlatnessReport {
  bool flat = false;
  std::optional<Team> single_theta;
  bool double_neg_equiv = false;
  bool tensor_excluded_middle = false;
};

// Decides the four equivalent flatness conditions separately and checks that
// they agree. Throws InconsistentInput for inconsistent f.
FlatnessReport flat_characterization(const Formula& f, Fragment fragment, const Limits& limits = {});

// || over every f : patterns -> {0,1} of the tensor over argument patterns v of
//   a_1^{v_1} /\ ... /\ a_k^{v_k} /\ b^{f(v)}.
// Equivalent to the atom when its arguments are flat.
Formula dependence_normal_form(const Formula& dep);

}  // namespace teamlogic
