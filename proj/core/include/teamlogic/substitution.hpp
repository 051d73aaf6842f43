#pragma once

#include <map>
#include <string>
#include <vector>

#include "teamlogic/formula.hpp"
#include "teamlogic/semantics.hpp"
#include "teamlogic/team.hpp"

namespace teamlogic {

// A finite map from variables to formulas; unmapped variables are fixed.
class Substitution {
 public:
  Substitution() = default;
  explicit Substitution(std::map<std::string, Formula> images);

  void set(const std::string& var, Formula image);
  // The image of var, or var itself when unmapped.
  Formula operator()(const std::string& var) const;
  bool maps(const std::string& var) const { return images_.count(var) != 0; }

  const std::map<std::string, Formula>& images() const noexcept { return images_; }
  std::vector<std::string> domain() const;
  bool empty() const noexcept { return images_.empty(); }

  friend bool operator==(const Substitution& a, const Substitution& b) { return a.images_ == b.images_; }

 private:
  std::map<std::string, Formula> images_;
};

std::string render(const Substitution& s);

// Homomorphic replacement. The result is not fragment-checked.
Formula apply(const Substitution& s, const Formula& f);
// Same, then throws FragmentViolation if the result leaves `fragment`.
Formula apply(const Substitution& s, const Formula& f, Fragment fragment, const Limits& limits = {});

// (outer . inner)(p) = apply(outer, inner(p)).
Substitution compose(const Substitution& outer, const Substitution& inner);

bool is_flat_substitution(const Substitution& s, const Limits& limits = {});

// Every image is equivalent to its double negation. Needs a fragment with ->,
// otherwise throws FragmentViolation.
bool is_stable_substitution(const Substitution& s, Fragment fragment, const Limits& limits = {});

// X_s on `target`: each v in X becomes the valuation p |-> [{v} |= s(p)].
// Images must only mention variables of `source`.
Team translate_team(const Team& team, const Substitution& s, const Scope& source, const Scope& target);

// {v in X : v_s in Y}. Throws NotSubteam unless Y is a subteam of X_s.
Team inverse_select(const Team& y, const Team& x, const Substitution& s, const Scope& source,
                    const Scope& target);

}  // namespace teamlogic
