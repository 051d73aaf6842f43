#pragma once

#include <optional>
#include <string_view>

#include "teamlogic/formula.hpp"

namespace teamlogic {

// Grammar, loosest binding first:
//
//   formula := disj ( "->" formula )?          right associative
//   disj    := tensor ( "||" tensor )*
//   tensor  := conj ( "\/" conj )*
//   conj    := unary ( "/\" unary )*
//   unary   := "~" unary | atom
//   atom    := ident | "bot" | "top" | "(" formula ")" | "=(" formula ("," formula)* ")"
//
// UTF-8 aliases: ¬ ∧ ⊗ ∨ → ⊥ ⊤.
//
// Throws SyntaxError. When a fragment is given, purely syntactic violations
// throw FragmentViolation; XPD dependence-argument flatness is left to
// validate_fragment.
Formula parse(std::string_view text, std::optional<Fragment> fragment = std::nullopt);

}  // namespace teamlogic
