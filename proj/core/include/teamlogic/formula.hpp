#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "teamlogic/errors.hpp"

namespace teamlogic {

enum class Kind : std::uint8_t { Var, Bot, Top, Neg, Dep, And, Tensor, Or, Imp };

std::string_view to_string(Kind kind);

// Immutable formula tree with shared subterms. Copies are cheap.
//
// Dependence atoms keep all arguments in one list; the last one is the
// dependent formula, so =(q) is the constancy atom with no antecedents.
class Formula {
 public:
  static Formula var(std::string name);
  static Formula bot();
  static Formula top();
  static Formula neg(Formula operand);
  static Formula dep(std::vector<Formula> antecedents, Formula consequent);
  static Formula conj(Formula lhs, Formula rhs);
  static Formula tensor(Formula lhs, Formula rhs);
  static Formula disj(Formula lhs, Formula rhs);
  static Formula imp(Formula lhs, Formula rhs);
  static Formula binary(Kind kind, Formula lhs, Formula rhs);

  Kind kind() const noexcept { return node_->kind; }
  bool is(Kind kind) const noexcept { return node_->kind == kind; }
  bool is_binary() const noexcept;

  // Var only.
  const std::string& name() const;

  std::span<const Formula> children() const noexcept { return node_->children; }
  const Formula& operand() const;  // Neg
  const Formula& lhs() const;      // binary connectives
  const Formula& rhs() const;
  std::span<const Formula> antecedents() const;  // Dep
  const Formula& consequent() const;             // Dep

  std::size_t hash() const noexcept { return node_->hash; }
  std::size_t size() const noexcept { return node_->size; }
  // Height counted in nodes: atoms have depth 1.
  std::size_t depth() const noexcept { return node_->depth; }

  // Node identity; equal ids imply structural equality, not conversely.
  const void* id() const noexcept { return node_.get(); }

  friend bool operator==(const Formula& a, const Formula& b) noexcept;
  friend bool operator!=(const Formula& a, const Formula& b) noexcept { return !(a == b); }

 private:
  struct Node {
    Kind kind;
    std::string name;
    std::vector<Formula> children;
    std::size_t hash = 0;
    std::size_t size = 1;
    std::size_t depth = 1;
  };

  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Formula make(Kind kind, std::string name, std::vector<Formula> children);

  std::shared_ptr<const Node> node_;
};

struct FormulaHash {
  std::size_t operator()(const Formula& f) const noexcept { return f.hash(); }
};

// Left-associated folds; an empty list folds to the neutral element
// (top for conjunction, bot for the disjunctions).
Formula conj_all(std::span<const Formula> parts);
Formula tensor_all(std::span<const Formula> parts);
Formula disj_all(std::span<const Formula> parts);

// Canonical ASCII rendering; parse(render(f)) == f.
std::string render(const Formula& f);
std::ostream& operator<<(std::ostream& os, const Formula& f);

// Variables in first-occurrence (left-to-right, preorder) order.
std::vector<std::string> free_vars(const Formula& f);

enum class Fragment : std::uint8_t { PD, InqL, PT, XPD, XPT };

std::string_view to_string(Fragment fragment);
// Accepts the canonical names case-insensitively ("pd", "InqL", "xpt", ...).
std::optional<Fragment> parse_fragment(std::string_view text);

bool has_connective(Fragment fragment, Kind kind);

enum class ViolationKind : std::uint8_t {
  NegationNotOnVariable,
  ConnectiveNotInFragment,
  DependenceAtomNotInFragment,
  DependenceArgumentNotVariable,
  // XPD dependence argument that is not a variable; flatness is decided
  // semantically (see validate_fragment in semantics.hpp).
  RequiresSemanticCheck,
  DependenceArgumentNotFlat,
};

std::string_view to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  Formula node;
  std::string detail;
};

std::string describe(const Violation& v);

std::vector<Violation> fragment_check(const Formula& f, Fragment fragment);

class FragmentViolation : public Error {
 public:
  FragmentViolation(Fragment fragment, std::vector<Violation> violations);
  explicit FragmentViolation(const std::string& message);

  const std::vector<Violation>& violations() const noexcept { return violations_; }

 private:
  std::vector<Violation> violations_;
};

// The syntactic negation f^~: dependence-atom free, negation only on
// variables, and equivalent to ~f. Throws UnsupportedConnective on || and ->.
Formula negation_translate(const Formula& f);

}  // namespace teamlogic
