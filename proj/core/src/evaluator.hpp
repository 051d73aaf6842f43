#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "teamlogic/formula.hpp"
#include "teamlogic/semantics.hpp"
#include "teamlogic/team.hpp"

namespace teamlogic::detail {

// Formulas compiled against one scope, with verdicts memoized per
// (subformula, team). One instance serves one query and is not shared
// between threads.
class Evaluator {
 public:
  Evaluator(const Scope& scope, const Limits& limits);

  // Compiles f (structurally equal subformulas share a node) and returns its id.
  int add(const Formula& f);

  bool holds(int node, const Team& team);
  const Team& support(int node) const { return nodes_[static_cast<std::size_t>(node)].support; }
  // Syntactic sufficient condition for flatness.
  bool syntactically_flat(int node) const { return nodes_[static_cast<std::size_t>(node)].flat; }

  // The two generalized dependence clauses, exposed for cross-checking.
  bool dependence_by_similarity(int node, const Team& team);
  bool dependence_by_implication(int node, const Team& team);

  const Scope& scope() const noexcept { return scope_; }

 private:
  struct Node {
    Kind kind = Kind::Bot;
    std::vector<int> kids;
    bool flat = false;
    Team support{0};
    // Dep only: the compiled implication-clause formula, and whether every
    // argument is syntactically flat (then the similarity clause applies).
    int expansion = -1;
    bool args_flat = false;
    std::vector<std::int8_t> dense;  // 0 unknown, 1 false, 2 true
    std::unordered_map<Team, bool, TeamHash> sparse;
  };

  int compile(const Formula& f);
  bool compute(int node, const Team& team);
  bool tensor(const Node& n, const Team& team);
  bool implication(int node, const Team& team);
  bool similarity(const Node& n, const Team& team) const;

  // Returns 0 unknown, 1 false, 2 true.
  int lookup(Node& n, const Team& team) const;
  void store(Node& n, const Team& team, bool value);

  Scope scope_;
  Limits limits_;
  bool dense_;
  std::size_t memo_entries_ = 0;
  std::vector<Node> nodes_;
  std::unordered_map<Formula, int, FormulaHash> ids_;
  std::vector<Team> var_support_;
};

}  // namespace teamlogic::detail
