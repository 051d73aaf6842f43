#include "evaluator.hpp"

#include <map>

namespace teamlogic::detail {

namespace {

// Dense memo tables cover every team of a scope with at most 16 valuations.
constexpr std::size_t kDenseMaxVars = 4;

Formula excluded_middle(const Formula& f) { return Formula::disj(f, Formula::neg(f)); }

}  // namespace

Evaluator::Evaluator(const Scope& scope, const Limits& limits)
    : scope_(scope), limits_(limits), dense_(scope.size() <= kDenseMaxVars) {
  if (scope.size() > limits.eval_cap) throw ScopeCapExceeded(scope.size(), limits.eval_cap, "eval");
  const std::size_t n = scope.size();
  for (std::size_t i = 0; i < n; ++i) {
    Team t(n);
    for (std::uint64_t code = 0; code < scope.universe(); ++code) {
      if ((code >> i) & 1U) t.insert(code);
    }
    var_support_.push_back(std::move(t));
  }
}

int Evaluator::add(const Formula& f) { return compile(f); }

int Evaluator::compile(const Formula& f) {
  if (auto it = ids_.find(f); it != ids_.end()) return it->second;

  const std::size_t n = scope_.size();
  Node node;
  node.kind = f.kind();
  node.support = Team(n);
  for (const Formula& c : f.children()) node.kids.push_back(compile(c));
  auto kid = [&](std::size_t i) -> const Node& { return nodes_[static_cast<std::size_t>(node.kids[i])]; };

  switch (f.kind()) {
    case Kind::Var: {
      auto idx = scope_.index_of(f.name());
      if (!idx) throw ScopeMismatch("variable '" + f.name() + "' is not in the scope");
      node.support = var_support_[*idx];
      node.flat = true;
      break;
    }
    case Kind::Bot:
      node.flat = true;
      break;
    case Kind::Top:
      node.support = Team::full(n);
      node.flat = true;
      break;
    case Kind::Neg:
      node.support = kid(0).support.complement();
      node.flat = true;
      break;
    case Kind::Dep: {
      // Every singleton satisfies a dependence atom.
      node.support = Team::full(n);
      node.args_flat = true;
      for (std::size_t i = 0; i < node.kids.size(); ++i) node.args_flat = node.args_flat && kid(i).flat;
      std::vector<Formula> guards;
      for (const Formula& a : f.antecedents()) guards.push_back(excluded_middle(a));
      node.expansion = compile(Formula::imp(conj_all(guards), excluded_middle(f.consequent())));
      break;
    }
    case Kind::And:
      node.support = kid(0).support & kid(1).support;
      node.flat = kid(0).flat && kid(1).flat;
      break;
    case Kind::Tensor:
      node.support = kid(0).support | kid(1).support;
      node.flat = kid(0).flat && kid(1).flat;
      break;
    case Kind::Or:
      node.support = kid(0).support | kid(1).support;
      break;
    case Kind::Imp:
      // Y |= a for Y a subteam forces Y inside support(a), so a flat
      // consequent makes the implication flat whatever the antecedent.
      node.support = kid(0).support.complement() | kid(1).support;
      node.flat = kid(1).flat;
      break;
  }

  const int id = static_cast<int>(nodes_.size());
  nodes_.push_back(std::move(node));
  ids_.emplace(f, id);
  return id;
}

int Evaluator::lookup(Node& n, const Team& team) const {
  if (dense_) {
    if (n.dense.empty()) return 0;
    return n.dense[team.word()];
  }
  auto it = n.sparse.find(team);
  return it == n.sparse.end() ? 0 : (it->second ? 2 : 1);
}

void Evaluator::store(Node& n, const Team& team, bool value) {
  if (dense_) {
    if (n.dense.empty()) n.dense.assign(std::size_t{1} << scope_.universe(), 0);
    n.dense[team.word()] = value ? 2 : 1;
    return;
  }
  if (++memo_entries_ > limits_.memo_budget) {
    throw BudgetExceeded("evaluation memo exceeded its budget of " +
                         std::to_string(limits_.memo_budget) + " entries");
  }
  n.sparse.emplace(team, value);
}

bool Evaluator::holds(int id, const Team& team) {
  Node& n = nodes_[static_cast<std::size_t>(id)];
  if (n.flat) return team.subset_of(n.support);
  switch (n.kind) {
    case Kind::And:
      return holds(n.kids[0], team) && holds(n.kids[1], team);
    case Kind::Or:
      return holds(n.kids[0], team) || holds(n.kids[1], team);
    default:
      break;
  }
  if (team.empty()) return true;
  if (int cached = lookup(n, team); cached != 0) return cached == 2;
  const bool value = compute(id, team);
  store(nodes_[static_cast<std::size_t>(id)], team, value);
  return value;
}

bool Evaluator::compute(int id, const Team& team) {
  const Node& n = nodes_[static_cast<std::size_t>(id)];
  switch (n.kind) {
    case Kind::Tensor:
      return tensor(n, team);
    case Kind::Imp:
      return implication(id, team);
    case Kind::Dep:
      return n.args_flat ? similarity(n, team) : holds(n.expansion, team);
    default:
      throw InternalAssertionFailure("non-flat node of kind " + std::string(to_string(n.kind)));
  }
}

// X |= a (x) b iff some disjoint split (Y, X \ Y) works, by downward closure.
// Y must contain X \ support(b) and lie inside support(a).
bool Evaluator::tensor(const Node& n, const Team& team) {
  const int l = n.kids[0];
  const int r = n.kids[1];
  const Node& ln = nodes_[static_cast<std::size_t>(l)];
  const Node& rn = nodes_[static_cast<std::size_t>(r)];
  if (holds(r, team) || holds(l, team)) return true;
  if (ln.flat) return holds(r, team - ln.support);
  if (rn.flat) return holds(l, team - rn.support);

  const Team base = team - rn.support;
  if (!base.subset_of(ln.support)) return false;
  const Team free = team & ln.support & rn.support;
  const std::vector<std::uint64_t> members = free.members();
  if (members.size() > 40) throw BudgetExceeded("tensor split enumeration over more than 2^40 subteams");
  const std::uint64_t count = std::uint64_t{1} << members.size();
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    Team left = base;
    for (std::size_t i = 0; i < members.size(); ++i) {
      if ((mask >> i) & 1U) left.insert(members[i]);
    }
    if (holds(l, left) && holds(r, team - left)) return true;
  }
  return false;
}

// X |= a -> b iff every subteam satisfying a satisfies b. Subteams satisfying
// a lie in X & support(a); past that, X itself plus all X \ {v} cover every
// subteam, which the memo makes linear per team.
bool Evaluator::implication(int id, const Team& team) {
  const int l = nodes_[static_cast<std::size_t>(id)].kids[0];
  const int r = nodes_[static_cast<std::size_t>(id)].kids[1];
  const Team& lsupport = nodes_[static_cast<std::size_t>(l)].support;
  if (nodes_[static_cast<std::size_t>(l)].flat) return holds(r, team & lsupport);

  const Team reduced = team & lsupport;
  if (reduced != team) return holds(id, reduced);
  if (holds(l, team) && !holds(r, team)) return false;
  for (std::uint64_t code : team.members()) {
    Team smaller = team;
    smaller.erase(code);
    if (!holds(id, smaller)) return false;
  }
  return true;
}

bool Evaluator::similarity(const Node& n, const Team& team) const {
  const std::size_t k = n.kids.size() - 1;
  const Team& target = nodes_[static_cast<std::size_t>(n.kids.back())].support;
  auto pattern = [&](std::uint64_t code, std::size_t i) {
    return nodes_[static_cast<std::size_t>(n.kids[i])].support.contains(code);
  };
  if (k <= 16) {
    std::vector<std::int8_t> seen(std::size_t{1} << k, 0);
    for (std::uint64_t code : team.members()) {
      std::size_t key = 0;
      for (std::size_t i = 0; i < k; ++i) key |= static_cast<std::size_t>(pattern(code, i)) << i;
      const std::int8_t value = target.contains(code) ? 2 : 1;
      if (seen[key] == 0) {
        seen[key] = value;
      } else if (seen[key] != value) {
        return false;
      }
    }
    return true;
  }
  std::map<std::vector<bool>, bool> seen;
  for (std::uint64_t code : team.members()) {
    std::vector<bool> key(k);
    for (std::size_t i = 0; i < k; ++i) key[i] = pattern(code, i);
    const bool value = target.contains(code);
    auto [it, inserted] = seen.emplace(std::move(key), value);
    if (!inserted && it->second != value) return false;
  }
  return true;
}

bool Evaluator::dependence_by_similarity(int id, const Team& team) {
  const Node& n = nodes_[static_cast<std::size_t>(id)];
  if (n.kind != Kind::Dep) throw std::invalid_argument("not a dependence atom");
  for (int kid : n.kids) {
    const Node& arg = nodes_[static_cast<std::size_t>(kid)];
    if (!arg.flat && !holds(kid, arg.support)) {
      throw FragmentViolation("the similarity clause needs flat dependence arguments");
    }
  }
  return similarity(nodes_[static_cast<std::size_t>(id)], team);
}

bool Evaluator::dependence_by_implication(int id, const Team& team) {
  const Node& n = nodes_[static_cast<std::size_t>(id)];
  if (n.kind != Kind::Dep) throw std::invalid_argument("not a dependence atom");
  return holds(n.expansion, team);
}

}  // namespace teamlogic::detail
