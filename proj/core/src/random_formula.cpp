#include "teamlogic/random_formula.hpp"

#include <stdexcept>

namespace teamlogic {

FormulaGenerator::FormulaGenerator(Fragment fragment, std::vector<std::string> vars, std::uint64_t seed)
    : fragment_(fragment), vars_(std::move(vars)), rng_(seed) {
  if (vars_.empty()) throw std::invalid_argument("FormulaGenerator needs at least one variable");
}

bool FormulaGenerator::chance(double p) { return std::bernoulli_distribution(p)(rng_); }

std::size_t FormulaGenerator::pick(std::size_t n) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_);
}

Formula FormulaGenerator::variable() { return Formula::var(vars_[pick(vars_.size())]); }

Formula FormulaGenerator::literal() {
  Formula p = variable();
  return chance(0.35) ? Formula::neg(p) : p;
}

Formula FormulaGenerator::dependence() {
  const std::size_t k = pick(3);
  const bool flat_args = fragment_ == Fragment::XPD || fragment_ == Fragment::XPT;
  auto arg = [&] { return flat_args && chance(0.4) ? flat_formula(2) : variable(); };
  std::vector<Formula> antecedents;
  for (std::size_t i = 0; i < k; ++i) antecedents.push_back(arg());
  return Formula::dep(std::move(antecedents), arg());
}

Formula FormulaGenerator::atom() {
  const bool deps = has_connective(fragment_, Kind::Dep);
  const std::size_t roll = pick(20);
  if (roll < 12) return literal();
  if (roll < 14) return Formula::bot();
  if (roll < 15) return Formula::top();
  if (deps) return dependence();
  return literal();
}

Formula FormulaGenerator::formula(std::size_t max_depth) {
  if (max_depth <= 1 || chance(0.25)) return atom();
  std::vector<Kind> options{Kind::And};
  for (Kind k : {Kind::Tensor, Kind::Or, Kind::Imp}) {
    if (has_connective(fragment_, k)) options.push_back(k);
  }
  // PD negates variables only; elsewhere any subformula may be negated.
  if (fragment_ != Fragment::PD) options.push_back(Kind::Neg);
  const Kind k = options[pick(options.size())];
  if (k == Kind::Neg) return Formula::neg(formula(max_depth - 1));
  Formula lhs = formula(max_depth - 1);
  return Formula::binary(k, std::move(lhs), formula(max_depth - 1));
}

Formula FormulaGenerator::flat_formula(std::size_t max_depth) {
  if (max_depth <= 1 || chance(0.25)) {
    const std::size_t roll = pick(10);
    if (roll == 0) return Formula::bot();
    if (roll == 1) return Formula::top();
    return literal();
  }
  std::vector<Kind> options{Kind::And};
  if (has_connective(fragment_, Kind::Tensor)) options.push_back(Kind::Tensor);
  if (has_connective(fragment_, Kind::Imp)) options.push_back(Kind::Imp);
  if (fragment_ != Fragment::PD) options.push_back(Kind::Neg);
  const Kind k = options[pick(options.size())];
  switch (k) {
    case Kind::Neg:
      // Any negation is flat.
      return Formula::neg(formula(max_depth - 1));
    case Kind::Imp: {
      Formula lhs = formula(max_depth - 1);
      return Formula::imp(std::move(lhs), flat_formula(max_depth - 1));
    }
    default: {
      Formula lhs = flat_formula(max_depth - 1);
      return Formula::binary(k, std::move(lhs), flat_formula(max_depth - 1));
    }
  }
}

Team FormulaGenerator::team(std::size_t num_vars) {
  Team t(num_vars);
  for (std::uint64_t code = 0; code < t.universe(); ++code) {
    if (chance(0.5)) t.insert(code);
  }
  return t;
}

}  // namespace teamlogic
