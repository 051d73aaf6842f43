#include "teamlogic/substitution.hpp"

#include "evaluator.hpp"

namespace teamlogic {

Substitution::Substitution(std::map<std::string, Formula> images) : images_(std::move(images)) {}

void Substitution::set(const std::string& var, Formula image) {
  images_.insert_or_assign(var, std::move(image));
}

Formula Substitution::operator()(const std::string& var) const {
  auto it = images_.find(var);
  return it == images_.end() ? Formula::var(var) : it->second;
}

std::vector<std::string> Substitution::domain() const {
  std::vector<std::string> out;
  for (const auto& [var, image] : images_) out.push_back(var);
  return out;
}

std::string render(const Substitution& s) {
  std::string out = "{";
  bool first = true;
  for (const auto& [var, image] : s.images()) {
    if (!first) out += ", ";
    first = false;
    out += var + " := " + render(image);
  }
  return out + "}";
}

Formula apply(const Substitution& s, const Formula& f) {
  if (s.empty()) return f;
  switch (f.kind()) {
    case Kind::Var:
      return s(f.name());
    case Kind::Bot:
    case Kind::Top:
      return f;
    case Kind::Neg:
      return Formula::neg(apply(s, f.operand()));
    case Kind::Dep: {
      std::vector<Formula> args;
      for (const Formula& a : f.antecedents()) args.push_back(apply(s, a));
      return Formula::dep(std::move(args), apply(s, f.consequent()));
    }
    default:
      return Formula::binary(f.kind(), apply(s, f.lhs()), apply(s, f.rhs()));
  }
}

Formula apply(const Substitution& s, const Formula& f, Fragment fragment, const Limits& limits) {
  Formula out = apply(s, f);
  require_fragment(out, fragment, limits);
  return out;
}

Substitution compose(const Substitution& outer, const Substitution& inner) {
  Substitution out;
  for (const auto& [var, image] : inner.images()) out.set(var, apply(outer, image));
  for (const auto& [var, image] : outer.images()) {
    if (!inner.maps(var)) out.set(var, image);
  }
  return out;
}

bool is_flat_substitution(const Substitution& s, const Limits& limits) {
  for (const auto& [var, image] : s.images()) {
    if (!is_flat(image, limits)) return false;
  }
  return true;
}

bool is_stable_substitution(const Substitution& s, Fragment fragment, const Limits& limits) {
  if (!has_connective(fragment, Kind::Imp)) {
    throw FragmentViolation("stability is defined through ~~, which needs -> in the fragment (got " +
                            std::string(to_string(fragment)) + ")");
  }
  bool stable = true;
  for (const auto& [var, image] : s.images()) {
    const bool image_stable = equivalent(image, Formula::neg(Formula::neg(image)), limits);
    if (image_stable != is_flat(image, limits)) {
      throw InternalAssertionFailure("stability and flatness disagree on " + render(image));
    }
    stable = stable && image_stable;
  }
  return stable;
}

namespace {

// For each target variable, the set of source valuations v with {v} |= s(p).
std::vector<Team> image_supports(const Substitution& s, const Scope& source, const Scope& target) {
  Limits limits;
  limits.eval_cap = std::max(limits.eval_cap, source.size());
  detail::Evaluator ev(source, limits);
  std::vector<Team> out;
  for (const std::string& p : target.names()) out.push_back(ev.support(ev.add(s(p))));
  return out;
}

std::uint64_t translate_code(std::uint64_t code, const std::vector<Team>& supports) {
  std::uint64_t out = 0;
  for (std::size_t i = 0; i < supports.size(); ++i) {
    if (supports[i].contains(code)) out |= std::uint64_t{1} << i;
  }
  return out;
}

}  // namespace

Team translate_team(const Team& team, const Substitution& s, const Scope& source, const Scope& target) {
  if (team.num_vars() != source.size()) throw ScopeMismatch("translate_team: team does not match the source scope");
  const std::vector<Team> supports = image_supports(s, source, target);
  Team out(target.size());
  for (std::uint64_t code : team.members()) out.insert(translate_code(code, supports));
  return out;
}

Team inverse_select(const Team& y, const Team& x, const Substitution& s, const Scope& source,
                    const Scope& target) {
  if (y.num_vars() != target.size()) throw ScopeMismatch("inverse_select: team does not match the target scope");
  const Team image = translate_team(x, s, source, target);
  if (!y.subset_of(image)) {
    throw NotSubteam(y.to_string() + " is not a subteam of the translated team " + image.to_string());
  }
  const std::vector<Team> supports = image_supports(s, source, target);
  Team out(source.size());
  for (std::uint64_t code : x.members()) {
    if (y.contains(translate_code(code, supports))) out.insert(code);
  }
  if (translate_team(out, s, source, target) != y) {
    throw InternalAssertionFailure("inverse_select does not translate back onto " + y.to_string());
  }
  return out;
}

}  // namespace teamlogic
