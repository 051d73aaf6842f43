#include "teamlogic/projectivity.hpp"

#include "teamlogic/normal_form.hpp"

namespace teamlogic {

namespace {

bool translatable(const Formula& f) {
  if (f.is(Kind::Or) || f.is(Kind::Imp)) return false;
  for (const Formula& c : f.children()) {
    if (!translatable(c)) return false;
  }
  return true;
}

Formula negated(const Formula& f) { return translatable(f) ? negation_translate(f) : Formula::neg(f); }

}  // namespace

std::string_view to_string(UnifierStyle style) {
  return style == UnifierStyle::Implication ? "implication" : "tensor";
}

UnifierStyle default_style(Fragment fragment) {
  return fragment == Fragment::PD || fragment == Fragment::XPD ? UnifierStyle::Tensor
                                                                : UnifierStyle::Implication;
}

Substitution prucnal_unifier(const Formula& f, const Valuation& v, UnifierStyle style,
                             std::optional<Fragment> fragment) {
  const Scope scope = scope_of(f);
  if (v.num_vars() != scope.size()) {
    throw ScopeMismatch("valuation has " + std::to_string(v.num_vars()) + " bits, formula has " +
                        std::to_string(scope.size()) + " variables");
  }
  if (!singleton_support(f, scope).contains(v.code())) {
    throw ValuationNotSupporting("{" + v.to_string() + "} does not satisfy " + render(f));
  }
  if (fragment) {
    const Kind needed = style == UnifierStyle::Implication ? Kind::Imp : Kind::Tensor;
    if (!has_connective(*fragment, needed)) {
      throw FragmentViolation(std::string(to_string(style)) + "-style unifiers need " +
                              std::string(to_string(needed)) + ", which " +
                              std::string(to_string(*fragment)) + " lacks");
    }
  }
  Substitution s;
  for (std::size_t i = 0; i < scope.size(); ++i) {
    const Formula p = Formula::var(scope.names()[i]);
    if (!v[i]) {
      s.set(p.name(), Formula::conj(f, p));
    } else if (style == UnifierStyle::Implication) {
      s.set(p.name(), Formula::imp(f, p));
    } else {
      s.set(p.name(), Formula::tensor(negated(f), p));
    }
  }
  return s;
}

ProjectivityReport check_projective(const Formula& f, const Substitution& s, const Limits& limits) {
  ProjectivityReport report{f, s, false, true, std::nullopt};
  report.unifies = is_valid(apply(s, f), limits);
  for (const std::string& name : free_vars(f)) {
    const Formula p = Formula::var(name);
    const Formula image = s(name);
    if (!consequence({f, image}, p, limits) || !consequence({f, p}, image, limits)) {
      report.fixes_vars_under_premise = false;
      break;
    }
  }
  return report;
}

ProjectivityReport analyze_projectivity(const Formula& f, Fragment fragment, const Limits& limits) {
  const Scope scope = scope_of(f);
  const Team support = singleton_support(f, scope);
  if (support.empty()) throw InconsistentInput(render(f) + " is not satisfied by any nonempty team");
  if (!is_flat(f, limits)) return ProjectivityReport{f, std::nullopt, false, false, std::nullopt};

  const Valuation v(scope.size(), *support.first());
  const Substitution s = prucnal_unifier(f, v, default_style(fragment), fragment);
  ProjectivityReport report = check_projective(f, s, limits);
  report.witness = v;
  if (!report.unifies || !report.fixes_vars_under_premise || !is_flat_substitution(s, limits)) {
    throw InternalAssertionFailure("Prucnal unifier " + render(s) + " fails on flat " + render(f));
  }
  return report;
}

std::optional<Substitution> projective_unifier(const Formula& f, Fragment fragment, const Limits& limits) {
  return analyze_projectivity(f, fragment, limits).unifier;
}

}  // namespace teamlogic
