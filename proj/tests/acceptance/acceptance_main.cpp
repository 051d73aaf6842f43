// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "enumerate.hpp"
#include "helpers.hpp"
#include "reference.hpp"
#include "teamlogic/admissibility.hpp"
#include "teamlogic/normal_form.hpp"
#include "teamlogic/projectivity.hpp"
#include "teamlogic/random_formula.hpp"
#include "teamlogic/semantics.hpp"
#include "teamlogic/substitution.hpp"

namespace tl = teamlogic;
using tl::Formula;
using tl::Fragment;
using tl::Scope;
using tl::Team;
using tl::testing::F;

namespace {

const std::vector<Fragment> kAllFragments{Fragment::PD, Fragment::InqL, Fragment::PT, Fragment::XPD,
                                          Fragment::XPT};

// Collects violations; keeps the first few messages for the report.
struct Tally {
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::vector<std::string> samples;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (ok) return;
    ++failures;
    if (samples.size() < 5) samples.push_back(what);
  }
  template <class Fn>
  void guard(const std::string& what, Fn&& fn) {
    try {
      fn();
    } catch (const std::exception& e) {
      expect(false, what + ": " + e.what());
    }
  }
};

std::vector<std::string> scope_names(std::size_t n) { return tl::testing::var_names(n); }

// 1. Golden facts.
void golden_facts(Tally& t) {
  t.expect(tl::consequence({F("p \\/ p")}, F("p")), "p \\/ p |= p");
  t.expect(!tl::consequence({F("=(p) \\/ =(p)")}, F("=(p)")), "=(p) \\/ =(p) |/= =(p)");
  t.expect(tl::is_valid(F("~~p -> p")), "|= ~~p -> p");
  t.expect(!tl::is_valid(F("~~(p || ~p) -> (p || ~p)")), "|/= ~~(p || ~p) -> (p || ~p)");
  t.expect(tl::equivalent(F("=(p, q)"), F("(p || ~p) -> (q || ~q)")), "=(p,q) definability");
  t.expect(tl::equivalent(F("~~=(p, q)"), F("top")), "~~=(p,q) == top");
  for (Fragment fr : kAllFragments) {
    t.expect(tl::theta(Team(1), fr, Scope({"p"})) == Formula::bot(), "theta(empty) == bot");
  }
  for (std::size_t n = 1; n <= 3; ++n) {
    const Scope s(scope_names(n));
    const std::uint64_t teams = std::uint64_t{1} << s.universe();
    for (Fragment fr : {Fragment::PD, Fragment::InqL}) {
      for (std::uint64_t xb = 0; xb < teams; ++xb) {
        const Team x = Team::from_word(n, xb);
        // The satisfying teams of theta(X) are exactly the subteams of X.
        const tl::TeamFamily family = tl::truth_family(tl::theta(x, fr, s), s);
        for (std::uint64_t yb = 0; yb < teams; ++yb) {
          const Team y = Team::from_word(n, yb);
          t.expect(family.contains(y) == y.subset_of(x), "theta property " + x.to_string() + " " + y.to_string());
        }
      }
    }
  }
}

// 2. X |= s(f) iff X_s |= f for flat s.
void flat_translation(Tally& t) {
  for (Fragment fr : kAllFragments) {
    tl::FormulaGenerator gen(fr, scope_names(3), 1000 + static_cast<int>(fr));
    for (int i = 0; i < 1000; ++i) {
      const std::size_t n = 1 + static_cast<std::size_t>(i % 3);
      tl::FormulaGenerator local(fr, scope_names(n), gen.rng()());
      const Formula f = local.formula(4);
      const Scope source(scope_names(n));
      const Scope domain(tl::free_vars(f));
      tl::Substitution s;
      for (const std::string& v : domain.names()) s.set(v, local.flat_formula(3));
      const Team x = local.team(n);
      t.guard("translation", [&] {
        t.expect(tl::is_flat_substitution(s), "substitution not flat: " + tl::render(s));
        const bool lhs = tl::evaluate(source, x, tl::apply(s, f));
        const bool rhs = tl::evaluate(domain, tl::translate_team(x, s, source, domain), f);
        t.expect(lhs == rhs, tl::render(f) + " under " + tl::render(s) + " on " + x.to_string());
      });
    }
  }
}

// 3. ~f == f^~ on every XPD formula of depth <= 3 over two variables.
void negation_translation(Tally& t) {
  const Scope s(scope_names(2));
  for (const Formula& f : tl::testing::enumerate_formulas(Fragment::XPD, scope_names(2), 3)) {
    t.guard(tl::render(f), [&] {
      t.expect(tl::truth_family(Formula::neg(f), s) == tl::truth_family(tl::negation_translate(f), s),
               tl::render(f));
    });
  }
}

// 4. Flat, single theta, ~~-stable and f \/ ~f valid coincide on consistent formulas.
void flatness_equivalence(Tally& t) {
  for (Fragment fr : kAllFragments) {
    for (const Formula& f : tl::testing::enumerate_formulas(fr, scope_names(2), 3)) {
      if (!tl::is_consistent(f)) continue;
      t.guard(tl::render(f), [&] {
        const tl::FlatnessReport r = tl::flat_characterization(f, fr);
        const bool single = r.single_theta.has_value();
        t.expect(r.flat == single && r.flat == r.double_neg_equiv && r.flat == r.tensor_excluded_middle,
                 tl::render(f));
      });
    }
  }
}

// 5. Normal form soundness and coverage.
void normal_forms(Tally& t) {
  for (Fragment fr : kAllFragments) {
    tl::FormulaGenerator gen(fr, scope_names(3), 5000 + static_cast<int>(fr));
    for (int i = 0; i < 500; ++i) {
      const std::size_t n = 1 + static_cast<std::size_t>(i % 3);
      tl::FormulaGenerator local(fr, scope_names(n), gen.rng()());
      const Formula f = local.formula(4);
      const Scope s(scope_names(n));
      t.guard(tl::render(f), [&] {
        const tl::NormalForm nf = tl::normal_form(f, fr, s);
        const std::vector<Formula> thetas = nf.thetas();
        for (const Formula& th : thetas) t.expect(tl::consequence({th}, f), "component does not entail " + tl::render(f));
        const std::uint64_t teams = std::uint64_t{1} << s.universe();
        for (std::uint64_t bits = 0; bits < teams; ++bits) {
          const Team y = Team::from_word(n, bits);
          if (!tl::evaluate(s, y, f)) continue;
          bool under = false;
          for (const Formula& th : thetas) under = under || tl::evaluate(s, y, th);
          t.expect(under || y.empty(), y.to_string() + " escapes the normal form of " + tl::render(f));
        }
        if (tl::has_connective(fr, tl::Kind::Or)) {
          t.expect(tl::equivalent(f, tl::disj_all(thetas)), "not equivalent: " + tl::render(f));
        }
      });
    }
  }
}

// 6. Prucnal unifiers of flat formulas are projective and flat.
void prucnal(Tally& t) {
  for (Fragment fr : kAllFragments) {
    tl::FormulaGenerator gen(fr, scope_names(3), 6000 + static_cast<int>(fr));
    int done = 0;
    for (int attempts = 0; done < 200 && attempts < 5000; ++attempts) {
      const Formula f = gen.flat_formula(4);
      if (!tl::is_consistent(f)) continue;
      ++done;
      t.guard(tl::render(f), [&] {
        const auto u = tl::projective_unifier(f, fr);
        t.expect(u.has_value(), "no unifier for flat " + tl::render(f));
        if (!u) return;
        const tl::ProjectivityReport r = tl::check_projective(f, *u);
        t.expect(r.unifies && r.fixes_vars_under_premise, "not projective: " + tl::render(f));
        for (const auto& [var, image] : u->images()) t.expect(tl::is_flat(image), "image not flat: " + tl::render(image));
      });
    }
    t.expect(done == 200, "could not sample 200 consistent flat formulas");
  }
}

// 7. Structural completeness experiment.
void experiment(Tally& t) {
  for (Fragment fr : {Fragment::InqL, Fragment::XPD}) {
    tl::ExperimentConfig config;
    config.fragment = fr;
    config.vars = 2;
    config.samples = 500;
    config.seed = 20240601;
    config.depth = 4;
    const tl::ExperimentReport r = tl::structural_completeness_experiment(config);
    t.expect(r.passed(), std::string(tl::to_string(fr)) + ": " +
                             (r.failures.empty() ? std::string() : r.failures.front().reason));
    t.expect(r.witnesses_constructed == r.non_derivable, "witness count mismatch");
    std::printf("    %s: derivable=%zu non_derivable=%zu witnesses=%zu failures=%zu\n",
                std::string(tl::to_string(fr)).c_str(), r.derivable, r.non_derivable,
                r.witnesses_constructed, r.assertion_failures);
  }
}

// 8. ND_k instances with atomic arguments.
void ndk(Tally& t) {
  const std::vector<Formula> atoms{F("p"), F("q"), F("r"), F("bot"), F("top")};
  for (std::size_t k = 1; k <= 3; ++k) {
    std::vector<std::size_t> idx(k, 0);
    for (;;) {
      std::vector<Formula> psis;
      for (std::size_t i : idx) psis.push_back(atoms[i]);
      for (const Formula& phi : atoms) {
        const Formula inst = tl::ndk_instance(k, phi, psis, Fragment::InqL);
        t.expect(tl::is_valid(inst), tl::render(inst));
      }
      std::size_t pos = 0;
      while (pos < k && ++idx[pos] == atoms.size()) idx[pos++] = 0;
      if (pos == k) break;
    }
  }
  t.expect(tl::is_valid(F("~~p -> p")), "~~p -> p");
}

// 9. Bitset evaluator against the naive reference.
void oracle(Tally& t) {
  for (int i = 0; i < 2000; ++i) {
    const Fragment fr = kAllFragments[static_cast<std::size_t>(i) % kAllFragments.size()];
    const std::size_t n = 1 + static_cast<std::size_t>(i % 3);
    tl::FormulaGenerator gen(fr, scope_names(n), 9000 + static_cast<std::uint64_t>(i));
    const Formula f = gen.formula(4);
    const Team x = gen.team(n);
    tl::testing::ReferenceEvaluator ref(scope_names(n));
    t.guard(tl::render(f), [&] {
      t.expect(tl::evaluate(Scope(scope_names(n)), x, f) == ref.holds(x, f), tl::render(f) + " on " + x.to_string());
    });
  }
}

// 10. Dependence atom clauses agree on flat arguments; the disjunctive normal form.
void dependence_atoms(Tally& t) {
  tl::FormulaGenerator gen(Fragment::XPD, scope_names(3), 10000);
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = 1 + static_cast<std::size_t>(i % 3);
    tl::FormulaGenerator local(Fragment::XPD, scope_names(n), gen.rng()());
    std::vector<Formula> args;
    for (std::size_t k = local.rng()() % 3; k > 0; --k) args.push_back(local.flat_formula(3));
    const Formula dep = Formula::dep(args, local.flat_formula(3));
    const Scope s(scope_names(n));
    const std::uint64_t teams = std::uint64_t{1} << s.universe();
    t.guard(tl::render(dep), [&] {
      for (std::uint64_t bits = 0; bits < teams; ++bits) {
        const Team x = Team::from_word(n, bits);
        t.expect(tl::dependence_by_similarity(s, x, dep) == tl::dependence_by_implication(s, x, dep),
                 tl::render(dep) + " on " + x.to_string());
      }
    });
  }
  // Every flat formula over two variables is equivalent to some theta.
  const Scope pq(scope_names(2));
  std::vector<Formula> flats;
  for (std::uint64_t bits = 0; bits < 16; ++bits) flats.push_back(tl::theta(Team::from_word(2, bits), Fragment::PD, pq));
  for (const Formula& b : flats) {
    const Formula one = Formula::dep({}, b);
    t.expect(tl::equivalent(tl::dependence_normal_form(one), one), tl::render(one));
    for (const Formula& a : flats) {
      const Formula two = Formula::dep({a}, b);
      t.expect(tl::equivalent(tl::dependence_normal_form(two), two), tl::render(two));
    }
  }
}

struct Criterion {
  int id;
  const char* title;
  double budget_seconds;
  std::function<void(Tally&)> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "golden facts", 1.0, golden_facts},
      {2, "flat substitutions agree with team translation", 60.0, flat_translation},
      {3, "negation equals its syntactic translation (exhaustive XPD, depth 3)", 60.0, negation_translation},
      {4, "four-way flatness characterization (exhaustive, depth 3)", 60.0, flatness_equivalence},
      {5, "normal form soundness and coverage", 120.0, normal_forms},
      {6, "Prucnal unifiers are projective", 120.0, prucnal},
      {7, "structural completeness experiment (InqL, XPD)", 300.0, experiment},
      {8, "ND_k instances are InqL-valid", 30.0, ndk},
      {9, "evaluator agrees with the naive reference", 120.0, oracle},
      {10, "generalized dependence atoms", 120.0, dependence_atoms},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    Tally tally;
    const auto start = std::chrono::steady_clock::now();
    tally.guard("uncaught", [&] { c.run(tally); });
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = seconds < c.budget_seconds;
    const bool pass = tally.failures == 0 && in_time;
    failed += pass ? 0 : 1;
    std::printf("[%s] criterion %2d: %s (%zu checks, %zu failures, %.2f s of %.0f s)\n", pass ? "PASS" : "FAIL",
                c.id, c.title, tally.checks, tally.failures, seconds, c.budget_seconds);
    for (const std::string& s : tally.samples) std::printf("    failure: %s\n", s.c_str());
    if (!in_time) std::printf("    over time budget\n");
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
