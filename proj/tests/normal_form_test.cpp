#include <gtest/gtest.h>

#include "helpers.hpp"
#include "teamlogic/normal_form.hpp"
#include "teamlogic/random_formula.hpp"

namespace teamlogic {
namespace {

using testing::F;
using testing::S;
using testing::T;

TEST(Theta, Examples) {
  const Scope p = S({"p"});
  EXPECT_EQ(theta(Team(1), Fragment::PD, p), Formula::bot());
  EXPECT_EQ(theta(Team(1), Fragment::InqL, p), Formula::bot());
  EXPECT_EQ(theta(T("{1}", 1), Fragment::PD, p), F("p"));
  EXPECT_EQ(theta(T("{1}", 1), Fragment::InqL, p), F("~~p"));
  EXPECT_EQ(theta(T("{1}", 1), Fragment::XPT, p), F("~~p"));
  EXPECT_EQ(theta(T("{1}", 1), Fragment::XPD, p), F("p"));
}

TEST(Theta, RenderingOrder) {
  const Scope pq = S({"p", "q"});
  // Conjuncts follow the scope, members follow valuation codes (00, 10, 01, 11).
  EXPECT_EQ(render(theta(T("{01, 10}", 2), Fragment::PD, pq)), "p /\\ ~q \\/ ~p /\\ q");
  EXPECT_EQ(render(theta(T("{01, 10}", 2), Fragment::PT, pq)), "~~(p /\\ ~q || ~p /\\ q)");
  EXPECT_TRUE(fragment_check(theta(T("{01, 10, 11}", 2), Fragment::PD, pq), Fragment::PD).empty());
  EXPECT_TRUE(fragment_check(theta(T("{01, 10, 11}", 2), Fragment::InqL, pq), Fragment::InqL).empty());
}

TEST(Theta, RenderingsAreEquivalent) {
  const Scope pq = S({"p", "q"});
  for (std::uint64_t bits = 0; bits < 16; ++bits) {
    const Team x = Team::from_word(2, bits);
    EXPECT_TRUE(equivalent(theta(x, Fragment::PD, pq), theta(x, Fragment::InqL, pq))) << x.to_string();
  }
}

TEST(MaximalTeams, Examples) {
  const Scope p = S({"p"});
  EXPECT_EQ(maximal_teams(TeamFamily(p, {Team(1), T("{1}", 1), T("{0}", 1)})),
            (std::vector<Team>{T("{0}", 1), T("{1}", 1)}));
  EXPECT_EQ(maximal_teams(truth_family(F("top"), p)), std::vector<Team>{Team::full(1)});
  EXPECT_TRUE(maximal_teams(TeamFamily(p, {Team(1)})).empty());
}

TEST(NormalForm, Examples) {
  const NormalForm a = normal_form(F("p || ~p"), Fragment::InqL);
  EXPECT_EQ(a.components, (std::vector<Team>{T("{0}", 1), T("{1}", 1)}));
  ASSERT_TRUE(a.formula.has_value());
  EXPECT_EQ(*a.formula, F("~~~p || ~~p"));

  const NormalForm b = normal_form(F("=(p)"), Fragment::PD);
  EXPECT_EQ(b.components, (std::vector<Team>{T("{0}", 1), T("{1}", 1)}));
  EXPECT_EQ(b.thetas(), (std::vector<Formula>{F("~p"), F("p")}));
  EXPECT_FALSE(b.formula.has_value());

  const NormalForm c = normal_form(F("top"), Fragment::PT, S({"p"}));
  EXPECT_EQ(c.components, std::vector<Team>{Team::full(1)});
}

TEST(NormalForm, InconsistentFormulaHasNoComponents) {
  const NormalForm nf = normal_form(F("p /\\ ~p"), Fragment::InqL);
  EXPECT_TRUE(nf.components.empty());
  EXPECT_EQ(*nf.formula, Formula::bot());
}

TEST(NormalForm, CanonicalForEquivalentFormulas) {
  const Scope pq = S({"p", "q"});
  EXPECT_EQ(normal_form(F("=(p, q)"), Fragment::PT, pq).components,
            normal_form(F("(p || ~p) -> (q || ~q)"), Fragment::PT, pq).components);
  EXPECT_EQ(normal_form(F("p \\/ ~p"), Fragment::PT, S({"p"})).components,
            normal_form(F("top"), Fragment::PT, S({"p"})).components);
}

TEST(NormalForm, DependenceAtomComponents) {
  // The four two-element teams on which q is a function of p.
  const NormalForm nf = normal_form(F("=(p, q)"), Fragment::PD);
  EXPECT_EQ(nf.components.size(), 4u);
  for (const Team& x : nf.components) EXPECT_EQ(x.size(), 2u);
}

TEST(NormalForm, ExpressiveCompleteness) {
  // Any downward closed family is the truth family of the disjunction of
  // thetas of its maximal members.
  std::mt19937_64 rng(5);
  const Scope pq = S({"p", "q"});
  for (int i = 0; i < 100; ++i) {
    std::vector<Team> generators;
    for (int k = std::uniform_int_distribution<int>(0, 3)(rng); k > 0; --k) {
      generators.push_back(Team::from_word(2, std::uniform_int_distribution<std::uint64_t>(0, 15)(rng)));
    }
    std::vector<Team> members;
    for (std::uint64_t bits = 0; bits < 16; ++bits) {
      const Team y = Team::from_word(2, bits);
      bool below = y.empty();
      for (const Team& g : generators) below = below || y.subset_of(g);
      if (below) members.push_back(y);
    }
    const TeamFamily family(pq, members);
    std::vector<Formula> disjuncts;
    for (const Team& x : maximal_teams(family)) disjuncts.push_back(theta(x, Fragment::InqL, pq));
    EXPECT_EQ(truth_family(disj_all(disjuncts), pq), family);
  }
}

TEST(FlatCharacterization, Examples) {
  const FlatnessReport a = flat_characterization(F("p /\\ q"), Fragment::PT);
  EXPECT_TRUE(a.flat && a.double_neg_equiv && a.tensor_excluded_middle);
  ASSERT_TRUE(a.single_theta.has_value());
  EXPECT_EQ(*a.single_theta, T("{11}", 2));

  const FlatnessReport b = flat_characterization(F("p || ~p"), Fragment::InqL);
  EXPECT_FALSE(b.flat || b.double_neg_equiv || b.tensor_excluded_middle || b.single_theta);

  const FlatnessReport c = flat_characterization(F("=(p, q)"), Fragment::PD);
  EXPECT_FALSE(c.flat || c.double_neg_equiv || c.tensor_excluded_middle || c.single_theta);

  EXPECT_THROW(flat_characterization(F("p /\\ ~p"), Fragment::PD), InconsistentInput);
}

TEST(DependenceNormalForm, ConstancyAtom) {
  EXPECT_EQ(dependence_normal_form(F("=(q)")), F("~q || q"));
  EXPECT_TRUE(equivalent(dependence_normal_form(F("=(q)")), F("=(q)")));
}

TEST(DependenceNormalForm, FlatArgumentsOverTwoVariables) {
  for (const char* text : {"=(p, q)", "=(q, p)", "=(p /\\ q, ~p)", "=(p \\/ q, p, q)", "=(~q, p -> q)",
                           "=(bot, top, p)"}) {
    const Formula dep = F(text);
    EXPECT_TRUE(equivalent(dependence_normal_form(dep), dep)) << text;
  }
}

TEST(DependenceNormalForm, FailsForNonFlatArguments) {
  const Formula dep = F("=(p || q, q)");
  EXPECT_FALSE(equivalent(dependence_normal_form(dep), dep));
}

}  // namespace
}  // namespace teamlogic
