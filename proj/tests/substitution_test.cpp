#include <gtest/gtest.h>

#include "helpers.hpp"
#include "teamlogic/random_formula.hpp"
#include "teamlogic/substitution.hpp"

namespace teamlogic {
namespace {

using testing::F;
using testing::S;
using testing::T;

Substitution sub(std::initializer_list<std::pair<const char*, const char*>> images) {
  Substitution s;
  for (const auto& [var, text] : images) s.set(var, F(text));
  return s;
}

TEST(Substitution, IdentityOutsideDomain) {
  const Substitution s = sub({{"p", "q /\\ r"}});
  EXPECT_EQ(s("p"), F("q /\\ r"));
  EXPECT_EQ(s("z"), F("z"));
  EXPECT_EQ(s.domain(), std::vector<std::string>{"p"});
  EXPECT_EQ(render(s), "{p := q /\\ r}");
}

TEST(Apply, Examples) {
  EXPECT_EQ(apply(sub({{"p", "q /\\ r"}}), F("=(p, t)")), F("=(q /\\ r, t)"));
  EXPECT_EQ(apply(sub({{"p", "bot"}}), F("p || ~p")), F("bot || ~bot"));
  EXPECT_EQ(apply(sub({{"p", "q"}, {"q", "p"}}), F("p -> q")), F("q -> p"));
  EXPECT_EQ(apply(sub({{"p", "top"}}), F("bot /\\ top")), F("bot /\\ top"));
}

TEST(Apply, FragmentChecked) {
  const Substitution s = sub({{"p", "q /\\ r"}});
  EXPECT_THROW(apply(s, F("~p"), Fragment::PD), FragmentViolation);
  EXPECT_EQ(apply(s, F("~p"), Fragment::XPD), F("~(q /\\ r)"));
  EXPECT_THROW(apply(sub({{"p", "q || r"}}), F("=(p, t)"), Fragment::XPD), FragmentViolation);
  EXPECT_NO_THROW(apply(sub({{"p", "q \\/ r"}}), F("=(p, t)"), Fragment::XPD));
}

TEST(IsFlatSubstitution, Examples) {
  EXPECT_TRUE(is_flat_substitution(sub({{"p", "q /\\ r"}})));
  EXPECT_FALSE(is_flat_substitution(sub({{"p", "q || ~q"}})));
  EXPECT_TRUE(is_flat_substitution(Substitution{}));
}

TEST(IsStableSubstitution, Examples) {
  EXPECT_TRUE(is_stable_substitution(sub({{"p", "~q"}}), Fragment::InqL));
  EXPECT_FALSE(is_stable_substitution(sub({{"p", "q || ~q"}}), Fragment::InqL));
  EXPECT_TRUE(is_stable_substitution(sub({{"p", "bot"}}), Fragment::InqL));
  EXPECT_THROW(is_stable_substitution(sub({{"p", "~q"}}), Fragment::PD), FragmentViolation);
}

TEST(TranslateTeam, Examples) {
  const Scope pq = S({"p", "q"});
  EXPECT_EQ(translate_team(T("{11, 01}", 2), sub({{"p", "bot"}}), pq, S({"p"})), T("{0}", 1));
  EXPECT_EQ(translate_team(T("{11, 01}", 2), Substitution{}, pq, pq), T("{11, 01}", 2));
  EXPECT_EQ(translate_team(T("{1}", 1), sub({{"p", "~p"}}), S({"p"}), S({"p"})), T("{0}", 1));
  // Target scope may differ from the source.
  EXPECT_EQ(translate_team(T("{10, 01}", 2), sub({{"r", "p \\/ q"}, {"s", "p /\\ q"}}), pq, S({"r", "s"})),
            T("{10}", 2));
  EXPECT_THROW(translate_team(T("{1}", 1), sub({{"p", "z"}}), S({"p"}), S({"p"})), ScopeMismatch);
}

TEST(InverseSelect, Examples) {
  const Scope p = S({"p"});
  const Substitution neg = sub({{"p", "~p"}});
  const Team x = Team::full(1);
  EXPECT_EQ(inverse_select(T("{0}", 1), x, neg, p, p), T("{1}", 1));
  EXPECT_EQ(inverse_select(Team(1), x, neg, p, p), Team(1));
  EXPECT_EQ(inverse_select(translate_team(x, neg, p, p), x, neg, p, p), x);
  EXPECT_THROW(inverse_select(T("{1}", 1), T("{1}", 1), neg, p, p), NotSubteam);
}

TEST(Compose, AgreesWithSequentialApplication) {
  FormulaGenerator gen(Fragment::XPT, {"p", "q", "r"}, 8);
  for (int i = 0; i < 100; ++i) {
    Substitution inner;
    Substitution outer;
    inner.set("p", gen.formula(3));
    inner.set("q", gen.formula(2));
    outer.set("q", gen.formula(2));
    outer.set("r", gen.formula(3));
    const Formula f = gen.formula(4);
    EXPECT_EQ(apply(outer, apply(inner, f)), apply(compose(outer, inner), f)) << render(f);
  }
}

TEST(NonStructurality, UniformSubstitutionFails) {
  // Uniform substitution fails: p \/ p entails p but =(p) \/ =(p) does not entail =(p).
  EXPECT_TRUE(consequence({F("p \\/ p")}, F("p")));
  EXPECT_FALSE(consequence({F("=(p) \\/ =(p)")}, F("=(p)")));
  EXPECT_TRUE(is_valid(F("~~p -> p")));
  EXPECT_FALSE(is_valid(F("~~(p || ~p) -> (p || ~p)")));
}

class FlatClosure : public ::testing::TestWithParam<Fragment> {};

Substitution random_flat(FormulaGenerator& gen, const std::vector<std::string>& domain) {
  Substitution s;
  for (const std::string& v : domain) s.set(v, gen.flat_formula(3));
  return s;
}

TEST_P(FlatClosure, FlatFormulasStayFlat) {
  FormulaGenerator gen(GetParam(), {"p", "q", "r"}, 31);
  for (int i = 0; i < 100; ++i) {
    const Formula f = gen.flat_formula(4);
    const Substitution s = random_flat(gen, {"p", "q"});
    ASSERT_TRUE(is_flat(f));
    EXPECT_TRUE(is_flat(apply(s, f))) << render(f) << " under " << render(s);
  }
}

TEST_P(FlatClosure, ConsequenceIsPreserved) {
  FormulaGenerator gen(GetParam(), {"p", "q"}, 32);
  int entailed = 0;
  for (int i = 0; i < 300; ++i) {
    const Formula f = gen.formula(3);
    const Formula g = gen.formula(3);
    if (!consequence({f}, g)) continue;
    ++entailed;
    const Substitution s = random_flat(gen, {"p", "q"});
    EXPECT_TRUE(consequence({apply(s, f)}, apply(s, g))) << render(f) << " / " << render(g) << " under "
                                                         << render(s);
  }
  EXPECT_GT(entailed, 10);
}

TEST_P(FlatClosure, FlatImagesStayInExtendedFragment) {
  const Fragment ext = GetParam() == Fragment::PD ? Fragment::XPD
                       : GetParam() == Fragment::PT ? Fragment::XPT
                                                    : GetParam();
  FormulaGenerator gen(GetParam(), {"p", "q"}, 33);
  for (int i = 0; i < 100; ++i) {
    const Formula f = gen.formula(4);
    const Substitution s = random_flat(gen, {"p", "q"});
    EXPECT_NO_THROW(apply(s, f, ext)) << render(f) << " under " << render(s);
  }
}

INSTANTIATE_TEST_SUITE_P(Fragments, FlatClosure,
                         ::testing::Values(Fragment::PD, Fragment::InqL, Fragment::PT, Fragment::XPD,
                                           Fragment::XPT),
                         [](const auto& info) { return std::string(to_string(info.param)); });

TEST(StableSubstitutions, CoincideWithFlatOnes) {
  FormulaGenerator gen(Fragment::InqL, {"p", "q"}, 34);
  for (int i = 0; i < 200; ++i) {
    Substitution s;
    s.set("p", gen.formula(4));
    EXPECT_EQ(is_stable_substitution(s, Fragment::InqL), is_flat_substitution(s)) << render(s);
  }
}

}  // namespace
}  // namespace teamlogic
