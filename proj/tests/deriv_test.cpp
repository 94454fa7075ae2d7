#include <gtest/gtest.h>

#include "support.hpp"

namespace pfol {
namespace {

using testing::D;
using testing::P;
using testing::random_derivation;
using testing::random_poly;

bool leibniz_holds(const Derivation& d, const Poly& f, const Poly& g) {
  return deriv_apply(d, f * g) == deriv_apply(d, f) * g + f * deriv_apply(d, g);
}

TEST(Deriv, ApplyExamples) {
  auto R = testing::ring_xy(2);
  EXPECT_EQ(deriv_apply(D(R, {"x", "y"}), P(R, "x")), P(R, "x"));
  EXPECT_TRUE(deriv_apply(D(R, {"x^2", "1"}), P(R, "x + x^2*y")).is_zero());
  auto F4 = testing::f4_xy();
  EXPECT_EQ(deriv_apply(D(F4, {"x", "g*y"}), P(F4, "x")), P(F4, "x"));
  EXPECT_EQ(deriv_apply(D(F4, {"x", "g*y"}), P(F4, "y")), P(F4, "g*y"));
}

TEST(Deriv, KillsPthPowers) {
  std::mt19937 rng(21);
  for (int p : {2, 3, 5}) {
    auto R = Ring::make(Field::make(p, 1), {"x", "y"});
    for (int k = 0; k < 30; ++k) {
      const Derivation d = random_derivation(R, 2, 3, rng);
      EXPECT_TRUE(deriv_apply(d, random_poly(R, 2, 4, rng).pow(p)).is_zero());
    }
  }
}

TEST(Deriv, AuxVariablesAreConstants) {
  auto R = testing::ring_xy(2);
  auto T = R->with_aux(1);
  EXPECT_EQ(deriv_apply(D(R, {"x^2", "1"}), P(T, "t1*x + t1^2")), P(T, "t1*x^2"));
}

TEST(Deriv, BracketExamples) {
  auto R = testing::ring_xy(2);
  const Derivation a = D(R, {"x^2", "1"});
  EXPECT_TRUE(deriv_bracket(a, a).is_zero());
  EXPECT_TRUE(deriv_bracket(D(R, {"x", "0"}), D(R, {"0", "y"})).is_zero());
  auto R3 = testing::ring_xy(3);
  EXPECT_EQ(deriv_bracket(D(R3, {"0", "x"}), D(R3, {"y", "0"})), D(R3, {"x", "-y"}));
  EXPECT_EQ(deriv_bracket(D(R, {"0", "x"}), D(R, {"y", "0"})), D(R, {"x", "y"}));
}

TEST(Deriv, PthPowerExamples) {
  auto F4 = testing::f4_xy();
  EXPECT_EQ(deriv_p_power(D(F4, {"x", "g*y"})), D(F4, {"x", "(g+1)*y"}));
  auto R = testing::ring_xy(2);
  EXPECT_TRUE(deriv_p_power(D(R, {"x^2", "1"})).is_zero());
  EXPECT_EQ(deriv_p_power(D(R, {"x", "0"})), D(R, {"x", "0"}));
  auto R3 = testing::ring_xy(3);
  EXPECT_EQ(deriv_p_power(D(R3, {"x", "2*y"})), D(R3, {"x", "2*y"}));
}

TEST(Deriv, DegreeExamples) {
  auto F4 = testing::f4_xy();
  EXPECT_EQ(deriv_degree(D(F4, {"x", "g*y"})), Degree(0));
  auto R = testing::ring_xy(2);
  EXPECT_EQ(deriv_degree(D(R, {"x^2", "1"})), Degree(1));
  EXPECT_EQ(deriv_degree(Derivation::partial(R, 0)), Degree(-1));
  EXPECT_EQ(deriv_degree(Derivation::zero(R)), std::nullopt);
  auto W = Ring::make(Field::make(2, 1), {"x", "y"}, {1, 2});
  EXPECT_EQ(deriv_degree(D(W, {"y", "x"})), Degree(1));
}

TEST(Deriv, Rendering) {
  auto R = testing::ring_xy(2);
  EXPECT_EQ(D(R, {"x^2", "1"}).to_string(), "x^2*dx + 1*dy");
  EXPECT_EQ(D(R, {"x", "0"}).to_string(), "x*dx");
  EXPECT_EQ(D(R, {"x + y", "0"}).to_string(), "(x + y)*dx");
  EXPECT_EQ(Derivation::zero(R).to_string(), "0");
}

TEST(Deriv, RejectsBadCoefficients) {
  auto R = testing::ring_xy(2);
  auto T = R->with_aux(1);
  EXPECT_THROW(Derivation({P(R, "x")}), Error);
  EXPECT_THROW(Derivation({P(T, "t1"), P(T, "x")}), Error);
  try {
    deriv_apply(D(R, {"x", "y"}), P(testing::ring_xy(3), "x"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kRingMismatch);
  }
}

TEST(Deriv, LeibnizForRawBracketAndPower) {
  std::mt19937 rng(22);
  int cases = 0;
  for (int p : {2, 3}) {
    auto R = Ring::make(Field::make(p, 2), {"x", "y", "z"});
    for (int k = 0; k < 40; ++k) {
      const Derivation a = random_derivation(R, 2, 3, rng), b = random_derivation(R, 2, 3, rng);
      const Poly f = random_poly(R, 3, 4, rng), g = random_poly(R, 3, 4, rng);
      EXPECT_TRUE(leibniz_holds(a, f, g));
      EXPECT_TRUE(leibniz_holds(deriv_bracket(a, b), f, g));
      EXPECT_TRUE(leibniz_holds(deriv_p_power(a), f, g));
      cases += 3;
    }
  }
  EXPECT_GE(cases, 200);
}

TEST(Deriv, JacobiAndAntisymmetry) {
  std::mt19937 rng(23);
  for (int k = 0; k < 100; ++k) {
    auto R = Ring::make(Field::make(k % 2 ? 3 : 2, 1), {"x", "y"});
    const Derivation a = random_derivation(R, 2, 3, rng), b = random_derivation(R, 2, 3, rng),
                     c = random_derivation(R, 2, 3, rng);
    const Derivation j = deriv_bracket(a, deriv_bracket(b, c)) + deriv_bracket(b, deriv_bracket(c, a)) +
                         deriv_bracket(c, deriv_bracket(a, b));
    EXPECT_TRUE(j.is_zero());
    EXPECT_EQ(deriv_bracket(a, b), Derivation::zero(R) - deriv_bracket(b, a));
  }
}

TEST(Deriv, PthPowerActsAsIteratedApplication) {
  std::mt19937 rng(24);
  for (int p : {2, 3, 5}) {
    auto R = Ring::make(Field::make(p, 1), {"x", "y"});
    for (int k = 0; k < 30; ++k) {
      const Derivation d = random_derivation(R, 2, 3, rng);
      const Poly f = random_poly(R, 3, 4, rng);
      EXPECT_EQ(deriv_apply(deriv_p_power(d), f), deriv_apply_n(d, f, p));
    }
  }
}

TEST(Deriv, DegreeBoundsTheImage) {
  std::mt19937 rng(25);
  auto R = Ring::make(Field::make(3, 1), {"x", "y"}, {1, 2});
  for (int k = 0; k < 100; ++k) {
    const Derivation d = random_derivation(R, 3, 3, rng);
    const Poly f = random_poly(R, 4, 4, rng);
    const Poly df = deriv_apply(d, f);
    if (df.is_zero()) continue;
    EXPECT_LE(*df.degree(), *deriv_degree(d) + *f.degree());
  }
}

}  // namespace
}  // namespace pfol
