#include <gtest/gtest.h>

#include <algorithm>

#include "pfol/solutions.hpp"
#include "support.hpp"

namespace pfol {
namespace {

using testing::D;
using testing::P;

Foliation closed(const RingPtr& R, std::vector<Derivation> seed) { return foliation_closure(R, seed); }

bool contains(const std::vector<Poly>& v, const Poly& f) { return std::find(v.begin(), v.end(), f) != v.end(); }

TEST(Solutions, FirstIntegralExamples) {
  auto R = testing::ring_xy(2);
  const Foliation nil = closed(R, {D(R, {"x^2", "1"})});
  EXPECT_TRUE(is_first_integral(P(R, "x + x^2*y"), nil));
  std::mt19937 rng(51);
  for (int k = 0; k < 10; ++k) {
    EXPECT_TRUE(is_first_integral(testing::random_nonzero_poly(R, 2, 3, rng).pow(2), nil));
  }
  EXPECT_FALSE(is_first_integral(P(R, "x"), closed(R, {D(R, {"x", "y"})})));
  try {
    is_first_integral(Poly(R), nil);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kZeroInput);
  }
}

TEST(Solutions, AlgebraicSolutionExamples) {
  auto R = testing::ring_xy(2);
  EXPECT_EQ(is_algebraic_solution(P(R, "x"), closed(R, {D(R, {"x", "y"})})), LVector{P(R, "1")});
  EXPECT_EQ(is_algebraic_solution(P(R, "x"), closed(R, {D(R, {"x^2", "1"})})), LVector{P(R, "x")});
  auto F4 = testing::f4_xy();
  const std::vector<Derivation> seed{D(F4, {"x", "g*y"})};
  EXPECT_FALSE(is_algebraic_solution(P(F4, "x + y"), seed).has_value());
}

TEST(Solutions, LMapExamples) {
  auto R = testing::ring_xy(2);
  const Foliation diag = closed(R, {D(R, {"x", "0"}), D(R, {"0", "y"})});
  EXPECT_EQ(l_map(P(R, "x"), diag), (LVector{P(R, "1"), Poly(R)}));
  EXPECT_EQ(l_map(P(R, "x^2"), diag), (LVector{Poly(R), Poly(R)}));
  auto R3 = testing::ring_xy(3);
  const Foliation d3 = closed(R3, {D(R3, {"x", "0"}), D(R3, {"0", "y"})});
  EXPECT_EQ(l_map(P(R3, "x^2"), d3), (LVector{P(R3, "2"), Poly(R3)}));
  const Foliation nil = closed(R, {D(R, {"x^2", "1"})});
  EXPECT_EQ(l_map(P(R, "x + x^2*y"), nil), LVector{Poly(R)});
  try {
    l_map(P(R, "y"), nil);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotSolution);
  }
}

TEST(Solutions, EnumerationExamples) {
  auto R = testing::ring_xy(2);
  const auto nil = enumerate_solutions(closed(R, {D(R, {"x^2", "1"})}), 3);
  EXPECT_TRUE(contains(nil, P(R, "x")));
  EXPECT_TRUE(contains(nil, P(R, "x + x^2*y")));
  const auto all = enumerate_solutions(R, std::vector<Derivation>{Derivation::zero(R)}, 2);
  EXPECT_EQ(all.size(), 63u);  // 2^6 - 1 monic polynomials of degree <= 2
  const auto lin = enumerate_solutions(closed(R, {D(R, {"x", "y"})}), 1);
  EXPECT_TRUE(contains(lin, P(R, "x")));
  EXPECT_TRUE(contains(lin, P(R, "y")));
  EXPECT_TRUE(contains(lin, P(R, "x + y")));
}

TEST(Solutions, EnumerationMatchesDirectFilter) {
  auto R = Ring::make(Field::make(3, 1), {"x", "y"});
  const std::vector<Derivation> gens{D(R, {"x", "2*y"})};
  const auto found = enumerate_solutions(R, gens, 2, {1u << 22, 1});
  // Oracle: every monic candidate built from scratch and tested with the public predicate.
  const auto monos = monomial_basis_leq(*R, 2);
  std::size_t expected = 0;
  const std::size_t l = monos.size();
  std::size_t total = 1;
  for (std::size_t k = 0; k < l; ++k) total *= 3;
  for (std::size_t idx = 1; idx < total; ++idx) {
    std::vector<Term> t;
    std::size_t rest = idx;
    for (std::size_t k = 0; k < l; ++k, rest /= 3) {
      if (rest % 3) t.push_back({monos[k], R->field().from_int(static_cast<long long>(rest % 3))});
    }
    const Poly f = Poly::from_terms(R, t);
    if (f.leading_coeff() != R->field().one()) continue;
    if (is_algebraic_solution(f, gens)) {
      ++expected;
      EXPECT_TRUE(contains(found, f)) << f.to_string();
    }
  }
  EXPECT_EQ(found.size(), expected);
}

TEST(Solutions, EnumerationIsDeterministicAcrossThreadCounts) {
  auto R = testing::f4_xy();
  const Foliation f = closed(R, {D(R, {"x", "g*y"})});
  EXPECT_EQ(enumerate_solutions(f, 2, {1u << 22, 1}), enumerate_solutions(f, 2, {1u << 22, 4}));
}

TEST(Solutions, EnumerationBudget) {
  auto R = testing::f4_xy();
  try {
    enumerate_solutions(closed(R, {D(R, {"x", "g*y"})}), 4);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kBudgetExceeded);
  }
}

TEST(Solutions, PiBasisExamples) {
  auto R = testing::ring_xy(2);
  const Foliation t1 = closed(R, {D(R, {"x", "y"})});
  const PiBasis b1 = pi_basis(t1, enumerate_solutions(t1, 2));
  ASSERT_EQ(b1.size(), 1u);
  EXPECT_EQ(b1.reps()[0], P(R, "x"));

  auto F4 = testing::f4_xy();
  const Foliation tg = closed(F4, {D(F4, {"x", "g*y"})});
  const PiBasis bg = pi_basis(tg, enumerate_solutions(tg, 2));
  ASSERT_EQ(bg.size(), 2u);
  EXPECT_EQ(bg.reps()[0], P(F4, "x"));
  EXPECT_EQ(bg.reps()[1], P(F4, "y"));

  const Foliation nil = closed(R, {D(R, {"x^2", "1"})});
  const PiBasis bn = pi_basis(nil, enumerate_solutions(nil, 3));
  ASSERT_EQ(bn.size(), 1u);
  EXPECT_EQ(bn.reps()[0], P(R, "x"));

  try {
    pi_basis(nil, std::vector<Poly>{P(R, "y")});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotSolution);
    EXPECT_NE(std::string(e.what()).find("y"), std::string::npos);
  }
}

TEST(Solutions, PiClassExamples) {
  auto R = testing::ring_xy(2);
  const Foliation t1 = closed(R, {D(R, {"x", "y"})});
  const PiBasis b1 = pi_basis(t1, std::vector<Poly>{P(R, "x")});
  EXPECT_EQ(std::get<PrimeCoords>(pi_class(P(R, "y"), b1)).z, std::vector<int>{1});
  EXPECT_EQ(std::get<PrimeCoords>(pi_class(P(R, "x^2"), b1)).z, std::vector<int>{0});

  auto F4 = testing::f4_xy();
  const Foliation tg = closed(F4, {D(F4, {"x", "g*y"})});
  // Against the seed generator only, L(y) = g L(x): a basis {x} is not k-maximal.
  const PiBasis seed_basis(F4, {D(F4, {"x", "g*y"})}, {P(F4, "x")}, {LVector{P(F4, "1")}});
  const auto cls = pi_class(P(F4, "y"), seed_basis);
  ASSERT_TRUE(std::holds_alternative<NonPrimeCoords>(cls));
  EXPECT_EQ(std::get<NonPrimeCoords>(cls).z, FqVector{F4->field().gen()});
  const PiBasis only_x = pi_basis(tg, std::vector<Poly>{P(F4, "x")});
  EXPECT_TRUE(std::holds_alternative<NotInSpan>(pi_class(P(F4, "y"), only_x)));
}

TEST(Solutions, DimensionBoundExamples) {
  auto R = testing::ring_xy(2);
  EXPECT_EQ(pi_dim_bound(closed(R, {D(R, {"x", "y"})})), 1u);
  EXPECT_EQ(pi_dim_bound(closed(R, {D(R, {"x", "0"}), D(R, {"0", "y"})})), 2u);
  EXPECT_EQ(pi_dim_bound(closed(R, {D(R, {"x^2", "1"})})), 3u);
  EXPECT_EQ(pi_dim_sieve_bound(closed(R, {D(R, {"x^2", "1"})})), std::optional<std::size_t>(1));
  try {
    pi_dim_bound(Foliation::from_generators(R, {D(R, {"x", "y"})}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotClosed);
  }
}

struct Instance {
  const char* name;
  RingPtr ring;
  std::vector<Derivation> seed;
};

std::vector<Instance> suite() {
  auto R2 = testing::ring_xy(2);
  auto R3 = testing::ring_xy(3);
  auto F4 = testing::f4_xy();
  return {
      {"t1", R2, {D(R2, {"x", "y"})}},
      {"tg", F4, {D(F4, {"x", "g*y"})}},
      {"nil", R2, {D(R2, {"x^2", "1"})}},
      {"swap", R2, {D(R2, {"y", "x"})}},
      {"p3", R3, {D(R3, {"x", "2*y"})}},
  };
}

TEST(Solutions, LMapIsAdditiveOnSolutionPairs) {
  std::mt19937 rng(52);
  int pairs = 0;
  for (const auto& inst : suite()) {
    const Foliation f = foliation_closure(inst.ring, inst.seed);
    const auto sols = enumerate_solutions(f, 2);
    std::uniform_int_distribution<std::size_t> pick(0, sols.size() - 1);
    for (int k = 0; k < 20; ++k, ++pairs) {
      const Poly& a = sols[pick(rng)];
      const Poly& b = sols[pick(rng)];
      const LVector la = l_map(a, f), lb = l_map(b, f), lab = l_map(a * b, f);
      for (std::size_t i = 0; i < la.size(); ++i) EXPECT_EQ(lab[i], la[i] + lb[i]);
    }
  }
  EXPECT_GE(pairs, 100);
}

TEST(Solutions, InvariantsOnSuite) {
  for (const auto& inst : suite()) {
    SCOPED_TRACE(inst.name);
    const Foliation f = foliation_closure(inst.ring, inst.seed);
    const auto sols = enumerate_solutions(f, 3);
    const PiBasis basis = pi_basis(f, sols);
    for (std::size_t i = 0; i < basis.size(); ++i) {
      for (std::size_t j = i + 1; j < basis.size(); ++j) EXPECT_NE(basis.lvecs()[i], basis.lvecs()[j]);
    }
    for (const Poly& s : sols) {
      const LVector l = l_map(s, f);
      for (std::size_t i = 0; i < l.size(); ++i) {
        if (!l[i].is_zero()) EXPECT_LE(*l[i].degree(), *deriv_degree(f.gens()[i]));
      }
      EXPECT_TRUE(std::holds_alternative<PrimeCoords>(pi_class(s, basis))) << s.to_string();
    }
    const auto ranks = l_image_ranks(f, sols);
    EXPECT_EQ(ranks.prime_rank, ranks.field_rank);
    EXPECT_LE(basis.size(), pi_dim_bound(f));
    // Solutions of the seed and of the closure generators coincide.
    EXPECT_EQ(enumerate_solutions(inst.ring, inst.seed, 3), sols);
  }
}

}  // namespace
}  // namespace pfol
