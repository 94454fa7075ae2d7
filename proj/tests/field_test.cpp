#include <gtest/gtest.h>

#include <cmath>
#include <tuple>

#include "support.hpp"

namespace pfol {
namespace {

// Coefficient-vector arithmetic in F_p[g]/(modulus), independent of the
// table-driven field.
struct NaiveField {
  int p;
  std::vector<int> modulus;  // low to high, monic

  int r() const { return static_cast<int>(modulus.size()) - 1; }

  std::vector<int> mul(const std::vector<int>& a, const std::vector<int>& b) const {
    std::vector<int> prod(2 * r(), 0);
    for (int i = 0; i < r(); ++i) {
      for (int j = 0; j < r(); ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    }
    for (int d = 2 * r() - 1; d >= r(); --d) {
      const int c = prod[d];
      if (c == 0) continue;
      for (int k = 0; k <= r(); ++k) prod[d - r() + k] = ((prod[d - r() + k] - c * modulus[k]) % p + p) % p;
    }
    prod.resize(r());
    return prod;
  }
};

std::vector<FieldPtr> all_default_fields() {
  std::vector<FieldPtr> out;
  for (int p : {2, 3, 5, 7}) {
    for (int r = 1; r <= 4; ++r) out.push_back(Field::make(p, r));
  }
  return out;
}

TEST(Field, PrimeFieldShorthand) {
  auto F = Field::make(2, 1, {1});
  EXPECT_EQ(F->q(), 2);
  EXPECT_EQ(F->add(F->one(), F->one()), F->zero());
}

TEST(Field, F4FromIrreducibleModulus) {
  auto F = Field::make(2, 2, {1, 1, 1});
  EXPECT_EQ(F->q(), 4);
  const Fq g = F->gen();
  EXPECT_EQ(F->mul(g, g), F->add(g, F->one()));
}

TEST(Field, RejectsReducibleModulus) {
  try {
    Field::make(2, 2, {1, 0, 1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kReducibleModulus);
  }
}

TEST(Field, RejectsNonPrimeAndOversize) {
  for (auto [p, r, code] : {std::tuple{4, 1, ErrorCode::kNonPrime}, std::tuple{1, 1, ErrorCode::kNonPrime},
                            std::tuple{11, 1, ErrorCode::kFieldTooLarge}, std::tuple{2, 5, ErrorCode::kFieldTooLarge}}) {
    try {
      Field::make(p, r);
      FAIL() << p << "," << r;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), code) << p << "," << r;
    }
  }
}

TEST(Field, InverseExamples) {
  auto F = Field::make(2, 2, {1, 1, 1});
  EXPECT_EQ(F->inv(F->one()), F->one());
  EXPECT_EQ(F->inv(F->gen()), F->add(F->gen(), F->one()));
  try {
    F->inv(F->zero());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDivisionByZero);
  }
}

TEST(Field, FrobeniusAndRootExamples) {
  auto F = Field::make(2, 2, {1, 1, 1});
  const Fq g1 = F->add(F->gen(), F->one());
  EXPECT_EQ(F->frobenius(F->one()), F->one());
  EXPECT_EQ(F->frobenius(F->zero()), F->zero());
  EXPECT_EQ(F->frobenius(F->gen()), g1);
  EXPECT_EQ(F->pth_root(F->zero()), F->zero());
  EXPECT_EQ(F->pth_root(F->gen()), g1);
  auto F2 = Field::make(2, 1, {1});
  EXPECT_EQ(F2->pth_root(F2->one()), F2->one());
}

// Every default modulus is accepted, so the irreducibility check signs off on the table.
TEST(Field, DefaultModuliAreIrreducible) {
  for (const auto& F : all_default_fields()) {
    EXPECT_EQ(F->modulus().size(), static_cast<std::size_t>(F->r() + 1));
    EXPECT_EQ(F->modulus().back(), 1);
  }
}

// Oracle: a monic modulus is reducible iff it is the product of two monic
// factors of positive degree, found here by multiplying out every pair.
TEST(Field, ModulusCheckAgreesWithProductSearch) {
  for (int p : {2, 3}) {
    for (int r = 2; r <= 3; ++r) {
      const int count = static_cast<int>(std::pow(p, r));
      for (int code = 0; code < count; ++code) {
        std::vector<int> mod(r + 1);
        int rest = code;
        for (int k = 0; k < r; ++k) {
          mod[k] = rest % p;
          rest /= p;
        }
        mod[r] = 1;
        bool reducible = false;
        for (int d = 1; d < r && !reducible; ++d) {
          const int na = static_cast<int>(std::pow(p, d));
          const int nb = static_cast<int>(std::pow(p, r - d));
          for (int ia = 0; ia < na && !reducible; ++ia) {
            for (int ib = 0; ib < nb && !reducible; ++ib) {
              std::vector<int> a(d + 1), b(r - d + 1), prod(r + 1, 0);
              int x = ia;
              for (int k = 0; k < d; ++k, x /= p) a[k] = x % p;
              a[d] = 1;
              x = ib;
              for (int k = 0; k < r - d; ++k, x /= p) b[k] = x % p;
              b[r - d] = 1;
              for (int i = 0; i <= d; ++i) {
                for (int j = 0; j <= r - d; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
              }
              reducible = prod == mod;
            }
          }
        }
        bool accepted = true;
        try {
          Field::make(p, r, mod);
        } catch (const Error& e) {
          EXPECT_EQ(e.code(), ErrorCode::kReducibleModulus);
          accepted = false;
        }
        EXPECT_EQ(accepted, !reducible) << "p=" << p << " code=" << code;
      }
    }
  }
}

TEST(Field, ArithmeticMatchesNaiveModel) {
  for (const auto& F : all_default_fields()) {
    if (F->q() > 49) continue;
    NaiveField naive{F->p(), F->modulus()};
    for (int i = 0; i < F->q(); ++i) {
      for (int j = 0; j < F->q(); ++j) {
        const Fq a = F->element(i), b = F->element(j);
        const auto ca = F->coeffs(a), cb = F->coeffs(b);
        std::vector<int> sum(F->r());
        for (int k = 0; k < F->r(); ++k) sum[k] = (ca[k] + cb[k]) % F->p();
        ASSERT_EQ(F->coeffs(F->add(a, b)), sum);
        ASSERT_EQ(F->coeffs(F->mul(a, b)), naive.mul(ca, cb));
      }
    }
  }
}

TEST(Field, InverseIsExhaustivelyCorrect) {
  for (const auto& F : all_default_fields()) {
    if (F->q() > 49) continue;
    for (int i = 1; i < F->q(); ++i) {
      const Fq a = F->element(i);
      EXPECT_EQ(F->mul(a, F->inv(a)), F->one());
      // Search oracle: the unique b with ab = 1.
      int found = 0;
      for (int j = 1; j < F->q(); ++j) found += F->mul(a, F->element(j)) == F->one();
      EXPECT_EQ(found, 1);
    }
  }
}

TEST(Field, FrobeniusIsAnAutomorphism) {
  for (const auto& F : all_default_fields()) {
    if (F->q() > 49) continue;
    int fixed = 0;
    for (int i = 0; i < F->q(); ++i) {
      const Fq a = F->element(i);
      EXPECT_EQ(F->frobenius(a), F->pow(a, static_cast<unsigned>(F->p())));
      EXPECT_EQ(F->pth_root(F->frobenius(a)), a);
      EXPECT_EQ(F->frobenius(F->pth_root(a)), a);
      fixed += F->in_prime_field(a);
      for (int j = 0; j < F->q(); ++j) {
        const Fq b = F->element(j);
        EXPECT_EQ(F->frobenius(F->add(a, b)), F->add(F->frobenius(a), F->frobenius(b)));
        EXPECT_EQ(F->frobenius(F->mul(a, b)), F->mul(F->frobenius(a), F->frobenius(b)));
      }
    }
    EXPECT_EQ(fixed, F->p());
  }
}

TEST(Field, PthRootMatchesSearch) {
  for (const auto& F : all_default_fields()) {
    if (F->q() > 49) continue;
    for (int i = 0; i < F->q(); ++i) {
      const Fq a = F->element(i);
      int matches = 0;
      for (int j = 0; j < F->q(); ++j) {
        if (F->frobenius(F->element(j)) == a) {
          ++matches;
          EXPECT_EQ(F->pth_root(a), F->element(j));
        }
      }
      EXPECT_EQ(matches, 1);
    }
  }
}

TEST(Field, PrimeValueAndRendering) {
  auto F = Field::make(3, 2);
  EXPECT_EQ(F->prime_value(F->from_int(-1)), 2);
  EXPECT_EQ(F->to_string(F->from_int(2)), "2");
  auto F4 = Field::make(2, 2, {1, 1, 1});
  EXPECT_EQ(F4->to_string(F4->add(F4->gen(), F4->one())), "g + 1");
  EXPECT_EQ(F4->to_string(F4->gen()), "g");
}

}  // namespace
}  // namespace pfol
