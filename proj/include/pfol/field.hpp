#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace pfol {

// Element of F_{p^r}. The value packs the coefficients (c_0, ..., c_{r-1})
// of c_0 + c_1 g + ... + c_{r-1} g^{r-1} as base-p digits, so the encoding
// is canonical and 0 / 1 are the additive / multiplicative identities.
struct Fq {
  std::uint16_t v = 0;

  constexpr bool is_zero() const noexcept { return v == 0; }
  friend constexpr bool operator==(Fq a, Fq b) noexcept { return a.v == b.v; }
  friend constexpr auto operator<=>(Fq a, Fq b) noexcept { return a.v <=> b.v; }
};

class Field;
using FieldPtr = std::shared_ptr<const Field>;

// Finite field F_q, q = p^r, given as F_p[g] / (modulus). Immutable.
//
// Construction verifies that p is prime and the modulus is irreducible by
// exhaustive trial division, which is why the sizes are capped at p <= 7
// and r <= 4.
class Field {
 public:
  static constexpr int kMaxPrime = 7;
  static constexpr int kMaxDegree = 4;

  // modulus lists c_0, ..., c_r (low to high) of a monic degree-r polynomial.
  // For r = 1 the one-element list {1} is accepted as shorthand for "g".
  static FieldPtr make(int p, int r, std::vector<int> modulus);
  static FieldPtr make(int p, int r);  // uses default_modulus(p, r)
  static std::vector<int> default_modulus(int p, int r);

  int p() const noexcept { return p_; }
  int r() const noexcept { return r_; }
  int q() const noexcept { return q_; }
  const std::vector<int>& modulus() const noexcept { return modulus_; }

  Fq zero() const noexcept { return Fq{0}; }
  Fq one() const noexcept { return Fq{1}; }
  Fq gen() const noexcept { return gen_; }
  Fq from_int(long long n) const noexcept;
  Fq from_coeffs(std::span<const int> coeffs) const;
  Fq element(int index) const noexcept { return Fq{static_cast<std::uint16_t>(index)}; }
  std::vector<int> coeffs(Fq a) const;

  Fq add(Fq a, Fq b) const noexcept;
  Fq sub(Fq a, Fq b) const noexcept;
  Fq neg(Fq a) const noexcept;
  Fq mul(Fq a, Fq b) const noexcept;
  Fq div(Fq a, Fq b) const;
  Fq inv(Fq a) const;
  Fq pow(Fq a, unsigned long long e) const noexcept;
  Fq frobenius(Fq a) const noexcept;
  Fq pth_root(Fq a) const noexcept;
  bool in_prime_field(Fq a) const noexcept { return frobenius(a) == a; }
  // Residue of an element of the prime subfield; requires in_prime_field(a).
  int prime_value(Fq a) const;

  // "g + 1", "2*g^2 + g", ... ; plain integers when r = 1.
  std::string to_string(Fq a) const;
  bool is_single_term(Fq a) const;

  bool operator==(const Field& o) const noexcept {
    return p_ == o.p_ && r_ == o.r_ && modulus_ == o.modulus_;
  }

 private:
  Field(int p, int r, std::vector<int> modulus);

  int p_;
  int r_;
  int q_;
  std::vector<int> modulus_;
  Fq gen_;
  std::vector<std::uint8_t> digits_;  // q * r base-p digits
  std::vector<std::uint16_t> neg_;
  std::vector<std::uint16_t> exp_;    // exp_[i] = w^i for a primitive w, length 2(q-1)
  std::vector<std::uint32_t> log_;
  std::vector<std::uint16_t> frob_;
  std::vector<std::uint16_t> root_;
};

}  // namespace pfol
