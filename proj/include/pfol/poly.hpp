#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pfol/field.hpp"

namespace pfol {

// Degree value where std::nullopt stands for -infinity (the degree of 0).
// std::optional's ordering already places nullopt below every integer.
using Degree = std::optional<int>;

std::string degree_to_string(Degree d);

inline constexpr std::size_t kMaxVars = 16;

struct Monomial {
  std::array<std::uint16_t, kMaxVars> e{};

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

bool divides(const Monomial& a, const Monomial& b, std::size_t nvars) noexcept;
Monomial mono_mul(const Monomial& a, const Monomial& b, std::size_t nvars) noexcept;
Monomial mono_div(const Monomial& a, const Monomial& b, std::size_t nvars) noexcept;  // requires b | a
Monomial mono_lcm(const Monomial& a, const Monomial& b, std::size_t nvars) noexcept;
bool coprime(const Monomial& a, const Monomial& b, std::size_t nvars) noexcept;

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

// A = F_q[x_1..x_n] optionally extended by auxiliary variables t_1..t_s.
// Ring variables come first in every exponent vector, auxiliaries after.
class Ring {
 public:
  static RingPtr make(FieldPtr field, std::vector<std::string> vars, std::vector<int> weights = {},
                      std::vector<std::string> aux = {});

  // Same field, variables and weights with s auxiliaries named t1..ts.
  RingPtr with_aux(std::size_t s) const;
  RingPtr base() const;

  const Field& field() const noexcept { return *field_; }
  const FieldPtr& field_ptr() const noexcept { return field_; }
  std::size_t nvars() const noexcept { return vars_.size(); }
  std::size_t naux() const noexcept { return aux_.size(); }
  std::size_t total_vars() const noexcept { return vars_.size() + aux_.size(); }
  const std::vector<std::string>& vars() const noexcept { return vars_; }
  const std::vector<std::string>& aux() const noexcept { return aux_; }
  const std::vector<int>& weights() const noexcept { return weights_; }
  std::string var_name(std::size_t i) const;
  std::optional<std::size_t> index_of(std::string_view name) const;

  // Weighted degree in ring variables only.
  int degree(const Monomial& m) const noexcept;
  // Degree used for the term order: weighted ring degree plus aux degree.
  int order_degree(const Monomial& m) const noexcept;
  int aux_degree(const Monomial& m) const noexcept;
  // Graded reverse lexicographic comparison: <0, 0, >0.
  int compare(const Monomial& a, const Monomial& b) const noexcept;
  bool greater(const Monomial& a, const Monomial& b) const noexcept { return compare(a, b) > 0; }

  bool same_base(const Ring& o) const noexcept;
  bool operator==(const Ring& o) const noexcept { return same_base(o) && aux_ == o.aux_; }

 private:
  Ring(FieldPtr field, std::vector<std::string> vars, std::vector<int> weights, std::vector<std::string> aux)
      : field_(std::move(field)), vars_(std::move(vars)), weights_(std::move(weights)), aux_(std::move(aux)) {}

  FieldPtr field_;
  std::vector<std::string> vars_;
  std::vector<int> weights_;
  std::vector<std::string> aux_;
};

void require_same_ring(const Ring& a, const Ring& b, const char* where);

struct Term {
  Monomial m;
  Fq c;
};

// Sparse polynomial; terms are kept in strictly descending grevlex order with
// no zero coefficients, so equality is structural.
class Poly {
 public:
  explicit Poly(RingPtr ring) : ring_(std::move(ring)) {}

  static Poly constant(RingPtr ring, Fq c);
  static Poly one(RingPtr ring) { return constant(ring, Fq{1}); }
  static Poly variable(RingPtr ring, std::size_t index);
  static Poly term(RingPtr ring, const Monomial& m, Fq c);
  // Terms must already be distinct; they are sorted and zeros dropped.
  static Poly from_terms(RingPtr ring, std::vector<Term> terms);

  const Ring& ring() const noexcept { return *ring_; }
  const RingPtr& ring_ptr() const noexcept { return ring_; }
  const Field& field() const noexcept { return ring_->field(); }
  std::span<const Term> terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  bool has_aux() const noexcept;
  const Monomial& leading_monomial() const { return terms_.front().m; }
  Fq leading_coeff() const { return terms_.front().c; }
  Fq coeff(const Monomial& m) const;

  Degree degree() const noexcept;
  int aux_degree() const noexcept;  // -1 for the zero polynomial
  int degree_in(std::size_t var) const noexcept;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly scaled(Fq c) const;
  Poly mul_term(const Monomial& m, Fq c) const;
  Poly pow(unsigned e) const;
  Poly monic() const;
  // this += c*m*o, the inner loop of every reduction.
  void add_mul_term(const Poly& o, const Monomial& m, Fq c);

  // Reinterprets the polynomial in a ring with the same ring variables and
  // at least as many auxiliaries (lift) or without the auxiliaries it does
  // not use (restrict).
  Poly lift(const RingPtr& target) const;
  Poly restrict_to(const RingPtr& target) const;

  // Coefficients with respect to one variable: result[k] is the coefficient
  // of var^k, with var removed.
  std::vector<Poly> coefficients_in(std::size_t var) const;

  std::string to_string() const;

  friend bool operator==(const Poly& a, const Poly& b);

 private:
  RingPtr ring_;
  std::vector<Term> terms_;
};

std::optional<Poly> divexact(const Poly& f, const Poly& g);
Poly gcd(const Poly& f, const Poly& g);
Poly partial(const Poly& f, std::size_t var);
Poly eval_aux(const Poly& f, std::span<const Fq> point);
Poly substitute(const Poly& f, std::size_t var, const Poly& value);

// All ring monomials of weighted degree <= d: ascending degree, and within a
// degree descending grevlex. l(d) is its length; l(-inf) = 0.
std::vector<Monomial> monomial_basis_leq(const Ring& ring, int d);
std::size_t monomial_count_leq(const Ring& ring, Degree d);

Poly parse_poly(const RingPtr& ring, std::string_view text);

}  // namespace pfol
