#pragma once

#include <string>
#include <vector>

#include "pfol/poly.hpp"

namespace pfol {

// k-derivation sum_i c_i d/dx_i on A, stored by its images c_i = D(x_i).
class Derivation {
 public:
  // coeffs must live in an aux-free ring and have one entry per variable.
  explicit Derivation(std::vector<Poly> coeffs);
  static Derivation zero(const RingPtr& ring);
  // d/dx_i
  static Derivation partial(const RingPtr& ring, std::size_t var);

  const RingPtr& ring_ptr() const noexcept { return ring_; }
  const Ring& ring() const noexcept { return *ring_; }
  const std::vector<Poly>& coeffs() const noexcept { return coeffs_; }
  const Poly& coeff(std::size_t i) const { return coeffs_.at(i); }
  bool is_zero() const noexcept;

  Derivation operator+(const Derivation& o) const;
  Derivation operator-(const Derivation& o) const;
  Derivation scaled(const Poly& a) const;

  // "x^2*dx + 1*dy"
  std::string to_string() const;

  friend bool operator==(const Derivation& a, const Derivation& b) { return a.coeffs_ == b.coeffs_; }

 private:
  RingPtr ring_;
  std::vector<Poly> coeffs_;
};

// D(f). f may live in A[t_1..t_s]; the t's are constants for D.
Poly deriv_apply(const Derivation& d, const Poly& f);
// D applied `times` times.
Poly deriv_apply_n(const Derivation& d, const Poly& f, unsigned times);
Derivation deriv_bracket(const Derivation& d1, const Derivation& d2);
Derivation deriv_p_power(const Derivation& d);
// max_i(deg D(x_i) - w_i); -inf for D = 0.
Degree deriv_degree(const Derivation& d);

}  // namespace pfol
