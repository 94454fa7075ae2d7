#include "pfol/deriv.hpp"

#include <algorithm>

#include "pfol/error.hpp"

namespace pfol {

Derivation::Derivation(std::vector<Poly> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw Error(ErrorCode::kInvalidArgument, "derivation needs one coefficient per variable");
  ring_ = coeffs_.front().ring_ptr();
  if (ring_->naux() != 0) throw Error(ErrorCode::kAuxVarsPresent, "derivation coefficients must lie in A");
  if (coeffs_.size() != ring_->nvars()) {
    throw Error(ErrorCode::kLengthMismatch, "derivation needs " + std::to_string(ring_->nvars()) + " coefficients");
  }
  for (const Poly& c : coeffs_) require_same_ring(*ring_, c.ring(), "derivation coefficients");
}

Derivation Derivation::zero(const RingPtr& ring) {
  return Derivation(std::vector<Poly>(ring->nvars(), Poly(ring)));
}

Derivation Derivation::partial(const RingPtr& ring, std::size_t var) {
  std::vector<Poly> c(ring->nvars(), Poly(ring));
  c.at(var) = Poly::one(ring);
  return Derivation(std::move(c));
}

bool Derivation::is_zero() const noexcept {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Poly& p) { return p.is_zero(); });
}

Derivation Derivation::operator+(const Derivation& o) const {
  require_same_ring(*ring_, *o.ring_, "derivation add");
  std::vector<Poly> c = coeffs_;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += o.coeffs_[i];
  return Derivation(std::move(c));
}

Derivation Derivation::operator-(const Derivation& o) const {
  require_same_ring(*ring_, *o.ring_, "derivation sub");
  std::vector<Poly> c = coeffs_;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] -= o.coeffs_[i];
  return Derivation(std::move(c));
}

Derivation Derivation::scaled(const Poly& a) const {
  std::vector<Poly> c;
  c.reserve(coeffs_.size());
  for (const Poly& p : coeffs_) c.push_back(a * p);
  return Derivation(std::move(c));
}

std::string Derivation::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Poly& c = coeffs_[i];
    if (c.is_zero()) continue;
    if (!out.empty()) out += " + ";
    if (c.size() == 1) {
      out += c.to_string();
    } else {
      out += "(" + c.to_string() + ")";
    }
    out += "*d" + ring_->var_name(i);
  }
  return out.empty() ? "0" : out;
}

Poly deriv_apply(const Derivation& d, const Poly& f) {
  if (!d.ring().same_base(f.ring())) throw Error(ErrorCode::kRingMismatch, "deriv_apply");
  const bool lifted = f.ring().naux() != 0;
  Poly out(f.ring_ptr());
  for (std::size_t i = 0; i < d.ring().nvars(); ++i) {
    const Poly& c = d.coeff(i);
    if (c.is_zero()) continue;
    const Poly df = partial(f, i);
    if (df.is_zero()) continue;
    out += (lifted ? c.lift(f.ring_ptr()) : c) * df;
  }
  return out;
}

Poly deriv_apply_n(const Derivation& d, const Poly& f, unsigned times) {
  Poly cur = f;
  for (unsigned k = 0; k < times && !cur.is_zero(); ++k) cur = deriv_apply(d, cur);
  return cur;
}

Derivation deriv_bracket(const Derivation& d1, const Derivation& d2) {
  require_same_ring(d1.ring(), d2.ring(), "deriv_bracket");
  std::vector<Poly> c;
  c.reserve(d1.ring().nvars());
  for (std::size_t i = 0; i < d1.ring().nvars(); ++i) {
    c.push_back(deriv_apply(d1, d2.coeff(i)) - deriv_apply(d2, d1.coeff(i)));
  }
  return Derivation(std::move(c));
}

Derivation deriv_p_power(const Derivation& d) {
  const unsigned p = static_cast<unsigned>(d.ring().field().p());
  std::vector<Poly> c;
  c.reserve(d.ring().nvars());
  // D^p(x_i) = D^{p-1}(D(x_i)).
  for (std::size_t i = 0; i < d.ring().nvars(); ++i) c.push_back(deriv_apply_n(d, d.coeff(i), p - 1));
  return Derivation(std::move(c));
}

Degree deriv_degree(const Derivation& d) {
  Degree best;
  for (std::size_t i = 0; i < d.ring().nvars(); ++i) {
    const Degree di = d.coeff(i).degree();
    if (!di) continue;
    const int v = *di - d.ring().weights()[i];
    if (!best || v > *best) best = v;
  }
  return best;
}

}  // namespace pfol
