#include "pfol/assoc.hpp"

#include "pfol/error.hpp"

namespace pfol {

Poly t_apply(const Derivation& d, const Poly& g, const Poly& f, unsigned times) {
  require_same_ring(g.ring(), f.ring(), "t_apply");
  Poly cur = f;
  for (unsigned k = 0; k < times; ++k) {
    if (cur.is_zero()) break;
    Poly next = deriv_apply(d, cur);
    next += g * cur;
    cur = std::move(next);
  }
  return cur;
}

Poly t_apply(const TOperator& op, const Poly& f, unsigned times) { return t_apply(op.d, op.g, f, times); }

namespace {

// G_i = sum_a t_a L_i(f_a) for every generator i.
std::vector<Poly> linear_forms(const PiBasis& basis, const RingPtr& aux_ring, std::size_t n) {
  std::vector<Poly> out(n, Poly(aux_ring));
  const std::size_t base_vars = aux_ring->nvars();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t a = 0; a < basis.size(); ++a) {
      out[i] += Poly::variable(aux_ring, base_vars + a) * basis.lvecs()[a][i].lift(aux_ring);
    }
  }
  return out;
}

void check_shapes(const Foliation& fol, const PiBasis& basis, const std::vector<std::vector<Poly>>& a) {
  const std::size_t n = fol.gens().size();
  if (a.size() != n) throw Error(ErrorCode::kLengthMismatch, "p-power coefficient matrix has wrong row count");
  for (const auto& row : a) {
    if (row.size() != n) throw Error(ErrorCode::kLengthMismatch, "p-power coefficient matrix has wrong column count");
  }
  for (const LVector& l : basis.lvecs()) {
    if (l.size() != n) throw Error(ErrorCode::kLengthMismatch, "basis was built for another generator set");
  }
}

}  // namespace

AssociatedSet associated_polynomials(const Foliation& fol, const PiBasis& basis) {
  return associated_polynomials(fol, basis, fol.p_coeffs());
}

AssociatedSet associated_polynomials(const Foliation& fol, const PiBasis& basis,
                                     const std::vector<std::vector<Poly>>& p_coeffs) {
  if (!fol.closed()) throw Error(ErrorCode::kNotClosed, "associated polynomials need a closed foliation");
  check_shapes(fol, basis, p_coeffs);
  const std::size_t n = fol.gens().size();
  const RingPtr aux_ring = fol.ring_ptr()->with_aux(basis.size());
  const unsigned p = static_cast<unsigned>(aux_ring->field().p());
  const auto forms = linear_forms(basis, aux_ring, n);

  AssociatedSet out{aux_ring, {}};
  for (std::size_t i = 0; i < n; ++i) {
    Poly pi = t_apply(fol.gens()[i], forms[i], forms[i], p - 1);
    for (std::size_t j = 0; j < n; ++j) pi -= p_coeffs[i][j].lift(aux_ring) * forms[j];
    out.polys.push_back(std::move(pi));
  }
  return out;
}

std::vector<Poly> associated_closed_form(const Foliation& fol, const PiBasis& basis, const RingPtr& aux_ring) {
  const std::size_t n = fol.gens().size();
  const unsigned p = static_cast<unsigned>(aux_ring->field().p());
  std::vector<Poly> out(n, Poly(aux_ring));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t a = 0; a < basis.size(); ++a) {
      const Poly t = Poly::variable(aux_ring, aux_ring->nvars() + a);
      out[i] += basis.lvecs()[a][i].lift(aux_ring).pow(p) * (t.pow(p) - t);
    }
  }
  return out;
}

namespace {

std::optional<std::vector<Poly>> peel(const Poly& p, std::size_t k, unsigned deg_p) {
  if (k == 0) {
    if (!p.is_zero()) return std::nullopt;
    return std::vector<Poly>{};
  }
  const RingPtr& ring = p.ring_ptr();
  const std::size_t var = ring->nvars() + k - 1;
  const auto coeffs = p.coefficients_in(var);
  const Poly a = coeffs.size() > deg_p ? coeffs[deg_p] : Poly(ring);
  const Poly t = Poly::variable(ring, var);
  const Poly q = p - a * (t.pow(deg_p) - t);
  const auto qc = q.coefficients_in(var);
  for (std::size_t i = 1; i < qc.size(); ++i) {
    if (!qc[i].is_zero()) return std::nullopt;
  }
  auto rest = peel(qc.empty() ? Poly(ring) : qc[0], k - 1, deg_p);
  if (!rest) return std::nullopt;
  rest->push_back(a);
  return rest;
}

}  // namespace

Decomposition decompose_vanishing(const Poly& p) {
  const unsigned deg_p = static_cast<unsigned>(p.field().p());
  if (p.aux_degree() > static_cast<int>(deg_p)) {
    throw Error(ErrorCode::kDegreeTooHigh, "t-degree exceeds p");
  }
  auto coeffs = peel(p, p.ring().naux(), deg_p);
  if (!coeffs) return NotVanishing{};
  const RingPtr base = p.ring().base();
  std::vector<Poly> out;
  out.reserve(coeffs->size());
  for (const Poly& c : *coeffs) out.push_back(c.restrict_to(base));
  return out;
}

std::optional<bool> vanishes_on_prime_points(const Poly& p, std::uint64_t cap) {
  const Field& F = p.field();
  const std::size_t s = p.ring().naux();
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < s; ++i) {
    count *= static_cast<std::uint64_t>(F.p());
    if (count > cap) return std::nullopt;
  }
  std::vector<Fq> point(s);
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    std::uint64_t rest = idx;
    for (std::size_t i = 0; i < s; ++i) {
      point[i] = F.from_int(static_cast<long long>(rest % static_cast<std::uint64_t>(F.p())));
      rest /= static_cast<std::uint64_t>(F.p());
    }
    if (!eval_aux(p, point).is_zero()) return false;
  }
  return true;
}

StructureReport verify_structure(const Foliation& fol, const PiBasis& basis) {
  return verify_structure(fol, basis, fol.p_coeffs());
}

StructureReport verify_structure(const Foliation& fol, const PiBasis& basis,
                                 const std::vector<std::vector<Poly>>& p_coeffs) {
  StructureReport report;
  const AssociatedSet assoc = associated_polynomials(fol, basis, p_coeffs);
  const auto closed = associated_closed_form(fol, basis, assoc.ring);
  const std::size_t n = fol.gens().size();
  const unsigned p = static_cast<unsigned>(fol.ring_ptr()->field().p());

  for (std::size_t i = 0; i < n; ++i) {
    const Poly& pi = assoc.polys[i];
    if (!(pi == closed[i])) {
      report.closed_form = false;
      report.failures.push_back("P_" + std::to_string(i + 1) + " = " + pi.to_string() + " differs from closed form " +
                                closed[i].to_string());
    }
    auto exhaustive = vanishes_on_prime_points(pi);
    bool vanish = false;
    if (exhaustive) {
      vanish = *exhaustive;
    } else {
      report.vanishing_exhaustive = false;
      vanish = pi.aux_degree() <= static_cast<int>(p) &&
               std::holds_alternative<std::vector<Poly>>(decompose_vanishing(pi));
    }
    if (!vanish) {
      report.vanishing = false;
      report.failures.push_back("P_" + std::to_string(i + 1) + " does not vanish on F_p^s");
    }
  }

  for (std::size_t a = 0; a < basis.size(); ++a) {
    const Poly& f = basis.reps()[a];
    const LVector& l = basis.lvecs()[a];
    for (std::size_t i = 0; i < n; ++i) {
      const Poly lhs = t_apply(fol.gens()[i], l[i], l[i], p - 1);
      Poly rhs(fol.ring_ptr());
      for (std::size_t j = 0; j < n; ++j) rhs += p_coeffs[i][j] * l[j];
      if (!(lhs == rhs)) {
        report.l_relation = false;
        report.failures.push_back("L-relation fails for " + f.to_string() + " at generator " + std::to_string(i + 1));
      }
      if (!(deriv_apply_n(fol.gens()[i], f, p) == lhs * f)) {
        report.power_identity = false;
        report.failures.push_back("D^p(f) identity fails for " + f.to_string() + " at generator " +
                                  std::to_string(i + 1));
      }
    }
  }
  return report;
}

}  // namespace pfol
