#pragma once

#include <string>
#include <variant>
#include <vector>

#include "pfol/solutions.hpp"

namespace pfol {

// f -> D(f) + g f on A[t_1..t_s], with D(t_a) = 0.
struct TOperator {
  Derivation d;
  Poly g;
};

Poly t_apply(const TOperator& op, const Poly& f, unsigned times);
Poly t_apply(const Derivation& d, const Poly& g, const Poly& f, unsigned times);

// P_i = (T_{i,G_i})^{p-1}(G_i) - sum_j a_{ij} G_j with G_i = sum_a t_a L_i(f_a),
// living in A[t_1..t_s] for a basis of size s.
struct AssociatedSet {
  RingPtr ring;  // A[t_1..t_s]
  std::vector<Poly> polys;
};

AssociatedSet associated_polynomials(const Foliation& fol, const PiBasis& basis);
// Same with an explicit coefficient matrix in place of fol.p_coeffs().
AssociatedSet associated_polynomials(const Foliation& fol, const PiBasis& basis,
                                     const std::vector<std::vector<Poly>>& p_coeffs);

// sum_a L_i(f_a)^p (t_a^p - t_a), the form every P_i must take.
std::vector<Poly> associated_closed_form(const Foliation& fol, const PiBasis& basis, const RingPtr& aux_ring);

struct NotVanishing {};
using Decomposition = std::variant<std::vector<Poly>, NotVanishing>;

// Writes P in A[t_1..t_s] of t-degree <= p as sum_a a_a (t_a^p - t_a) by
// peeling the t_s^p coefficient and recursing on the remaining variables.
// The a_a are returned in the base ring A. Throws DegreeTooHigh.
Decomposition decompose_vanishing(const Poly& p);

// Exhaustive check over F_p^s; nullopt when p^s exceeds the cap.
std::optional<bool> vanishes_on_prime_points(const Poly& p, std::uint64_t cap = 100000);

struct StructureReport {
  bool closed_form = true;       // P_i equals the closed form exactly
  bool vanishing = true;         // P_i vanishes on F_p^s
  bool vanishing_exhaustive = true;  // (b) was decided by exhaustion, not the decomposition
  bool l_relation = true;        // (T_{i,L_i(f)})^{p-1}(L_i(f)) = sum_j a_ij L_j(f)
  bool power_identity = true;    // D_i^p(f) = (T_{i,L_i(f)})^{p-1}(L_i(f)) f
  std::vector<std::string> failures;

  bool passed() const noexcept { return closed_form && vanishing && l_relation && power_identity; }
};

StructureReport verify_structure(const Foliation& fol, const PiBasis& basis);
StructureReport verify_structure(const Foliation& fol, const PiBasis& basis,
                                 const std::vector<std::vector<Poly>>& p_coeffs);

}  // namespace pfol
