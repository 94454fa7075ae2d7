#pragma once

#include <optional>
#include <vector>

#include "pfol/solutions.hpp"

namespace pfol {

struct SandwichOptions {
  int max_deg = 3;
  EnumerateOptions enumerate;
  ClosureOptions closure;
};

// A^p ⊆ B ⊆ A with B generated by b_gens over A^p, the foliation F_B that
// annihilates B, and a Pi-basis for F_B from enumeration up to max_deg.
class SandwichProblem {
 public:
  static SandwichProblem make(const RingPtr& ring, std::vector<Poly> b_gens, const SandwichOptions& options = {});

  const RingPtr& ring_ptr() const noexcept { return foliation_.ring_ptr(); }
  const std::vector<Poly>& b_gens() const noexcept { return b_gens_; }
  const Foliation& foliation() const noexcept { return foliation_; }
  const PiBasis& pi() const noexcept { return pi_; }
  const std::vector<Poly>& solutions() const noexcept { return solutions_; }

 private:
  SandwichProblem(std::vector<Poly> b_gens, Foliation fol, PiBasis pi, std::vector<Poly> solutions)
      : b_gens_(std::move(b_gens)), foliation_(std::move(fol)), pi_(std::move(pi)), solutions_(std::move(solutions)) {}

  std::vector<Poly> b_gens_;
  Foliation foliation_;
  PiBasis pi_;
  std::vector<Poly> solutions_;
};

// Integral ideal of B given by generators in A ∩ B.
struct FractionalIdeal {
  std::vector<Poly> gens;
};

// Membership in B, decided by annihilation under F_B. Exact when B is the
// full kernel of F_B, which holds for normal B.
bool in_b(const Poly& f, const SandwichProblem& prob);

// Monic generator g with A·M = (g), or nullopt when the extension is not
// principal. Throws NotInB and InvalidArgument (empty or all-zero ideal).
std::optional<Poly> extend_and_principalize(const FractionalIdeal& m, const SandwichProblem& prob);

// F_p coordinates of the class of the principal generator in prob.pi().
// Throws NotPrincipal, and InvalidArgument when the class lies outside the
// enumerated span (raise max_deg).
std::vector<int> theta(const FractionalIdeal& m, const SandwichProblem& prob);

// Generators of M1·M2: all pairwise products.
FractionalIdeal ideal_product(const FractionalIdeal& a, const FractionalIdeal& b);

struct MultiplicativityReport {
  std::vector<int> first;
  std::vector<int> second;
  std::vector<int> product;
  bool passed = false;
};

// theta(M1·M2) = theta(M1) + theta(M2) mod p.
MultiplicativityReport theta_multiplicativity_check(const FractionalIdeal& a, const FractionalIdeal& b,
                                                    const SandwichProblem& prob);

// F_p-dimension of the span of the given theta classes.
std::size_t theta_span_rank(const std::vector<std::vector<int>>& classes, const SandwichProblem& prob);

}  // namespace pfol
