#pragma once

#include <span>
#include <vector>

#include "pfol/deriv.hpp"
#include "pfol/modgb.hpp"

namespace pfol {

struct ClosureOptions {
  int max_rounds = 64;
};

// A finitely generated sub-A-module of Der(A), viewed inside A^n. When
// closed() is true the generators are the reduced Gröbner basis of the
// module, every bracket and p-th power of generators is a member, and
// p_coeffs()[i] expresses gens()[i]^p in the generators.
class Foliation {
 public:
  // Wraps generators without closing them; closed() is false.
  static Foliation from_generators(const RingPtr& ring, std::vector<Derivation> gens);

  const RingPtr& ring_ptr() const noexcept { return ring_; }
  const std::vector<Derivation>& gens() const noexcept { return gens_; }
  const ModuleBasis& basis() const noexcept { return basis_; }
  bool closed() const noexcept { return closed_; }
  int rounds() const noexcept { return rounds_; }
  // Derivations added by the closure beyond the seed.
  std::size_t added() const noexcept { return added_; }
  // Throws NotClosed on an unclosed foliation.
  const std::vector<std::vector<Poly>>& p_coeffs() const;

 private:
  friend Foliation foliation_closure(const RingPtr&, std::span<const Derivation>, const ClosureOptions&);

  RingPtr ring_;
  std::vector<Derivation> gens_;
  ModuleBasis basis_;
  std::vector<std::vector<Poly>> p_coeffs_;
  bool closed_ = false;
  int rounds_ = 0;
  std::size_t added_ = 0;
};

ModVector to_vector(const Derivation& d);
Derivation to_derivation(const RingPtr& ring, const ModVector& v);

// Smallest foliation containing the seed: adds brackets and p-th powers
// that are not yet members until stable. Throws IterationCap past
// options.max_rounds.
Foliation foliation_closure(const RingPtr& ring, std::span<const Derivation> seed, const ClosureOptions& options = {});
Foliation foliation_closure(std::span<const Derivation> seed, const ClosureOptions& options = {});

const std::vector<std::vector<Poly>>& foliation_p_coeffs(const Foliation& f);

// Derivations of A vanishing on every element of b_gens (the foliation
// attached to the subalgebra generated by b_gens and A^p).
Foliation foliation_of_subalgebra(const RingPtr& ring, std::span<const Poly> b_gens,
                                  const ClosureOptions& options = {});

// Every bracket of generator pairs and every generator p-th power lies in
// the module.
bool closure_certificate(const Foliation& f);

}  // namespace pfol
