#pragma once

#include <optional>
#include <span>
#include <vector>

#include "pfol/poly.hpp"

namespace pfol {

// Element of the free module A^m.
using ModVector = std::vector<Poly>;

ModVector zero_vector(const RingPtr& ring, std::size_t m);
bool is_zero_vector(const ModVector& v);
// sum_j coeffs[j] * gens[j]
ModVector recombine(const RingPtr& ring, std::size_t m, std::span<const Poly> coeffs,
                    std::span<const ModVector> gens);

// Gröbner basis of a submodule of A^m under position-over-term order
// (position 0 largest, grevlex within a position). The basis is reduced and
// monic, sorted by descending leading term. Row i of transform() expresses
// gb()[i] in the original generators.
class ModuleBasis {
 public:
  const RingPtr& ring_ptr() const noexcept { return ring_; }
  std::size_t rank() const noexcept { return m_; }
  const std::vector<ModVector>& gens() const noexcept { return gens_; }
  const std::vector<ModVector>& gb() const noexcept { return gb_; }
  const std::vector<std::vector<Poly>>& transform() const noexcept { return transform_; }

 private:
  friend ModuleBasis module_gb(const RingPtr& ring, std::size_t m, std::vector<ModVector> gens);

  RingPtr ring_;
  std::size_t m_ = 0;
  std::vector<ModVector> gens_;
  std::vector<ModVector> gb_;
  std::vector<std::vector<Poly>> transform_;
};

ModuleBasis module_gb(const RingPtr& ring, std::size_t m, std::vector<ModVector> gens);

// Coefficients a_j over the original generators with v = sum_j a_j gens_j,
// or nullopt when v is not in the module.
std::optional<std::vector<Poly>> module_member(const ModVector& v, const ModuleBasis& basis);

// Normal form of v with respect to the basis (full reduction).
ModVector module_normal_form(const ModVector& v, const ModuleBasis& basis);

// Generators of {a in A^m : sum_i a_i rows_i = 0} for rows in A^k.
std::vector<ModVector> module_kernel(const RingPtr& ring, std::size_t k, std::span<const ModVector> rows);

bool module_equal(const ModuleBasis& a, const ModuleBasis& b);

// S-vectors of every same-position pair of gb elements reduce to zero.
bool satisfies_buchberger_criterion(const ModuleBasis& basis);

}  // namespace pfol
