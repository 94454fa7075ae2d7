#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "pfol/foliation.hpp"
#include "pfol/linalg.hpp"

namespace pfol {

// (D_1(f)/f, ..., D_n(f)/f) for the generators D_i.
using LVector = std::vector<Poly>;

bool is_first_integral(const Poly& f, std::span<const Derivation> gens);
bool is_first_integral(const Poly& f, const Foliation& fol);

// The L-vector when every D_i(f) is divisible by f, nullopt otherwise.
std::optional<LVector> is_algebraic_solution(const Poly& f, std::span<const Derivation> gens);
std::optional<LVector> is_algebraic_solution(const Poly& f, const Foliation& fol);

// Throws NotSolution when f is not an algebraic solution.
LVector l_map(const Poly& f, std::span<const Derivation> gens);
LVector l_map(const Poly& f, const Foliation& fol);

struct EnumerateOptions {
  std::uint64_t budget = std::uint64_t{1} << 22;
  unsigned threads = 0;  // 0: hardware concurrency
};

// Brute force over every nonzero polynomial of degree <= max_deg with
// leading coefficient 1. Throws BudgetExceeded when q^{l(max_deg)} > budget.
// The order is deterministic: by degree of the leading monomial, then
// descending leading monomial, then the base-q counter over the lower
// coefficients.
std::vector<Poly> enumerate_solutions(const RingPtr& ring, std::span<const Derivation> gens, int max_deg,
                                      const EnumerateOptions& options = {});
std::vector<Poly> enumerate_solutions(const Foliation& fol, int max_deg, const EnumerateOptions& options = {});

// Algebraic solutions whose L-vectors are linearly independent over F_q.
class PiBasis {
 public:
  PiBasis(RingPtr ring, std::vector<Derivation> gens, std::vector<Poly> reps, std::vector<LVector> lvecs)
      : ring_(std::move(ring)), gens_(std::move(gens)), reps_(std::move(reps)), lvecs_(std::move(lvecs)) {}

  const RingPtr& ring_ptr() const noexcept { return ring_; }
  const std::vector<Derivation>& gens() const noexcept { return gens_; }
  const std::vector<Poly>& reps() const noexcept { return reps_; }
  const std::vector<LVector>& lvecs() const noexcept { return lvecs_; }
  std::size_t size() const noexcept { return reps_.size(); }

 private:
  RingPtr ring_;
  std::vector<Derivation> gens_;
  std::vector<Poly> reps_;
  std::vector<LVector> lvecs_;
};

// Greedy scan of the candidates, keeping those that enlarge the F_q-span of
// the L-vectors. Throws NotSolution naming an offending candidate.
PiBasis pi_basis(const Foliation& fol, std::span<const Poly> candidates);

struct PrimeCoords {
  std::vector<int> z;
};
struct NotInSpan {};
struct NonPrimeCoords {
  FqVector z;
};
using PiClass = std::variant<PrimeCoords, NotInSpan, NonPrimeCoords>;

// Coordinates of [f] in the basis. Throws NotSolution.
PiClass pi_class(const Poly& f, const PiBasis& basis);

// l(deg D_1) + ... + l(deg D_n) over the generators. Throws NotClosed.
std::size_t pi_dim_bound(const Foliation& fol);

// Upper bound on dim Pi from the relation every L-vector satisfies,
//   (T_{i,L_i})^{p-1}(L_i) = sum_j a_{ij} L_j,
// counted by brute force over L in l(deg D_1) x ... x l(deg D_n):
// p^{dim} <= #solutions. nullopt when q^{sum l} exceeds the budget.
std::optional<std::size_t> pi_dim_sieve_bound(const Foliation& fol, std::uint64_t budget = std::uint64_t{1} << 22);

struct PiDimBounds {
  std::size_t lower = 0;              // size of the enumerated basis
  std::size_t degree = 0;              // pi_dim_bound
  std::optional<std::size_t> sieve;   // pi_dim_sieve_bound, when within budget
  std::size_t upper = 0;              // min of the available upper bounds
  bool exact() const noexcept { return lower == upper; }
};
PiDimBounds pi_dim_bounds(const Foliation& fol, const PiBasis& basis,
                          std::uint64_t sieve_budget = std::uint64_t{1} << 22);

// Flattens L-vectors into dense coefficient vectors over a shared column set.
std::vector<FqVector> flatten_lvectors(std::span<const LVector> lvecs);

struct LImageRanks {
  std::size_t prime_rank = 0;
  std::size_t field_rank = 0;
};
LImageRanks l_image_ranks(const Foliation& fol, std::span<const Poly> solutions);

}  // namespace pfol
