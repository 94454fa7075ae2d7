#pragma once

#include <optional>
#include <vector>

#include "pfol/field.hpp"

namespace pfol {

using FqVector = std::vector<Fq>;

// Incrementally maintained row echelon form over F_q.
class Echelon {
 public:
  Echelon(const Field& field, std::size_t ncols) : field_(&field), ncols_(ncols) {}

  // Adds v if it is independent of the rows so far; returns whether it was.
  bool insert(const FqVector& v);
  std::size_t rank() const noexcept { return rows_.size(); }

 private:
  FqVector reduce(FqVector v) const;

  const Field* field_;
  std::size_t ncols_;
  std::vector<FqVector> rows_;
  std::vector<std::size_t> pivots_;
};

std::size_t rank(const Field& field, const std::vector<FqVector>& vectors);

// Rank over the prime subfield: each F_q entry is expanded into its r
// coordinates in the basis 1, g, ..., g^{r-1}.
std::size_t prime_field_rank(const Field& field, const std::vector<FqVector>& vectors);

// z with sum_a z_a basis[a] = target, when it exists. The basis must be
// linearly independent, so z is unique.
std::optional<FqVector> solve_coordinates(const Field& field, const std::vector<FqVector>& basis,
                                          const FqVector& target);

}  // namespace pfol
