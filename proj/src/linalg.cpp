#include "pfol/linalg.hpp"

#include "pfol/error.hpp"

namespace pfol {

FqVector Echelon::reduce(FqVector v) const {
  const Field& F = *field_;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Fq c = v[pivots_[r]];
    if (c.is_zero()) continue;
    const Fq nc = F.neg(c);
    for (std::size_t j = 0; j < ncols_; ++j) v[j] = F.add(v[j], F.mul(nc, rows_[r][j]));
  }
  return v;
}

bool Echelon::insert(const FqVector& v) {
  if (v.size() != ncols_) throw Error(ErrorCode::kLengthMismatch, "echelon row length");
  FqVector w = reduce(v);
  std::size_t piv = 0;
  while (piv < ncols_ && w[piv].is_zero()) ++piv;
  if (piv == ncols_) return false;
  const Field& F = *field_;
  const Fq inv = F.inv(w[piv]);
  for (Fq& x : w) x = F.mul(x, inv);
  // Keep rows fully reduced so reduce() can eliminate pivots independently.
  for (auto& row : rows_) {
    const Fq c = row[piv];
    if (c.is_zero()) continue;
    const Fq nc = F.neg(c);
    for (std::size_t j = 0; j < ncols_; ++j) row[j] = F.add(row[j], F.mul(nc, w[j]));
  }
  rows_.push_back(std::move(w));
  pivots_.push_back(piv);
  return true;
}

std::size_t rank(const Field& field, const std::vector<FqVector>& vectors) {
  if (vectors.empty()) return 0;
  Echelon e(field, vectors.front().size());
  for (const auto& v : vectors) e.insert(v);
  return e.rank();
}

std::size_t prime_field_rank(const Field& field, const std::vector<FqVector>& vectors) {
  if (vectors.empty()) return 0;
  const FieldPtr prime = Field::make(field.p(), 1, {0, 1});
  const std::size_t r = static_cast<std::size_t>(field.r());
  std::vector<FqVector> expanded;
  expanded.reserve(vectors.size());
  for (const auto& v : vectors) {
    FqVector w;
    w.reserve(v.size() * r);
    for (Fq x : v) {
      for (int c : field.coeffs(x)) w.push_back(prime->from_int(c));
    }
    expanded.push_back(std::move(w));
  }
  return rank(*prime, expanded);
}

std::optional<FqVector> solve_coordinates(const Field& field, const std::vector<FqVector>& basis,
                                          const FqVector& target) {
  const std::size_t s = basis.size();
  const std::size_t n = target.size();
  // Augmented columns: [basis^T | target], eliminated row by row.
  std::vector<FqVector> m(n, FqVector(s + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t a = 0; a < s; ++a) {
      if (basis[a].size() != n) throw Error(ErrorCode::kLengthMismatch, "solve_coordinates");
      m[i][a] = basis[a][i];
    }
    m[i][s] = target[i];
  }
  std::vector<std::size_t> pivot_row(s, n);
  std::size_t row = 0;
  for (std::size_t col = 0; col < s && row < n; ++col) {
    std::size_t sel = row;
    while (sel < n && m[sel][col].is_zero()) ++sel;
    if (sel == n) continue;
    std::swap(m[sel], m[row]);
    const Fq inv = field.inv(m[row][col]);
    for (Fq& x : m[row]) x = field.mul(x, inv);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == row || m[i][col].is_zero()) continue;
      const Fq c = field.neg(m[i][col]);
      for (std::size_t j = 0; j <= s; ++j) m[i][j] = field.add(m[i][j], field.mul(c, m[row][j]));
    }
    pivot_row[col] = row++;
  }
  for (std::size_t i = row; i < n; ++i) {
    if (!m[i][s].is_zero()) return std::nullopt;
  }
  FqVector z(s);
  for (std::size_t a = 0; a < s; ++a) {
    if (pivot_row[a] == n) throw Error(ErrorCode::kInvalidArgument, "basis vectors are dependent");
    z[a] = m[pivot_row[a]][s];
  }
  return z;
}

}  // namespace pfol
