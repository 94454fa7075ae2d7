#include "pfol/foliation.hpp"

#include "pfol/error.hpp"

namespace pfol {

ModVector to_vector(const Derivation& d) { return d.coeffs(); }

Derivation to_derivation(const RingPtr& ring, const ModVector& v) {
  if (v.size() != ring->nvars()) throw Error(ErrorCode::kLengthMismatch, "vector length differs from variable count");
  return Derivation(v);
}

namespace {

std::vector<ModVector> vectors_of(std::span<const Derivation> ds) {
  std::vector<ModVector> out;
  out.reserve(ds.size());
  for (const Derivation& d : ds) out.push_back(to_vector(d));
  return out;
}

}  // namespace

Foliation Foliation::from_generators(const RingPtr& ring, std::vector<Derivation> gens) {
  for (const Derivation& d : gens) require_same_ring(*ring, d.ring(), "foliation generators");
  Foliation f;
  f.ring_ = ring;
  f.basis_ = module_gb(ring, ring->nvars(), vectors_of(gens));
  f.gens_ = std::move(gens);
  return f;
}

const std::vector<std::vector<Poly>>& Foliation::p_coeffs() const {
  if (!closed_) throw Error(ErrorCode::kNotClosed, "p-power coefficients need a closed foliation");
  return p_coeffs_;
}

const std::vector<std::vector<Poly>>& foliation_p_coeffs(const Foliation& f) { return f.p_coeffs(); }

Foliation foliation_closure(std::span<const Derivation> seed, const ClosureOptions& options) {
  if (seed.empty()) throw Error(ErrorCode::kInvalidArgument, "closure needs a nonempty seed");
  return foliation_closure(seed.front().ring_ptr(), seed, options);
}

Foliation foliation_closure(const RingPtr& ring, std::span<const Derivation> seed, const ClosureOptions& options) {
  for (const Derivation& d : seed) require_same_ring(*ring, d.ring(), "foliation_closure");
  const std::size_t n = ring->nvars();

  std::vector<Derivation> gens(seed.begin(), seed.end());
  ModuleBasis basis = module_gb(ring, n, vectors_of(gens));
  std::size_t added = 0;
  int rounds = 0;

  auto try_add = [&](const Derivation& d) {
    if (d.is_zero() || module_member(to_vector(d), basis)) return false;
    gens.push_back(d);
    basis = module_gb(ring, n, vectors_of(gens));
    ++added;
    return true;
  };

  while (true) {
    if (++rounds > options.max_rounds) {
      throw Error(ErrorCode::kIterationCap, "closure did not stabilise within " + std::to_string(options.max_rounds) + " rounds");
    }
    const std::size_t count = gens.size();
    bool changed = false;
    for (std::size_t i = 0; i < count; ++i) {
      for (std::size_t j = i + 1; j < count; ++j) changed |= try_add(deriv_bracket(gens[i], gens[j]));
    }
    for (std::size_t i = 0; i < count; ++i) changed |= try_add(deriv_p_power(gens[i]));
    if (!changed) break;
  }

  // Report the reduced basis of the module as the generators.
  std::vector<Derivation> reduced;
  for (const ModVector& v : basis.gb()) reduced.push_back(to_derivation(ring, v));

  Foliation f;
  f.ring_ = ring;
  f.basis_ = module_gb(ring, n, vectors_of(reduced));
  f.gens_ = std::move(reduced);
  f.rounds_ = rounds;
  f.added_ = added;
  for (const Derivation& d : f.gens_) {
    auto coeffs = module_member(to_vector(deriv_p_power(d)), f.basis_);
    if (!coeffs) throw Error(ErrorCode::kInternal, "closure: p-th power escaped the module");
    f.p_coeffs_.push_back(std::move(*coeffs));
  }
  f.closed_ = true;
  if (!closure_certificate(f)) throw Error(ErrorCode::kInternal, "closure certificate failed");
  return f;
}

bool closure_certificate(const Foliation& f) {
  const auto& gens = f.gens();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (!module_member(to_vector(deriv_p_power(gens[i])), f.basis())) return false;
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      if (!module_member(to_vector(deriv_bracket(gens[i], gens[j])), f.basis())) return false;
    }
  }
  return true;
}

Foliation foliation_of_subalgebra(const RingPtr& ring, std::span<const Poly> b_gens, const ClosureOptions& options) {
  const std::size_t n = ring->nvars();
  for (const Poly& b : b_gens) {
    require_same_ring(*ring, b.ring(), "foliation_of_subalgebra");
  }
  // Row i holds (d b_1/dx_i, ..., d b_k/dx_i); a derivation (c_1..c_n)
  // kills every b_j exactly when sum_i c_i row_i = 0.
  std::vector<ModVector> rows;
  for (std::size_t i = 0; i < n; ++i) {
    ModVector row;
    for (const Poly& b : b_gens) row.push_back(partial(b, i));
    rows.push_back(std::move(row));
  }
  std::vector<Derivation> kernel;
  for (const ModVector& v : module_kernel(ring, b_gens.size(), rows)) kernel.push_back(to_derivation(ring, v));

  Foliation f = foliation_closure(ring, kernel, options);
  if (f.added() != 0) throw Error(ErrorCode::kInternal, "annihilator of a subalgebra was not closed");
  for (const Derivation& d : f.gens()) {
    for (const Poly& b : b_gens) {
      if (!deriv_apply(d, b).is_zero()) throw Error(ErrorCode::kInternal, "annihilator does not kill a generator");
    }
  }
  return f;
}

}  // namespace pfol
