#include "pfol/picard.hpp"

#include <algorithm>

#include "pfol/error.hpp"

namespace pfol {

SandwichProblem SandwichProblem::make(const RingPtr& ring, std::vector<Poly> b_gens, const SandwichOptions& options) {
  for (const Poly& b : b_gens) require_same_ring(*ring, b.ring(), "SandwichProblem");
  Foliation fol = foliation_of_subalgebra(ring, b_gens, options.closure);
  for (const Poly& b : b_gens) {
    for (const Derivation& d : fol.gens()) {
      if (!deriv_apply(d, b).is_zero()) throw Error(ErrorCode::kInternal, "F_B does not annihilate " + b.to_string());
    }
  }
  std::vector<Poly> sols = enumerate_solutions(fol, options.max_deg, options.enumerate);
  PiBasis pi = pi_basis(fol, sols);
  return SandwichProblem(std::move(b_gens), std::move(fol), std::move(pi), std::move(sols));
}

bool in_b(const Poly& f, const SandwichProblem& prob) {
  const auto& gens = prob.foliation().gens();
  return std::all_of(gens.begin(), gens.end(), [&](const Derivation& d) { return deriv_apply(d, f).is_zero(); });
}

std::optional<Poly> extend_and_principalize(const FractionalIdeal& m, const SandwichProblem& prob) {
  const RingPtr& ring = prob.ring_ptr();
  std::vector<Poly> gens;
  for (const Poly& f : m.gens) {
    require_same_ring(*ring, f.ring(), "extend_and_principalize");
    if (!in_b(f, prob)) throw Error(ErrorCode::kNotInB, f.to_string() + " is not in B");
    if (!f.is_zero()) gens.push_back(f);
  }
  if (gens.empty()) throw Error(ErrorCode::kInvalidArgument, "ideal has no nonzero generator");

  Poly g = gens.front().monic();
  for (std::size_t k = 1; k < gens.size(); ++k) g = gcd(g, gens[k]);

  std::vector<ModVector> rows;
  for (const Poly& f : gens) rows.push_back({f});
  const ModuleBasis basis = module_gb(ring, 1, std::move(rows));
  if (!module_member({g}, basis)) return std::nullopt;
  for (const Poly& f : gens) {
    if (!divexact(f, g)) return std::nullopt;
  }
  return g;
}

std::vector<int> theta(const FractionalIdeal& m, const SandwichProblem& prob) {
  auto g = extend_and_principalize(m, prob);
  if (!g) throw Error(ErrorCode::kNotPrincipal, "A·M is not principal");
  PiClass cls = [&] {
    try {
      return pi_class(*g, prob.pi());
    } catch (const Error& e) {
      if (e.code() == ErrorCode::kNotSolution) {
        throw Error(ErrorCode::kInternal, "principal generator " + g->to_string() + " is not an algebraic solution");
      }
      throw;
    }
  }();
  if (auto* z = std::get_if<PrimeCoords>(&cls)) return z->z;
  if (std::holds_alternative<NotInSpan>(cls)) {
    throw Error(ErrorCode::kInvalidArgument,
                "class of " + g->to_string() + " lies outside the enumerated span; raise max_deg");
  }
  throw Error(ErrorCode::kInternal, "class of " + g->to_string() + " has coordinates outside F_p");
}

FractionalIdeal ideal_product(const FractionalIdeal& a, const FractionalIdeal& b) {
  FractionalIdeal out;
  for (const Poly& f : a.gens) {
    for (const Poly& g : b.gens) out.gens.push_back(f * g);
  }
  return out;
}

MultiplicativityReport theta_multiplicativity_check(const FractionalIdeal& a, const FractionalIdeal& b,
                                                    const SandwichProblem& prob) {
  MultiplicativityReport r;
  r.first = theta(a, prob);
  r.second = theta(b, prob);
  r.product = theta(ideal_product(a, b), prob);
  const int p = prob.ring_ptr()->field().p();
  r.passed = r.first.size() == r.product.size() && r.second.size() == r.product.size();
  for (std::size_t k = 0; r.passed && k < r.product.size(); ++k) {
    r.passed = (r.first[k] + r.second[k]) % p == r.product[k];
  }
  return r;
}

std::size_t theta_span_rank(const std::vector<std::vector<int>>& classes, const SandwichProblem& prob) {
  const FieldPtr prime = Field::make(prob.ring_ptr()->field().p(), 1, {0, 1});
  std::vector<FqVector> rows;
  for (const auto& c : classes) {
    FqVector v;
    for (int z : c) v.push_back(prime->from_int(z));
    rows.push_back(std::move(v));
  }
  return rank(*prime, rows);
}

}  // namespace pfol
