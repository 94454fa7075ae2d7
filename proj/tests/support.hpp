#pragma once

#include <map>
#include <random>
#include <vector>

#include "pfol/deriv.hpp"
#include "pfol/error.hpp"
#include "pfol/field.hpp"
#include "pfol/poly.hpp"

namespace pfol::testing {

inline Fq random_elem(const Field& F, std::mt19937& rng, bool nonzero = false) {
  std::uniform_int_distribution<int> d(nonzero ? 1 : 0, F.q() - 1);
  return F.element(d(rng));
}

inline Poly random_poly(const RingPtr& ring, int max_deg, int max_terms, std::mt19937& rng) {
  const auto monos = monomial_basis_leq(*ring, max_deg);
  std::uniform_int_distribution<std::size_t> pick(0, monos.size() - 1);
  std::uniform_int_distribution<int> count(0, max_terms);
  std::vector<Term> terms;
  const int n = count(rng);
  for (int k = 0; k < n; ++k) terms.push_back({monos[pick(rng)], random_elem(ring->field(), rng, true)});
  return Poly::from_terms(ring, std::move(terms));
}

inline Poly random_nonzero_poly(const RingPtr& ring, int max_deg, int max_terms, std::mt19937& rng) {
  for (;;) {
    Poly f = random_poly(ring, max_deg, max_terms, rng);
    if (!f.is_zero()) return f;
  }
}

inline Derivation random_derivation(const RingPtr& ring, int max_deg, int max_terms, std::mt19937& rng) {
  std::vector<Poly> c;
  for (std::size_t i = 0; i < ring->nvars(); ++i) c.push_back(random_poly(ring, max_deg, max_terms, rng));
  return Derivation(std::move(c));
}

// Dense schoolbook product over a map of exponent vectors; no term ordering involved.
inline std::map<std::vector<int>, int> naive_product(const Poly& f, const Poly& g) {
  const Field& F = f.field();
  const std::size_t nv = f.ring().total_vars();
  std::map<std::vector<int>, int> out;
  for (const Term& a : f.terms()) {
    for (const Term& b : g.terms()) {
      std::vector<int> e(nv);
      for (std::size_t i = 0; i < nv; ++i) e[i] = a.m.e[i] + b.m.e[i];
      const Fq c = F.mul(a.c, b.c);
      auto it = out.emplace(e, 0).first;
      it->second = F.add(F.element(it->second), c).v;
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

inline std::map<std::vector<int>, int> as_map(const Poly& f) {
  std::map<std::vector<int>, int> out;
  for (const Term& t : f.terms()) {
    std::vector<int> e(f.ring().total_vars());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = t.m.e[i];
    out[e] = t.c.v;
  }
  return out;
}

inline RingPtr ring_xy(int p, int r = 1) {
  return Ring::make(Field::make(p, r), {"x", "y"});
}

inline RingPtr f4_xy() { return Ring::make(Field::make(2, 2, {1, 1, 1}), {"x", "y"}); }

inline Poly P(const RingPtr& ring, const char* text) { return parse_poly(ring, text); }

inline Derivation D(const RingPtr& ring, std::vector<const char*> coeffs) {
  std::vector<Poly> c;
  for (const char* s : coeffs) c.push_back(parse_poly(ring, s));
  return Derivation(std::move(c));
}

}  // namespace pfol::testing
