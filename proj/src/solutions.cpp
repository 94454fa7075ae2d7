#include "pfol/solutions.hpp"

#include <algorithm>
#include <map>
#include <thread>

#include "pfol/assoc.hpp"
#include "pfol/error.hpp"

namespace pfol {

namespace {

void require_nonzero(const Poly& f) {
  if (f.is_zero()) throw Error(ErrorCode::kZeroInput, "expected a nonzero polynomial");
}

// q^e, saturating at limit + 1.
std::uint64_t bounded_power(std::uint64_t q, std::size_t e, std::uint64_t limit) {
  std::uint64_t v = 1;
  for (std::size_t i = 0; i < e; ++i) {
    if (v > limit / q) return limit + 1;
    v *= q;
  }
  return v;
}

}  // namespace

bool is_first_integral(const Poly& f, std::span<const Derivation> gens) {
  require_nonzero(f);
  return std::all_of(gens.begin(), gens.end(), [&](const Derivation& d) { return deriv_apply(d, f).is_zero(); });
}

bool is_first_integral(const Poly& f, const Foliation& fol) { return is_first_integral(f, fol.gens()); }

std::optional<LVector> is_algebraic_solution(const Poly& f, std::span<const Derivation> gens) {
  require_nonzero(f);
  LVector out;
  out.reserve(gens.size());
  for (const Derivation& d : gens) {
    auto q = divexact(deriv_apply(d, f), f);
    if (!q) return std::nullopt;
    out.push_back(std::move(*q));
  }
  return out;
}

std::optional<LVector> is_algebraic_solution(const Poly& f, const Foliation& fol) {
  return is_algebraic_solution(f, fol.gens());
}

LVector l_map(const Poly& f, std::span<const Derivation> gens) {
  auto l = is_algebraic_solution(f, gens);
  if (!l) throw Error(ErrorCode::kNotSolution, f.to_string() + " is not an algebraic solution");
  return std::move(*l);
}

LVector l_map(const Poly& f, const Foliation& fol) { return l_map(f, fol.gens()); }

std::vector<Poly> enumerate_solutions(const Foliation& fol, int max_deg, const EnumerateOptions& options) {
  return enumerate_solutions(fol.ring_ptr(), fol.gens(), max_deg, options);
}

std::vector<Poly> enumerate_solutions(const RingPtr& ring, std::span<const Derivation> gens, int max_deg,
                                      const EnumerateOptions& options) {
  if (max_deg < 0) throw Error(ErrorCode::kInvalidArgument, "max_deg must be >= 0");
  for (const Derivation& d : gens) require_same_ring(*ring, d.ring(), "enumerate_solutions");
  const Field& F = ring->field();
  const std::uint64_t q = static_cast<std::uint64_t>(F.q());

  // Ascending grevlex, so the candidate with leading index j has its
  // coefficient-1 term first once the terms are emitted in reverse.
  std::vector<Monomial> monos = monomial_basis_leq(*ring, max_deg);
  std::sort(monos.begin(), monos.end(), [&](const Monomial& a, const Monomial& b) { return ring->compare(a, b) < 0; });
  const std::size_t l = monos.size();
  if (bounded_power(q, l, options.budget) > options.budget) {
    throw Error(ErrorCode::kBudgetExceeded, "q^l(" + std::to_string(max_deg) + ") exceeds the enumeration budget");
  }

  // D_i applied to each basis monomial; D_i(f) is then a linear combination.
  std::vector<std::vector<Poly>> images(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (const Monomial& m : monos) images[i].push_back(deriv_apply(gens[i], Poly::term(ring, m, F.one())));
  }

  // Flat index space: block j holds q^j candidates with leading monomial j.
  std::vector<std::uint64_t> block_start(l + 1, 0);
  for (std::size_t j = 0; j < l; ++j) block_start[j + 1] = block_start[j] + bounded_power(q, j, options.budget);
  const std::uint64_t total = block_start[l];

  auto scan = [&](std::uint64_t begin, std::uint64_t end, std::vector<Poly>& found) {
    std::vector<Fq> digits(l);
    std::vector<Term> terms;
    for (std::uint64_t idx = begin; idx < end; ++idx) {
      const std::size_t j = static_cast<std::size_t>(
          std::upper_bound(block_start.begin(), block_start.end(), idx) - block_start.begin() - 1);
      std::uint64_t inner = idx - block_start[j];
      for (std::size_t k = 0; k < j; ++k) {
        digits[k] = F.element(static_cast<int>(inner % q));
        inner /= q;
      }
      digits[j] = F.one();
      terms.clear();
      for (std::size_t k = j + 1; k-- > 0;) {
        if (!digits[k].is_zero()) terms.push_back({monos[k], digits[k]});
      }
      Poly f = Poly::from_terms(ring, terms);
      bool ok = true;
      for (std::size_t i = 0; i < gens.size() && ok; ++i) {
        Poly df(ring);
        for (std::size_t k = 0; k <= j; ++k) {
          if (!digits[k].is_zero()) df.add_mul_term(images[i][k], Monomial{}, digits[k]);
        }
        ok = divexact(df, f).has_value();
      }
      if (ok) found.push_back(std::move(f));
    }
  };

  unsigned threads = options.threads != 0 ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  if (total < 4096) threads = 1;
  std::vector<std::vector<Poly>> parts(threads);
  if (threads == 1) {
    scan(0, total, parts[0]);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      const std::uint64_t b = total * t / threads;
      const std::uint64_t e = total * (t + 1) / threads;
      pool.emplace_back([&, b, e, t] { scan(b, e, parts[t]); });
    }
    for (auto& th : pool) th.join();
  }
  std::vector<Poly> out;
  for (auto& part : parts) {
    for (auto& f : part) out.push_back(std::move(f));
  }
  // Lowest degree first; within a degree, larger leading monomials first.
  std::stable_sort(out.begin(), out.end(), [&](const Poly& a, const Poly& b) {
    const int da = ring->degree(a.leading_monomial());
    const int db = ring->degree(b.leading_monomial());
    if (da != db) return da < db;
    return ring->compare(a.leading_monomial(), b.leading_monomial()) > 0;
  });
  return out;
}

std::vector<FqVector> flatten_lvectors(std::span<const LVector> lvecs) {
  struct Key {
    std::size_t i;
    Monomial m;
    bool operator<(const Key& o) const {
      if (i != o.i) return i < o.i;
      return m.e < o.m.e;
    }
  };
  std::map<Key, std::size_t> columns;
  for (const LVector& v : lvecs) {
    for (std::size_t i = 0; i < v.size(); ++i) {
      for (const Term& t : v[i].terms()) columns.emplace(Key{i, t.m}, 0);
    }
  }
  std::size_t next = 0;
  for (auto& [key, idx] : columns) idx = next++;
  std::vector<FqVector> out;
  out.reserve(lvecs.size());
  for (const LVector& v : lvecs) {
    FqVector row(columns.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
      for (const Term& t : v[i].terms()) row[columns.at(Key{i, t.m})] = t.c;
    }
    out.push_back(std::move(row));
  }
  return out;
}

PiBasis pi_basis(const Foliation& fol, std::span<const Poly> candidates) {
  std::vector<LVector> all;
  all.reserve(candidates.size());
  for (const Poly& f : candidates) {
    auto l = is_algebraic_solution(f, fol);
    if (!l) throw Error(ErrorCode::kNotSolution, "candidate " + f.to_string() + " is not an algebraic solution");
    all.push_back(std::move(*l));
  }
  const auto flat = flatten_lvectors(all);
  std::vector<Poly> reps;
  std::vector<LVector> lvecs;
  if (!flat.empty()) {
    Echelon ech(fol.ring_ptr()->field(), flat.front().size());
    for (std::size_t k = 0; k < flat.size(); ++k) {
      if (ech.insert(flat[k])) {
        reps.push_back(candidates[k]);
        lvecs.push_back(all[k]);
      }
    }
  }
  return PiBasis(fol.ring_ptr(), fol.gens(), std::move(reps), std::move(lvecs));
}

PiClass pi_class(const Poly& f, const PiBasis& basis) {
  const LVector lf = l_map(f, basis.gens());
  std::vector<LVector> all = basis.lvecs();
  all.push_back(lf);
  auto flat = flatten_lvectors(all);
  const FqVector target = std::move(flat.back());
  flat.pop_back();
  const Field& F = basis.ring_ptr()->field();
  auto z = solve_coordinates(F, flat, target);
  if (!z) return NotInSpan{};
  if (!std::all_of(z->begin(), z->end(), [&](Fq c) { return F.in_prime_field(c); })) return NonPrimeCoords{*z};
  PrimeCoords out;
  for (Fq c : *z) out.z.push_back(F.prime_value(c));
  return out;
}

std::size_t pi_dim_bound(const Foliation& fol) {
  if (!fol.closed()) throw Error(ErrorCode::kNotClosed, "the bound needs a closed foliation");
  std::size_t total = 0;
  for (const Derivation& d : fol.gens()) total += monomial_count_leq(*fol.ring_ptr(), deriv_degree(d));
  return total;
}

std::optional<std::size_t> pi_dim_sieve_bound(const Foliation& fol, std::uint64_t budget) {
  const auto& a = fol.p_coeffs();
  const RingPtr& ring = fol.ring_ptr();
  const Field& F = ring->field();
  const auto& gens = fol.gens();
  const std::size_t n = gens.size();
  std::vector<std::vector<Monomial>> boxes(n);
  std::size_t dim = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const Degree d = deriv_degree(gens[i]);
    if (d) boxes[i] = monomial_basis_leq(*ring, *d);
    dim += boxes[i].size();
  }
  const std::uint64_t q = static_cast<std::uint64_t>(F.q());
  const std::uint64_t count = bounded_power(q, dim, budget);
  if (count > budget) return std::nullopt;
  const unsigned p = static_cast<unsigned>(F.p());

  std::uint64_t hits = 0;
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    std::uint64_t rest = idx;
    LVector l(n, Poly(ring));
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<Term> terms;
      for (const Monomial& m : boxes[i]) {
        terms.push_back({m, F.element(static_cast<int>(rest % q))});
        rest /= q;
      }
      l[i] = Poly::from_terms(ring, std::move(terms));
    }
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      Poly rhs(ring);
      for (std::size_t j = 0; j < n; ++j) rhs += a[i][j] * l[j];
      ok = t_apply(gens[i], l[i], l[i], p - 1) == rhs;
    }
    hits += ok ? 1 : 0;
  }
  std::size_t bound = 0;
  for (std::uint64_t v = static_cast<std::uint64_t>(p); v <= hits; v *= p) ++bound;
  return bound;
}

PiDimBounds pi_dim_bounds(const Foliation& fol, const PiBasis& basis, std::uint64_t sieve_budget) {
  PiDimBounds out;
  out.lower = basis.size();
  out.degree = pi_dim_bound(fol);
  out.sieve = pi_dim_sieve_bound(fol, sieve_budget);
  out.upper = out.sieve ? std::min(out.degree, *out.sieve) : out.degree;
  return out;
}

LImageRanks l_image_ranks(const Foliation& fol, std::span<const Poly> solutions) {
  std::vector<LVector> all;
  all.reserve(solutions.size());
  for (const Poly& f : solutions) all.push_back(l_map(f, fol));
  const auto flat = flatten_lvectors(all);
  const Field& F = fol.ring_ptr()->field();
  return LImageRanks{prime_field_rank(F, flat), rank(F, flat)};
}

}  // namespace pfol
