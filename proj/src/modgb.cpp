#include "pfol/modgb.hpp"

#include <algorithm>
#include <set>

#include "pfol/error.hpp"

namespace pfol {

ModVector zero_vector(const RingPtr& ring, std::size_t m) { return ModVector(m, Poly(ring)); }

bool is_zero_vector(const ModVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Poly& p) { return p.is_zero(); });
}

ModVector recombine(const RingPtr& ring, std::size_t m, std::span<const Poly> coeffs,
                    std::span<const ModVector> gens) {
  if (coeffs.size() != gens.size()) throw Error(ErrorCode::kLengthMismatch, "recombine");
  ModVector out = zero_vector(ring, m);
  for (std::size_t j = 0; j < gens.size(); ++j) {
    if (coeffs[j].is_zero()) continue;
    for (std::size_t i = 0; i < m; ++i) out[i] += coeffs[j] * gens[j][i];
  }
  return out;
}

namespace {

struct Lead {
  std::size_t pos;
  Monomial m;
  Fq c;
};

std::optional<Lead> lead_of(const ModVector& v) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_zero()) return Lead{i, v[i].leading_monomial(), v[i].leading_coeff()};
  }
  return std::nullopt;
}

// Module term order: position first (smaller index is larger), then grevlex.
int compare_lead(const Ring& R, const Lead& a, const Lead& b) {
  if (a.pos != b.pos) return a.pos < b.pos ? 1 : -1;
  return R.compare(a.m, b.m);
}

struct Elem {
  ModVector v;
  std::vector<Poly> rep;  // over the original generators
  Lead lead;
};

void axpy(ModVector& dst, const ModVector& src, const Monomial& m, Fq c) {
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i].add_mul_term(src[i], m, c);
}

// Reduces v by elems. Each step v -= c*m*e.v is mirrored as acc += c*m*e.rep,
// so that v_in = sum(acc_j gens_j) + v_out holds throughout. With full=false
// only leading terms are reduced and the loop stops at the first irreducible
// leading term.
ModVector reduce(ModVector v, const std::vector<Elem>& elems, std::vector<Poly>* acc, bool full,
                 std::size_t skip = static_cast<std::size_t>(-1)) {
  if (v.empty()) return v;
  const RingPtr& ring = v.front().ring_ptr();
  const Ring& R = *ring;
  const Field& F = R.field();
  const std::size_t nv = R.total_vars();
  ModVector rem = zero_vector(ring, v.size());
  while (true) {
    const auto ld = lead_of(v);
    if (!ld) break;
    const Elem* hit = nullptr;
    for (std::size_t k = 0; k < elems.size(); ++k) {
      if (k == skip) continue;
      const Elem& e = elems[k];
      if (e.lead.pos == ld->pos && divides(e.lead.m, ld->m, nv)) {
        hit = &e;
        break;
      }
    }
    if (hit != nullptr) {
      const Monomial mult = mono_div(ld->m, hit->lead.m, nv);
      const Fq c = F.div(ld->c, hit->lead.c);
      axpy(v, hit->v, mult, F.neg(c));
      if (acc != nullptr) {
        for (std::size_t j = 0; j < acc->size(); ++j) (*acc)[j].add_mul_term(hit->rep[j], mult, c);
      }
      continue;
    }
    if (!full) {
      for (std::size_t i = 0; i < v.size(); ++i) rem[i] += v[i];
      break;
    }
    const Poly t = Poly::term(ring, ld->m, ld->c);
    rem[ld->pos] += t;
    v[ld->pos] -= t;
  }
  return rem;
}

Elem make_elem(ModVector v, std::vector<Poly> rep) {
  const auto ld = lead_of(v);
  return Elem{std::move(v), std::move(rep), *ld};
}

struct Pair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
  int deg;
};

}  // namespace

ModuleBasis module_gb(const RingPtr& ring, std::size_t m, std::vector<ModVector> gens) {
  if (ring->naux() != 0) throw Error(ErrorCode::kAuxVarsPresent, "module_gb works over A only");
  if (m == 0) throw Error(ErrorCode::kInvalidArgument, "module rank must be >= 1");
  for (const ModVector& g : gens) {
    if (g.size() != m) throw Error(ErrorCode::kLengthMismatch, "generator length differs from module rank");
    for (const Poly& p : g) require_same_ring(*ring, p.ring(), "module_gb");
  }
  const Ring& R = *ring;
  const Field& F = R.field();
  const std::size_t nv = R.total_vars();
  const std::size_t k = gens.size();

  std::vector<Elem> elems;
  for (std::size_t j = 0; j < k; ++j) {
    if (is_zero_vector(gens[j])) continue;
    std::vector<Poly> rep(k, Poly(ring));
    rep[j] = Poly::one(ring);
    elems.push_back(make_elem(gens[j], std::move(rep)));
  }

  std::vector<Pair> pairs;
  std::set<std::pair<std::size_t, std::size_t>> pending;
  auto add_pairs_for = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (elems[i].lead.pos != elems[j].lead.pos) continue;
      const Monomial l = mono_lcm(elems[i].lead.m, elems[j].lead.m, nv);
      pairs.push_back({i, j, l, R.order_degree(l)});
      pending.insert({i, j});
    }
  };
  for (std::size_t j = 0; j < elems.size(); ++j) add_pairs_for(j);

  auto is_pending = [&](std::size_t a, std::size_t b) { return pending.count({std::min(a, b), std::max(a, b)}) > 0; };

  while (!pairs.empty()) {
    // Normal selection: smallest lcm degree, then oldest.
    auto best = std::min_element(pairs.begin(), pairs.end(), [](const Pair& a, const Pair& b) {
      if (a.deg != b.deg) return a.deg < b.deg;
      if (a.j != b.j) return a.j < b.j;
      return a.i < b.i;
    });
    const Pair pr = *best;
    pairs.erase(best);
    pending.erase({pr.i, pr.j});

    const Elem& ei = elems[pr.i];
    const Elem& ej = elems[pr.j];
    if (m == 1 && coprime(ei.lead.m, ej.lead.m, nv)) continue;
    bool chain = false;
    for (std::size_t t = 0; t < elems.size() && !chain; ++t) {
      if (t == pr.i || t == pr.j || elems[t].lead.pos != ei.lead.pos) continue;
      chain = divides(elems[t].lead.m, pr.lcm, nv) && !is_pending(pr.i, t) && !is_pending(pr.j, t);
    }
    if (chain) continue;

    const Monomial mi = mono_div(pr.lcm, ei.lead.m, nv);
    const Monomial mj = mono_div(pr.lcm, ej.lead.m, nv);
    const Fq ci = F.inv(ei.lead.c);
    const Fq cj = F.neg(F.inv(ej.lead.c));
    ModVector s = zero_vector(ring, m);
    axpy(s, ei.v, mi, ci);
    axpy(s, ej.v, mj, cj);
    std::vector<Poly> srep(k, Poly(ring));
    for (std::size_t j = 0; j < k; ++j) {
      srep[j].add_mul_term(ei.rep[j], mi, ci);
      srep[j].add_mul_term(ej.rep[j], mj, cj);
    }
    std::vector<Poly> acc(k, Poly(ring));
    ModVector r = reduce(std::move(s), elems, &acc, true);
    if (is_zero_vector(r)) continue;
    for (std::size_t j = 0; j < k; ++j) srep[j] -= acc[j];
    elems.push_back(make_elem(std::move(r), std::move(srep)));
    add_pairs_for(elems.size() - 1);
  }

  // Minimalize: drop elements whose lead is divisible by another kept lead.
  std::vector<Elem> minimal;
  for (std::size_t a = 0; a < elems.size(); ++a) {
    bool redundant = false;
    for (std::size_t b = 0; b < elems.size() && !redundant; ++b) {
      if (a == b || elems[a].lead.pos != elems[b].lead.pos) continue;
      if (!divides(elems[b].lead.m, elems[a].lead.m, nv)) continue;
      // Equal leads: keep the earlier one.
      redundant = !(elems[a].lead.m == elems[b].lead.m) || b < a;
    }
    if (!redundant) minimal.push_back(std::move(elems[a]));
  }

  // Interreduce tails and make monic.
  std::vector<Elem> reduced;
  for (std::size_t a = 0; a < minimal.size(); ++a) {
    std::vector<Poly> acc(k, Poly(ring));
    ModVector r = reduce(minimal[a].v, minimal, &acc, true, a);
    std::vector<Poly> rep = minimal[a].rep;
    for (std::size_t j = 0; j < k; ++j) rep[j] -= acc[j];
    const Fq inv = F.inv(lead_of(r)->c);
    for (Poly& p : r) p = p.scaled(inv);
    for (Poly& p : rep) p = p.scaled(inv);
    reduced.push_back(make_elem(std::move(r), std::move(rep)));
  }
  std::sort(reduced.begin(), reduced.end(),
            [&](const Elem& a, const Elem& b) { return compare_lead(R, a.lead, b.lead) > 0; });

  ModuleBasis out;
  out.ring_ = ring;
  out.m_ = m;
  out.gens_ = std::move(gens);
  for (Elem& e : reduced) {
    out.gb_.push_back(std::move(e.v));
    out.transform_.push_back(std::move(e.rep));
  }
  if (verify_mode()) {
    for (std::size_t a = 0; a < out.gb_.size(); ++a) {
      if (recombine(ring, m, out.transform_[a], out.gens_) != out.gb_[a]) {
        throw Error(ErrorCode::kInternal, "module_gb: transform does not reproduce the basis");
      }
    }
  }
  return out;
}

namespace {

std::vector<Elem> elems_of(const ModuleBasis& basis) {
  std::vector<Elem> elems;
  for (std::size_t a = 0; a < basis.gb().size(); ++a) elems.push_back(make_elem(basis.gb()[a], basis.transform()[a]));
  return elems;
}

void check_vector(const ModVector& v, const ModuleBasis& basis, const char* where) {
  if (v.size() != basis.rank()) throw Error(ErrorCode::kLengthMismatch, where);
  for (const Poly& p : v) require_same_ring(*basis.ring_ptr(), p.ring(), where);
}

}  // namespace

std::optional<std::vector<Poly>> module_member(const ModVector& v, const ModuleBasis& basis) {
  check_vector(v, basis, "module_member");
  const RingPtr& ring = basis.ring_ptr();
  std::vector<Poly> acc(basis.gens().size(), Poly(ring));
  const ModVector r = reduce(v, elems_of(basis), &acc, false);
  if (!is_zero_vector(r)) return std::nullopt;
  if (verify_mode() && recombine(ring, basis.rank(), acc, basis.gens()) != v) {
    throw Error(ErrorCode::kInternal, "module_member: coefficients do not recombine");
  }
  return acc;
}

ModVector module_normal_form(const ModVector& v, const ModuleBasis& basis) {
  check_vector(v, basis, "module_normal_form");
  return reduce(v, elems_of(basis), nullptr, true);
}

std::vector<ModVector> module_kernel(const RingPtr& ring, std::size_t k, std::span<const ModVector> rows) {
  const std::size_t m = rows.size();
  if (m == 0) return {};
  std::vector<ModVector> aug;
  aug.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (rows[i].size() != k) throw Error(ErrorCode::kLengthMismatch, "module_kernel: row length");
    ModVector v = rows[i];
    for (std::size_t j = 0; j < m; ++j) v.push_back(j == i ? Poly::one(ring) : Poly(ring));
    aug.push_back(std::move(v));
  }
  // With position-over-term order the basis elements whose leading position
  // lies in the identity block generate the intersection with 0 + A^m.
  const ModuleBasis basis = module_gb(ring, k + m, std::move(aug));
  std::vector<ModVector> out;
  for (const ModVector& g : basis.gb()) {
    if (!std::all_of(g.begin(), g.begin() + static_cast<std::ptrdiff_t>(k), [](const Poly& p) { return p.is_zero(); })) {
      continue;
    }
    out.emplace_back(g.begin() + static_cast<std::ptrdiff_t>(k), g.end());
  }
  if (verify_mode()) {
    for (const ModVector& s : out) {
      if (!is_zero_vector(recombine(ring, k, s, rows))) {
        throw Error(ErrorCode::kInternal, "module_kernel: generator does not annihilate");
      }
    }
  }
  return out;
}

bool module_equal(const ModuleBasis& a, const ModuleBasis& b) {
  if (a.rank() != b.rank()) throw Error(ErrorCode::kLengthMismatch, "module_equal: ranks differ");
  require_same_ring(*a.ring_ptr(), *b.ring_ptr(), "module_equal");
  for (const ModVector& g : a.gens()) {
    if (!module_member(g, b)) return false;
  }
  for (const ModVector& g : b.gens()) {
    if (!module_member(g, a)) return false;
  }
  return true;
}

bool satisfies_buchberger_criterion(const ModuleBasis& basis) {
  const auto elems = elems_of(basis);
  const RingPtr& ring = basis.ring_ptr();
  const Ring& R = *ring;
  const std::size_t nv = R.total_vars();
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t j = i + 1; j < elems.size(); ++j) {
      if (elems[i].lead.pos != elems[j].lead.pos) continue;
      const Monomial l = mono_lcm(elems[i].lead.m, elems[j].lead.m, nv);
      ModVector s = zero_vector(ring, basis.rank());
      axpy(s, elems[i].v, mono_div(l, elems[i].lead.m, nv), R.field().inv(elems[i].lead.c));
      axpy(s, elems[j].v, mono_div(l, elems[j].lead.m, nv), R.field().neg(R.field().inv(elems[j].lead.c)));
      if (!is_zero_vector(reduce(std::move(s), elems, nullptr, true))) return false;
    }
  }
  return true;
}

}  // namespace pfol
