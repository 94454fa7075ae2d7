#include "pfol/poly.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "pfol/error.hpp"

namespace pfol {

std::string degree_to_string(Degree d) { return d ? std::to_string(*d) : std::string("-inf"); }

bool divides(const Monomial& a, const Monomial& b, std::size_t nvars) noexcept {
  for (std::size_t i = 0; i < nvars; ++i) {
    if (a.e[i] > b.e[i]) return false;
  }
  return true;
}

Monomial mono_mul(const Monomial& a, const Monomial& b, std::size_t nvars) noexcept {
  Monomial r;
  for (std::size_t i = 0; i < nvars; ++i) r.e[i] = static_cast<std::uint16_t>(a.e[i] + b.e[i]);
  return r;
}

Monomial mono_div(const Monomial& a, const Monomial& b, std::size_t nvars) noexcept {
  Monomial r;
  for (std::size_t i = 0; i < nvars; ++i) r.e[i] = static_cast<std::uint16_t>(a.e[i] - b.e[i]);
  return r;
}

Monomial mono_lcm(const Monomial& a, const Monomial& b, std::size_t nvars) noexcept {
  Monomial r;
  for (std::size_t i = 0; i < nvars; ++i) r.e[i] = std::max(a.e[i], b.e[i]);
  return r;
}

bool coprime(const Monomial& a, const Monomial& b, std::size_t nvars) noexcept {
  for (std::size_t i = 0; i < nvars; ++i) {
    if (a.e[i] != 0 && b.e[i] != 0) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Ring

namespace {

bool valid_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(),
                     [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

}  // namespace

RingPtr Ring::make(FieldPtr field, std::vector<std::string> vars, std::vector<int> weights,
                   std::vector<std::string> aux) {
  if (!field) throw Error(ErrorCode::kInvalidArgument, "ring needs a field");
  if (vars.empty()) throw Error(ErrorCode::kInvalidArgument, "ring needs at least one variable");
  if (vars.size() + aux.size() > kMaxVars) {
    throw Error(ErrorCode::kInvalidArgument, "too many variables (max " + std::to_string(kMaxVars) + ")");
  }
  if (weights.empty()) weights.assign(vars.size(), 1);
  if (weights.size() != vars.size()) throw Error(ErrorCode::kLengthMismatch, "one weight per ring variable");
  for (int w : weights) {
    if (w <= 0) throw Error(ErrorCode::kInvalidArgument, "weights must be positive");
  }
  std::set<std::string> seen;
  for (const auto* list : {&vars, &aux}) {
    for (const auto& v : *list) {
      if (!valid_identifier(v)) throw Error(ErrorCode::kInvalidArgument, "bad variable name '" + v + "'");
      if (v == "g") throw Error(ErrorCode::kInvalidArgument, "'g' is reserved for the field generator");
      if (!seen.insert(v).second) throw Error(ErrorCode::kInvalidArgument, "duplicate variable '" + v + "'");
    }
  }
  return RingPtr(new Ring(std::move(field), std::move(vars), std::move(weights), std::move(aux)));
}

RingPtr Ring::with_aux(std::size_t s) const {
  std::vector<std::string> aux;
  for (std::size_t i = 1; i <= s; ++i) {
    std::string name = "t" + std::to_string(i);
    while (std::find(vars_.begin(), vars_.end(), name) != vars_.end()) name = "_" + name;
    aux.push_back(name);
  }
  return make(field_, vars_, weights_, std::move(aux));
}

RingPtr Ring::base() const { return make(field_, vars_, weights_, {}); }

std::string Ring::var_name(std::size_t i) const { return i < vars_.size() ? vars_[i] : aux_[i - vars_.size()]; }

std::optional<std::size_t> Ring::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < total_vars(); ++i) {
    if (var_name(i) == name) return i;
  }
  return std::nullopt;
}

int Ring::degree(const Monomial& m) const noexcept {
  int d = 0;
  for (std::size_t i = 0; i < vars_.size(); ++i) d += weights_[i] * m.e[i];
  return d;
}

int Ring::aux_degree(const Monomial& m) const noexcept {
  int d = 0;
  for (std::size_t i = vars_.size(); i < total_vars(); ++i) d += m.e[i];
  return d;
}

int Ring::order_degree(const Monomial& m) const noexcept { return degree(m) + aux_degree(m); }

int Ring::compare(const Monomial& a, const Monomial& b) const noexcept {
  const int da = order_degree(a);
  const int db = order_degree(b);
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = total_vars(); i-- > 0;) {
    if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
  }
  return 0;
}

bool Ring::same_base(const Ring& o) const noexcept {
  if (this == &o) return true;
  return *field_ == *o.field_ && vars_ == o.vars_ && weights_ == o.weights_;
}

void require_same_ring(const Ring& a, const Ring& b, const char* where) {
  if (&a != &b && !(a == b)) throw Error(ErrorCode::kRingMismatch, where);
}

// ---------------------------------------------------------------------------
// Poly

Poly Poly::constant(RingPtr ring, Fq c) {
  Poly p(std::move(ring));
  if (!c.is_zero()) p.terms_.push_back({Monomial{}, c});
  return p;
}

Poly Poly::variable(RingPtr ring, std::size_t index) {
  if (index >= ring->total_vars()) throw Error(ErrorCode::kInvalidArgument, "variable index out of range");
  Monomial m;
  m.e[index] = 1;
  return term(std::move(ring), m, Fq{1});
}

Poly Poly::term(RingPtr ring, const Monomial& m, Fq c) {
  Poly p(std::move(ring));
  if (!c.is_zero()) p.terms_.push_back({m, c});
  return p;
}

Poly Poly::from_terms(RingPtr ring, std::vector<Term> terms) {
  Poly p(std::move(ring));
  const Ring& R = *p.ring_;
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) { return R.greater(a.m, b.m); });
  for (const Term& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().m == t.m) {
      p.terms_.back().c = R.field().add(p.terms_.back().c, t.c);
      if (p.terms_.back().c.is_zero()) p.terms_.pop_back();
    } else if (!t.c.is_zero()) {
      p.terms_.push_back(t);
    }
  }
  return p;
}

bool Poly::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].m == Monomial{});
}

bool Poly::has_aux() const noexcept {
  for (const Term& t : terms_) {
    if (ring_->aux_degree(t.m) != 0) return true;
  }
  return false;
}

Fq Poly::coeff(const Monomial& m) const {
  for (const Term& t : terms_) {
    if (t.m == m) return t.c;
  }
  return Fq{0};
}

Degree Poly::degree() const noexcept {
  if (terms_.empty()) return std::nullopt;
  int d = 0;
  for (const Term& t : terms_) d = std::max(d, ring_->degree(t.m));
  return d;
}

int Poly::aux_degree() const noexcept {
  int d = -1;
  for (const Term& t : terms_) d = std::max(d, ring_->aux_degree(t.m));
  return d;
}

int Poly::degree_in(std::size_t var) const noexcept {
  int d = -1;
  for (const Term& t : terms_) d = std::max(d, static_cast<int>(t.m.e[var]));
  return d;
}

Poly Poly::operator-() const {
  Poly r(ring_);
  r.terms_.reserve(terms_.size());
  for (const Term& t : terms_) r.terms_.push_back({t.m, field().neg(t.c)});
  return r;
}

void Poly::add_mul_term(const Poly& o, const Monomial& m, Fq c) {
  if (c.is_zero() || o.terms_.empty()) return;
  const Ring& R = *ring_;
  const Field& F = R.field();
  const std::size_t nv = R.total_vars();
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0;
  std::size_t j = 0;
  Term shifted{};
  bool have = false;
  while (i < terms_.size() || j < o.terms_.size() || have) {
    if (!have && j < o.terms_.size()) {
      shifted = {mono_mul(o.terms_[j].m, m, nv), F.mul(o.terms_[j].c, c)};
      ++j;
      have = true;
    }
    if (!have) {
      out.push_back(terms_[i++]);
      continue;
    }
    if (i >= terms_.size()) {
      out.push_back(shifted);
      have = false;
      continue;
    }
    const int cmp = R.compare(terms_[i].m, shifted.m);
    if (cmp > 0) {
      out.push_back(terms_[i++]);
    } else if (cmp < 0) {
      out.push_back(shifted);
      have = false;
    } else {
      const Fq s = F.add(terms_[i].c, shifted.c);
      if (!s.is_zero()) out.push_back({shifted.m, s});
      ++i;
      have = false;
    }
  }
  terms_ = std::move(out);
}

Poly& Poly::operator+=(const Poly& o) {
  require_same_ring(*ring_, *o.ring_, "poly add");
  add_mul_term(o, Monomial{}, Fq{1});
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  require_same_ring(*ring_, *o.ring_, "poly sub");
  add_mul_term(o, Monomial{}, field().neg(Fq{1}));
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  require_same_ring(*a.ring_, *b.ring_, "poly mul");
  const Poly& small = a.terms_.size() <= b.terms_.size() ? a : b;
  const Poly& large = a.terms_.size() <= b.terms_.size() ? b : a;
  Poly r(a.ring_);
  for (const Term& t : small.terms_) r.add_mul_term(large, t.m, t.c);
  return r;
}

Poly Poly::scaled(Fq c) const {
  if (c.is_zero()) return Poly(ring_);
  Poly r(ring_);
  r.terms_.reserve(terms_.size());
  for (const Term& t : terms_) r.terms_.push_back({t.m, field().mul(t.c, c)});
  return r;
}

Poly Poly::mul_term(const Monomial& m, Fq c) const {
  Poly r(ring_);
  r.add_mul_term(*this, m, c);
  return r;
}

Poly Poly::pow(unsigned e) const {
  Poly result = one(ring_);
  Poly base = *this;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

Poly Poly::monic() const {
  if (terms_.empty()) return *this;
  return scaled(field().inv(leading_coeff()));
}

Poly Poly::lift(const RingPtr& target) const {
  if (!ring_->same_base(*target) || target->naux() < ring_->naux()) {
    throw Error(ErrorCode::kRingMismatch, "lift needs the same ring variables and at least as many auxiliaries");
  }
  Poly r(target);
  r.terms_ = terms_;
  return r;
}

Poly Poly::restrict_to(const RingPtr& target) const {
  if (!ring_->same_base(*target)) throw Error(ErrorCode::kRingMismatch, "restrict needs the same ring variables");
  const std::size_t keep = target->total_vars();
  for (const Term& t : terms_) {
    for (std::size_t i = keep; i < ring_->total_vars(); ++i) {
      if (t.m.e[i] != 0) throw Error(ErrorCode::kAuxVarsPresent, "polynomial uses a dropped auxiliary variable");
    }
  }
  Poly r(target);
  r.terms_ = terms_;
  return r;
}

std::vector<Poly> Poly::coefficients_in(std::size_t var) const {
  const int d = degree_in(var);
  std::vector<std::vector<Term>> buckets(d < 0 ? 0 : d + 1);
  for (const Term& t : terms_) {
    Term u = t;
    u.m.e[var] = 0;
    buckets[t.m.e[var]].push_back(u);
  }
  std::vector<Poly> out;
  out.reserve(buckets.size());
  // Every term in a bucket shares the exponent of var, so zeroing it keeps
  // the bucket in grevlex order.
  for (auto& b : buckets) {
    Poly p(ring_);
    p.terms_ = std::move(b);
    out.push_back(std::move(p));
  }
  return out;
}

bool operator==(const Poly& a, const Poly& b) {
  if (!(a.ring_ == b.ring_ || *a.ring_ == *b.ring_)) return false;
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (!(a.terms_[i].m == b.terms_[i].m) || a.terms_[i].c != b.terms_[i].c) return false;
  }
  return true;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  const Field& F = field();
  std::string out;
  for (const Term& t : terms_) {
    if (!out.empty()) out += " + ";
    std::string mono;
    for (std::size_t i = 0; i < ring_->total_vars(); ++i) {
      if (t.m.e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += ring_->var_name(i);
      if (t.m.e[i] > 1) mono += "^" + std::to_string(t.m.e[i]);
    }
    if (mono.empty()) {
      out += F.to_string(t.c);
    } else if (t.c == F.one()) {
      out += mono;
    } else if (F.is_single_term(t.c)) {
      out += F.to_string(t.c) + "*" + mono;
    } else {
      out += "(" + F.to_string(t.c) + ")*" + mono;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Division, gcd, calculus

std::optional<Poly> divexact(const Poly& f, const Poly& g) {
  if (g.is_zero()) throw Error(ErrorCode::kDivisionByZeroPoly, "division by the zero polynomial");
  require_same_ring(f.ring(), g.ring(), "divexact");
  const Field& F = f.field();
  const std::size_t nv = f.ring().total_vars();
  const Monomial& lg = g.leading_monomial();
  const Fq inv_lc = F.inv(g.leading_coeff());
  Poly r = f;
  std::vector<Term> quotient;
  while (!r.is_zero()) {
    const Monomial& lr = r.leading_monomial();
    if (!divides(lg, lr, nv)) return std::nullopt;
    const Monomial m = mono_div(lr, lg, nv);
    const Fq c = F.mul(r.leading_coeff(), inv_lc);
    quotient.push_back({m, c});
    r.add_mul_term(g, m, F.neg(c));
  }
  return Poly::from_terms(f.ring_ptr(), std::move(quotient));
}

namespace {

Poly exact_or_throw(const Poly& f, const Poly& g) {
  auto q = divexact(f, g);
  if (!q) throw Error(ErrorCode::kInternal, "gcd: expected exact division");
  return *q;
}

Poly gcd_rec(const Poly& f, const Poly& g, std::size_t k);

Poly content_in(const Poly& f, std::size_t var) {
  Poly c(f.ring_ptr());
  for (const Poly& coef : f.coefficients_in(var)) {
    c = gcd_rec(c, coef, var);
    if (c.is_constant() && !c.is_zero()) break;
  }
  return c;
}

// Pseudo-remainder of a by b with respect to var.
Poly prem(Poly a, const Poly& b, std::size_t var) {
  const int db = b.degree_in(var);
  const Poly lcb = b.coefficients_in(var).back();
  while (!a.is_zero() && a.degree_in(var) >= db) {
    const int da = a.degree_in(var);
    const Poly lca = a.coefficients_in(var).back();
    Monomial shift;
    shift.e[var] = static_cast<std::uint16_t>(da - db);
    Poly next = lcb * a;
    Poly sub = lca * b;
    next.add_mul_term(sub, shift, a.field().neg(Fq{1}));
    a = std::move(next);
  }
  return a;
}

// gcd of polynomials in the first k variables.
Poly gcd_rec(const Poly& f, const Poly& g, std::size_t k) {
  if (f.is_zero()) return g.monic();
  if (g.is_zero()) return f.monic();
  if (f.is_constant() || g.is_constant() || k == 0) return Poly::one(f.ring_ptr());
  const std::size_t var = k - 1;
  if (f.degree_in(var) <= 0 && g.degree_in(var) <= 0) return gcd_rec(f, g, k - 1);

  const Poly cf = content_in(f, var);
  const Poly cg = content_in(g, var);
  const Poly c = gcd_rec(cf, cg, var);
  Poly a = exact_or_throw(f, cf);
  Poly b = exact_or_throw(g, cg);
  if (a.degree_in(var) < b.degree_in(var)) std::swap(a, b);
  while (!b.is_zero()) {
    Poly r = prem(a, b, var);
    a = std::move(b);
    if (r.is_zero()) {
      b = Poly(r.ring_ptr());
    } else {
      b = exact_or_throw(r, content_in(r, var));
    }
  }
  if (a.degree_in(var) <= 0) return c.monic();
  return (c * a).monic();
}

}  // namespace

Poly gcd(const Poly& f, const Poly& g) {
  require_same_ring(f.ring(), g.ring(), "gcd");
  if (f.has_aux() || g.has_aux()) throw Error(ErrorCode::kAuxVarsPresent, "gcd is defined on ring variables only");
  return gcd_rec(f, g, f.ring().nvars()).monic();
}

Poly partial(const Poly& f, std::size_t var) {
  const Field& F = f.field();
  std::vector<Term> out;
  for (const Term& t : f.terms()) {
    const int e = t.m.e[var];
    if (e % F.p() == 0) continue;
    Term u = t;
    u.m.e[var] = static_cast<std::uint16_t>(e - 1);
    u.c = F.mul(t.c, F.from_int(e));
    out.push_back(u);
  }
  return Poly::from_terms(f.ring_ptr(), std::move(out));
}

Poly eval_aux(const Poly& f, std::span<const Fq> point) {
  const Ring& R = f.ring();
  if (point.size() != R.naux()) throw Error(ErrorCode::kLengthMismatch, "point length must equal aux count");
  const Field& F = R.field();
  const RingPtr base = R.naux() == 0 ? f.ring_ptr() : R.base();
  std::vector<Term> out;
  out.reserve(f.size());
  for (const Term& t : f.terms()) {
    Term u = t;
    for (std::size_t a = 0; a < point.size(); ++a) {
      const std::size_t i = R.nvars() + a;
      u.c = F.mul(u.c, F.pow(point[a], u.m.e[i]));
      u.m.e[i] = 0;
    }
    out.push_back(u);
  }
  return Poly::from_terms(base, std::move(out));
}

Poly substitute(const Poly& f, std::size_t var, const Poly& value) {
  require_same_ring(f.ring(), value.ring(), "substitute");
  const auto coeffs = f.coefficients_in(var);
  Poly acc(f.ring_ptr());
  for (std::size_t k = coeffs.size(); k-- > 0;) acc = acc * value + coeffs[k];
  return acc;
}

std::vector<Monomial> monomial_basis_leq(const Ring& ring, int d) {
  std::vector<Monomial> out;
  if (d < 0) return out;
  Monomial cur;
  const std::size_t n = ring.nvars();
  auto rec = [&](auto&& self, std::size_t i, int budget) -> void {
    if (i == n) {
      out.push_back(cur);
      return;
    }
    const int w = ring.weights()[i];
    for (int e = 0; e * w <= budget; ++e) {
      cur.e[i] = static_cast<std::uint16_t>(e);
      self(self, i + 1, budget - e * w);
    }
    cur.e[i] = 0;
  };
  rec(rec, 0, d);
  std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) {
    const int da = ring.degree(a);
    const int db = ring.degree(b);
    if (da != db) return da < db;
    return ring.greater(a, b);
  });
  return out;
}

std::size_t monomial_count_leq(const Ring& ring, Degree d) {
  if (!d || *d < 0) return 0;
  return monomial_basis_leq(ring, *d).size();
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

class PolyParser {
 public:
  PolyParser(const RingPtr& ring, std::string_view text) : ring_(ring), text_(text) {}

  Poly parse() {
    Poly p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorCode::kParseError, "column " + std::to_string(pos_ + 1) + ": " + msg);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Poly expr() {
    Poly acc(ring_);
    bool negate = false;
    if (eat('-')) {
      negate = true;
    } else {
      eat('+');
    }
    Poly t = term();
    acc = negate ? -t : t;
    while (true) {
      if (eat('+')) {
        acc += term();
      } else if (eat('-')) {
        acc -= term();
      } else {
        break;
      }
    }
    return acc;
  }

  Poly term() {
    Poly acc = factor();
    while (eat('*')) acc = acc * factor();
    return acc;
  }

  Poly factor() {
    Poly base = primary();
    if (eat('^')) {
      skip_ws();
      const unsigned long long e = integer();
      if (e > 4096) fail("exponent too large");
      base = base.pow(static_cast<unsigned>(e));
    }
    return base;
  }

  unsigned long long integer() {
    skip_ws();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) fail("expected integer");
    unsigned long long v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + static_cast<unsigned>(text_[pos_] - '0');
      if (v > 1000000000ULL) fail("integer too large");
      ++pos_;
    }
    return v;
  }

  Poly primary() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Poly inner = expr();
      if (!eat(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const auto v = integer();
      return Poly::constant(ring_, ring_->field().from_int(static_cast<long long>(v % ring_->field().p())));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      const std::string name(text_.substr(start, pos_ - start));
      if (name == "g") return Poly::constant(ring_, ring_->field().gen());
      const auto idx = ring_->index_of(name);
      if (!idx) {
        throw Error(ErrorCode::kSemanticError, "column " + std::to_string(start + 1) + ": unknown variable '" + name + "'");
      }
      return Poly::variable(ring_, *idx);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  const RingPtr& ring_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(const RingPtr& ring, std::string_view text) { return PolyParser(ring, text).parse(); }

}  // namespace pfol
