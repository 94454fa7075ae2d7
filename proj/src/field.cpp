#include "pfol/field.hpp"

#include <algorithm>

#include "pfol/error.hpp"

namespace pfol {
namespace {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

int mod(long long a, int p) {
  long long r = a % p;
  return static_cast<int>(r < 0 ? r + p : r);
}

// Remainder of a by monic b over F_p; coefficient lists low to high.
std::vector<int> poly_rem(std::vector<int> a, const std::vector<int>& b, int p) {
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    const int lead = a.back();
    const std::size_t shift = a.size() - 1 - db;
    if (lead != 0) {
      for (std::size_t i = 0; i <= db; ++i) a[shift + i] = mod(a[shift + i] - lead * b[i], p);
    }
    a.pop_back();
  }
  return a;
}

bool divides(const std::vector<int>& h, const std::vector<int>& f, int p) {
  const auto r = poly_rem(f, h, p);
  return std::all_of(r.begin(), r.end(), [](int c) { return c == 0; });
}

// Trial division by every monic polynomial of degree 1..deg/2.
bool irreducible(const std::vector<int>& f, int p) {
  const int deg = static_cast<int>(f.size()) - 1;
  for (int d = 1; 2 * d <= deg; ++d) {
    std::vector<int> h(d + 1, 0);
    h[d] = 1;
    int count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (int idx = 0; idx < count; ++idx) {
      int t = idx;
      for (int i = 0; i < d; ++i) {
        h[i] = t % p;
        t /= p;
      }
      if (divides(h, f, p)) return false;
    }
  }
  return true;
}

}  // namespace

std::vector<int> Field::default_modulus(int p, int r) {
  // Conway polynomials, low to high.
  struct Entry {
    int p, r;
    std::vector<int> c;
  };
  static const std::vector<Entry> table = {
      {2, 1, {1, 1}},       {2, 2, {1, 1, 1}},       {2, 3, {1, 1, 0, 1}},    {2, 4, {1, 1, 0, 0, 1}},
      {3, 1, {1, 1}},       {3, 2, {2, 2, 1}},       {3, 3, {1, 2, 0, 1}},    {3, 4, {2, 0, 0, 2, 1}},
      {5, 1, {3, 1}},       {5, 2, {2, 4, 1}},       {5, 3, {3, 3, 0, 1}},    {5, 4, {2, 4, 4, 0, 1}},
      {7, 1, {4, 1}},       {7, 2, {3, 6, 1}},       {7, 3, {4, 0, 6, 1}},    {7, 4, {3, 4, 5, 0, 1}},
  };
  for (const auto& e : table) {
    if (e.p == p && e.r == r) return e.c;
  }
  throw Error(ErrorCode::kFieldTooLarge,
              "no default modulus for p=" + std::to_string(p) + " r=" + std::to_string(r));
}

FieldPtr Field::make(int p, int r) {
  if (!is_prime(p)) throw Error(ErrorCode::kNonPrime, std::to_string(p) + " is not prime");
  return make(p, r, default_modulus(p, r));
}

FieldPtr Field::make(int p, int r, std::vector<int> modulus) {
  if (!is_prime(p)) throw Error(ErrorCode::kNonPrime, std::to_string(p) + " is not prime");
  if (r < 1) throw Error(ErrorCode::kInvalidArgument, "extension degree must be >= 1");
  if (p > kMaxPrime || r > kMaxDegree) {
    throw Error(ErrorCode::kFieldTooLarge, "fields are limited to p <= 7 and r <= 4");
  }
  if (r == 1 && modulus.size() == 1 && modulus[0] == 1) modulus = {0, 1};
  if (static_cast<int>(modulus.size()) != r + 1) {
    throw Error(ErrorCode::kInvalidArgument, "modulus must list r+1 coefficients");
  }
  for (int& c : modulus) c = mod(c, p);
  if (modulus.back() != 1) throw Error(ErrorCode::kInvalidArgument, "modulus must be monic");
  if (!irreducible(modulus, p)) throw Error(ErrorCode::kReducibleModulus, "modulus is reducible over F_p");
  return FieldPtr(new Field(p, r, std::move(modulus)));
}

Field::Field(int p, int r, std::vector<int> modulus) : p_(p), r_(r), q_(1), modulus_(std::move(modulus)) {
  for (int i = 0; i < r_; ++i) q_ *= p_;

  digits_.assign(static_cast<std::size_t>(q_) * r_, 0);
  for (int a = 0; a < q_; ++a) {
    int t = a;
    for (int i = 0; i < r_; ++i) {
      digits_[a * r_ + i] = static_cast<std::uint8_t>(t % p_);
      t /= p_;
    }
  }
  auto encode = [&](const std::vector<int>& c) {
    int v = 0;
    for (int i = r_ - 1; i >= 0; --i) v = v * p_ + (i < static_cast<int>(c.size()) ? c[i] : 0);
    return static_cast<std::uint16_t>(v);
  };
  auto decode = [&](int a) {
    std::vector<int> c(r_);
    for (int i = 0; i < r_; ++i) c[i] = digits_[a * r_ + i];
    return c;
  };
  auto slow_mul = [&](int a, int b) {
    const auto ca = decode(a);
    const auto cb = decode(b);
    std::vector<int> prod(2 * r_ - 1, 0);
    for (int i = 0; i < r_; ++i)
      for (int j = 0; j < r_; ++j) prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p_;
    return encode(poly_rem(prod, modulus_, p_));
  };

  if (r_ == 1) {
    gen_ = Fq{static_cast<std::uint16_t>(mod(-modulus_[0], p_))};
  } else {
    gen_ = Fq{static_cast<std::uint16_t>(p_)};
  }

  neg_.resize(q_);
  for (int a = 0; a < q_; ++a) {
    auto c = decode(a);
    for (int& x : c) x = mod(-x, p_);
    neg_[a] = encode(c);
  }

  // Primitive element search; the multiplicative group is cyclic of order q-1.
  const int order = q_ - 1;
  int prim = 1;
  for (int w = 1; w < q_; ++w) {
    int x = 1;
    int k = 0;
    do {
      x = slow_mul(x, w);
      ++k;
    } while (x != 1);
    if (k == order) {
      prim = w;
      break;
    }
  }
  exp_.resize(2 * static_cast<std::size_t>(order));
  log_.assign(q_, 0);
  int x = 1;
  for (int i = 0; i < order; ++i) {
    exp_[i] = static_cast<std::uint16_t>(x);
    exp_[i + order] = static_cast<std::uint16_t>(x);
    log_[x] = static_cast<std::uint32_t>(i);
    x = slow_mul(x, prim);
  }

  frob_.resize(q_);
  root_.resize(q_);
  for (int a = 0; a < q_; ++a) frob_[a] = pow(Fq{static_cast<std::uint16_t>(a)}, p_).v;
  for (int a = 0; a < q_; ++a) root_[frob_[a]] = static_cast<std::uint16_t>(a);
}

Fq Field::from_int(long long n) const noexcept { return Fq{static_cast<std::uint16_t>(mod(n, p_))}; }

Fq Field::from_coeffs(std::span<const int> coeffs) const {
  if (static_cast<int>(coeffs.size()) > r_) {
    throw Error(ErrorCode::kLengthMismatch, "too many coefficients for field element");
  }
  int v = 0;
  for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i) v = v * p_ + mod(coeffs[i], p_);
  return Fq{static_cast<std::uint16_t>(v)};
}

std::vector<int> Field::coeffs(Fq a) const {
  std::vector<int> c(r_);
  for (int i = 0; i < r_; ++i) c[i] = digits_[a.v * r_ + i];
  return c;
}

Fq Field::add(Fq a, Fq b) const noexcept {
  if (p_ == 2) return Fq{static_cast<std::uint16_t>(a.v ^ b.v)};
  int v = 0;
  for (int i = r_ - 1; i >= 0; --i) {
    int d = digits_[a.v * r_ + i] + digits_[b.v * r_ + i];
    if (d >= p_) d -= p_;
    v = v * p_ + d;
  }
  return Fq{static_cast<std::uint16_t>(v)};
}

Fq Field::neg(Fq a) const noexcept { return Fq{neg_[a.v]}; }

Fq Field::sub(Fq a, Fq b) const noexcept { return add(a, neg(b)); }

Fq Field::mul(Fq a, Fq b) const noexcept {
  if (a.v == 0 || b.v == 0) return zero();
  return Fq{exp_[log_[a.v] + log_[b.v]]};
}

Fq Field::inv(Fq a) const {
  if (a.v == 0) throw Error(ErrorCode::kDivisionByZero, "inverse of zero");
  const int order = q_ - 1;
  return Fq{exp_[(order - log_[a.v]) % order]};
}

Fq Field::div(Fq a, Fq b) const { return mul(a, inv(b)); }

Fq Field::pow(Fq a, unsigned long long e) const noexcept {
  if (e == 0) return one();
  if (a.v == 0) return zero();
  const unsigned long long order = static_cast<unsigned long long>(q_ - 1);
  return Fq{exp_[(log_[a.v] * (e % order)) % order]};
}

Fq Field::frobenius(Fq a) const noexcept { return Fq{frob_[a.v]}; }

Fq Field::pth_root(Fq a) const noexcept { return Fq{root_[a.v]}; }

int Field::prime_value(Fq a) const {
  if (!in_prime_field(a)) throw Error(ErrorCode::kInvalidArgument, "element is not in the prime field");
  return digits_[a.v * r_];
}

bool Field::is_single_term(Fq a) const {
  int nonzero = 0;
  for (int i = 0; i < r_; ++i) nonzero += digits_[a.v * r_ + i] != 0;
  return nonzero <= 1;
}

std::string Field::to_string(Fq a) const {
  if (a.v == 0) return "0";
  if (r_ == 1) return std::to_string(a.v);
  std::string out;
  for (int i = r_ - 1; i >= 0; --i) {
    const int c = digits_[a.v * r_ + i];
    if (c == 0) continue;
    if (!out.empty()) out += " + ";
    if (i == 0) {
      out += std::to_string(c);
      continue;
    }
    if (c != 1) out += std::to_string(c) + "*";
    out += "g";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

}  // namespace pfol
