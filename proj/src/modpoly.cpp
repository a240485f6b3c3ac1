#include "origami/modpoly.hpp"

#include <algorithm>

namespace origami {

bool is_prime_u64(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull}) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  for (uint64_t d = 17; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

uint64_t next_prime_u64(uint64_t n) {
  uint64_t c = n + 1;
  while (!is_prime_u64(c)) ++c;
  return c;
}

namespace {
uint64_t mulmod(uint64_t a, uint64_t b, uint64_t p) {
  return static_cast<uint64_t>((__uint128_t)a * b % p);
}
uint64_t powmod_u64(uint64_t a, uint64_t e, uint64_t p) {
  uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}
uint64_t invmod(uint64_t a, uint64_t p) { return powmod_u64(a % p, p - 2, p); }

uint64_t mpz_mod_u64(const Integer& n, uint64_t p) {
  Integer r = n % Integer(static_cast<unsigned long>(p));
  if (r < 0) r += Integer(static_cast<unsigned long>(p));
  return mpz_get_ui(r.get_mpz_t());
}
}  // namespace

ModPoly::ModPoly(uint64_t p, std::vector<uint64_t> coeffs) : p_(p), c_(std::move(coeffs)) {
  for (auto& v : c_) v %= p_;
  trim();
}

void ModPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

std::optional<ModPoly> ModPoly::from_poly(const MultiPoly& f, Sym var, uint64_t p) {
  auto coeffs = f.to_univariate(var);
  std::vector<uint64_t> out(coeffs.size(), 0);
  for (size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i].is_zero()) continue;
    Rational c = coeffs[i].constant_value();  // throws if multivariate
    uint64_t den = mpz_mod_u64(c.den(), p);
    if (den == 0) return std::nullopt;
    uint64_t num = mpz_mod_u64(c.num(), p);
    out[i] = mulmod(num, invmod(den, p), p);
  }
  return ModPoly(p, std::move(out));
}

ModPoly ModPoly::operator+(const ModPoly& o) const {
  std::vector<uint64_t> r(std::max(c_.size(), o.c_.size()), 0);
  for (size_t i = 0; i < r.size(); ++i) r[i] = (coeff(i) + o.coeff(i)) % p_;
  return ModPoly(p_, std::move(r));
}

ModPoly ModPoly::operator-(const ModPoly& o) const {
  std::vector<uint64_t> r(std::max(c_.size(), o.c_.size()), 0);
  for (size_t i = 0; i < r.size(); ++i) r[i] = (coeff(i) + p_ - o.coeff(i)) % p_;
  return ModPoly(p_, std::move(r));
}

ModPoly ModPoly::operator*(const ModPoly& o) const {
  if (is_zero() || o.is_zero()) return ModPoly(p_);
  std::vector<uint64_t> r(c_.size() + o.c_.size() - 1, 0);
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; j < o.c_.size(); ++j)
      r[i + j] = (r[i + j] + mulmod(c_[i], o.c_[j], p_)) % p_;
  }
  return ModPoly(p_, std::move(r));
}

ModPoly ModPoly::scaled(uint64_t k) const {
  std::vector<uint64_t> r = c_;
  for (auto& v : r) v = mulmod(v, k % p_, p_);
  return ModPoly(p_, std::move(r));
}

ModPoly ModPoly::monic() const {
  if (is_zero()) return *this;
  return scaled(invmod(c_.back(), p_));
}

ModPoly ModPoly::rem(const ModPoly& mod) const {
  if (mod.is_zero()) throw std::domain_error("ModPoly::rem: zero modulus");
  std::vector<uint64_t> r = c_;
  uint64_t inv_lead = invmod(mod.c_.back(), p_);
  int dm = mod.degree();
  for (int i = static_cast<int>(r.size()) - 1; i >= dm; --i) {
    if (r[i] == 0) continue;
    uint64_t q = mulmod(r[i], inv_lead, p_);
    for (int j = 0; j <= dm; ++j)
      r[i - dm + j] = (r[i - dm + j] + p_ - mulmod(q, mod.c_[j], p_)) % p_;
  }
  r.resize(std::min<size_t>(r.size(), dm));
  return ModPoly(p_, std::move(r));
}

ModPoly ModPoly::derivative() const {
  if (c_.size() <= 1) return ModPoly(p_);
  std::vector<uint64_t> r(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = mulmod(c_[i], i % p_, p_);
  return ModPoly(p_, std::move(r));
}

uint64_t ModPoly::eval(uint64_t x) const {
  uint64_t acc = 0;
  for (size_t i = c_.size(); i-- > 0;) acc = (mulmod(acc, x, p_) + c_[i]) % p_;
  return acc;
}

ModPoly gcd(ModPoly a, ModPoly b) {
  while (!b.is_zero()) {
    ModPoly r = a.rem(b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

ModPoly ModPoly::powmod(const ModPoly& base, const Integer& e) const {
  ModPoly result = ModPoly::constant(p_, 1);
  ModPoly acc = base.rem(*this);
  Integer k = e;
  while (k > 0) {
    if (mpz_odd_p(k.get_mpz_t())) result = (result * acc).rem(*this);
    acc = (acc * acc).rem(*this);
    k >>= 1;
  }
  return result;
}

namespace {
// quotient of f by a monic divisor g (exact division)
ModPoly div_by_monic(const ModPoly& f, const ModPoly& g) {
  uint64_t p = f.prime();
  ModPoly r = f;
  std::vector<uint64_t> q(std::max(f.degree() - g.degree() + 1, 1), 0);
  while (r.degree() >= g.degree()) {
    int shift = r.degree() - g.degree();
    uint64_t c = r.coeffs().back();
    q[shift] = c;
    std::vector<uint64_t> sub(shift + g.degree() + 1, 0);
    for (int j = 0; j <= g.degree(); ++j)
      sub[shift + j] = static_cast<uint64_t>((__uint128_t)c * g.coeff(j) % p);
    r = r - ModPoly(p, sub);
  }
  return ModPoly(p, std::move(q));
}
}  // namespace

std::vector<int> factor_degrees(const ModPoly& f_in) {
  ModPoly f = f_in.monic();
  uint64_t p = f.prime();
  std::vector<int> degrees;
  ModPoly h = ModPoly::x(p);  // x^(p^d) mod f, built incrementally
  int d = 0;
  while (f.degree() > 0) {
    ++d;
    if (2 * d > f.degree()) {
      degrees.push_back(f.degree());  // what remains is irreducible
      break;
    }
    h = f.powmod(h, Integer(static_cast<unsigned long>(p)));
    ModPoly g = gcd(h - ModPoly::x(p), f);
    if (g.degree() > 0) {
      for (int i = 0; i < g.degree() / d; ++i) degrees.push_back(d);
      f = div_by_monic(f, g);
      h = h.rem(f);
    }
  }
  std::sort(degrees.begin(), degrees.end());
  return degrees;
}

std::vector<uint64_t> roots_mod_p(const ModPoly& f_in, uint64_t seed) {
  uint64_t p = f_in.prime();
  ModPoly f = f_in.monic();
  // isolate the product of distinct linear factors: gcd(x^p - x, f)
  ModPoly xp = f.powmod(ModPoly::x(p), Integer(static_cast<unsigned long>(p)));
  ModPoly lin = gcd(xp - ModPoly::x(p), f);
  std::vector<uint64_t> out;
  // random splitting via gcd(lin, (x+delta)^((p-1)/2) - 1)
  std::vector<ModPoly> stack{lin};
  uint64_t state = seed * 6364136223846793005ull + 1442695040888963407ull;
  while (!stack.empty()) {
    ModPoly cur = stack.back();
    stack.pop_back();
    if (cur.degree() <= 0) continue;
    if (cur.degree() == 1) {
      // root = -c0 / c1
      uint64_t r = mulmod(p - cur.coeff(0) % p, powmod_u64(cur.coeff(1), p - 2, p), p);
      out.push_back(r % p);
      continue;
    }
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    uint64_t delta = state % p;
    ModPoly shifted(p, {delta, 1});
    ModPoly pw = cur.powmod(shifted, Integer(static_cast<unsigned long>((p - 1) / 2)));
    ModPoly g = gcd(pw - ModPoly::constant(p, 1), cur);
    if (g.degree() == 0 || g.degree() == cur.degree()) {
      stack.push_back(cur);  // unlucky delta, retry
      continue;
    }
    stack.push_back(g);
    stack.push_back(div_by_monic(cur, g));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace origami
