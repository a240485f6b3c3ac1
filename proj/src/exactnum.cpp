#include "origami/exactnum.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace origami {

Rational Rational::from_string(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(Integer(s));
  Integer num(s.substr(0, slash));
  Integer den(s.substr(slash + 1));
  return Rational(num, den);
}

std::string Rational::str() const {
  if (is_integer()) return num().get_str();
  return num().get_str() + "/" + den().get_str();
}

Integer FactoredInteger::value() const {
  Integer v = unfactored_cofactor;
  for (const auto& [p, e] : factors) {
    Integer pe;
    mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e);
    v *= pe;
  }
  return sign < 0 ? Integer(-v) : v;
}

std::string FactoredInteger::str() const {
  std::ostringstream os;
  if (sign < 0) os << "-";
  bool first = true;
  for (const auto& [p, e] : factors) {
    if (!first) os << " * ";
    first = false;
    os << p.get_str();
    if (e > 1) os << "^" << e;
  }
  if (unfactored_cofactor != 1) {
    if (!first) os << " * ";
    first = false;
    os << unfactored_cofactor.get_str() << " (composite)";
  }
  if (first) os << "1";
  return os.str();
}

Integer isqrt(const Integer& n) {
  if (n < 0) throw std::domain_error("isqrt: negative input");
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

bool is_square(const Rational& q) {
  if (q.sgn() < 0) return false;
  return mpz_perfect_square_p(q.num().get_mpz_t()) &&
         mpz_perfect_square_p(q.den().get_mpz_t());
}

namespace {

Integer powmod(Integer base, const Integer& exp, const Integer& mod) {
  Integer r;
  mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), mod.get_mpz_t());
  return r;
}

// Deterministic below 3.317e24 with this witness set; a few extra
// pseudo-random rounds cover anything larger.
bool miller_rabin(const Integer& n) {
  static const long kWitnesses[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  Integer d = n - 1;
  unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
  mpz_tdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
  auto witness_composite = [&](const Integer& a) {
    if (a % n == 0) return false;
    Integer x = powmod(a, d, n);
    if (x == 1 || x == n - 1) return false;
    for (unsigned long i = 1; i < s; ++i) {
      x = x * x % n;
      if (x == n - 1) return false;
    }
    return true;
  };
  for (long a : kWitnesses)
    if (witness_composite(Integer(a))) return false;
  Integer threshold("3317044064679887385961981");
  if (n < threshold) return true;
  static gmp_randclass rng(gmp_randinit_default);
  for (int round = 0; round < 16; ++round) {
    Integer a = rng.get_z_range(n - 3) + 2;
    if (witness_composite(a)) return false;
  }
  return true;
}

// Brent's cycle-finding variant of Pollard rho; returns a nontrivial factor
// or 0 when the iteration budget runs out. The budget is shared across
// restart attempts so a stubborn composite cannot multiply the work bound.
Integer brent_rho(const Integer& n, uint64_t max_iters, unsigned long seed) {
  if (n % 2 == 0) return 2;
  gmp_randclass rng(gmp_randinit_default);
  rng.seed(seed);
  uint64_t used = 0;
  while (used < max_iters) {
    Integer y = rng.get_z_range(n - 1) + 1;
    Integer c = rng.get_z_range(n - 1) + 1;
    Integer m = 128, g = 1, r = 1, q = 1, x, ys;
    while (g == 1 && used < max_iters) {
      x = y;
      for (Integer i = 0; i < r; ++i) y = (y * y + c) % n;
      Integer k = 0;
      while (k < r && g == 1) {
        ys = y;
        Integer lim = std::min(m, Integer(r - k));
        for (Integer i = 0; i < lim; ++i) {
          y = (y * y + c) % n;
          Integer diff = x - y;
          q = q * (diff < 0 ? Integer(-diff) : diff) % n;
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += m;
        used += mpz_get_ui(lim.get_mpz_t());
      }
      r *= 2;
    }
    if (g == n) {
      // backtrack one step at a time
      do {
        ys = (ys * ys + c) % n;
        Integer diff = x - ys;
        mpz_gcd(g.get_mpz_t(), (diff < 0 ? Integer(-diff) : diff).get_mpz_t(),
                n.get_mpz_t());
      } while (g == 1);
    }
    if (g != n && g != 1) return g;
  }
  return 0;
}

void factor_into(const Integer& n, uint64_t effort,
                 std::map<Integer, unsigned>& out, Integer& residue) {
  if (n == 1) return;
  if (miller_rabin(n)) {
    out[n] += 1;
    return;
  }
  // perfect powers split for free
  if (mpz_perfect_power_p(n.get_mpz_t())) {
    for (unsigned long k = 2; k <= mpz_sizeinbase(n.get_mpz_t(), 2); ++k) {
      Integer root;
      if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), k)) {
        std::map<Integer, unsigned> sub;
        factor_into(root, effort, sub, residue);
        for (auto& [p, e] : sub) out[p] += e * k;
        return;
      }
    }
  }
  Integer g = brent_rho(n, effort, 0x9e3779b97f4a7c15ull ^ mpz_get_ui(n.get_mpz_t()));
  if (g == 0) {
    residue *= n;
    return;
  }
  factor_into(g, effort, out, residue);
  factor_into(n / g, effort, out, residue);
}

}  // namespace

bool is_probable_prime(const Integer& n) {
  if (n < 2) return false;
  for (long p : {2, 3, 5, 7, 11, 13}) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  return miller_rabin(n);
}

FactoredInteger factor(const Integer& n, uint64_t effort) {
  if (n == 0) throw std::domain_error("factor: zero input");
  FactoredInteger out;
  out.sign = n < 0 ? -1 : 1;
  Integer m = abs(n);
  std::map<Integer, unsigned> found;
  for (long p = 2; p < 100000 && Integer(p) * p <= m; p += (p == 2 ? 1 : 2)) {
    while (m % p == 0) {
      found[Integer(p)] += 1;
      m /= p;
    }
  }
  Integer residue = 1;
  if (m > 1) factor_into(m, effort, found, residue);
  out.factors.assign(found.begin(), found.end());
  out.unfactored_cofactor = residue;
  return out;
}

Integer squarefree_part(const Rational& q, uint64_t effort) {
  if (q.is_zero()) throw std::domain_error("squarefree_part: zero input");
  // sf(p/q) = sf(p*q) since p/q = pq / q^2
  Integer n = q.num() * q.den();
  FactoredInteger f = factor(n, effort);
  if (!f.complete()) {
    // one retry with a bigger budget before giving up
    f = factor(n, effort * 16);
    if (!f.complete())
      throw std::runtime_error("squarefree_part: cofactor resisted factoring: " +
                               f.unfactored_cofactor.get_str());
  }
  Integer s = f.sign;
  for (const auto& [p, e] : f.factors)
    if (e % 2) s *= p;
  return s;
}

}  // namespace origami
