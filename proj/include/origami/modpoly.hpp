#ifndef ORIGAMI_MODPOLY_HPP
#define ORIGAMI_MODPOLY_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "origami/polyring.hpp"

namespace origami {

bool is_prime_u64(uint64_t n);
uint64_t next_prime_u64(uint64_t n);

/// Dense univariate polynomial over F_p (p an odd prime < 2^31).
class ModPoly {
 public:
  ModPoly(uint64_t p) : p_(p) {}
  ModPoly(uint64_t p, std::vector<uint64_t> coeffs);

  /// Reduction of a univariate MultiPoly in var; nullopt when a coefficient
  /// denominator vanishes mod p.
  static std::optional<ModPoly> from_poly(const MultiPoly& f, Sym var, uint64_t p);

  uint64_t prime() const { return p_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  uint64_t coeff(size_t i) const { return i < c_.size() ? c_[i] : 0; }
  const std::vector<uint64_t>& coeffs() const { return c_; }

  ModPoly operator+(const ModPoly& o) const;
  ModPoly operator-(const ModPoly& o) const;
  ModPoly operator*(const ModPoly& o) const;
  ModPoly scaled(uint64_t k) const;
  ModPoly monic() const;
  ModPoly rem(const ModPoly& mod) const;
  ModPoly derivative() const;
  uint64_t eval(uint64_t x) const;

  static ModPoly x(uint64_t p) { return ModPoly(p, {0, 1}); }
  static ModPoly constant(uint64_t p, uint64_t c) { return ModPoly(p, {c}); }

  friend ModPoly gcd(ModPoly a, ModPoly b);
  /// base^e mod (this) where base is a polynomial.
  ModPoly powmod(const ModPoly& base, const Integer& e) const;

 private:
  void trim();
  uint64_t p_;
  std::vector<uint64_t> c_;  // c_[i] = coefficient of x^i, in [0, p)
};

/// Distinct-degree factorization: multiset of irreducible factor degrees of a
/// squarefree f mod p, in increasing order.
std::vector<int> factor_degrees(const ModPoly& f);

/// All roots of f in F_p (with multiplicity stripped), via equal-degree
/// splitting of the degree-1 part.
std::vector<uint64_t> roots_mod_p(const ModPoly& f, uint64_t seed = 1);

}  // namespace origami

#endif
