#ifndef ORIGAMI_EXACTNUM_HPP
#define ORIGAMI_EXACTNUM_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace origami {

/// Arbitrary-precision signed integer (sign + magnitude, no overflow).
using Integer = mpz_class;

/// Rational number kept in lowest terms with positive denominator.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}
  Rational(const Integer& n) : v_(n) {}
  Rational(const Integer& num, const Integer& den) : v_(num, den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    v_.canonicalize();
  }
  Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}

  /// Parses "p" or "p/q".
  static Rational from_string(const std::string& s);

  Integer num() const { return v_.get_num(); }
  Integer den() const { return v_.get_den(); }
  bool is_integer() const { return v_.get_den() == 1; }
  bool is_zero() const { return v_ == 0; }
  int sgn() const { return sgn_of(v_); }

  std::string str() const;

  Rational operator-() const { return wrap(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational l, const Rational& r) { return l += r; }
  friend Rational operator-(Rational l, const Rational& r) { return l -= r; }
  friend Rational operator*(Rational l, const Rational& r) { return l *= r; }
  friend Rational operator/(Rational l, const Rational& r) { return l /= r; }
  friend bool operator==(const Rational& l, const Rational& r) { return l.v_ == r.v_; }
  friend bool operator!=(const Rational& l, const Rational& r) { return l.v_ != r.v_; }
  friend bool operator<(const Rational& l, const Rational& r) { return l.v_ < r.v_; }
  friend bool operator>(const Rational& l, const Rational& r) { return l.v_ > r.v_; }

 private:
  static Rational wrap(mpq_class q) {
    Rational r;
    r.v_ = std::move(q);
    return r;
  }
  static int sgn_of(const mpq_class& q) { return mpq_sgn(q.get_mpq_t()); }
  mpq_class v_;
};

/// Integer in factored display form: sign * prod p_i^e_i * cofactor.
/// Primes are strictly increasing and pass a probabilistic primality test;
/// cofactor is 1 when the factorization is complete.
struct FactoredInteger {
  int sign = 1;
  std::vector<std::pair<Integer, unsigned>> factors;
  Integer unfactored_cofactor = 1;

  Integer value() const;
  bool complete() const { return unfactored_cofactor == 1; }
  /// Renders like "-2^72 * 3^84 * 83^3 * 739^4".
  std::string str() const;
};

/// 2^e as an Integer.
inline Integer int_pow2(unsigned e) {
  Integer r = 1;
  r <<= e;
  return r;
}

/// Floor square root. Throws std::domain_error for negative input.
Integer isqrt(const Integer& n);

/// True iff q is the square of a rational.
bool is_square(const Rational& q);

bool is_probable_prime(const Integer& n);

/// Factors n (trial division, then Brent rho bounded by effort). Whatever
/// resists splitting is left in unfactored_cofactor.
FactoredInteger factor(const Integer& n, uint64_t effort = 1u << 20);

/// The unique squarefree integer s with q = s * (rational square); keeps the
/// sign of q. Throws std::domain_error on zero input, std::runtime_error if a
/// cofactor resists factoring at the given effort.
Integer squarefree_part(const Rational& q, uint64_t effort = 1u << 22);

}  // namespace origami

#endif
