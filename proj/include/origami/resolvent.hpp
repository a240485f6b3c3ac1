#ifndef ORIGAMI_RESOLVENT_HPP
#define ORIGAMI_RESOLVENT_HPP

#include <map>
#include <string>
#include <vector>

#include "origami/divpoly.hpp"
#include "origami/elimination.hpp"
#include "origami/exactnum.hpp"
#include "origami/identity.hpp"
#include "origami/modpoly.hpp"
#include "origami/polyring.hpp"

namespace origami {

/// Monic quartic x^4 + c3 x^3 + c2 x^2 + c1 x + c0 (coefficients may be
/// symbolic polynomials or rational constants).
struct Quartic {
  MultiPoly c3, c2, c1, c0;

  static Quartic from_rationals(const Rational& c3, const Rational& c2, const Rational& c1,
                                const Rational& c0);
  /// Reads a monic degree-4 univariate polynomial in var.
  static Quartic from_poly(const MultiPoly& p, Sym var);
  /// The quartic r for which f = r(x^2); the [2]^-1 P y-polynomial.
  static Quartic origami(const CurveSpec& curve, const AffinePoint& P);

  bool is_numeric() const;
  MultiPoly poly(Sym var) const;
  /// Elementary symmetric functions of the roots: e1=-c3, e2=c2, e3=-c1, e4=c0.
  MultiPoly e(int i) const;
  /// r(var^2), the associated octic.
  MultiPoly octic(Sym var) const;
};

/// k(x) = (x - r1 r2)(x - r3 r4)(x - r1 r3)(x - r2 r4)(x - r1 r4)(x - r2 r3).
/// Closed form in c0..c3; the published display carries a sign typo on the
/// c1*c3 terms, fixed here and pinned by brute-force tests.
MultiPoly two_set_resolvent(const Quartic& r, Sym var);

/// Resolvent cubic with roots r1r2+r3r4, r1r3+r2r4, r1r4+r2r3.
MultiPoly resolvent_cubic(const Quartic& r, Sym var);

/// The p1/p2 data of the degree-12 resolvent: p_i = x^2 - sum_i x + product_i
/// with discriminants d_i = sum_i^2 - 4 product_i.
struct PairQuadratics {
  MultiPoly sum1, product1, sum2, product2, d1, d2;
  MultiPoly p1(Sym var) const;
  MultiPoly p2(Sym var) const;
};
PairQuadratics p1_p2(const Quartic& r);

/// The degree-12 factor of the 3-set resolvent of k: roots are the sums
/// s_i+s_j+s_l over the 12 3-subsets containing a complementary pair.
/// Root-free construction: over Q[theta]/RC(theta) divide k by
/// y^2 - theta y + e4 and eliminate theta by a resultant.
MultiPoly degree12_resolvent(const Quartic& r, Sym var);

/// k, p1, p2, h, D (= disc of r(x^2)), d1, d2 for one quartic.
struct ResolventBundle {
  MultiPoly k, h, D, d1, d2;
  PairQuadratics pq;
};
ResolventBundle resolvent_bundle(const Quartic& r, Sym var);

/// q - u where q is the shared discriminant kernel and
/// u = (27bz^3 - 9a^2z^2 - a^3)^2; checks the true factorization, the curve
/// reduction to zero, and records the defective printed display.
IdentityReport verify_q_minus_u();

/// Multiplies the two sextic factors of h (shared high coefficients, x- and
/// constant coefficients from p1/p2 with the pairing that makes the product
/// rational) and compares against degree12_resolvent. Works for the generic
/// symbolic origami quartic and for numeric curve/point instances.
IdentityReport verify_h_factorization(const CurveSpec& curve, const AffinePoint& P);

enum class OcticClass { HOL_Q8_COMPATIBLE, WREATH, INCONCLUSIVE };

struct ClassifyResult {
  OcticClass verdict = OcticClass::INCONCLUSIVE;
  std::string reason;
  // evidence (set when computed)
  Integer sf_d1 = 0, sf_d2 = 0, sf_D = 0;
  FactoredInteger d1_fac, d2_fac, D_fac;
  uint64_t irreducibility_witness = 0;  // prime with an 8-cycle pattern
};

/// Hol(Q8)-vs-wreath classification of r(x^2) for a rational quartic r.
ClassifyResult classify_octic(const Quartic& r);

enum class CubicGalois { S3, C3, REDUCIBLE };
/// Galois group of x^3 + ax + b over Q.
CubicGalois cubic_galois(const Rational& a, const Rational& b);

struct QuarticGaloisResult {
  bool is_s4 = false;
  std::string reason;  // set when not S4
};
/// S4 certificate: no rational root, resolvent cubic with no rational root,
/// non-square discriminant.
QuarticGaloisResult quartic_galois(const Quartic& r);

/// True iff the univariate polynomial (rational coefficients) has a root in Q.
bool has_rational_root(const MultiPoly& f, Sym var);

struct CycleTypeReport {
  int poly_degree = 0;
  std::vector<std::pair<uint64_t, std::vector<int>>> rows;  // (prime, degree multiset)
  std::map<std::vector<int>, int> aggregate;
  std::vector<uint64_t> bad_primes;
  std::string to_json() const;
};

/// Distinct-degree factorization evidence over the first prime_count good
/// primes (skipping primes dividing the discriminant, leading coefficient or
/// any coefficient denominator).
CycleTypeReport frobenius_report(const MultiPoly& f, Sym var, int prime_count);

}  // namespace origami

#endif
