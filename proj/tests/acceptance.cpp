// Acceptance suite: one pass/fail line per criterion, exact arithmetic
// throughout (zero tolerance everywhere).

#include <cstdio>
#include <functional>
#include <iostream>
#include <string>

#include "origami/divpoly.hpp"
#include "origami/elimination.hpp"
#include "origami/exactnum.hpp"
#include "origami/permgroup.hpp"
#include "origami/polyring.hpp"
#include "origami/quotients.hpp"
#include "origami/resolvent.hpp"
#include "testutil.hpp"

using namespace origami;

namespace {

int g_failures = 0;
std::vector<std::string> g_notes;  // flushed after the criterion line

void note(const std::string& text) { g_notes.push_back(text); }

void criterion(int number, const std::string& what, const std::function<bool()>& body) {
  bool ok = false;
  std::string error;
  g_notes.clear();
  try {
    ok = body();
  } catch (const std::exception& e) {
    error = e.what();
  }
  if (!ok) ++g_failures;
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << number << ": " << what;
  if (!error.empty()) std::cout << " (exception: " << error << ")";
  std::cout << std::endl;
  for (const auto& n : g_notes) std::cout << "       note: " << n << std::endl;
}

Integer pow_int(long base, unsigned e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), e);
  return r;
}
Rational r23(int e2, int e3, long k = 1) {
  return Rational(int_pow2(e2) * pow_int(3, e3) * Integer(k));
}

CurveSpec curve83() { return CurveSpec::numeric(Rational(1269), Rational(-10746)); }
AffinePoint point83() { return AffinePoint::numeric(Rational(15), Rational(-108)); }

std::pair<CurveSpec, PointQ> random_curve_with_point() {
  while (true) {
    Rational a = testutil::rand_rational(20);
    Rational x0 = testutil::rand_rational(10);
    Rational y0 = testutil::rand_nonzero_rational(10);
    Rational b = y0 * y0 - x0 * x0 * x0 - a * x0;
    if (b.is_zero()) continue;
    Rational disc = Rational(4) * a * a * a + Rational(27) * b * b;
    if (disc.is_zero()) continue;
    return {CurveSpec::numeric(a, b), PointQ{x0, y0}};
  }
}

bool check(bool cond, const char* what) {
  if (!cond) std::cout << "       subcheck failed: " << what << std::endl;
  return cond;
}

// ---- criterion bodies -----------------------------------------------------

bool golden_83a1() {
  bool ok = true;
  CurveSpec c = curve83();
  AffinePoint P = point83();

  ok &= check(preimage_poly_x(2, c, P) ==
                  parse_poly("x^4 - 60*x^3 - 2538*x^2 + 9828*x + 2255121"),
              "f_x");
  ok &= check(preimage_poly_xy2(c, P) ==
                  parse_poly("x^6 + 6345*x^4 + 864*x^3*y - 214920*x^3 - 8051805*x^2"
                             " + 1096416*x*y + 54546696*x - 9284544*y - 2967360237"),
              "f_xy");
  ok &= check(origami_quartic(c, P) == parse_poly("y^4 + 864*y^3 + 34992*y^2 - 11292058368"),
              "f_y");
  // printed octic values place the 34992 term at y^2; the closed form and
  // the y -> y^2 substitution give y^4
  ok &= check(origami_octic(c, P, OctSign::plus) ==
                  parse_poly("y^8 + 864*y^6 + 34992*y^4 - 11292058368"),
              "octic +P");
  ok &= check(origami_octic(c, P, OctSign::minus) ==
                  parse_poly("y^8 - 864*y^6 + 34992*y^4 - 11292058368"),
              "octic -P");

  Quartic r = Quartic::origami(c, P);
  MultiPoly k = two_set_resolvent(r, Sym::x);
  // x^2 coefficient: printed as -2^16*7*19*103*2281*2579*5209; the closed
  // form (and direct enumeration) give -d^2 = -2^16 3^24 83^2
  MultiPoly k_expected =
      parse_poly("x^6") - MultiPoly(r23(4, 7)) * parse_poly("x^5") +
      MultiPoly(r23(8, 12, 83)) * parse_poly("x^4") +
      MultiPoly(r23(13, 18, 29 * 83)) * parse_poly("x^3") -
      MultiPoly(r23(16, 24, 83L * 83)) * parse_poly("x^2") -
      MultiPoly(r23(20, 31, 83L * 83)) * parse_poly("x") - MultiPoly(r23(24, 36, 83L * 83 * 83));
  ok &= check(k == k_expected, "k(x)");

  QuotientSet qs = quotient_polys(c, P, Sym::x);
  MultiPoly x = MultiPoly::var(Sym::x);
  ok &= check(qs.h1 == x.pow(4) - MultiPoly(r23(17, 12, 83)) * x.pow(2) +
                           MultiPoly(r23(27, 18, 83)) * x - MultiPoly(r23(32, 24, 49 * 83)),
              "h1");
  ok &= check(qs.h2 == x.pow(4) - MultiPoly(r23(17, 12, 83)) * x.pow(2) +
                           MultiPoly(r23(27, 18, 83)) * x + MultiPoly(r23(30, 25, 83 * 181)),
              "h2");
  // h3's printed x^2 coefficient carries a sign typo (-2^4 3^7); every other
  // display of this quartic and the closed form give +2^4 3^7
  ok &= check(qs.h3 == x.pow(4) + MultiPoly(r23(5, 3)) * x.pow(3) +
                           MultiPoly(r23(4, 7)) * x.pow(2) - MultiPoly(r23(8, 12, 83)),
              "h3");
  ok &= check(qs.g == x.pow(4) + MultiPoly(r23(14, 12, 83)) * x + MultiPoly(r23(14, 16, 47 * 83)),
              "g");
  MultiPoly t4_expected =
      x.pow(12) - MultiPoly(r23(2, 6, 199)) * x.pow(10) + MultiPoly(r23(8, 13, 11 * 83)) * x.pow(8) -
      MultiPoly(r23(11, 18, 83 * 199)) * x.pow(6) -
      MultiPoly(r23(16, 25, 11L * 83 * 83)) * x.pow(4) -
      MultiPoly(r23(18, 30, 199) * Rational(Integer(83) * 83)) * x.pow(2) -
      MultiPoly(r23(24, 36, 83L * 83 * 83));
  ok &= check(qs.T4 == t4_expected, "T4");

  MultiPoly al = MultiPoly::var(Sym::alpha);
  MultiPoly beta_expected = (al.pow(3) - MultiPoly(r23(2, 3, 47)) * al.pow(2) +
                             MultiPoly(r23(6, 8, 89)) * al + MultiPoly(r23(12, 13, 83))) *
                            MultiPoly(Rational(1, 2) / Rational(pow_int(3, 5) * Integer(199)));
  ok &= check(beta_map(c, P) == beta_expected, "beta");
  note("three display corrections are baked into the goldens, each adjudicated by "
       "computation: the octic's 34992 term sits at y^4 (printed y^2), k's x^2 coefficient "
       "is -2^16 3^24 83^2 (printed -2^16*7*19*103*2281*2579*5209), and h3's x^2 "
       "coefficient is +2^4 3^7 (printed negative)");
  return ok;
}

bool discriminants_83a1() {
  bool ok = true;
  MultiPoly f = origami_octic(curve83(), point83(), OctSign::plus);
  Rational D = discriminant(f, Sym::y).constant_value();
  Integer mag = int_pow2(72) * pow_int(3, 84) * pow_int(83, 3) * pow_int(739, 4);
  ok &= check(abs(D.num()) == mag && D.den() == 1, "|D| = 2^72 3^84 83^3 739^4");
  ok &= check(D.num() < 0, "sign of D (computed: negative)");

  PairQuadratics pq = p1_p2(Quartic::origami(curve83(), point83()));
  Rational d1 = pq.d1.constant_value(), d2 = pq.d2.constant_value();
  ok &= check(abs(d1.num()) == int_pow2(46) * pow_int(3, 60) * pow_int(83, 3) * pow_int(739, 2),
              "|d1| = 2^46 3^60 83^3 739^2");
  ok &= check(abs(d2.num()) == int_pow2(52) * pow_int(3, 74) * pow_int(83, 3) * pow_int(739, 2),
              "|d2| = 2^52 3^74 83^3 739^2");
  ok &= check(d1.num() < 0 && d2.num() < 0, "signs of d1, d2 (computed: negative)");
  note("published values print D, d1, d2 positive here; the Sylvester-determinant "
       "convention and the published p1/p2/sqrt(D) data themselves give the negative "
       "values (the generic forms -2^32 d^3 q^2 and -2^14 d^3 (27bz^3-9a^2z^2-a^3)^2 "
       "are the consistent ones)");
  return ok;
}

bool symbolic_suite() {
  bool ok = true;
  CurveSpec gc = CurveSpec::generic();
  AffinePoint gp = AffinePoint::generic();

  IdentityReport s = verify_s_identity(gc, gp);
  ok &= check(s.all_passed(), "s - f_P f_{-P} = 64 y^12 (w^2-z^3-az-b)");

  IdentityReport cr = verify_coefficient_reductions();
  ok &= check(cr.all_passed(), "the three raw-resultant coefficient reductions");

  IdentityReport qu = verify_q_minus_u();
  ok &= check(qu.all_passed(), "q - u contains the curve factor and reduces to zero");
  note("the printed middle expression 3^2(z^3+az+b-w^2)(2az+2b+2z^3-2w^2) does not expand "
       "to q-u; the computed factorization is -27(z^3+az+b-w^2)(4a^3w^2-2a^3b-18a^2bz^2-"
       "27ab^2z+27b^2z^3+27b^2w^2-27b^3), which still vanishes on the curve, so the "
       "classification conclusion stands");

  IdentityReport hf = verify_h_factorization(gc, gp);
  ok &= check(hf.all_passed(), "printed sextic factorization of h");

  IsoWitness iso = verify_isomorphism();
  ok &= check(iso.report.all_passed(), "staged isomorphism displays incl. exact c0..c3 match");
  ok &= check(iso.final_residual.is_zero(), "3^8 b^4 h1(beta) reduces to the zero polynomial");
  return ok;
}

bool classification() {
  bool ok = true;
  ClassifyResult c83 = classify_octic(Quartic::origami(curve83(), point83()));
  ok &= check(c83.verdict == OcticClass::HOL_Q8_COMPATIBLE, "83a1 -> HOL_Q8_COMPATIBLE");

  Quartic ne = Quartic::from_rationals(Rational(-2), Rational(2), Rational(4), Rational(-4));
  ClassifyResult cne = classify_octic(ne);
  ok &= check(cne.verdict == OcticClass::WREATH, "x^8-2x^6+2x^4+4x^2-4 -> WREATH");

  Rational Dne = discriminant(ne.octic(Sym::x), Sym::x).constant_value();
  ok &= check(Dne == Rational(-(int_pow2(26) * 83 * 83)),
              "non-example D = -2^26 83^2, computed independently");
  note("two different values are printed for this D; -2^26 83^2 is correct and "
       "2^16*7*71*10711 is not (disc r = -2^8*83, also printed unsigned)");
  return ok;
}

bool resolvent_oracle() {
  bool ok = true;
  for (int i = 0; i < 50 && ok; ++i) {
    auto roots = testutil::distinct_rationals(4, 9);
    auto brute = testutil::resolvent_brute(roots, Sym::x);
    MultiPoly quartic = testutil::poly_from_roots(roots, Sym::x);
    Quartic r = Quartic::from_poly(quartic, Sym::x);
    ok &= check(two_set_resolvent(r, Sym::x) == brute.k, "two_set_resolvent vs enumeration");
    ok &= check(degree12_resolvent(r, Sym::x) == brute.h, "degree12_resolvent vs enumeration");
    PairQuadratics pq = p1_p2(r);
    ok &= check(!brute.splits.empty() &&
                    testutil::matches_some_split(brute, pq.sum1.constant_value(),
                                                 pq.product1.constant_value(),
                                                 pq.sum2.constant_value(),
                                                 pq.product2.constant_value()),
                "p1_p2 vs enumeration");
  }
  return ok;
}

bool division_poly_oracle() {
  bool ok = true;
  int curves = 0;
  while (curves < 5 && ok) {
    auto [curve, P0] = random_curve_with_point();
    Rational a = curve.a.constant_value(), b = curve.b.constant_value();
    DivisionPolySet dps(curve);
    int points = 0;
    ECPoint Q = P0;
    while (points < 20 && ok) {
      if (!Q) break;
      for (unsigned n = 2; n <= 5 && ok; ++n) {
        Rational psin = dps.psi(n)
                            .substitute(Sym::x, Q->x)
                            .substitute(Sym::y, Q->y)
                            .constant_value();
        ECPoint expect = ec_mul(n, Q, a, b);
        if (psin.is_zero()) {
          ok &= check(!expect.has_value(), "psi_n vanishes exactly at n-torsion-to-P points");
          continue;
        }
        Rational phin = dps.phi(n)
                            .substitute(Sym::x, Q->x)
                            .substitute(Sym::y, Q->y)
                            .constant_value();
        Rational omegan = dps.omega(n)
                              .substitute(Sym::x, Q->x)
                              .substitute(Sym::y, Q->y)
                              .constant_value();
        ok &= check(expect.has_value(), "nonzero psi_n implies [n]Q is affine");
        if (!ok) break;
        ok &= check(expect->x == phin / (psin * psin), "x coordinate of [n]Q");
        ok &= check(expect->y == omegan / (psin * psin * psin), "y coordinate of [n]Q");
      }
      ++points;
      Q = ec_add(a, b, Q, ECPoint(P0));
    }
    ++curves;
  }
  if (ok) note("adjudicates the psi_4 display conflict in favor of the 5a x^4 numerator");
  return ok;
}

bool galois_certificates() {
  bool ok = true;
  ok &= check(cubic_galois(Rational(1269), Rational(-10746)) == CubicGalois::S3,
              "x^3+1269x-10746 is S3");
  MultiPoly fy = origami_quartic(curve83(), point83());
  ok &= check(quartic_galois(Quartic::from_poly(fy, Sym::y)).is_s4, "f_y is S4");
  QuotientSet qs = quotient_polys(curve83(), point83(), Sym::x);
  ok &= check(quartic_galois(Quartic::from_poly(qs.h1, Sym::x)).is_s4, "h1 is S4");
  ok &= check(quartic_galois(Quartic::from_poly(qs.h2, Sym::x)).is_s4, "h2 is S4");
  ok &= check(quartic_galois(Quartic::from_poly(qs.h3, Sym::x)).is_s4, "h3 is S4");
  ok &= check(quartic_galois(Quartic::from_poly(qs.g, Sym::x)).is_s4, "g is S4");
  return ok;
}

bool permutation_oracle() {
  bool ok = true;
  Perm gi = perm_from_cycles({{1, 3, 2, 4}, {5, 7, 6, 8}});
  Perm gj = perm_from_cycles({{1, 5, 2, 6}, {3, 8, 4, 7}});
  PermGroup q8 = perm_closure({gi, gj});
  ok &= check(q8.order() == 8, "closure of the embedding generators has order 8");
  int order2 = 0, order4 = 0;
  for (const auto& e : q8.elements) {
    int o = perm_order(e);
    if (o == 2) ++order2;
    if (o == 4) ++order4;
  }
  ok &= check(order2 == 1 && order4 == 6, "Q8 signature (one involution, six of order 4)");

  PermGroup norm = normalizer_in_s8(q8);
  ok &= check(norm.order() == 192, "S8-normalizer has order 192");
  auto hol_types = cycle_type_set(norm);

  MultiPoly oct = origami_octic(curve83(), point83(), OctSign::plus);
  CycleTypeReport rep = frobenius_report(oct, Sym::y, 200);
  bool all_in = true;
  for (const auto& [p, ms] : rep.rows)
    if (!hol_types.count(ms)) all_in = false;
  ok &= check(all_in, "83a1 octic multisets over 200 good primes lie in the cycle-type set");

  Quartic ne = Quartic::from_rationals(Rational(-2), Rational(2), Rational(4), Rational(-4));
  CycleTypeReport nrep = frobenius_report(ne.octic(Sym::x), Sym::x, 200);
  int outside = 0;
  for (const auto& [p, ms] : nrep.rows)
    if (!hol_types.count(ms)) ++outside;
  ok &= check(outside > 0, "non-example exhibits a multiset outside the order-192 set");
  return ok;
}

bool isomorphism_behavior() {
  bool ok = true;
  for (int i = 0; i < 20 && ok; ++i) {
    auto [curve, P0] = random_curve_with_point();
    AffinePoint P = AffinePoint::numeric(P0.x, P0.y);
    IsoWitness wit = verify_isomorphism_at(curve, P);
    ok &= check(wit.final_residual.is_zero(), "staged reduction vanishes at the sample");
    IdentityReport inv = inverse_direction_check(curve, P);
    bool inv_ok = true;
    for (const auto& c : inv.checks) {
      // reducible g is a legitimate precondition exit, not a failure
      if (c.name == "precondition_g_irreducible" && !c.passed) {
        inv_ok = true;
        break;
      }
      inv_ok = inv_ok && c.passed;
    }
    ok &= check(inv_ok, "modular root bijection (or documented precondition exit)");
  }
  return ok;
}

}  // namespace

int main() {
  criterion(1, "83a1 golden suite matches the displays coefficient-for-coefficient",
            golden_83a1);
  criterion(2, "discriminant magnitudes |D|, |d1|, |d2| with signs reconciled",
            discriminants_83a1);
  criterion(3, "symbolic identity suite (exact zero polynomials)", symbolic_suite);
  criterion(4, "Hol(Q8)/wreath classification incl. independent non-example D",
            classification);
  criterion(5, "resolvent oracle equivalence on 50 random rational-rooted quartics",
            resolvent_oracle);
  criterion(6, "division-polynomial/group-law oracle (n in 2..5, 20 points x 5 curves)",
            division_poly_oracle);
  criterion(7, "Galois certificates: S3 cubic, S4 for f_y, h1, h2, h3, g",
            galois_certificates);
  criterion(8, "permutation oracle: Q8 closure, order-192 normalizer, Frobenius containment",
            permutation_oracle);
  criterion(9, "isomorphism behavior on 20 random curves/points with b != 0",
            isomorphism_behavior);

  if (g_failures == 0) {
    std::cout << "all acceptance criteria passed" << std::endl;
    return 0;
  }
  std::cout << g_failures << " acceptance criteria FAILED" << std::endl;
  return 1;
}
