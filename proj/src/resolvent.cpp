#include "origami/resolvent.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

namespace origami {

namespace {
const MultiPoly kOne(1);

MultiPoly var(Sym s) { return MultiPoly::var(s); }

/// Substitutes a curve/point into a polynomial written in the generic
/// symbols a, b, z, w.
MultiPoly specialize(const MultiPoly& generic, const CurveSpec& curve, const AffinePoint& P) {
  return generic.substitute(Sym::a, curve.a)
      .substitute(Sym::b, curve.b)
      .substitute(Sym::z, P.z)
      .substitute(Sym::w, P.w);
}

/// The degree-6 kernel polynomial shared by D, d1 and d2.
const MultiPoly& discriminant_kernel_q() {
  static const MultiPoly q = parse_poly(
      "a^6 + 18*a^5*z^2 + 54*a^4*b*z + 81*a^4*z^4 - 108*a^4*z*w^2 + 54*a^3*b^2"
      " + 486*a^3*b*z^3 - 162*a^3*b*w^2 - 108*a^3*z^3*w^2 + 108*a^3*w^4"
      " + 1215*a^2*b^2*z^2 - 486*a^2*b*z^2*w^2 + 1458*a*b^3*z - 1458*a*b^2*z*w^2"
      " + 729*b^4 - 1458*b^3*w^2 + 729*b^2*w^4");
  return q;
}

/// Univariate division by a divisor monic in var; coefficients live in the
/// full polynomial ring. Returns {quotient, remainder}.
std::pair<MultiPoly, MultiPoly> div_monic(const MultiPoly& p, const MultiPoly& divisor, Sym v) {
  int dd = divisor.degree(v);
  MultiPoly rem = p, quot;
  while (rem.degree(v) >= dd) {
    int dr = rem.degree(v);
    MultiPoly lead = rem.coeff_of(v, static_cast<uint32_t>(dr));
    MultiPoly t = lead * MultiPoly::term(Rational(1), Monomial::var(v, static_cast<uint32_t>(dr - dd)));
    quot += t;
    rem -= t * divisor;
  }
  return {quot, rem};
}

}  // namespace

// ---- Quartic ---------------------------------------------------------------

Quartic Quartic::from_rationals(const Rational& c3, const Rational& c2, const Rational& c1,
                                const Rational& c0) {
  return {MultiPoly(c3), MultiPoly(c2), MultiPoly(c1), MultiPoly(c0)};
}

Quartic Quartic::from_poly(const MultiPoly& p, Sym var) {
  if (p.degree(var) != 4 || !(p.leading_coeff(var) == kOne))
    throw std::domain_error("Quartic::from_poly: expected a monic quartic");
  return {p.coeff_of(var, 3), p.coeff_of(var, 2), p.coeff_of(var, 1), p.coeff_of(var, 0)};
}

Quartic Quartic::origami(const CurveSpec& curve, const AffinePoint& P) {
  return Quartic::from_poly(origami_quartic(curve, P), Sym::y);
}

bool Quartic::is_numeric() const {
  return c3.is_constant() && c2.is_constant() && c1.is_constant() && c0.is_constant();
}

MultiPoly Quartic::poly(Sym v) const {
  MultiPoly xv = MultiPoly::var(v);
  return xv.pow(4) + c3 * xv.pow(3) + c2 * xv.pow(2) + c1 * xv + c0;
}

MultiPoly Quartic::e(int i) const {
  switch (i) {
    case 1: return -c3;
    case 2: return c2;
    case 3: return -c1;
    case 4: return c0;
  }
  throw std::domain_error("Quartic::e: index in 1..4");
}

MultiPoly Quartic::octic(Sym v) const {
  return poly(v).substitute(v, MultiPoly::var(v, 2));
}

// ---- resolvents ------------------------------------------------------------

MultiPoly two_set_resolvent(const Quartic& r, Sym v) {
  MultiPoly xv = MultiPoly::var(v);
  const MultiPoly &c3 = r.c3, &c2 = r.c2, &c1 = r.c1, &c0 = r.c0;
  return xv.pow(6) - c2 * xv.pow(5) + (c1 * c3 - c0) * xv.pow(4) +
         (-c0 * (c3 * c3 - MultiPoly(2) * c2) - c1 * c1) * xv.pow(3) +
         c0 * (c1 * c3 - c0) * xv.pow(2) - c0 * c0 * c2 * xv + c0.pow(3);
}

MultiPoly resolvent_cubic(const Quartic& r, Sym v) {
  MultiPoly xv = MultiPoly::var(v);
  MultiPoly e1 = r.e(1), e2 = r.e(2), e3 = r.e(3), e4 = r.e(4);
  return xv.pow(3) - e2 * xv.pow(2) + (e1 * e3 - MultiPoly(4) * e4) * xv -
         (e1 * e1 * e4 - MultiPoly(4) * e2 * e4 + e3 * e3);
}

MultiPoly PairQuadratics::p1(Sym v) const {
  MultiPoly xv = MultiPoly::var(v);
  return xv.pow(2) - sum1 * xv + product1;
}

MultiPoly PairQuadratics::p2(Sym v) const {
  MultiPoly xv = MultiPoly::var(v);
  return xv.pow(2) - sum2 * xv + product2;
}

PairQuadratics p1_p2(const Quartic& r) {
  MultiPoly e1 = r.e(1), e2 = r.e(2), e3 = r.e(3), e4 = r.e(4);
  auto P = [](long n) { return MultiPoly(n); };

  MultiPoly sum1 = P(-2) * e1.pow(2) * e2.pow(2) * e4 - P(2) * e1.pow(2) * e2 * e3.pow(2) +
                   P(14) * e1 * e2 * e3 * e4 + P(6) * e2.pow(3) * e4 - P(2) * e2.pow(2) * e3.pow(2) -
                   P(30) * e2 * e4.pow(2);

  MultiPoly sum2 = P(-2) * e1.pow(4) * e4.pow(2) + P(2) * e1.pow(3) * e2 * e3 * e4 +
                   P(7) * e1.pow(2) * e2 * e4.pow(2) - P(4) * e1.pow(2) * e3.pow(2) * e4 -
                   P(7) * e1 * e2.pow(2) * e3 * e4 + P(2) * e1 * e2 * e3.pow(3) -
                   P(2) * e1 * e3 * e4.pow(2) + P(2) * e2.pow(2) * e4.pow(2) +
                   P(7) * e2 * e3.pow(2) * e4 - P(2) * e3.pow(4) + P(10) * e4.pow(3);

  MultiPoly product2 =
      e1.pow(8) * e4.pow(4) - P(2) * e1.pow(7) * e2 * e3 * e4.pow(3) +
      e1.pow(6) * e2.pow(2) * e3.pow(2) * e4.pow(2) - P(7) * e1.pow(6) * e2 * e4.pow(4) +
      P(4) * e1.pow(6) * e3.pow(2) * e4.pow(3) + P(14) * e1.pow(5) * e2.pow(2) * e3 * e4.pow(3) -
      P(6) * e1.pow(5) * e2 * e3.pow(3) * e4.pow(2) + P(2) * e1.pow(5) * e3 * e4.pow(4) -
      P(7) * e1.pow(4) * e2.pow(3) * e3.pow(2) * e4.pow(2) +
      P(2) * e1.pow(4) * e2.pow(2) * e3.pow(4) * e4 + P(17) * e1.pow(4) * e2.pow(2) * e4.pow(4) -
      P(23) * e1.pow(4) * e2 * e3.pow(2) * e4.pow(3) + P(6) * e1.pow(4) * e3.pow(4) * e4.pow(2) -
      P(10) * e1.pow(4) * e4.pow(5) - P(27) * e1.pow(3) * e2.pow(3) * e3 * e4.pow(3) +
      P(29) * e1.pow(3) * e2.pow(2) * e3.pow(3) * e4.pow(2) -
      P(6) * e1.pow(3) * e2 * e3.pow(5) * e4 + P(3) * e1.pow(3) * e2 * e3 * e4.pow(4) +
      P(4) * e1.pow(3) * e3.pow(3) * e4.pow(3) + e1.pow(2) * e2.pow(5) * e4.pow(3) +
      P(12) * e1.pow(2) * e2.pow(4) * e3.pow(2) * e4.pow(2) -
      P(7) * e1.pow(2) * e2.pow(3) * e3.pow(4) * e4 - P(29) * e1.pow(2) * e2.pow(3) * e4.pow(4) +
      e1.pow(2) * e2.pow(2) * e3.pow(6) + P(29) * e1.pow(2) * e2.pow(2) * e3.pow(2) * e4.pow(3) -
      P(23) * e1.pow(2) * e2 * e3.pow(4) * e4.pow(2) + P(35) * e1.pow(2) * e2 * e4.pow(5) +
      P(4) * e1.pow(2) * e3.pow(6) * e4 - P(19) * e1.pow(2) * e3.pow(2) * e4.pow(4) +
      P(13) * e1 * e2.pow(4) * e3 * e4.pow(3) - P(27) * e1 * e2.pow(3) * e3.pow(3) * e4.pow(2) +
      P(14) * e1 * e2.pow(2) * e3.pow(5) * e4 + P(11) * e1 * e2.pow(2) * e3 * e4.pow(4) -
      P(2) * e1 * e2 * e3.pow(7) + P(3) * e1 * e2 * e3.pow(3) * e4.pow(3) +
      P(2) * e1 * e3.pow(5) * e4.pow(2) - P(10) * e1 * e3 * e4.pow(5) - P(4) * e2.pow(6) * e4.pow(3) +
      e2.pow(5) * e3.pow(2) * e4.pow(2) + P(33) * e2.pow(4) * e4.pow(4) -
      P(29) * e2.pow(3) * e3.pow(2) * e4.pow(3) + P(17) * e2.pow(2) * e3.pow(4) * e4.pow(2) -
      P(54) * e2.pow(2) * e4.pow(5) - P(7) * e2 * e3.pow(6) * e4 + P(35) * e2 * e3.pow(2) * e4.pow(4) +
      e3.pow(8) - P(10) * e3.pow(4) * e4.pow(3) + P(25) * e4.pow(6);

  MultiPoly g2 =
      P(-2) * e1.pow(6) * e2 * e4.pow(3) - P(2) * e1.pow(6) * e3.pow(2) * e4.pow(2) -
      P(2) * e1.pow(5) * e2.pow(2) * e3 * e4.pow(2) + P(2) * e1.pow(5) * e2 * e3.pow(3) * e4 +
      P(14) * e1.pow(5) * e3 * e4.pow(3) + e1.pow(4) * e2.pow(4) * e4.pow(2) +
      P(6) * e1.pow(4) * e2.pow(3) * e3.pow(2) * e4 + e1.pow(4) * e2.pow(2) * e3.pow(4) +
      P(23) * e1.pow(4) * e2.pow(2) * e4.pow(3) - P(13) * e1.pow(4) * e2 * e3.pow(2) * e4.pow(2) -
      P(4) * e1.pow(4) * e3.pow(4) * e4 - P(3) * e1.pow(4) * e4.pow(4) -
      P(23) * e1.pow(3) * e2.pow(3) * e3 * e4.pow(2) -
      P(25) * e1.pow(3) * e2.pow(2) * e3.pow(3) * e4 + P(2) * e1.pow(3) * e2 * e3.pow(5) -
      P(39) * e1.pow(3) * e2 * e3 * e4.pow(3) + P(30) * e1.pow(3) * e3.pow(3) * e4.pow(2) -
      P(6) * e1.pow(2) * e2.pow(5) * e4.pow(2) - P(18) * e1.pow(2) * e2.pow(4) * e3.pow(2) * e4 +
      P(6) * e1.pow(2) * e2.pow(3) * e3.pow(4) - P(20) * e1.pow(2) * e2.pow(3) * e4.pow(3) +
      P(171) * e1.pow(2) * e2.pow(2) * e3.pow(2) * e4.pow(2) -
      P(13) * e1.pow(2) * e2 * e3.pow(4) * e4 - P(29) * e1.pow(2) * e2 * e4.pow(4) -
      P(2) * e1.pow(2) * e3.pow(6) - P(30) * e1.pow(2) * e3.pow(2) * e4.pow(3) +
      P(102) * e1 * e2.pow(4) * e3 * e4.pow(2) - P(23) * e1 * e2.pow(3) * e3.pow(3) * e4 -
      P(2) * e1 * e2.pow(2) * e3.pow(5) - P(213) * e1 * e2.pow(2) * e3 * e4.pow(3) -
      P(39) * e1 * e2 * e3.pow(3) * e4.pow(2) + P(14) * e1 * e3.pow(5) * e4 +
      P(92) * e1 * e3 * e4.pow(4) + P(9) * e2.pow(6) * e4.pow(2) -
      P(6) * e2.pow(5) * e3.pow(2) * e4 + e2.pow(4) * e3.pow(4) - P(122) * e2.pow(4) * e4.pow(3) -
      P(20) * e2.pow(3) * e3.pow(2) * e4.pow(2) + P(23) * e2.pow(2) * e3.pow(4) * e4 +
      P(303) * e2.pow(2) * e4.pow(4) - P(2) * e2 * e3.pow(6) - P(29) * e2 * e3.pow(2) * e4.pow(3) -
      P(3) * e3.pow(4) * e4.pow(2) - P(106) * e4.pow(5);

  const MultiPoly &c3 = r.c3, &c2 = r.c2, &c1 = r.c1, &c0 = r.c0;
  MultiPoly bracket = P(15) * c0.pow(2) - P(7) * c0 * c1 * c3 - P(8) * c0 * c2.pow(2) +
                      c0 * c2 * c3.pow(2) + c1.pow(2) * c2 + c1.pow(2) * c3.pow(2) +
                      P(2) * c1 * c2.pow(2) * c3;
  MultiPoly product1 = g2 - sum2 * bracket;

  PairQuadratics out;
  out.sum1 = sum1;
  out.product1 = product1;
  out.sum2 = sum2;
  out.product2 = product2;
  out.d1 = sum1 * sum1 - MultiPoly(4) * product1;
  out.d2 = sum2 * sum2 - MultiPoly(4) * product2;
  return out;
}

MultiPoly degree12_resolvent(const Quartic& r, Sym v) {
  for (Sym reserved : {Sym::y, Sym::alpha}) {
    for (const MultiPoly* c : {&r.c3, &r.c2, &r.c1, &r.c0})
      if (c->involves(reserved))
        throw std::domain_error("degree12_resolvent: quartic coefficients may not involve y/alpha");
  }
  const Sym th = Sym::alpha;
  MultiPoly rc = resolvent_cubic(r, th);
  MultiPoly k = two_set_resolvent(r, Sym::y);

  // divide k(y) by y^2 - theta y + e4; the remainder must vanish mod rc
  MultiPoly divisor = MultiPoly::var(Sym::y, 2) - var(th) * var(Sym::y) + r.e(4);
  auto [quot, rem] = div_monic(k, divisor, Sym::y);

  // rewrite alpha^3 via the resolvent cubic
  MultiPoly alpha3 = var(th).pow(3) - rc;  // rc is monic in alpha
  std::vector<RewriteRule> rcrule{RewriteRule(th, 3, alpha3)};
  if (!reduce(rem, rcrule).is_zero())
    throw std::logic_error("degree12_resolvent: division remainder does not vanish mod the resolvent cubic");
  quot = reduce(quot, rcrule);

  MultiPoly shifted = quot.substitute(Sym::y, MultiPoly::var(v) - var(th));
  MultiPoly h = resultant(rc, shifted, th);
  if (h.degree(v) != 12 || !(h.leading_coeff(v) == kOne))
    throw std::logic_error("degree12_resolvent: expected a monic degree-12 result");
  return h;
}

ResolventBundle resolvent_bundle(const Quartic& r, Sym v) {
  ResolventBundle b;
  b.k = two_set_resolvent(r, v);
  b.pq = p1_p2(r);
  b.h = degree12_resolvent(r, v);
  b.D = discriminant(r.octic(v), v);
  b.d1 = b.pq.d1;
  b.d2 = b.pq.d2;
  return b;
}

// ---- identities -------------------------------------------------------------

IdentityReport verify_q_minus_u() {
  IdentityReport rep{"q_minus_u", {}};
  const MultiPoly& q = discriminant_kernel_q();
  MultiPoly u = parse_poly("(27*b*z^3 - 9*a^2*z^2 - a^3)^2");
  MultiPoly diff = q - u;

  MultiPoly curve_factor = parse_poly("z^3 + a*z + b - w^2");
  MultiPoly cofactor = parse_poly(
      "4*a^3*w^2 - 2*a^3*b - 18*a^2*b*z^2 - 27*a*b^2*z + 27*b^2*z^3 + 27*b^2*w^2 - 27*b^3");
  rep.add("difference_equals_-27_curve_factor_times_cofactor",
          diff - MultiPoly(-27) * curve_factor * cofactor);

  MultiPoly printed_display = MultiPoly(9) * curve_factor * parse_poly("2*a*z + 2*b + 2*z^3 - 2*w^2");
  auto& disp = rep.add("printed_display_defect_documented", true);
  disp.note = (diff - printed_display).is_zero()
                  ? "printed middle expression matches"
                  : "printed factorization 3^2(z^3+az+b-w^2)(2az+2b+2z^3-2w^2) does not "
                    "expand to q-u (checked exactly); the conclusion q-u=0 on the curve still "
                    "holds via the -27(z^3+az+b-w^2)(...) factorization";

  CurveSpec curve = CurveSpec::generic();
  std::vector<RewriteRule> rules{curve.point_rule()};
  rep.add("reduces_to_zero_on_curve", reduce(diff, rules));
  return rep;
}

namespace {

/// Shared x^5..x^2 coefficients of the two sextic factors of h in the
/// printed factorization display, in the generic symbols.
std::vector<MultiPoly> sextic_shared_coeffs() {
  return {
      parse_poly("-36*a*z - 54*b"),
      parse_poly("20*a^3 + 432*a^2*z^2 + 1296*a*b*z + 1107*b^2"),
      parse_poly("-480*a^4*z - 720*a^3*b - 1728*a^3*z^3 - 7776*a^2*b*z^2 - 14904*a*b^2*z"
                 " - 10692*b^3"),
      parse_poly("240*a^6 + 4608*a^5*z^2 + 13824*a^4*b*z - 3072*a^4*z*w^2 + 13608*a^3*b^2"
                 " - 4608*a^3*b*w^2 + 31104*a^2*b^2*z^2 + 93312*a*b^3*z - 20736*a*b^2*z*w^2"
                 " + 80919*b^4 - 31104*b^3*w^2"),
  };
}

}  // namespace

IdentityReport verify_h_factorization(const CurveSpec& curve, const AffinePoint& P) {
  IdentityReport rep{"h_sextic_factorization", {}};
  Quartic r = Quartic::origami(curve, P);
  PairQuadratics pq = p1_p2(r);
  MultiPoly h = degree12_resolvent(r, Sym::x);

  MultiPoly d = curve.nonsingularity();
  MultiPoly q = specialize(discriminant_kernel_q(), curve, P);
  MultiPoly twoazp3b = MultiPoly(2) * curve.a * P.z + MultiPoly(3) * curve.b;

  MultiPoly d1_expected = MultiPoly(Rational(-int_pow2(14))) * d.pow(3) * q;
  MultiPoly d2_expected = MultiPoly(Rational(Integer(-9) * int_pow2(14))) * twoazp3b.pow(2) * d.pow(3) * q;
  auto& c1 = rep.add("d1_equals_-2^14_d^3_q", pq.d1 - d1_expected);
  c1.note = "published displays print both +2^14 d^3 q and -2^14 d^3 (27bz^3-9a^2z^2-a^3)^2; "
            "the negative sign is the computed one";
  rep.add("d2_equals_-2^14_3^2_(2az+3b)^2_d^3_q", pq.d2 - d2_expected);

  // sqrt(d1 d2) as a polynomial: d1 d2 = (2^14 * 3 * (2az+3b) * d^3 * q)^2
  MultiPoly root = MultiPoly(Rational(Integer(3) * int_pow2(14))) * twoazp3b * d.pow(3) * q;
  rep.add("d1_d2_is_a_perfect_square", pq.d1 * pq.d2 - root * root);

  auto shared = sextic_shared_coeffs();
  MultiPoly xv = var(Sym::x);
  MultiPoly C = xv.pow(6);
  for (size_t i = 0; i < shared.size(); ++i)
    C += specialize(shared[i], curve, P) * xv.pow(static_cast<uint32_t>(5 - i));

  bool matched = false;
  const Rational half(1, 2);
  for (int eps : {1, -1}) {
    MultiPoly cross = (pq.sum1 * pq.sum2 + MultiPoly(eps) * root) * half;
    MultiPoly prod = C * C + C * (pq.sum1 * xv + pq.sum2) + pq.product1 * xv.pow(2) + cross * xv +
                     pq.product2;
    if (prod == h) {
      auto& c = rep.add(std::string("sextic_product_reproduces_h_pairing_") +
                            (eps > 0 ? "plus" : "minus"),
                        true);
      c.note = "v-pairing chosen so the cross term (v1 v4 + v2 v3) is the rational candidate";
      matched = true;
      break;
    }
  }
  if (!matched) {
    auto& c = rep.add("sextic_product_reproduces_h", false);
    c.note = "neither v-pairing reproduces h";
  }
  return rep;
}

// ---- classification ----------------------------------------------------------

bool has_rational_root(const MultiPoly& f, Sym v) {
  auto coeffs = f.to_univariate(v);
  while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
  if (coeffs.empty()) return true;  // zero polynomial
  std::vector<Rational> c(coeffs.size());
  for (size_t i = 0; i < coeffs.size(); ++i) c[i] = coeffs[i].constant_value();
  // strip powers of the variable (roots at zero)
  size_t low = 0;
  while (low < c.size() && c[low].is_zero()) ++low;
  if (low > 0) return true;  // x = 0 is a root
  if (c.size() == 1) return false;

  Integer den_lcm = 1;
  for (const auto& r : c) {
    Integer g;
    mpz_lcm(g.get_mpz_t(), den_lcm.get_mpz_t(), r.den().get_mpz_t());
    den_lcm = g;
  }
  std::vector<Integer> ic(c.size());
  for (size_t i = 0; i < c.size(); ++i) ic[i] = c[i].num() * (den_lcm / c[i].den());

  auto divisors = [](const Integer& n) {
    FactoredInteger f = factor(abs(n));
    if (!f.complete()) throw std::runtime_error("has_rational_root: constant resisted factoring");
    std::vector<Integer> divs{1};
    for (const auto& [p, e] : f.factors) {
      size_t base = divs.size();
      Integer pk = 1;
      for (unsigned k = 1; k <= e; ++k) {
        pk *= p;
        for (size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
      }
    }
    return divs;
  };

  auto horner = [&](const Rational& x) {
    Rational acc = 0;
    for (size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
    return acc.is_zero();
  };

  for (const Integer& p : divisors(ic.front())) {
    for (const Integer& qd : divisors(ic.back())) {
      Integer g;
      mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), qd.get_mpz_t());
      if (g != 1) continue;
      Rational cand(p, qd);
      if (horner(cand) || horner(-cand)) return true;
    }
  }
  return false;
}

CubicGalois cubic_galois(const Rational& a, const Rational& b) {
  MultiPoly f = var(Sym::x).pow(3) + MultiPoly(a) * var(Sym::x) + MultiPoly(b);
  if (has_rational_root(f, Sym::x)) return CubicGalois::REDUCIBLE;
  Rational disc = Rational(-4) * a * a * a - Rational(27) * b * b;
  return is_square(disc) ? CubicGalois::C3 : CubicGalois::S3;
}

QuarticGaloisResult quartic_galois(const Quartic& r) {
  if (!r.is_numeric()) throw std::domain_error("quartic_galois: numeric quartic required");
  if (has_rational_root(r.poly(Sym::x), Sym::x)) return {false, "quartic has a rational root"};
  if (has_rational_root(resolvent_cubic(r, Sym::x), Sym::x))
    return {false, "resolvent cubic has a rational root"};
  Rational disc = discriminant(r.poly(Sym::x), Sym::x).constant_value();
  if (is_square(disc)) return {false, "discriminant is a square"};
  return {true, ""};
}

ClassifyResult classify_octic(const Quartic& r) {
  if (!r.is_numeric()) throw std::domain_error("classify_octic: numeric quartic required");
  ClassifyResult out;
  MultiPoly f = r.octic(Sym::x);

  PairQuadratics pq = p1_p2(r);
  Rational d1 = pq.d1.constant_value(), d2 = pq.d2.constant_value();
  if (d1.is_zero() || d2.is_zero()) {
    out.reason = "degenerate discriminant: d1*d2 = 0";
    return out;
  }

  // classification hypothesis: the resolvent cubic of r must have group S3
  MultiPoly rc = resolvent_cubic(r, Sym::x);
  Rational p = rc.coeff_of(Sym::x, 2).constant_value();
  Rational qq = rc.coeff_of(Sym::x, 1).constant_value();
  Rational rr = rc.coeff_of(Sym::x, 0).constant_value();
  // depress: x -> x - p/3
  Rational A = qq - p * p / Rational(3);
  Rational B = Rational(2) * p * p * p / Rational(27) - p * qq / Rational(3) + rr;
  if (cubic_galois(A, B) != CubicGalois::S3) {
    out.reason = "resolvent cubic of r is not S3 (mod-2 representation not surjective)";
    return out;
  }

  Rational D = discriminant(f, Sym::x).constant_value();
  if (is_square(D)) {
    out.reason = "discriminant of r(x^2) is a square (Galois group inside A8)";
    return out;
  }

  // irreducibility witness: a good prime where r(x^2) stays irreducible
  int seen = 0;
  uint64_t pr = 2;
  while (seen < 200) {
    pr = next_prime_u64(pr);
    auto fm = ModPoly::from_poly(f, Sym::x, pr);
    if (!fm || fm->degree() != 8) continue;
    if (gcd(*fm, fm->derivative()).degree() != 0) continue;
    ++seen;
    auto degs = factor_degrees(*fm);
    if (degs.size() == 1 && degs[0] == 8) {
      out.irreducibility_witness = pr;
      break;
    }
  }
  if (out.irreducibility_witness == 0) {
    out.reason = "no irreducibility witness found for r(x^2) among the first 200 good primes";
    return out;
  }

  out.sf_d1 = squarefree_part(d1);
  out.sf_d2 = squarefree_part(d2);
  out.sf_D = squarefree_part(D);
  out.d1_fac = factor(d1.num());
  out.d2_fac = factor(d2.num());
  out.D_fac = factor(D.num());
  if (out.sf_d1 == out.sf_D && out.sf_d2 == out.sf_D) {
    out.verdict = OcticClass::HOL_Q8_COMPATIBLE;
    out.reason = "squarefree parts of d1, d2 and D agree; h factors over Q(sqrt(D))";
  } else {
    out.verdict = OcticClass::WREATH;
    out.reason = "a squarefree part disagrees with D's; h is irreducible over Q(sqrt(D))";
  }
  return out;
}

// ---- Frobenius evidence -------------------------------------------------------

std::string CycleTypeReport::to_json() const {
  nlohmann::json j;
  j["degree"] = poly_degree;
  j["rows"] = nlohmann::json::array();
  for (const auto& [p, ms] : rows) j["rows"].push_back({{"prime", p}, {"degree_multiset", ms}});
  j["aggregate"] = nlohmann::json::array();
  for (const auto& [ms, count] : aggregate)
    j["aggregate"].push_back({{"degree_multiset", ms}, {"count", count}});
  j["bad_primes"] = bad_primes;
  return j.dump();
}

CycleTypeReport frobenius_report(const MultiPoly& f, Sym v, int prime_count) {
  CycleTypeReport rep;
  rep.poly_degree = f.degree(v);
  if (rep.poly_degree < 1) throw std::domain_error("frobenius_report: nonconstant f required");
  if (rep.poly_degree >= 2 && discriminant(f, v).is_zero())
    throw std::domain_error("frobenius_report: f is not squarefree");

  uint64_t p = 1;
  uint64_t scanned = 0;
  while (static_cast<int>(rep.rows.size()) < prime_count) {
    p = next_prime_u64(p);
    if (++scanned > 200000) throw std::runtime_error("frobenius_report: ran out of primes");
    auto fm = ModPoly::from_poly(f, v, p);
    if (!fm || fm->degree() != rep.poly_degree) {
      rep.bad_primes.push_back(p);
      continue;
    }
    if (gcd(*fm, fm->derivative()).degree() != 0) {
      rep.bad_primes.push_back(p);
      continue;
    }
    auto degs = factor_degrees(*fm);
    rep.aggregate[degs] += 1;
    rep.rows.emplace_back(p, std::move(degs));
  }
  return rep;
}

}  // namespace origami
