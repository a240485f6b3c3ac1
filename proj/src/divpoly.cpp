#include "origami/divpoly.hpp"

#include <sstream>

namespace origami {

namespace {
const MultiPoly kX = MultiPoly::var(Sym::x);
const MultiPoly kY = MultiPoly::var(Sym::y);
}  // namespace

CurveSpec CurveSpec::generic() {
  return {MultiPoly::var(Sym::a), MultiPoly::var(Sym::b)};
}

CurveSpec CurveSpec::numeric(const Rational& a, const Rational& b) {
  CurveSpec c{MultiPoly(a), MultiPoly(b)};
  Rational disc = Rational(4) * a * a * a + Rational(27) * b * b;
  if (disc.is_zero()) throw std::domain_error("CurveSpec: singular curve (4a^3 + 27b^2 = 0)");
  return c;
}

MultiPoly CurveSpec::nonsingularity() const {
  return MultiPoly(4) * a.pow(3) + MultiPoly(27) * b.pow(2);
}

MultiPoly CurveSpec::rhs() const { return kX.pow(3) + a * kX + b; }

RewriteRule CurveSpec::y_rule() const { return RewriteRule(Sym::y, 2, rhs()); }

RewriteRule CurveSpec::point_rule() const {
  MultiPoly zz = MultiPoly::var(Sym::z);
  return RewriteRule(Sym::w, 2, zz.pow(3) + a * zz + b);
}

AffinePoint AffinePoint::generic() {
  return {MultiPoly::var(Sym::z), MultiPoly::var(Sym::w)};
}

AffinePoint AffinePoint::numeric(const Rational& z, const Rational& w) {
  return {MultiPoly(z), MultiPoly(w)};
}

void require_on_curve(const CurveSpec& curve, const AffinePoint& p) {
  if (!curve.is_numeric() || !p.is_numeric()) return;
  Rational a = curve.a.constant_value(), b = curve.b.constant_value();
  Rational z = p.z.constant_value(), w = p.w.constant_value();
  Rational defect = w * w - (z * z * z + a * z + b);
  if (!defect.is_zero()) {
    std::ostringstream os;
    os << "point is not on the curve: w^2 - (z^3 + a*z + b) = " << defect.str();
    throw std::domain_error(os.str());
  }
}

// ---- division polynomials ------------------------------------------------

DivisionPolySet::DivisionPolySet(CurveSpec curve) : curve_(std::move(curve)) {
  const MultiPoly& a = curve_.a;
  const MultiPoly& b = curve_.b;
  cache_.push_back(MultiPoly(-1));  // psi_{-1}
  cache_.push_back(MultiPoly());    // psi_0
  cache_.push_back(MultiPoly(1));   // psi_1
  cache_.push_back(MultiPoly(2) * kY);
  cache_.push_back(MultiPoly(3) * kX.pow(4) + MultiPoly(6) * a * kX.pow(2) +
                   MultiPoly(12) * b * kX - a.pow(2));
  // psi_4: the 5a x^4 form; the group-law oracle in the test suite
  // adjudicates this against the competing ax^4 display.
  cache_.push_back(MultiPoly(4) * kY *
                   (kX.pow(6) + MultiPoly(5) * a * kX.pow(4) + MultiPoly(20) * b * kX.pow(3) -
                    MultiPoly(5) * a.pow(2) * kX.pow(2) - MultiPoly(4) * a * b * kX -
                    MultiPoly(8) * b.pow(2) - a.pow(3)));
}

const MultiPoly& DivisionPolySet::psi_signed(long n) {
  if (n < -1) throw std::domain_error("psi: index out of range");
  std::vector<RewriteRule> yr;
  yr.push_back(curve_.y_rule());
  while (static_cast<long>(cache_.size()) <= n + 1) {
    long next = static_cast<long>(cache_.size()) - 1;  // index being built
    long m = next / 2;
    MultiPoly value;
    if (next % 2) {  // next = 2m+1, m >= 2
      value = reduce(psi_signed(m + 2) * psi_signed(m).pow(3) -
                         psi_signed(m - 1) * psi_signed(m + 1).pow(3),
                     yr);
    } else {  // next = 2m, m >= 3
      MultiPoly num = psi_signed(m) * (psi_signed(m + 2) * psi_signed(m - 1).pow(2) -
                                       psi_signed(m - 2) * psi_signed(m + 1).pow(2));
      MultiPoly quot;
      try {
        quot = num.exact_div(MultiPoly(2) * kY);
      } catch (const ExactDivisionError&) {
        throw std::logic_error("psi recursion: 2y division failed (recursion bug)");
      }
      value = reduce(quot, yr);
    }
    cache_.push_back(std::move(value));
  }
  return cache_[static_cast<size_t>(n + 1)];
}

const MultiPoly& DivisionPolySet::psi(unsigned n) { return psi_signed(static_cast<long>(n)); }

MultiPoly DivisionPolySet::phi(unsigned n) {
  if (n < 1) throw std::domain_error("phi: n >= 1 required");
  psi(n + 1);  // grow the cache first: references below must stay valid
  std::vector<RewriteRule> yr{curve_.y_rule()};
  return reduce(kX * psi(n).pow(2) - psi(n + 1) * psi(n - 1), yr);
}

MultiPoly DivisionPolySet::omega(unsigned n) {
  if (n < 1) throw std::domain_error("omega: n >= 1 required");
  psi(n + 2);  // grow the cache first: references below must stay valid
  MultiPoly num = psi_signed(n + 2) * psi_signed(n - 1).pow(2) -
                  psi_signed(static_cast<long>(n) - 2) * psi_signed(n + 1).pow(2);
  MultiPoly quot;
  try {
    quot = num.exact_div(MultiPoly(4) * kY);
  } catch (const ExactDivisionError&) {
    throw std::logic_error("omega: 4y division failed (recursion bug)");
  }
  std::vector<RewriteRule> yr{curve_.y_rule()};
  return reduce(quot, yr);
}

// ---- group law ------------------------------------------------------------

bool on_curve(const Rational& a, const Rational& b, const PointQ& p) {
  return (p.y * p.y - (p.x * p.x * p.x + a * p.x + b)).is_zero();
}

ECPoint ec_add(const Rational& a, const Rational& /*b*/, const ECPoint& p, const ECPoint& q) {
  if (!p) return q;
  if (!q) return p;
  if (p->x == q->x) {
    if ((p->y + q->y).is_zero()) return std::nullopt;  // vertical line
    // doubling
    Rational num = Rational(3) * p->x * p->x + a;
    Rational lam = num / (Rational(2) * p->y);
    Rational x3 = lam * lam - p->x - q->x;
    Rational y3 = lam * (p->x - x3) - p->y;
    return PointQ{x3, y3};
  }
  Rational lam = (q->y - p->y) / (q->x - p->x);
  Rational x3 = lam * lam - p->x - q->x;
  Rational y3 = lam * (p->x - x3) - p->y;
  return PointQ{x3, y3};
}

ECPoint ec_neg(const ECPoint& p) {
  if (!p) return p;
  return PointQ{p->x, -p->y};
}

ECPoint ec_mul(long n, const ECPoint& p, const Rational& a, const Rational& b) {
  if (n < 0) return ec_neg(ec_mul(-n, p, a, b));
  ECPoint acc = std::nullopt, base = p;
  while (n > 0) {
    if (n & 1) acc = ec_add(a, b, acc, base);
    base = ec_add(a, b, base, base);
    n >>= 1;
  }
  return acc;
}

// ---- preimage polynomials -------------------------------------------------

MultiPoly preimage_poly_x(unsigned n, const CurveSpec& curve, const AffinePoint& P,
                          DivisionPolySet* cache) {
  if (n < 2) throw std::domain_error("preimage_poly_x: n >= 2 required");
  require_on_curve(curve, P);
  DivisionPolySet local(curve);
  DivisionPolySet& dps = cache ? *cache : local;
  std::vector<RewriteRule> yr{curve.y_rule()};
  return reduce(dps.phi(n) - P.z * dps.psi(n).pow(2), yr);
}

MultiPoly preimage_poly_xy2(const CurveSpec& curve, const AffinePoint& P) {
  require_on_curve(curve, P);
  const MultiPoly& a = curve.a;
  const MultiPoly& b = curve.b;
  // The y-coordinate of [2]Q is omega_2/psi_2^3 = G/(8y^3) = G/(8y(x^3+ax+b))
  // after y^2-reduction, so the w-multiplier below is 8y(x^3+ax+b). (One
  // displayed form of [2]Q writes the denominator 2(x^3+ax+b), which drops
  // the y and the psi_2^3 = 8y^3 scaling.)
  MultiPoly g = kX.pow(6) + MultiPoly(5) * a * kX.pow(4) + MultiPoly(20) * b * kX.pow(3) -
                MultiPoly(5) * a.pow(2) * kX.pow(2) - MultiPoly(4) * a * b * kX -
                MultiPoly(8) * b.pow(2) - a.pow(3);
  return g - P.w * MultiPoly(8) * kY * curve.rhs();
}

MultiPoly preimage_resultant_content(const CurveSpec& curve) {
  return MultiPoly(Rational(int_pow2(12))) * curve.nonsingularity().pow(2);
}

MultiPoly origami_quartic(const CurveSpec& curve, const AffinePoint& P) {
  require_on_curve(curve, P);
  if (P.is_numeric() && P.w.constant_value().is_zero())
    throw std::domain_error("origami_quartic: 2-torsion point: derivation divides by w^4");
  const MultiPoly& a = curve.a;
  const MultiPoly& b = curve.b;
  MultiPoly d = curve.nonsingularity();
  MultiPoly closed = kY.pow(4) - MultiPoly(8) * P.w * kY.pow(3) +
                     MultiPoly(6) * (MultiPoly(2) * a * P.z + MultiPoly(3) * b) * kY.pow(2) - d;

  // resultant route: Res_x(f_x, f_xy), curve-reduced, divided by the derived
  // content times the reduced image of w^4
  MultiPoly fx = preimage_poly_x(2, curve, P);
  MultiPoly fxy = preimage_poly_xy2(curve, P);
  MultiPoly res = resultant(fx, fxy, Sym::x);
  MultiPoly w2 = P.w * P.w;  // = z^3+az+b after reduction
  std::vector<RewriteRule> rules;
  if (!P.is_numeric()) rules.push_back(curve.point_rule());
  MultiPoly res_red = reduce(res, rules);
  MultiPoly divisor = preimage_resultant_content(curve) * reduce(w2 * w2, rules);
  MultiPoly route2 = res_red.exact_div(divisor);
  if (!(route2 == reduce(closed, rules)))
    throw std::logic_error("origami_quartic: closed form and resultant route disagree");
  return closed;
}

MultiPoly origami_octic(const CurveSpec& curve, const AffinePoint& P, OctSign sign) {
  AffinePoint use = P;
  if (sign == OctSign::minus) use.w = -P.w;
  MultiPoly quart = origami_quartic(curve, use);
  return quart.substitute(Sym::y, kY.pow(2));
}

// ---- identities -----------------------------------------------------------

IdentityReport verify_s_identity(const CurveSpec& curve, const AffinePoint& P) {
  require_on_curve(curve, P);
  IdentityReport rep{"s_identity", {}};
  MultiPoly fx = preimage_poly_x(2, curve, P);
  MultiPoly r8 = resultant(fx, kY.pow(2) - curve.rhs(), Sym::x);

  bool generic = !curve.is_numeric() && !P.is_numeric();
  if (generic) {
    MultiPoly r_display = parse_poly(
        "y^8 - 40*a*z*y^6 - 28*b*y^6 - 64*z^3*y^6 - 8*a^3*y^4 + 144*a^2*z^2*y^4"
        " + 432*a*b*z*y^4 + 270*b^2*y^4 - 96*a^4*z*y^2 - 144*a^3*b*y^2 - 648*a*b^2*z*y^2"
        " - 972*b^3*y^2 + 16*a^6 + 216*a^3*b^2 + 729*b^4");
    rep.add("resultant_matches_printed_r_display", r8 - r_display);
  }

  MultiPoly s = r8.substitute(Sym::y, kY.pow(2));
  MultiPoly prod = origami_octic(curve, P, OctSign::plus) * origami_octic(curve, P, OctSign::minus);
  MultiPoly diff = s - prod;
  MultiPoly expected = MultiPoly(64) * kY.pow(12) *
                       (P.w * P.w - (P.z.pow(3) + curve.a * P.z + curve.b));
  rep.add("difference_is_64y12_curve_relation", diff - expected);

  std::vector<RewriteRule> rules;
  if (!P.is_numeric()) rules.push_back(curve.point_rule());
  rep.add("difference_reduces_to_zero", reduce(diff, rules));
  return rep;
}

IdentityReport verify_coefficient_reductions() {
  IdentityReport rep{"coefficient_reductions", {}};
  CurveSpec curve = CurveSpec::generic();
  AffinePoint P = AffinePoint::generic();
  MultiPoly fx = preimage_poly_x(2, curve, P);
  MultiPoly fxy = preimage_poly_xy2(curve, P);
  MultiPoly res = resultant(fx, fxy, Sym::x);
  MultiPoly W = res.exact_div(preimage_resultant_content(curve));

  MultiPoly display = parse_poly(
      "w^4*y^4 - 8*a*z*w^3*y^3 - 8*b*w^3*y^3 - 8*z^3*w^3*y^3"
      " + 12*a^2*z^2*w^2*y^2 + 30*a*b*z*w^2*y^2 + 12*a*z^4*w^2*y^2 + 18*b^2*w^2*y^2"
      " + 18*b*z^3*w^2*y^2"
      " - 4*a^5*z^2 - 8*a^4*b*z - 8*a^4*z^4 - 4*a^3*b^2 - 8*a^3*b*z^3 - 4*a^3*z^6"
      " - 27*a^2*b^2*z^2 - 54*a*b^3*z - 54*a*b^2*z^4 - 27*b^4 - 54*b^3*z^3 - 27*b^2*z^6");
  rep.add("raw_resultant_over_content_matches_display", W - display);

  std::vector<RewriteRule> rules{curve.point_rule()};
  auto reduced_equal = [&](const MultiPoly& lhs, const MultiPoly& rhs) {
    return reduce(lhs, rules) - reduce(rhs, rules);
  };
  const MultiPoly wv = MultiPoly::var(Sym::w);
  const MultiPoly zv = MultiPoly::var(Sym::z);
  const MultiPoly av = MultiPoly::var(Sym::a);
  const MultiPoly bv = MultiPoly::var(Sym::b);
  MultiPoly d = curve.nonsingularity();

  rep.add("y4_coefficient_is_w4", reduced_equal(W.coeff_of(Sym::y, 4), wv.pow(4)));
  rep.add("y3_coefficient_reduces_to_-8w5",
          reduced_equal(W.coeff_of(Sym::y, 3), MultiPoly(-8) * wv.pow(5)));
  rep.add("y2_coefficient_reduces_to_6w4(2az+3b)",
          reduced_equal(W.coeff_of(Sym::y, 2),
                        MultiPoly(6) * wv.pow(4) * (MultiPoly(2) * av * zv + MultiPoly(3) * bv)));
  rep.add("y1_coefficient_vanishes", W.coeff_of(Sym::y, 1));

  MultiPoly c0 = W.coeff_of(Sym::y, 0);
  bool minus_sign = reduced_equal(c0, -d * wv.pow(4)).is_zero();
  bool printed_sign =
      reduced_equal(c0, (MultiPoly(-4) * av.pow(3) + MultiPoly(27) * bv.pow(2)) * wv.pow(4))
          .is_zero();
  auto& c = rep.add("constant_coefficient_sign", minus_sign && !printed_sign);
  c.note = minus_sign
               ? "constant reduces to -(4a^3+27b^2)w^4; the printed (-4a^3+27b^2)[w^4] "
                 "carries a sign typo"
               : "unexpected: constant did not reduce to -(4a^3+27b^2)w^4";
  return rep;
}

}  // namespace origami
