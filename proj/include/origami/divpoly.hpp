#ifndef ORIGAMI_DIVPOLY_HPP
#define ORIGAMI_DIVPOLY_HPP

#include <optional>
#include <utility>
#include <vector>

#include "origami/elimination.hpp"
#include "origami/exactnum.hpp"
#include "origami/identity.hpp"
#include "origami/polyring.hpp"

namespace origami {

/// Short Weierstrass curve y^2 = x^3 + a x + b. Coefficients are polynomials
/// so numeric curves (degree-0 entries) and the generic symbolic curve share
/// one code path.
struct CurveSpec {
  MultiPoly a, b;

  static CurveSpec generic();
  static CurveSpec numeric(const Rational& a, const Rational& b);

  bool is_numeric() const { return a.is_constant() && b.is_constant(); }
  /// 4a^3 + 27b^2
  MultiPoly nonsingularity() const;
  /// x^3 + a x + b
  MultiPoly rhs() const;
  /// y^2 -> x^3 + a x + b
  RewriteRule y_rule() const;
  /// w^2 -> z^3 + a z + b
  RewriteRule point_rule() const;
};

/// Affine point (z, w); symbolic mode uses the symbols z and w.
struct AffinePoint {
  MultiPoly z, w;

  static AffinePoint generic();
  static AffinePoint numeric(const Rational& z, const Rational& w);
  bool is_numeric() const { return z.is_constant() && w.is_constant(); }
};

/// Throws unless the numeric point satisfies w^2 = z^3 + az + b.
void require_on_curve(const CurveSpec& curve, const AffinePoint& p);

/// psi/phi/omega cache for one curve. Division polynomials are kept
/// y-reduced (degree <= 1 in y via y^2 -> x^3+ax+b). The cache grows
/// monotonically; concurrent readers of already-cached indices are safe,
/// growth must be serialized by the caller.
class DivisionPolySet {
 public:
  explicit DivisionPolySet(CurveSpec curve);

  const CurveSpec& curve() const { return curve_; }
  /// psi_n, n >= 0.
  const MultiPoly& psi(unsigned n);
  /// phi_n = x psi_n^2 - psi_{n+1} psi_{n-1}, n >= 1.
  MultiPoly phi(unsigned n);
  /// omega_n = (psi_{n+2} psi_{n-1}^2 - psi_{n-2} psi_{n+1}^2) / 4y, n >= 1.
  MultiPoly omega(unsigned n);

 private:
  const MultiPoly& psi_signed(long n);  // admits n = -1
  CurveSpec curve_;
  std::vector<MultiPoly> cache_;  // index n+1, so cache_[0] = psi_{-1}
};

// ---- exact rational group law -------------------------------------------

struct PointQ {
  Rational x, y;
  friend bool operator==(const PointQ&, const PointQ&) = default;
};
/// Affine point or the point at infinity.
using ECPoint = std::optional<PointQ>;

bool on_curve(const Rational& a, const Rational& b, const PointQ& p);
ECPoint ec_add(const Rational& a, const Rational& b, const ECPoint& p, const ECPoint& q);
ECPoint ec_neg(const ECPoint& p);
ECPoint ec_mul(long n, const ECPoint& p, const Rational& a, const Rational& b);

// ---- preimage polynomials and the origami octic -------------------------

/// f_{E,[n]^-1 P,x}(x) = phi_n(x) - z psi_n(x)^2 with y^2 eliminated;
/// monic of degree n^2. Requires n >= 2.
MultiPoly preimage_poly_x(unsigned n, const CurveSpec& curve, const AffinePoint& P,
                          DivisionPolySet* cache = nullptr);

/// The n=2 (x,y)-polynomial
/// (x^6+5ax^4+20bx^3-5a^2x^2-4abx-8b^2-a^3) - w(8y(x^3+ax+b)).
MultiPoly preimage_poly_xy2(const CurveSpec& curve, const AffinePoint& P);

/// Content of Res_x(f_x, f_{x,y}): 2^12 (4a^3+27b^2)^2. The quotient by this
/// content is the raw pre-reduction quartic display; further reduction by the
/// curve relation and division by w^4 yields the monic quartic below.
MultiPoly preimage_resultant_content(const CurveSpec& curve);

/// Monic quartic in y whose roots are the y-coordinates of [2]^-1 P:
/// y^4 - 8wy^3 + 6(2az+3b)y^2 - (4a^3+27b^2). Computed both from the closed
/// form and from the resultant route; throws if the two disagree or if the
/// point is 2-torsion (w = 0), where the derivation divides by w^4.
MultiPoly origami_quartic(const CurveSpec& curve, const AffinePoint& P);

enum class OctSign { plus, minus };

/// f_{E,Q8,+-P}: the quartic with y -> y^2 substituted; the minus sign flips w.
MultiPoly origami_octic(const CurveSpec& curve, const AffinePoint& P, OctSign sign);

/// s - f_P f_{-P} = 64 y^12 (w^2 - z^3 - az - b), zero after curve reduction,
/// where s = Res_x(f_x, y^2-(x^3+ax+b)) evaluated at y^2.
IdentityReport verify_s_identity(const CurveSpec& curve, const AffinePoint& P);

/// Reproduces the raw degree-4 resultant display and checks the per-coefficient
/// reductions modulo the curve relation, recording which constant-term sign is
/// the consistent one.
IdentityReport verify_coefficient_reductions();

}  // namespace origami

#endif
