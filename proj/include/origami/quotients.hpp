#ifndef ORIGAMI_QUOTIENTS_HPP
#define ORIGAMI_QUOTIENTS_HPP

#include <string>
#include <vector>

#include "origami/divpoly.hpp"
#include "origami/identity.hpp"
#include "origami/polyring.hpp"

namespace origami {

/// The three S4-quotient quartics, the 4-division-field quartic g and the
/// T4 polynomial, with d = 4a^3+27b^2 and Delta = -16d.
struct QuotientSet {
  MultiPoly d, Delta;
  MultiPoly h1, h2, h3, g, T4;
};

/// All five polynomials in var (h1, h2 involve the point; h3 is the origami
/// quartic; g and T4 depend only on the curve). Throws on singular curves.
QuotientSet quotient_polys(const CurveSpec& curve, const AffinePoint& P, Sym var = Sym::x);

/// beta = -1/(9b) (alpha^3 - 4a alpha^2 + (16a^2 - 72bz) alpha + 48 d).
/// The published prose formula prints 8a^2 for the alpha coefficient; the
/// published degree-12 expansion, the worked example and the zero reduction
/// all require 16a^2. Throws when b = 0.
MultiPoly beta_map(const CurveSpec& curve, const AffinePoint& P);

/// Staged verification that 3^8 b^4 h1(beta) is the zero polynomial modulo
/// alpha^4 = 4 Delta alpha + 12 a Delta and the curve relation.
struct IsoWitness {
  MultiPoly expansion;            // degree-12 polynomial in alpha
  MultiPoly c3, c2, c1, c0;       // after the alpha-reduction
  MultiPoly final_residual;       // after the curve reduction (zero on success)
  IdentityReport report;
  std::string to_json() const;
};

/// Generic (symbolic) staged check against the published stage displays.
IsoWitness verify_isomorphism();

/// Same staged reduction specialized at a numeric curve/point; the displays
/// are not compared (they are generic), only the final zero.
IsoWitness verify_isomorphism_at(const CurveSpec& curve, const AffinePoint& P);

/// Modular root-bijection check: at a prime where g and h1 split, alpha ->
/// beta(alpha) maps the 4 roots of g bijectively onto the 4 roots of h1.
IdentityReport inverse_direction_check(const CurveSpec& curve, const AffinePoint& P);

}  // namespace origami

#endif
