#ifndef ORIGAMI_ELIMINATION_HPP
#define ORIGAMI_ELIMINATION_HPP

#include <vector>

#include "origami/polyring.hpp"

namespace origami {

/// A pending resultant computation. Degrees are the true degrees of A and B
/// in var (recomputed after any specialization, never the generic shape).
struct SylvesterProblem {
  MultiPoly A, B;
  Sym var;
  int deg_a = 0, deg_b = 0;

  SylvesterProblem(MultiPoly a, MultiPoly b, Sym v);
  /// Sylvester matrix with A's coefficient rows first; determinant equals
  /// Res(A, B) in the convention Res(x-u, x-v, x) = u - v.
  std::vector<std::vector<MultiPoly>> matrix() const;
};

/// Fraction-free Bareiss determinant.
MultiPoly bareiss_determinant(std::vector<std::vector<MultiPoly>> m);

/// Sylvester-matrix resultant of A and B with respect to var.
/// Both inputs must have positive degree in var.
MultiPoly resultant(const MultiPoly& A, const MultiPoly& B, Sym var);

/// Disc_var(A) = (-1)^(n(n-1)/2) / lc(A) * Res_var(A, A'), n = deg A >= 2.
MultiPoly discriminant(const MultiPoly& A, Sym var);

}  // namespace origami

#endif
