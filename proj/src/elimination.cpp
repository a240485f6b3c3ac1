#include "origami/elimination.hpp"

namespace origami {

SylvesterProblem::SylvesterProblem(MultiPoly a, MultiPoly b, Sym v)
    : A(std::move(a)), B(std::move(b)), var(v), deg_a(A.degree(var)), deg_b(B.degree(var)) {
  if (deg_a < 1 || deg_b < 1)
    throw std::domain_error("resultant: inputs must have positive degree in the variable");
}

std::vector<std::vector<MultiPoly>> SylvesterProblem::matrix() const {
  int n = deg_a + deg_b;
  auto ca = A.to_univariate(var);
  auto cb = B.to_univariate(var);
  std::vector<std::vector<MultiPoly>> m(n, std::vector<MultiPoly>(n));
  // deg_b rows of A's coefficients, leading first, shifted right
  for (int r = 0; r < deg_b; ++r)
    for (int j = 0; j <= deg_a; ++j) m[r][r + j] = ca[deg_a - j];
  for (int r = 0; r < deg_a; ++r)
    for (int j = 0; j <= deg_b; ++j) m[deg_b + r][r + j] = cb[deg_b - j];
  return m;
}

MultiPoly bareiss_determinant(std::vector<std::vector<MultiPoly>> m) {
  const size_t n = m.size();
  if (n == 0) return MultiPoly(1);
  MultiPoly prev_pivot(1);
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k].is_zero()) ++swap_row;
      if (swap_row == n) return MultiPoly();  // singular
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        MultiPoly num = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        m[i][j] = num.exact_div(prev_pivot);
      }
      m[i][k] = MultiPoly();
    }
    prev_pivot = m[k][k];
  }
  MultiPoly det = m[n - 1][n - 1];
  return sign < 0 ? -det : det;
}

MultiPoly resultant(const MultiPoly& A, const MultiPoly& B, Sym var) {
  SylvesterProblem prob(A, B, var);
  return bareiss_determinant(prob.matrix());
}

MultiPoly discriminant(const MultiPoly& A, Sym var) {
  int n = A.degree(var);
  if (n < 2) throw std::domain_error("discriminant: degree must be at least 2");
  MultiPoly res = resultant(A, A.derivative(var), var);
  MultiPoly d = res.exact_div(A.leading_coeff(var));
  int half = (n * (n - 1) / 2) % 2;
  return half ? -d : d;
}

}  // namespace origami
