#ifndef ORIGAMI_POLYRING_HPP
#define ORIGAMI_POLYRING_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "origami/exactnum.hpp"

namespace origami {

/// The fixed symbol universe. Enum order is the lexicographic precedence
/// x > y > alpha > w > z > a > b used for term ordering and elimination.
enum class Sym : int { x = 0, y, alpha, w, z, a, b };
inline constexpr int kSymCount = 7;

std::string_view sym_name(Sym s);
std::optional<Sym> sym_from_name(std::string_view name);

/// Exponent vector over the fixed symbol list.
struct Monomial {
  std::array<uint32_t, kSymCount> exp{};

  static Monomial one() { return {}; }
  static Monomial var(Sym s, uint32_t power = 1);

  uint32_t operator[](Sym s) const { return exp[static_cast<int>(s)]; }
  uint32_t total_degree() const;
  bool is_one() const;
  bool divides(const Monomial& m) const;
  Monomial operator*(const Monomial& o) const;
  /// Quotient; caller guarantees divisibility.
  Monomial operator/(const Monomial& o) const;

  // array comparison == lex with x most significant
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

class ExactDivisionError;

/// Sparse multivariate polynomial over Q in the fixed symbol universe.
/// Canonical form: term map keyed by monomial in decreasing lex order with
/// no zero coefficients stored.
class MultiPoly {
 public:
  using TermMap = std::map<Monomial, Rational, std::greater<Monomial>>;

  MultiPoly() = default;
  MultiPoly(long n) : MultiPoly(Rational(n)) {}
  MultiPoly(const Rational& c);
  MultiPoly(const Integer& c) : MultiPoly(Rational(c)) {}
  static MultiPoly var(Sym s, uint32_t power = 1);
  static MultiPoly term(const Rational& c, const Monomial& m);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant term (zero if absent).
  Rational constant_term() const;
  /// Value of a constant polynomial; throws if non-constant.
  Rational constant_value() const;

  size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }
  /// Degree in one symbol; -1 for the zero polynomial.
  int degree(Sym s) const;
  int total_degree() const;
  bool involves(Sym s) const { return degree(s) > 0; }
  /// Coefficient of var^k viewed as univariate in var.
  MultiPoly coeff_of(Sym var, uint32_t k) const;
  /// Leading coefficient viewed as univariate in var.
  MultiPoly leading_coeff(Sym var) const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  friend MultiPoly operator+(MultiPoly l, const MultiPoly& r) { return l += r; }
  friend MultiPoly operator-(MultiPoly l, const MultiPoly& r) { return l -= r; }
  friend MultiPoly operator*(const MultiPoly& l, const MultiPoly& r);
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
  MultiPoly operator*(const Rational& c) const;
  friend bool operator==(const MultiPoly& l, const MultiPoly& r) { return l.terms_ == r.terms_; }

  MultiPoly pow(uint32_t e) const;

  /// Ring homomorphism substituting value for var.
  MultiPoly substitute(Sym var, const MultiPoly& value) const;
  /// Substitutes a rational for var.
  MultiPoly substitute(Sym var, const Rational& value) const;

  MultiPoly derivative(Sym var) const;

  /// Coefficient list indexed by power of var (size degree+1; {0} -> {p}).
  std::vector<MultiPoly> to_univariate(Sym var) const;
  static MultiPoly from_univariate(const std::vector<MultiPoly>& coeffs, Sym var);

  /// Exact quotient; throws ExactDivisionError carrying the nonzero
  /// remainder witness otherwise.
  MultiPoly exact_div(const MultiPoly& divisor) const;

  std::string str() const;

 private:
  void add_term(const Monomial& m, const Rational& c);
  TermMap terms_;
  friend class PolyBuilder;
};

class ExactDivisionError : public std::runtime_error {
 public:
  ExactDivisionError(std::string msg, MultiPoly remainder)
      : std::runtime_error(std::move(msg)), remainder_(std::move(remainder)) {}
  const MultiPoly& remainder() const { return remainder_; }

 private:
  MultiPoly remainder_;
};

/// var^power -> replacement, with replacement of lower degree in var.
struct RewriteRule {
  Sym var;
  uint32_t power;
  MultiPoly replacement;

  RewriteRule(Sym v, uint32_t p, MultiPoly r);
};

/// Rewrites until every ruled variable has degree < its rule's power.
/// Idempotent; equals p modulo the ideal generated by var^power - replacement.
MultiPoly reduce(const MultiPoly& p, const std::vector<RewriteRule>& rules);

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, size_t pos)
      : std::runtime_error(msg + " at position " + std::to_string(pos)), pos_(pos) {}
  size_t position() const { return pos_; }

 private:
  size_t pos_;
};

/// Grammar: integer and p/q literals, symbol names, + - * ^ and parentheses.
/// Implicit multiplication is a syntax error.
MultiPoly parse_poly(std::string_view text);

}  // namespace origami

#endif
