#include "origami/polyring.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace origami {

namespace {
constexpr std::string_view kSymNames[kSymCount] = {"x", "y", "alpha", "w", "z", "a", "b"};
}

std::string_view sym_name(Sym s) { return kSymNames[static_cast<int>(s)]; }

std::optional<Sym> sym_from_name(std::string_view name) {
  for (int i = 0; i < kSymCount; ++i)
    if (kSymNames[i] == name) return static_cast<Sym>(i);
  return std::nullopt;
}

Monomial Monomial::var(Sym s, uint32_t power) {
  Monomial m;
  m.exp[static_cast<int>(s)] = power;
  return m;
}

uint32_t Monomial::total_degree() const {
  uint32_t d = 0;
  for (auto e : exp) d += e;
  return d;
}

bool Monomial::is_one() const { return total_degree() == 0; }

bool Monomial::divides(const Monomial& m) const {
  for (int i = 0; i < kSymCount; ++i)
    if (exp[i] > m.exp[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  for (int i = 0; i < kSymCount; ++i) r.exp[i] = exp[i] + o.exp[i];
  return r;
}

Monomial Monomial::operator/(const Monomial& o) const {
  Monomial r;
  for (int i = 0; i < kSymCount; ++i) r.exp[i] = exp[i] - o.exp[i];
  return r;
}

MultiPoly::MultiPoly(const Rational& c) {
  if (!c.is_zero()) terms_.emplace(Monomial::one(), c);
}

MultiPoly MultiPoly::var(Sym s, uint32_t power) {
  return term(Rational(1), Monomial::var(s, power));
}

MultiPoly MultiPoly::term(const Rational& c, const Monomial& m) {
  MultiPoly p;
  if (!c.is_zero()) p.terms_.emplace(m, c);
  return p;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational MultiPoly::constant_term() const {
  auto it = terms_.find(Monomial::one());
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational MultiPoly::constant_value() const {
  if (!is_constant()) throw std::domain_error("constant_value: polynomial is not constant");
  return constant_term();
}

int MultiPoly::degree(Sym s) const {
  if (terms_.empty()) return -1;
  uint32_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m[s]);
  return static_cast<int>(d);
}

int MultiPoly::total_degree() const {
  if (terms_.empty()) return -1;
  uint32_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
  return static_cast<int>(d);
}

MultiPoly MultiPoly::coeff_of(Sym var, uint32_t k) const {
  int vi = static_cast<int>(var);
  MultiPoly out;
  for (const auto& [m, c] : terms_) {
    if (m.exp[vi] != k) continue;
    Monomial stripped = m;
    stripped.exp[vi] = 0;
    out.terms_.emplace(stripped, c);
  }
  return out;
}

MultiPoly MultiPoly::leading_coeff(Sym var) const {
  int d = degree(var);
  return d < 0 ? MultiPoly() : coeff_of(var, static_cast<uint32_t>(d));
}

void MultiPoly::add_term(const Monomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r;
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& l, const MultiPoly& r) {
  MultiPoly out;
  if (l.is_zero() || r.is_zero()) return out;
  // iterate over the smaller factor for fewer map rebuilds
  const MultiPoly& small = l.term_count() <= r.term_count() ? l : r;
  const MultiPoly& big = l.term_count() <= r.term_count() ? r : l;
  for (const auto& [ms, cs] : small.terms_)
    for (const auto& [mb, cb] : big.terms_) out.add_term(ms * mb, cs * cb);
  return out;
}

MultiPoly MultiPoly::operator*(const Rational& c) const {
  MultiPoly r;
  if (c.is_zero()) return r;
  for (const auto& [m, co] : terms_) r.terms_.emplace(m, co * c);
  return r;
}

MultiPoly MultiPoly::pow(uint32_t e) const {
  MultiPoly result(1);
  MultiPoly base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    base = (e >>= 1) ? base * base : base;
  }
  return result;
}

MultiPoly MultiPoly::substitute(Sym var, const MultiPoly& value) const {
  int vi = static_cast<int>(var);
  // group by power of var, then Horner over the powers present
  std::map<uint32_t, MultiPoly> by_power;
  for (const auto& [m, c] : terms_) {
    Monomial stripped = m;
    uint32_t e = stripped.exp[vi];
    stripped.exp[vi] = 0;
    by_power[e].add_term(stripped, c);
  }
  MultiPoly out;
  uint32_t cur = 0;
  bool started = false;
  for (auto it = by_power.rbegin(); it != by_power.rend(); ++it) {
    if (started) out = out * value.pow(cur - it->first);
    cur = it->first;
    started = true;
    out += it->second;
  }
  if (started && cur > 0) out = out * value.pow(cur);
  return out;
}

MultiPoly MultiPoly::substitute(Sym var, const Rational& value) const {
  return substitute(var, MultiPoly(value));
}

MultiPoly MultiPoly::derivative(Sym var) const {
  int vi = static_cast<int>(var);
  MultiPoly out;
  for (const auto& [m, c] : terms_) {
    if (m.exp[vi] == 0) continue;
    Monomial d = m;
    d.exp[vi] -= 1;
    out.add_term(d, c * Rational(static_cast<long>(m.exp[vi])));
  }
  return out;
}

std::vector<MultiPoly> MultiPoly::to_univariate(Sym var) const {
  int d = degree(var);
  std::vector<MultiPoly> coeffs(static_cast<size_t>(std::max(d, 0)) + 1);
  int vi = static_cast<int>(var);
  for (const auto& [m, c] : terms_) {
    Monomial stripped = m;
    uint32_t e = stripped.exp[vi];
    stripped.exp[vi] = 0;
    coeffs[e].add_term(stripped, c);
  }
  return coeffs;
}

MultiPoly MultiPoly::from_univariate(const std::vector<MultiPoly>& coeffs, Sym var) {
  MultiPoly out;
  for (size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i].is_zero()) continue;
    out += coeffs[i] * MultiPoly::term(Rational(1), Monomial::var(var, static_cast<uint32_t>(i)));
  }
  return out;
}

MultiPoly MultiPoly::exact_div(const MultiPoly& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("exact_div: division by zero polynomial");
  MultiPoly rem = *this, quot;
  const auto& dlead = *divisor.terms_.begin();
  while (!rem.is_zero()) {
    const auto& rlead = *rem.terms_.begin();
    if (!dlead.first.divides(rlead.first))
      throw ExactDivisionError("exact_div: non-exact division", rem);
    Monomial qm = rlead.first / dlead.first;
    Rational qc = rlead.second / dlead.second;
    quot.add_term(qm, qc);
    rem -= divisor * MultiPoly::term(qc, qm);
  }
  return quot;
}

RewriteRule::RewriteRule(Sym v, uint32_t p, MultiPoly r)
    : var(v), power(p), replacement(std::move(r)) {
  if (power == 0) throw std::domain_error("RewriteRule: zero power");
  if (replacement.degree(var) >= static_cast<int>(power))
    throw std::domain_error("RewriteRule: replacement does not lower the degree");
}

MultiPoly reduce(const MultiPoly& p, const std::vector<RewriteRule>& rules) {
  for (size_t i = 0; i < rules.size(); ++i)
    for (size_t j = i + 1; j < rules.size(); ++j)
      if (rules[i].var == rules[j].var)
        throw std::domain_error("reduce: duplicate rule variable");
  MultiPoly cur = p;
  bool changed = true;
  int passes = 0;
  while (changed) {
    if (++passes > 1000)
      throw std::runtime_error("reduce: no fixpoint (rules feed each other's variables)");
    changed = false;
    for (const auto& rule : rules) {
      while (cur.degree(rule.var) >= static_cast<int>(rule.power)) {
        int vi = static_cast<int>(rule.var);
        MultiPoly low, high;  // high holds terms with exponent >= power, divided by var^power
        for (const auto& [m, c] : cur.terms()) {
          if (m.exp[vi] >= rule.power) {
            Monomial stripped = m;
            stripped.exp[vi] -= rule.power;
            high += MultiPoly::term(c, stripped);
          } else {
            low += MultiPoly::term(c, m);
          }
        }
        cur = low + high * rule.replacement;
        changed = true;
      }
    }
  }
  return cur;
}

// ---- rendering ----------------------------------------------------------

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational ac = c.sgn() < 0 ? -c : c;
    if (first) {
      if (c.sgn() < 0) os << "-";
      first = false;
    } else {
      os << (c.sgn() < 0 ? " - " : " + ");
    }
    // symbols in ascending precedence (b, a, z, w, alpha, y, x)
    std::string vars;
    for (int i = kSymCount - 1; i >= 0; --i) {
      uint32_t e = m.exp[i];
      if (e == 0) continue;
      if (!vars.empty()) vars += "*";
      vars += std::string(kSymNames[i]);
      if (e > 1) vars += "^" + std::to_string(e);
    }
    bool unit = (ac == Rational(1));
    if (vars.empty()) {
      os << ac.str();
    } else if (unit) {
      os << vars;
    } else {
      os << ac.str() << "*" << vars;
    }
  }
  return os.str();
}

// ---- parsing ------------------------------------------------------------

namespace {

struct Parser {
  std::string_view s;
  size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool consume(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  MultiPoly parse_expr() {
    skip_ws();
    bool neg = false;
    if (consume('-')) neg = true;
    else consume('+');
    MultiPoly acc = parse_term();
    if (neg) acc = -acc;
    while (true) {
      skip_ws();
      if (consume('+')) acc += parse_term();
      else if (consume('-')) acc -= parse_term();
      else break;
    }
    return acc;
  }

  MultiPoly parse_term() {
    MultiPoly acc = parse_factor();
    while (true) {
      skip_ws();
      if (consume('*')) acc *= parse_factor();
      else break;
    }
    return acc;
  }

  MultiPoly parse_factor() {
    MultiPoly base = parse_base();
    skip_ws();
    if (consume('^')) {
      skip_ws();
      size_t start = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      if (pos == start) throw ParseError("expected exponent", pos);
      unsigned long e = std::stoul(std::string(s.substr(start, pos - start)));
      return base.pow(static_cast<uint32_t>(e));
    }
    return base;
  }

  MultiPoly parse_base() {
    skip_ws();
    if (pos >= s.size()) throw ParseError("unexpected end of input", pos);
    char c = s[pos];
    if (c == '(') {
      ++pos;
      MultiPoly inner = parse_expr();
      if (!consume(')')) throw ParseError("expected ')'", pos);
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Integer num = parse_integer();
      skip_ws();
      // rational literal p/q
      if (pos < s.size() && s[pos] == '/') {
        ++pos;
        skip_ws();
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
          throw ParseError("expected denominator", pos);
        Integer den = parse_integer();
        return MultiPoly(Rational(num, den));
      }
      return MultiPoly(Rational(num));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      size_t start = pos;
      while (pos < s.size() && std::isalpha(static_cast<unsigned char>(s[pos]))) ++pos;
      auto name = s.substr(start, pos - start);
      auto sym = sym_from_name(name);
      if (!sym) throw ParseError("unknown symbol '" + std::string(name) + "'", start);
      // implicit multiplication like "2x" or "x y" is rejected by grammar:
      // next char may not start a base
      return MultiPoly::var(*sym);
    }
    throw ParseError(std::string("unexpected character '") + c + "'", pos);
  }

  Integer parse_integer() {
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    return Integer(std::string(s.substr(start, pos - start)));
  }
};

}  // namespace

MultiPoly parse_poly(std::string_view text) {
  Parser p{text};
  MultiPoly out = p.parse_expr();
  p.skip_ws();
  if (p.pos != text.size()) throw ParseError("trailing input", p.pos);
  return out;
}

}  // namespace origami
