#include "reglab/polynomial.hpp"

#include <cctype>
#include <set>
#include <sstream>
#include <stdexcept>

namespace reglab {

Polynomial::Polynomial(Rational constant) {
  if (sgn(constant) != 0) coeffs_.push_back(std::move(constant));
}

Polynomial::Polynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

Polynomial Polynomial::monomial(const Rational& c, int k) {
  if (k < 0) throw std::invalid_argument("negative exponent");
  std::vector<Rational> v(static_cast<std::size_t>(k) + 1);
  v.back() = c;
  return Polynomial(std::move(v));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Rational Polynomial::coefficient(int k) const {
  return k >= 0 && k <= degree() ? coeffs_[static_cast<std::size_t>(k)] : Rational(0);
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> v(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) v[k - 1] = coeffs_[k] * static_cast<long>(k);
  return Polynomial(std::move(v));
}

Polynomial Polynomial::monic() const {
  if (coeffs_.empty()) return {};
  Polynomial r = *this;
  const Rational lead = leading();
  for (auto& c : r.coeffs_) c /= lead;
  return r;
}

Rational Polynomial::evaluate(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Real Polynomial::evaluate(const Real& x) const {
  Real acc(0L, x.bits());
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + Real(*it, x.bits());
  return acc;
}

std::string Polynomial::to_string(std::string_view var) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = coeffs_[static_cast<std::size_t>(k)];
    if (sgn(c) == 0) continue;
    const Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << "*";
    os << var;
    if (k > 1) os << "^" << k;
  }
  return os.str();
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
  if (coeffs_.empty() || rhs.coeffs_.empty()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) == 0) continue;
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) out[i + k] += coeffs_[i] * rhs.coeffs_[k];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

Polynomial operator-(const Polynomial& a) {
  Polynomial r = a;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {Polynomial(), a};
  std::vector<Rational> rem = a.coeffs_;
  std::vector<Rational> quo(static_cast<std::size_t>(a.degree() - b.degree() + 1));
  const Rational lead = b.leading();
  for (int k = a.degree() - b.degree(); k >= 0; --k) {
    const Rational c = rem[static_cast<std::size_t>(k + b.degree())] / lead;
    quo[static_cast<std::size_t>(k)] = c;
    if (sgn(c) == 0) continue;
    for (int i = 0; i <= b.degree(); ++i) {
      rem[static_cast<std::size_t>(k + i)] -= c * b.coeffs_[static_cast<std::size_t>(i)];
    }
  }
  return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a;
  Polynomial y = b;
  while (!y.is_zero()) {
    Polynomial r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

Polynomial exact_quotient(const Polynomial& a, const Polynomial& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw std::domain_error("exact_quotient: division leaves a remainder");
  return q;
}

int multiplicity(Polynomial p, const Polynomial& factor) {
  if (p.is_zero()) throw std::domain_error("multiplicity of the zero polynomial");
  if (factor.is_constant()) throw std::domain_error("multiplicity: factor must be nonconstant");
  int k = 0;
  for (;;) {
    auto [q, r] = divmod(p, factor);
    if (!r.is_zero()) return k;
    p = std::move(q);
    ++k;
  }
}

Polynomial squarefree_part(const Polynomial& p) {
  if (p.is_constant()) return p.is_zero() ? Polynomial() : Polynomial(1);
  return exact_quotient(p, gcd(p, p.derivative())).monic();
}

namespace {

mpz_class lcm_of_denominators(std::span<const Rational> cs) {
  mpz_class l = 1;
  for (const auto& c : cs) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
  return l;
}

std::vector<mpz_class> positive_divisors(mpz_class n) {
  n = abs(n);
  static const mpz_class kLimit("1000000000000");
  if (n > kLimit) throw Error("rational_roots: coefficient too large for divisor enumeration");
  std::vector<mpz_class> small;
  std::vector<mpz_class> large;
  for (mpz_class d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace

std::vector<Rational> rational_roots(const Polynomial& p) {
  if (p.is_zero()) throw std::domain_error("rational_roots of the zero polynomial");
  std::set<Rational> roots;
  Polynomial work = p;
  if (sgn(work.coefficient(0)) == 0) {
    roots.insert(Rational(0));
    while (sgn(work.coefficient(0)) == 0 && !work.is_zero()) work = exact_quotient(work, Polynomial::t());
  }
  if (work.degree() >= 1) {
    const mpz_class scale = lcm_of_denominators(work.coefficients());
    const mpz_class a0 = mpz_class(work.coefficient(0) * scale);
    const mpz_class an = mpz_class(work.leading() * scale);
    const auto ps = positive_divisors(a0);
    const auto qs = positive_divisors(an);
    for (const auto& num : ps) {
      for (const auto& den : qs) {
        for (const int s : {1, -1}) {
          Rational cand(num * s, den);
          cand.canonicalize();
          if (sgn(work.evaluate(cand)) == 0) roots.insert(cand);
        }
      }
    }
  }
  return {roots.begin(), roots.end()};
}

// ---------------------------------------------------------------------------
// Parser

namespace {

class PolynomialParser {
 public:
  PolynomialParser(std::string_view text, char var) : text_(text), var_(var) {}

  Polynomial parse() {
    Polynomial p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("polynomial parse error at position " + std::to_string(pos_) + ": " + what);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expr() {
    Polynomial acc = term();
    for (;;) {
      if (accept('+')) acc += term();
      else if (accept('-')) acc -= term();
      else return acc;
    }
  }

  Polynomial term() {
    Polynomial acc = unary();
    while (accept('*')) acc *= unary();
    return acc;
  }

  Polynomial unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Polynomial power() {
    Polynomial base = primary();
    if (accept('^')) {
      const long e = integer().get_si();
      if (e < 0) fail("negative exponent");
      Polynomial r(1);
      for (long i = 0; i < e; ++i) r *= base;
      return r;
    }
    return base;
  }

  mpz_class integer() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  Polynomial primary() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial p = expr();
      if (!accept(')')) fail("expected ')'");
      return p;
    }
    if (c == var_) {
      ++pos_;
      return Polynomial::t();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Rational value(integer());
      skip_ws();
      // a/b directly following an integer is a rational literal
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        const mpz_class den = integer();
        if (den == 0) fail("zero denominator");
        value /= Rational(den);
      }
      return Polynomial(value);
    }
    fail("unexpected character");
  }

  std::string_view text_;
  char var_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, char var) { return PolynomialParser(text, var).parse(); }

// ---------------------------------------------------------------------------
// RationalFunction

RationalFunction::RationalFunction(Polynomial num) : num_(std::move(num)), den_(1) {}

RationalFunction::RationalFunction(Polynomial num, Polynomial den) {
  if (den.is_zero()) throw std::domain_error("rational function with zero denominator");
  if (num.is_zero()) {
    den_ = Polynomial(1);
    return;
  }
  const Polynomial g = gcd(num, den);
  num = exact_quotient(num, g);
  den = exact_quotient(den, g);
  const Rational lead = den.leading();
  num_ = num * Polynomial(1 / lead);
  den_ = den * Polynomial(1 / lead);
}

RationalFunction RationalFunction::derivative() const {
  return RationalFunction(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

Rational RationalFunction::evaluate(const Rational& x) const {
  const Rational d = den_.evaluate(x);
  if (sgn(d) == 0) throw std::domain_error("rational function evaluated at a pole");
  return num_.evaluate(x) / d;
}

Real RationalFunction::evaluate(const Real& x) const { return num_.evaluate(x) / den_.evaluate(x); }

std::string RationalFunction::to_string(std::string_view var) const {
  if (den_ == Polynomial(1)) return num_.to_string(var);
  return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
  return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
  if (a.den_ == b.den_) return RationalFunction(a.num_ - b.num_, a.den_);
  return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.is_zero()) throw std::domain_error("rational function division by zero");
  return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

RationalFunction operator-(const RationalFunction& a) {
  RationalFunction r = a;
  r.num_ = -r.num_;
  return r;
}

CommonDenominator clear_denominators(std::span<const RationalFunction> fs) {
  Polynomial den(1);
  for (const auto& f : fs) {
    const Polynomial g = gcd(den, f.denominator());
    den = exact_quotient(den * f.denominator(), g);
  }
  CommonDenominator out{den.monic(), {}};
  for (const auto& f : fs) {
    out.numerators.push_back(f.numerator() * exact_quotient(out.denominator, f.denominator()));
  }
  return out;
}

}  // namespace reglab
