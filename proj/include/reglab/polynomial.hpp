#pragma once

// Univariate polynomials and rational functions in t over the rationals.

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "reglab/exact_series.hpp"
#include "reglab/real.hpp"

namespace reglab {

class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(Rational constant);  // NOLINT
  Polynomial(long constant) : Polynomial(Rational(constant)) {}  // NOLINT
  explicit Polynomial(std::vector<Rational> coefficients);

  /// c * t^k
  static Polynomial monomial(const Rational& c, int k);
  static Polynomial t() { return monomial(1, 1); }

  /// Degree; -1 for the zero polynomial.
  [[nodiscard]] int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
  [[nodiscard]] bool is_constant() const { return coeffs_.size() <= 1; }
  [[nodiscard]] Rational coefficient(int k) const;
  [[nodiscard]] Rational leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }
  [[nodiscard]] std::span<const Rational> coefficients() const { return coeffs_; }

  [[nodiscard]] Polynomial derivative() const;
  [[nodiscard]] Polynomial monic() const;
  [[nodiscard]] Rational evaluate(const Rational& x) const;
  [[nodiscard]] Real evaluate(const Real& x) const;
  [[nodiscard]] std::string to_string(std::string_view var = "t") const;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  friend Polynomial operator-(const Polynomial& a);
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

  /// Euclidean division: returns (quotient, remainder).
  friend std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
  /// Monic gcd; gcd(0, 0) = 0.
  friend Polynomial gcd(const Polynomial& a, const Polynomial& b);

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Exact quotient a / b; throws if b does not divide a.
Polynomial exact_quotient(const Polynomial& a, const Polynomial& b);
/// Largest k with factor^k | p; p must be nonzero and factor nonconstant.
int multiplicity(Polynomial p, const Polynomial& factor);
/// Product of the distinct irreducible factors of p (monic).
Polynomial squarefree_part(const Polynomial& p);
/// Distinct rational roots of p, ascending.
std::vector<Rational> rational_roots(const Polynomial& p);
/// Parses expressions like "108 - 96*t^5 + 3/2*t" (variable name `var`).
Polynomial parse_polynomial(std::string_view text, char var = 't');

/// num / den with den monic and gcd(num, den) = 1.
class RationalFunction {
 public:
  RationalFunction() : den_(1) {}
  RationalFunction(Polynomial num);  // NOLINT
  RationalFunction(long c) : RationalFunction(Polynomial(c)) {}  // NOLINT
  RationalFunction(Polynomial num, Polynomial den);

  [[nodiscard]] const Polynomial& numerator() const { return num_; }
  [[nodiscard]] const Polynomial& denominator() const { return den_; }
  [[nodiscard]] bool is_zero() const { return num_.is_zero(); }
  [[nodiscard]] bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  [[nodiscard]] bool is_polynomial() const { return den_.is_constant(); }

  [[nodiscard]] RationalFunction derivative() const;
  [[nodiscard]] Rational evaluate(const Rational& x) const;
  [[nodiscard]] Real evaluate(const Real& x) const;
  [[nodiscard]] std::string to_string(std::string_view var = "t") const;

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a);
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  Polynomial num_;
  Polynomial den_;
};

/// Writes fs[i] = numerators[i] / common_denominator.
struct CommonDenominator {
  Polynomial denominator;
  std::vector<Polynomial> numerators;
};
CommonDenominator clear_denominators(std::span<const RationalFunction> fs);

}  // namespace reglab
