#pragma once

// Exact truncated q-series over the rationals, optionally with coefficients
// that are polynomials in a formal exponent alpha.
//
// The coefficients a_n(j), b_n(j) of
//   E3b * (E3a / (E3a + 27 E3b))^alpha          = sum_{n>=1} a_n q^n
//   E3a * (E3b / (q (E3a + 27 E3b)))^alpha      = sum_{n>=0} b_n q^n
// are produced here, either at a rational alpha = j/l or with alpha kept
// symbolic.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "reglab/error.hpp"

namespace reglab {

/// Exact rational number; GMP keeps every result in lowest terms with a
/// positive denominator.
using Rational = mpq_class;

/// p/q in lowest terms.
inline Rational make_rational(long p, long q) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

/// The exponent j/l, 1 <= j <= l-1.
class ExponentParam {
 public:
  ExponentParam(long l, long j);
  explicit ExponentParam(Rational value);

  [[nodiscard]] const Rational& value() const { return value_; }

 private:
  Rational value_;
};

/// Polynomial in the formal symbol alpha with rational coefficients.
class AlphaPolynomial {
 public:
  AlphaPolynomial() = default;
  AlphaPolynomial(Rational constant);  // NOLINT: rationals promote implicitly
  AlphaPolynomial(long constant) : AlphaPolynomial(Rational(constant)) {}  // NOLINT
  explicit AlphaPolynomial(std::vector<Rational> coefficients);

  /// The polynomial "alpha".
  static AlphaPolynomial alpha();

  [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
  [[nodiscard]] bool is_constant() const { return coeffs_.size() <= 1; }
  /// Degree in alpha; the zero polynomial reports 0.
  [[nodiscard]] int degree() const { return coeffs_.empty() ? 0 : static_cast<int>(coeffs_.size()) - 1; }
  [[nodiscard]] Rational coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }
  [[nodiscard]] std::span<const Rational> coefficients() const { return coeffs_; }
  [[nodiscard]] Rational evaluate(const Rational& alpha) const;
  [[nodiscard]] std::string to_string(const std::string& var = "a") const;

  AlphaPolynomial& operator+=(const AlphaPolynomial& rhs);
  AlphaPolynomial& operator-=(const AlphaPolynomial& rhs);
  AlphaPolynomial& operator*=(const AlphaPolynomial& rhs);

  friend AlphaPolynomial operator+(AlphaPolynomial a, const AlphaPolynomial& b) { return a += b; }
  friend AlphaPolynomial operator-(AlphaPolynomial a, const AlphaPolynomial& b) { return a -= b; }
  friend AlphaPolynomial operator*(AlphaPolynomial a, const AlphaPolynomial& b) { return a *= b; }
  friend AlphaPolynomial operator-(const AlphaPolynomial& a);
  friend bool operator==(const AlphaPolynomial& a, const AlphaPolynomial& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

// Coefficient-domain helpers used by the series engine.
inline bool coeff_is_zero(const Rational& c) { return sgn(c) == 0; }
inline bool coeff_is_zero(const AlphaPolynomial& c) { return c.is_zero(); }
/// The constant term as a rational when the coefficient is a nonzero unit.
inline bool coeff_unit_constant(const Rational& c, Rational& out) {
  out = c;
  return sgn(c) != 0;
}
inline bool coeff_unit_constant(const AlphaPolynomial& c, Rational& out) {
  out = c.coefficient(0);
  return c.is_constant() && sgn(out) != 0;
}
inline std::string coeff_to_string(const Rational& c) { return c.get_str(); }
inline std::string coeff_to_string(const AlphaPolynomial& c) { return c.to_string(); }

/// Power series in q known for exponents valuation .. order-1.
template <typename Coeff>
class TruncatedQSeries {
 public:
  TruncatedQSeries() = default;
  TruncatedQSeries(int valuation, std::vector<Coeff> coeffs, int order)
      : valuation_(valuation), order_(order), coeffs_(std::move(coeffs)) {
    if (valuation < 0 || order < valuation ||
        static_cast<int>(coeffs_.size()) != order - valuation) {
      throw std::invalid_argument("TruncatedQSeries: coefficient count must equal order - valuation");
    }
  }

  static TruncatedQSeries constant(Coeff c, int order) {
    std::vector<Coeff> v(static_cast<std::size_t>(order));
    if (order > 0) v[0] = std::move(c);
    return TruncatedQSeries(0, std::move(v), order);
  }

  [[nodiscard]] int valuation() const { return valuation_; }
  [[nodiscard]] int order() const { return order_; }
  [[nodiscard]] std::span<const Coeff> coefficients() const { return coeffs_; }

  /// Coefficient of q^n; zero below the valuation, an error at or past the order.
  [[nodiscard]] Coeff coefficient(int n) const {
    if (n >= order_) throw std::out_of_range("coefficient requested beyond truncation order");
    if (n < valuation_) return Coeff(0);
    return coeffs_[static_cast<std::size_t>(n - valuation_)];
  }

  /// Drops every coefficient at exponent >= new_order.
  [[nodiscard]] TruncatedQSeries truncated(int new_order) const {
    new_order = std::min(new_order, order_);
    if (new_order <= valuation_) return TruncatedQSeries(new_order, {}, new_order);
    std::vector<Coeff> v(coeffs_.begin(), coeffs_.begin() + (new_order - valuation_));
    return TruncatedQSeries(valuation_, std::move(v), new_order);
  }

  /// Multiplies by q^k; k may be negative as long as only zero coefficients
  /// fall below exponent 0.
  [[nodiscard]] TruncatedQSeries shifted(int k) const {
    std::vector<Coeff> v = coeffs_;
    int val = valuation_ + k;
    if (val < 0) {
      const auto drop = static_cast<std::size_t>(-val);
      for (std::size_t i = 0; i < drop && i < v.size(); ++i) {
        if (!coeff_is_zero(v[i])) throw std::invalid_argument("shift would create negative exponents");
      }
      v.erase(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(std::min(drop, v.size())));
      val = 0;
    }
    return TruncatedQSeries(val, std::move(v), order_ + k);
  }

  [[nodiscard]] TruncatedQSeries scaled(const Coeff& s) const {
    TruncatedQSeries r = *this;
    for (auto& c : r.coeffs_) c = c * s;
    return r;
  }

  friend TruncatedQSeries operator+(const TruncatedQSeries& f, const TruncatedQSeries& g) {
    return combine(f, g, 1);
  }
  friend TruncatedQSeries operator-(const TruncatedQSeries& f, const TruncatedQSeries& g) {
    return combine(f, g, -1);
  }
  friend bool operator==(const TruncatedQSeries& f, const TruncatedQSeries& g) {
    if (f.order_ != g.order_) return false;
    const int lo = std::min(f.valuation_, g.valuation_);
    for (int n = lo; n < f.order_; ++n) {
      if (!(f.coefficient(n) == g.coefficient(n))) return false;
    }
    return true;
  }

 private:
  static TruncatedQSeries combine(const TruncatedQSeries& f, const TruncatedQSeries& g, int sign) {
    const int val = std::min(f.valuation_, g.valuation_);
    const int ord = std::min(f.order_, g.order_);
    if (ord <= val) return TruncatedQSeries(ord, {}, ord);
    std::vector<Coeff> v;
    v.reserve(static_cast<std::size_t>(ord - val));
    for (int n = val; n < ord; ++n) {
      v.push_back(sign > 0 ? Coeff(f.coefficient(n) + g.coefficient(n)) : Coeff(f.coefficient(n) - g.coefficient(n)));
    }
    return TruncatedQSeries(val, std::move(v), ord);
  }

  int valuation_ = 0;
  int order_ = 0;
  std::vector<Coeff> coeffs_;
};

using RationalSeries = TruncatedQSeries<Rational>;
using AlphaSeries = TruncatedQSeries<AlphaPolynomial>;

/// Promotes rational coefficients to constant alpha-polynomials.
AlphaSeries promote(const RationalSeries& f);
/// Substitutes a rational value for alpha in every coefficient.
RationalSeries specialize(const AlphaSeries& f, const Rational& alpha);

/// Product; valuations add and the result is known up to
/// min(order_f + val_g, order_g + val_f).
template <typename Coeff>
TruncatedQSeries<Coeff> series_mul(const TruncatedQSeries<Coeff>& f, const TruncatedQSeries<Coeff>& g) {
  const int val = f.valuation() + g.valuation();
  const int ord = std::min(f.order() + g.valuation(), g.order() + f.valuation());
  if (ord <= val) return TruncatedQSeries<Coeff>(ord, {}, ord);
  std::vector<Coeff> out(static_cast<std::size_t>(ord - val));
  const auto fc = f.coefficients();
  const auto gc = g.coefficients();
  for (std::size_t i = 0; i < fc.size() && i < out.size(); ++i) {
    if (coeff_is_zero(fc[i])) continue;
    for (std::size_t k = 0; k < gc.size() && i + k < out.size(); ++k) {
      out[i + k] += fc[i] * gc[k];
    }
  }
  return TruncatedQSeries<Coeff>(val, std::move(out), ord);
}

/// Multiplicative inverse modulo q^order. The constant term must be a
/// nonzero rational (for alpha-polynomial coefficients: a nonzero constant).
template <typename Coeff>
TruncatedQSeries<Coeff> series_inverse(const TruncatedQSeries<Coeff>& f) {
  Rational c0;
  if (f.order() == 0) return f;
  if (!coeff_unit_constant(f.coefficient(0), c0)) {
    throw ZeroConstantTerm("series_inverse: constant term is not a unit");
  }
  const int n_max = f.order();
  const Rational inv0 = 1 / c0;
  std::vector<Coeff> g(static_cast<std::size_t>(n_max));
  g[0] = Coeff(inv0);
  for (int n = 1; n < n_max; ++n) {
    Coeff acc(0);
    for (int k = 1; k <= n; ++k) {
      const Coeff fk = f.coefficient(k);
      if (coeff_is_zero(fk)) continue;
      acc += fk * g[static_cast<std::size_t>(n - k)];
    }
    g[static_cast<std::size_t>(n)] = acc * Coeff(-inv0);
  }
  return TruncatedQSeries<Coeff>(0, std::move(g), n_max);
}

/// f^alpha for f(0) = 1, via n g_n = sum_{k=1}^n (alpha k - (n - k)) f_k g_{n-k}.
template <typename Coeff>
TruncatedQSeries<Coeff> series_pow_rational(const TruncatedQSeries<Coeff>& f, const Coeff& alpha) {
  if (f.order() == 0) return f;
  Rational c0;
  if (!coeff_unit_constant(f.coefficient(0), c0) || c0 != 1) {
    throw ConstantTermNotOne("series_pow_rational: constant term must be 1");
  }
  const int n_max = f.order();
  std::vector<Coeff> g(static_cast<std::size_t>(n_max));
  g[0] = Coeff(1);
  for (int n = 1; n < n_max; ++n) {
    Coeff acc(0);
    for (int k = 1; k <= n; ++k) {
      const Coeff fk = f.coefficient(k);
      if (coeff_is_zero(fk)) continue;
      const Coeff weight = alpha * Coeff(Rational(k)) - Coeff(Rational(n - k));
      acc += weight * fk * g[static_cast<std::size_t>(n - k)];
    }
    g[static_cast<std::size_t>(n)] = acc * Coeff(make_rational(1, n));
  }
  return TruncatedQSeries<Coeff>(0, std::move(g), n_max);
}

enum class EisensteinKind { E3a, E3b };

/// Legendre symbol (n/3): 0, +1, -1 for n = 0, 1, 2 mod 3.
int chi3(long n);

/// q-expansion of E3a = 1 - 9 sum (sum_{k|n} chi3(k) k^2) q^n or
/// E3b = sum (sum_{k|n} chi3(n/k) k^2) q^n, modulo q^order.
RationalSeries eisenstein_q_expansion(EisensteinKind kind, int order);

/// a_0 .. a_{order-1} at alpha = j/l (a_0 = 0).
RationalSeries a_coeffs(const ExponentParam& alpha, int order);
/// a_n with alpha symbolic.
AlphaSeries a_coeffs_formal(int order);
/// b_0 .. b_{order-1} at alpha = j/l (valuation 0, b_0 = 1).
RationalSeries b_coeffs(const ExponentParam& alpha, int order);
/// b_n with alpha symbolic.
AlphaSeries b_coeffs_formal(int order);

/// {"valuation":v,"coeffs":[["num","den"],...],"order":N}
nlohmann::json to_json(const RationalSeries& f);
RationalSeries rational_series_from_json(const nlohmann::json& j);

}  // namespace reglab
