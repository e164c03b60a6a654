#pragma once

// Arbitrary-precision real numbers on top of MPFR.
//
// Every Real carries its own precision in bits. Binary operations produce a
// result at the larger of the two operand precisions; values built from
// integers, doubles or rationals take an explicit precision or the calling
// thread's default (see PrecisionScope).

#include <gmpxx.h>
#include <mpfr.h>

#include <compare>
#include <string>
#include <string_view>
#include <utility>

namespace reglab {

/// Requested accuracy in significant decimal digits.
struct Precision {
  int digits = 30;

  /// Bits needed to represent `digits` decimal digits.
  [[nodiscard]] long bits() const;
  /// bits() plus the guard bits used for every internal evaluation.
  [[nodiscard]] long working_bits() const { return bits() + kGuardBits; }

  static constexpr long kGuardBits = 32;
};

/// Thread-local default precision for Real values constructed without one.
long default_bits();

/// Sets the calling thread's default precision for the lifetime of the scope.
class PrecisionScope {
 public:
  explicit PrecisionScope(long bits);
  ~PrecisionScope();
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  long saved_;
};

class Real {
 public:
  Real();
  explicit Real(long value, long bits = default_bits());
  explicit Real(int value, long bits = default_bits()) : Real(static_cast<long>(value), bits) {}
  explicit Real(double value, long bits = default_bits());
  explicit Real(const mpq_class& value, long bits = default_bits());
  explicit Real(const mpz_class& value, long bits = default_bits());

  /// Parses a decimal string such as "0.42745977255318" or "1e-10".
  static Real parse(std::string_view text, long bits = default_bits());
  static Real pi(long bits = default_bits());

  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  [[nodiscard]] long bits() const { return static_cast<long>(mpfr_get_prec(value_)); }
  /// Same value rounded to a new precision.
  [[nodiscard]] Real with_bits(long bits) const;

  [[nodiscard]] int sign() const { return mpfr_sgn(value_); }
  [[nodiscard]] bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  [[nodiscard]] bool is_finite() const { return mpfr_number_p(value_) != 0; }
  [[nodiscard]] double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  /// Exact value as a rational (every finite binary float is dyadic).
  [[nodiscard]] mpq_class to_rational() const;
  /// Base-2 exponent e with 0.5 <= |x| / 2^e < 1; meaningless for zero.
  [[nodiscard]] long exponent2() const { return static_cast<long>(mpfr_get_exp(value_)); }

  /// Fixed-point rendering with `decimals` digits after the point.
  [[nodiscard]] std::string to_fixed(int decimals) const;
  /// Rendering with `significant` significant digits, plain decimal notation
  /// when the magnitude allows, scientific otherwise.
  [[nodiscard]] std::string to_string(int significant) const;

  Real& operator+=(const Real& rhs);
  Real& operator-=(const Real& rhs);
  Real& operator*=(const Real& rhs);
  Real& operator/=(const Real& rhs);
  Real& operator*=(long rhs);
  Real& operator/=(long rhs);

  friend Real operator-(const Real& x);
  friend Real operator+(const Real& a, const Real& b);
  friend Real operator-(const Real& a, const Real& b);
  friend Real operator*(const Real& a, const Real& b);
  friend Real operator/(const Real& a, const Real& b);
  friend Real operator*(const Real& a, long b);
  friend Real operator*(long a, const Real& b) { return b * a; }
  friend Real operator/(const Real& a, long b);
  friend Real operator+(const Real& a, long b);
  friend Real operator-(const Real& a, long b);
  friend Real operator-(long a, const Real& b);

  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.value_, b.value_) != 0; }
  friend std::partial_ordering operator<=>(const Real& a, const Real& b);
  friend bool operator==(const Real& a, long b) { return mpfr_cmp_si(a.value_, b) == 0; }
  friend std::partial_ordering operator<=>(const Real& a, long b);

  friend Real abs(const Real& x);
  friend Real sqrt(const Real& x);
  friend Real exp(const Real& x);
  friend Real log(const Real& x);
  friend Real log10(const Real& x);
  friend Real sin(const Real& x);
  friend Real cos(const Real& x);
  friend Real pow(const Real& x, const Real& y);
  friend Real pow(const Real& x, long n);
  friend Real max(const Real& a, const Real& b);
  friend Real min(const Real& a, const Real& b);

  [[nodiscard]] mpfr_srcptr raw() const { return value_; }
  [[nodiscard]] mpfr_ptr raw() { return value_; }

 private:
  mpfr_t value_;
};

/// Number of leading decimal digits on which `a` and `reference` agree,
/// i.e. floor(-log10(|a - reference| / |reference|)), capped at `cap`.
int agreement_digits(const Real& a, const Real& reference, int cap);

/// Relative difference |a - b| / |b|.
Real relative_difference(const Real& a, const Real& b);

/// A numeric value together with the number of decimal digits that survived
/// an independent re-evaluation.
struct BigReal {
  Real value;
  int certified_digits = 0;

  /// Decimal rendering that never shows more than `certified_digits`.
  [[nodiscard]] std::string to_string(int requested_digits) const;
};

/// Complex number with Real components; only the arithmetic the regulator
/// determinants need.
struct BigComplex {
  Real re;
  Real im;

  BigComplex() = default;
  BigComplex(Real re_, Real im_) : re(std::move(re_)), im(std::move(im_)) {}
  /// exp(i * angle)
  static BigComplex polar_unit(const Real& angle);

  [[nodiscard]] Real norm() const { return re * re + im * im; }
  [[nodiscard]] Real modulus() const { return sqrt(norm()); }

  friend BigComplex operator+(const BigComplex& a, const BigComplex& b) { return {a.re + b.re, a.im + b.im}; }
  friend BigComplex operator-(const BigComplex& a, const BigComplex& b) { return {a.re - b.re, a.im - b.im}; }
  friend BigComplex operator*(const BigComplex& a, const BigComplex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend BigComplex operator*(const BigComplex& a, const Real& b) { return {a.re * b, a.im * b}; }
  friend BigComplex operator/(const BigComplex& a, const BigComplex& b);
};

}  // namespace reglab
