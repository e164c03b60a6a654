#include "reglab/real.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace reglab {

namespace {

thread_local long t_default_bits = 128;

mpfr_prec_t clamp_bits(long bits) {
  return static_cast<mpfr_prec_t>(std::max<long>(bits, MPFR_PREC_MIN));
}

long join_bits(const Real& a, const Real& b) { return std::max(a.bits(), b.bits()); }

}  // namespace

long Precision::bits() const {
  return static_cast<long>(std::ceil(digits * 3.321928094887362)) + 1;
}

long default_bits() { return t_default_bits; }

PrecisionScope::PrecisionScope(long bits) : saved_(t_default_bits) { t_default_bits = bits; }
PrecisionScope::~PrecisionScope() { t_default_bits = saved_; }

Real::Real() { mpfr_init2(value_, clamp_bits(default_bits())); mpfr_set_zero(value_, 1); }

Real::Real(long value, long bits) {
  mpfr_init2(value_, clamp_bits(bits));
  mpfr_set_si(value_, value, MPFR_RNDN);
}

Real::Real(double value, long bits) {
  mpfr_init2(value_, clamp_bits(bits));
  mpfr_set_d(value_, value, MPFR_RNDN);
}

Real::Real(const mpq_class& value, long bits) {
  mpfr_init2(value_, clamp_bits(bits));
  mpfr_set_q(value_, value.get_mpq_t(), MPFR_RNDN);
}

Real::Real(const mpz_class& value, long bits) {
  mpfr_init2(value_, clamp_bits(bits));
  mpfr_set_z(value_, value.get_mpz_t(), MPFR_RNDN);
}

Real Real::parse(std::string_view text, long bits) {
  Real r(0L, bits);
  std::string s(text);
  char* end = nullptr;
  mpfr_strtofr(r.value_, s.c_str(), &end, 10, MPFR_RNDN);
  if (end == s.c_str() || *end != '\0') {
    throw std::invalid_argument("not a decimal number: " + s);
  }
  return r;
}

Real Real::pi(long bits) {
  Real r(0L, bits);
  mpfr_const_pi(r.value_, MPFR_RNDN);
  return r;
}

Real::Real(const Real& other) {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

Real::~Real() { mpfr_clear(value_); }

Real Real::with_bits(long bits) const {
  Real r(0L, bits);
  mpfr_set(r.value_, value_, MPFR_RNDN);
  return r;
}

mpq_class Real::to_rational() const {
  if (!is_finite()) throw std::domain_error("non-finite Real has no rational value");
  mpq_class q;
  mpfr_get_q(q.get_mpq_t(), value_);
  return q;
}

std::string Real::to_fixed(int decimals) const {
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*RNf", decimals, value_);
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

std::string Real::to_string(int significant) const {
  significant = std::max(significant, 1);
  if (is_zero()) return "0";
  // Decimal exponent of the leading digit.
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*RNe", significant - 1, value_);
  std::string sci(buf);
  mpfr_free_str(buf);
  const auto epos = sci.find('e');
  const int e10 = std::atoi(sci.c_str() + epos + 1);
  if (e10 < -6 || e10 >= significant) return sci;
  return to_fixed(significant - 1 - e10);
}

Real& Real::operator+=(const Real& rhs) {
  if (rhs.bits() > bits()) mpfr_prec_round(value_, rhs.bits(), MPFR_RNDN);
  mpfr_add(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator-=(const Real& rhs) {
  if (rhs.bits() > bits()) mpfr_prec_round(value_, rhs.bits(), MPFR_RNDN);
  mpfr_sub(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator*=(const Real& rhs) {
  if (rhs.bits() > bits()) mpfr_prec_round(value_, rhs.bits(), MPFR_RNDN);
  mpfr_mul(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator/=(const Real& rhs) {
  if (rhs.bits() > bits()) mpfr_prec_round(value_, rhs.bits(), MPFR_RNDN);
  mpfr_div(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator*=(long rhs) {
  mpfr_mul_si(value_, value_, rhs, MPFR_RNDN);
  return *this;
}

Real& Real::operator/=(long rhs) {
  mpfr_div_si(value_, value_, rhs, MPFR_RNDN);
  return *this;
}

Real operator-(const Real& x) {
  Real r(0L, x.bits());
  mpfr_neg(r.value_, x.value_, MPFR_RNDN);
  return r;
}

Real operator+(const Real& a, const Real& b) {
  Real r(0L, join_bits(a, b));
  mpfr_add(r.value_, a.value_, b.value_, MPFR_RNDN);
  return r;
}

Real operator-(const Real& a, const Real& b) {
  Real r(0L, join_bits(a, b));
  mpfr_sub(r.value_, a.value_, b.value_, MPFR_RNDN);
  return r;
}

Real operator*(const Real& a, const Real& b) {
  Real r(0L, join_bits(a, b));
  mpfr_mul(r.value_, a.value_, b.value_, MPFR_RNDN);
  return r;
}

Real operator/(const Real& a, const Real& b) {
  Real r(0L, join_bits(a, b));
  mpfr_div(r.value_, a.value_, b.value_, MPFR_RNDN);
  return r;
}

Real operator*(const Real& a, long b) {
  Real r(0L, a.bits());
  mpfr_mul_si(r.value_, a.value_, b, MPFR_RNDN);
  return r;
}

Real operator/(const Real& a, long b) {
  Real r(0L, a.bits());
  mpfr_div_si(r.value_, a.value_, b, MPFR_RNDN);
  return r;
}

Real operator+(const Real& a, long b) {
  Real r(0L, a.bits());
  mpfr_add_si(r.value_, a.value_, b, MPFR_RNDN);
  return r;
}

Real operator-(const Real& a, long b) {
  Real r(0L, a.bits());
  mpfr_sub_si(r.value_, a.value_, b, MPFR_RNDN);
  return r;
}

Real operator-(long a, const Real& b) {
  Real r(0L, b.bits());
  mpfr_si_sub(r.value_, a, b.value_, MPFR_RNDN);
  return r;
}

std::partial_ordering operator<=>(const Real& a, const Real& b) {
  if (mpfr_unordered_p(a.value_, b.value_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp(a.value_, b.value_);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

std::partial_ordering operator<=>(const Real& a, long b) {
  if (mpfr_nan_p(a.value_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp_si(a.value_, b);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

#define REGLAB_UNARY(name, fn)                 \
  Real name(const Real& x) {                   \
    Real r(0L, x.bits());                      \
    fn(r.value_, x.value_, MPFR_RNDN);         \
    return r;                                  \
  }

REGLAB_UNARY(abs, mpfr_abs)
REGLAB_UNARY(sqrt, mpfr_sqrt)
REGLAB_UNARY(exp, mpfr_exp)
REGLAB_UNARY(log, mpfr_log)
REGLAB_UNARY(log10, mpfr_log10)
REGLAB_UNARY(sin, mpfr_sin)
REGLAB_UNARY(cos, mpfr_cos)

#undef REGLAB_UNARY

Real pow(const Real& x, const Real& y) {
  Real r(0L, join_bits(x, y));
  mpfr_pow(r.value_, x.value_, y.value_, MPFR_RNDN);
  return r;
}

Real pow(const Real& x, long n) {
  Real r(0L, x.bits());
  mpfr_pow_si(r.value_, x.value_, n, MPFR_RNDN);
  return r;
}

Real max(const Real& a, const Real& b) { return a < b ? b : a; }
Real min(const Real& a, const Real& b) { return b < a ? b : a; }

int agreement_digits(const Real& a, const Real& reference, int cap) {
  const Real diff = abs(a - reference);
  if (diff.is_zero()) return cap;
  if (reference.is_zero()) return 0;
  const double d = -log10(diff / abs(reference)).to_double();
  if (!std::isfinite(d)) return cap;
  return std::clamp(static_cast<int>(std::floor(d)), 0, cap);
}

Real relative_difference(const Real& a, const Real& b) { return abs(a - b) / abs(b); }

std::string BigReal::to_string(int requested_digits) const {
  return value.to_string(std::max(1, std::min(requested_digits, certified_digits)));
}

BigComplex BigComplex::polar_unit(const Real& angle) { return {cos(angle), sin(angle)}; }

BigComplex operator/(const BigComplex& a, const BigComplex& b) {
  const Real n = b.norm();
  return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
}

}  // namespace reglab
