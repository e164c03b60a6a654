#include "reglab/exact_series.hpp"

#include <sstream>

namespace reglab {

ExponentParam::ExponentParam(long l, long j) {
  if (l < 2 || j < 1 || j > l - 1) {
    throw std::invalid_argument("exponent j/l requires 1 <= j <= l-1");
  }
  value_ = make_rational(j, l);
}

ExponentParam::ExponentParam(Rational value) : value_(std::move(value)) {
  if (sgn(value_) <= 0 || value_ >= 1) throw std::invalid_argument("exponent must lie in (0, 1)");
}

// ---------------------------------------------------------------------------
// AlphaPolynomial

AlphaPolynomial::AlphaPolynomial(Rational constant) {
  if (sgn(constant) != 0) coeffs_.push_back(std::move(constant));
}

AlphaPolynomial::AlphaPolynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
  trim();
}

AlphaPolynomial AlphaPolynomial::alpha() { return AlphaPolynomial(std::vector<Rational>{0, 1}); }

void AlphaPolynomial::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Rational AlphaPolynomial::evaluate(const Rational& alpha) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * alpha + *it;
  return acc;
}

std::string AlphaPolynomial::to_string(const std::string& var) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const Rational& c = coeffs_[k];
    if (sgn(c) == 0) continue;
    Rational mag = abs(c);
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

AlphaPolynomial& AlphaPolynomial::operator+=(const AlphaPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  trim();
  return *this;
}

AlphaPolynomial& AlphaPolynomial::operator-=(const AlphaPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  trim();
  return *this;
}

AlphaPolynomial& AlphaPolynomial::operator*=(const AlphaPolynomial& rhs) {
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

AlphaPolynomial operator-(const AlphaPolynomial& a) {
  AlphaPolynomial r = a;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

// ---------------------------------------------------------------------------
// Series conversions

AlphaSeries promote(const RationalSeries& f) {
  std::vector<AlphaPolynomial> v;
  v.reserve(f.coefficients().size());
  for (const auto& c : f.coefficients()) v.emplace_back(c);
  return AlphaSeries(f.valuation(), std::move(v), f.order());
}

RationalSeries specialize(const AlphaSeries& f, const Rational& alpha) {
  std::vector<Rational> v;
  v.reserve(f.coefficients().size());
  for (const auto& c : f.coefficients()) v.push_back(c.evaluate(alpha));
  return RationalSeries(f.valuation(), std::move(v), f.order());
}

// ---------------------------------------------------------------------------
// Eisenstein series

int chi3(long n) {
  switch (((n % 3) + 3) % 3) {
    case 1: return 1;
    case 2: return -1;
    default: return 0;
  }
}

RationalSeries eisenstein_q_expansion(EisensteinKind kind, int order) {
  if (order < 1) throw std::invalid_argument("eisenstein_q_expansion: order must be >= 1");
  std::vector<Rational> v(static_cast<std::size_t>(order));
  if (kind == EisensteinKind::E3a) v[0] = 1;
  for (long n = 1; n < order; ++n) {
    mpz_class sum = 0;
    for (long k = 1; k * k <= n; ++k) {
      if (n % k != 0) continue;
      const long k2 = n / k;
      // divisor pair (k, k2)
      for (const long d : {k, k2}) {
        const long other = n / d;
        const int chi = kind == EisensteinKind::E3a ? chi3(d) : chi3(other);
        sum += mpz_class(chi) * d * d;
        if (k == k2) break;
      }
    }
    v[static_cast<std::size_t>(n)] = kind == EisensteinKind::E3a ? Rational(-9 * sum) : Rational(sum);
  }
  return RationalSeries(0, std::move(v), order);
}

namespace {

// E3a + 27 E3b modulo q^order.
RationalSeries hauptmodul_denominator(const RationalSeries& e3a, const RationalSeries& e3b) {
  return e3a + e3b.scaled(Rational(27));
}

template <typename Coeff>
TruncatedQSeries<Coeff> lift(const RationalSeries& f);

template <>
RationalSeries lift<Rational>(const RationalSeries& f) { return f; }

template <>
AlphaSeries lift<AlphaPolynomial>(const RationalSeries& f) { return promote(f); }

template <typename Coeff>
TruncatedQSeries<Coeff> a_series(const Coeff& alpha, int order) {
  if (order < 2) throw std::invalid_argument("a_coeffs: order must be >= 2");
  const auto e3a = eisenstein_q_expansion(EisensteinKind::E3a, order);
  const auto e3b = eisenstein_q_expansion(EisensteinKind::E3b, order);
  const auto ratio = series_mul(e3a, series_inverse(hauptmodul_denominator(e3a, e3b)));
  const auto power = series_pow_rational(lift<Coeff>(ratio), alpha);
  // e3b has valuation 1, so the product is known modulo q^order.
  return series_mul(lift<Coeff>(e3b), power).truncated(order);
}

template <typename Coeff>
TruncatedQSeries<Coeff> b_series(const Coeff& alpha, int order) {
  if (order < 2) throw std::invalid_argument("b_coeffs: order must be >= 2");
  const auto e3a = eisenstein_q_expansion(EisensteinKind::E3a, order);
  const auto e3b_over_q = eisenstein_q_expansion(EisensteinKind::E3b, order + 1).shifted(-1);
  const auto ratio = series_mul(e3b_over_q, series_inverse(hauptmodul_denominator(e3a, e3b_over_q.shifted(1))));
  const auto power = series_pow_rational(lift<Coeff>(ratio), alpha);
  return series_mul(lift<Coeff>(e3a), power).truncated(order);
}

}  // namespace

RationalSeries a_coeffs(const ExponentParam& alpha, int order) { return a_series<Rational>(alpha.value(), order); }
AlphaSeries a_coeffs_formal(int order) { return a_series<AlphaPolynomial>(AlphaPolynomial::alpha(), order); }
RationalSeries b_coeffs(const ExponentParam& alpha, int order) { return b_series<Rational>(alpha.value(), order); }
AlphaSeries b_coeffs_formal(int order) { return b_series<AlphaPolynomial>(AlphaPolynomial::alpha(), order); }

// ---------------------------------------------------------------------------
// JSON

nlohmann::json to_json(const RationalSeries& f) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& c : f.coefficients()) {
    coeffs.push_back({c.get_num().get_str(), c.get_den().get_str()});
  }
  return {{"valuation", f.valuation()}, {"coeffs", coeffs}, {"order", f.order()}};
}

RationalSeries rational_series_from_json(const nlohmann::json& j) {
  std::vector<Rational> v;
  for (const auto& pair : j.at("coeffs")) {
    Rational q(mpz_class(pair.at(0).get<std::string>()), mpz_class(pair.at(1).get<std::string>()));
    q.canonicalize();
    v.push_back(q);
  }
  return RationalSeries(j.at("valuation").get<int>(), std::move(v), j.at("order").get<int>());
}

}  // namespace reglab
