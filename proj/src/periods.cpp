#include "reglab/periods.hpp"

#include <algorithm>
#include <cmath>
#include <future>

#include "reglab/weierstrass.hpp"

namespace reglab {

Constants constants(const Precision& p) {
  const long bits = p.working_bits();
  if (bits < 64) throw std::invalid_argument("constants: working precision below 64 bits");
  Constants k{Real::pi(bits), sqrt(Real(3L, bits)), Real(0L, bits)};
  k.c = exp(-(k.pi * 2) / k.sqrt3);
  return k;
}

int default_truncation(int digits) {
  // |log10 c| = 2 pi / (sqrt 3 ln 10)
  const double per_term = 2.0 * M_PI / (std::sqrt(3.0) * std::log(10.0));
  return static_cast<int>(std::ceil(digits / per_term)) + 16;
}

namespace {

struct SeriesTerms {
  std::vector<Real> a_terms_i, a_terms_j;  // index n-1, n >= 1
  std::vector<Real> b_terms_i, b_terms_j;  // index n, n >= 0
};

// Every individual term of I(j) and J(j) up to (excluding) `order`.
SeriesTerms ij_terms(int l, int j, int order, const Precision& p) {
  const long bits = p.working_bits();
  const Constants k = constants(p);
  const ExponentParam alpha(l, j);
  const auto a = a_coeffs(alpha, order);
  const auto b = b_coeffs(alpha, order);
  const Real alpha_r(alpha.value(), bits);
  const Real ln3 = log(Real(3L, bits));
  const Real two_pi = k.pi * 2;

  const Real pref_i = exp((alpha_r * 3 - 3) * ln3);                          // 3^{3a-3}
  const Real pref_j = two_pi * exp((alpha_r * 3 - Real(3.5, bits)) * ln3);   // 2 pi 3^{3a-7/2}
  const Real sqrt3_over_2pi = k.sqrt3 / two_pi;
  const Real two_pi_over_sqrt3 = two_pi / k.sqrt3;

  SeriesTerms t;
  Real cn(1L, bits);
  for (int n = 1; n < order; ++n) {
    cn *= k.c;
    const Real an(a.coefficient(n), bits);
    const Real nr(static_cast<long>(n), bits);
    t.a_terms_i.push_back(an / nr * cn);
    t.a_terms_j.push_back(an * (two_pi_over_sqrt3 / nr + Real(1L, bits) / (nr * nr)) * cn);
  }
  Real c_shift = exp(alpha_r * log(k.c));  // c^{n + alpha}, starting at n = 0
  for (int n = 0; n < order; ++n) {
    const Real bn(b.coefficient(n), bits);
    const Real shift(Rational(n) + alpha.value(), bits);
    const Real inv = Real(1L, bits) / shift;
    t.b_terms_i.push_back(pref_i * bn * (inv + sqrt3_over_2pi * inv * inv) * c_shift);
    t.b_terms_j.push_back(pref_j * bn * inv * c_shift);
    c_shift *= k.c;
  }
  return t;
}

IJSums sum_terms(const SeriesTerms& t, int order, long bits) {
  IJSums s{Real(0L, bits), Real(0L, bits)};
  // Smallest terms first.
  for (int n = order - 1; n >= 0; --n) {
    s.i_value += t.b_terms_i[static_cast<std::size_t>(n)];
    s.j_value += t.b_terms_j[static_cast<std::size_t>(n)];
    if (n >= 1) {
      s.i_value += t.a_terms_i[static_cast<std::size_t>(n - 1)];
      s.j_value += t.a_terms_j[static_cast<std::size_t>(n - 1)];
    }
  }
  return s;
}

void check_lj(int l, int j) {
  require_admissible_l(l);
  if (j < 1 || j > l - 1) throw std::invalid_argument("j must satisfy 1 <= j <= l-1");
}

}  // namespace

IJSums ij_partial_sums(int l, int j, int order, const Precision& p) {
  check_lj(l, j);
  if (order < 2) throw std::invalid_argument("truncation order must be >= 2");
  return sum_terms(ij_terms(l, j, order, p), order, p.working_bits());
}

PeriodPair eval_ij(int l, int j, const Precision& p) {
  check_lj(l, j);
  constexpr int kExtra = 16;
  const int cap = 4 * p.digits + 400;
  int order = default_truncation(p.digits);
  int best = 0;
  while (order <= cap) {
    const SeriesTerms terms = ij_terms(l, j, order + kExtra, p);
    const IJSums coarse = sum_terms(terms, order, p.working_bits());
    IJSums fine = sum_terms(terms, order + kExtra, p.working_bits());
    const int guard_digits = p.digits + 6;
    const int agree = std::min(agreement_digits(coarse.i_value, fine.i_value, guard_digits),
                               agreement_digits(coarse.j_value, fine.j_value, guard_digits));
    best = std::max(best, agree);
    if (agree >= p.digits) {
      const int certified = std::min(p.digits, agree);
      return {l, j, {std::move(fine.i_value), certified}, {std::move(fine.j_value), certified}, order + kExtra};
    }
    order += std::max(kExtra, order / 2);
  }
  throw PrecisionNotReached("I/J series for l=" + std::to_string(l) + ", j=" + std::to_string(j) +
                            " agreed to only " + std::to_string(best) + " digits");
}

std::vector<PeriodPair> eval_ij_all(int l, const Precision& p, int jobs) {
  require_admissible_l(l);
  std::vector<PeriodPair> out(static_cast<std::size_t>(std::max(l - 1, 0)));
  if (jobs <= 1) {
    for (int j = 1; j < l; ++j) out[static_cast<std::size_t>(j - 1)] = eval_ij(l, j, p);
    return out;
  }
  // Strided assignment of j to workers; each result lands in its own slot.
  std::vector<std::future<void>> workers;
  for (int w = 0; w < jobs; ++w) {
    workers.push_back(std::async(std::launch::async, [&, w] {
      for (int j = 1 + w; j < l; j += jobs) out[static_cast<std::size_t>(j - 1)] = eval_ij(l, j, p);
    }));
  }
  for (auto& f : workers) f.get();
  return out;
}

SeriesPeriods periods_from_pair(const PeriodPair& pair, const Precision& p) {
  const long bits = p.working_bits();
  const Real pi = Real::pi(bits);
  SeriesPeriods s;
  s.delta_period = {pi * 54 / static_cast<long>(pair.l) * pair.i_value.value, pair.i_value.certified_digits};
  s.gamma_period = {Real(27L, bits) / static_cast<long>(pair.l) * pair.j_value.value, pair.j_value.certified_digits};
  s.sign_note = "magnitudes; Delta-period on the imaginary axis, Gamma-period on the real axis; signs +/- per convention";
  return s;
}

SeriesPeriods periods_from_series(int l, int j, const Precision& p) { return periods_from_pair(eval_ij(l, j, p), p); }

namespace {

int auto_order(double q, long bits) {
  // |coefficient_n| <= 9 sigma_2(n) <= 15 n^2; tail <= 15 N^2 q^N / (1-q)^3.
  const double target = -static_cast<double>(bits) * std::log(2.0) - std::log(1e3);
  const double lq = std::log(q);
  const double l1q = std::log1p(-q);
  for (int n = 1; n < 200000; ++n) {
    const double tail = std::log(15.0) + 2.0 * std::log(static_cast<double>(n)) + n * lq - 3.0 * l1q;
    if (tail < target) return n;
  }
  throw DomainError("eisenstein_numeric: q too close to 1 for a truncated expansion");
}

}  // namespace

Real eisenstein_numeric(EisensteinKind kind, const Real& q, int order, const Precision& p) {
  if (!(q > 0L) || !(q < 1L)) throw DomainError("eisenstein_numeric requires 0 < q < 1");
  const long bits = p.working_bits();
  if (order <= 0) order = auto_order(q.to_double(), bits);
  const auto series = eisenstein_q_expansion(kind, order);
  // Horner in q.
  Real acc(0L, bits);
  const Real qq = q.with_bits(bits);
  for (int n = order - 1; n >= 0; --n) acc = acc * qq + Real(series.coefficient(n), bits);
  return acc;
}

Real hauptmodul_numeric(const Real& q, int order, const Precision& p) {
  const Real a = eisenstein_numeric(EisensteinKind::E3a, q, order, p);
  const Real b = eisenstein_numeric(EisensteinKind::E3b, q, order, p);
  return a / (a + b * 27);
}

Real eisenstein_transform_residual(const BigComplex& z, int order, const Precision& p) {
  if (!z.re.is_zero() || !(z.im > 0L)) {
    throw DomainError("eisenstein_transform_residual: z must lie on the positive imaginary axis");
  }
  const long bits = p.working_bits();
  const Real pi = Real::pi(bits);
  const Real y = z.im.with_bits(bits);
  const Real q = exp(-(pi * 2) * y);                  // q(z)
  const Real q_dual = exp(-(pi * 2) / (y * 3));       // q(-1/(3z)), since -1/(3iy) = i/(3y)
  const Real lhs = eisenstein_numeric(EisensteinKind::E3b, q_dual, order, p) * 27;
  // 3 sqrt(3) i z^3 with z = iy equals 3 sqrt(3) y^3.
  const Real rhs = sqrt(Real(3L, bits)) * 3 * y * y * y * eisenstein_numeric(EisensteinKind::E3a, q, order, p);
  return abs(lhs - rhs);
}

}  // namespace reglab
