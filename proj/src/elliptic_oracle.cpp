#include "reglab/elliptic_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <future>

#include "reglab/error.hpp"
#include "reglab/weierstrass.hpp"

namespace reglab {

namespace {

constexpr long kMinOracleBits = 128;

long oracle_bits(const Precision& p) { return std::max(p.working_bits(), kMinOracleBits); }

Real times_pow2(const Real& x, long e) {
  Real r(0L, x.bits());
  mpfr_mul_2si(r.raw(), x.raw(), e, MPFR_RNDN);
  return r;
}

mpq_class rational_pow(const mpq_class& x, int n) {
  mpq_class r = 1;
  for (int i = 0; i < n; ++i) r *= x;
  return r;
}

// Q(s) = (s - 4T)^3 + 27 s^2 = 27 * cubic((s - 4T) / 3), i.e. s = 3x + 4T.
struct SCubic {
  mpq_class big_t;
  mpq_class q2, q1, q0;  // Q = s^3 + q2 s^2 + q1 s + q0
  Real c2, c1, c0;
  long bits;

  SCubic(const mpq_class& T, long b)
      : big_t(T), q2(27 - 12 * T), q1(48 * T * T), q0(-64 * T * T * T), c2(q2, b), c1(q1, b), c0(q0, b), bits(b) {}

  [[nodiscard]] Real eval(const Real& s) const { return ((s + c2) * s + c1) * s + c0; }
  [[nodiscard]] Real deriv(const Real& s) const { return (s * 3 + c2 * 2) * s + c1; }
  // Bound on the rounding error of eval(s).
  [[nodiscard]] Real noise(const Real& s) const {
    const Real a = abs(s);
    return times_pow2(((a + abs(c2)) * a + abs(c1)) * a + abs(c0), -(bits - 4));
  }
  [[nodiscard]] int exact_sign(const mpq_class& s) const { return sgn(((s + q2) * s + q1) * s + q0); }
  [[nodiscard]] int exact_sign(const Real& s) const { return exact_sign(s.to_rational()); }
};

// Safeguarded Newton inside a bracket whose endpoint signs are known.
Real polish_root(const SCubic& q, Real lo, Real hi, int sign_lo, Real x) {
  const long bits = q.bits;
  for (long it = 0; it < 20 * bits; ++it) {
    const Real fx = q.eval(x);
    if (abs(fx) <= q.noise(x)) return x;
    if (fx.sign() == sign_lo) {
      lo = x;
    } else {
      hi = x;
    }
    const Real dfx = q.deriv(x);
    Real next = dfx.is_zero() ? (lo + hi) / 2 : x - fx / dfx;
    if (!(next > lo && next < hi)) next = (lo + hi) / 2;
    const Real step = abs(next - x);
    x = std::move(next);
    const Real scale = times_pow2(abs(x), -(bits - 4));
    if (step <= scale || abs(hi - lo) <= scale) return x;
  }
  throw RootOrderingFailed("cubic root refinement did not converge");
}

// Returns the half-width of an interval around r on which Q changes sign,
// checked with exact rational arithmetic.
Real certify_sign_change(const SCubic& q, const Real& r, int sign_left) {
  const Real slope = abs(q.deriv(r));
  Real eps = times_pow2(abs(r), -(q.bits - 12));
  if (!slope.is_zero()) eps = max(eps, q.noise(r) * 4 / slope);
  if (q.exact_sign(r - eps) != sign_left || q.exact_sign(r + eps) != -sign_left) {
    throw RootOrderingFailed("root isolation could not be certified");
  }
  return eps;
}

struct SRoots {
  Real s1, s2, s3;
  Real eps1, eps2, eps3;  // certified half-widths
};

SRoots solve_s_roots(const mpq_class& T, long bits) {
  const SCubic q(T, bits);
  const Real big_t(T, bits);
  const Real three(3L, bits);
  // Small roots are close to +-g with g = 8 T^{3/2} / (3 sqrt 3).
  const Real g = big_t * sqrt(big_t) * 8 / (three * sqrt(three));
  const Real half_g = g / 2;
  const Real two_g = g * 2;

  // Local maximum of Q, which separates s1 from s2.
  const Real s_max = (-(Real(18L, bits) - big_t * 8) - sqrt(Real(9L, bits) - big_t * 8) * 6) / 2;
  if (q.exact_sign(s_max) <= 0) throw RootOrderingFailed("cubic does not have three real roots");

  SRoots out;
  // s3 in (0, 4T + 3]
  if (!g.is_zero() && q.exact_sign(half_g) < 0 && q.exact_sign(two_g) > 0) {
    out.s3 = polish_root(q, half_g, two_g, -1, g);
  } else {
    const Real hi = big_t * 4 + 3;
    out.s3 = polish_root(q, Real(0L, bits), hi, -1, hi / 2);
  }
  // s2 in (s_max, 0)
  if (!g.is_zero() && q.exact_sign(-two_g) > 0 && q.exact_sign(-half_g) < 0) {
    out.s2 = polish_root(q, -two_g, -half_g, 1, -g);
  } else {
    out.s2 = polish_root(q, s_max, Real(0L, bits), 1, s_max / 2);
  }
  // s1 in [-40, s_max)
  const Real lo(-40L, bits);
  out.s1 = polish_root(q, lo, s_max, -1, (lo + s_max) / 2);

  out.eps1 = certify_sign_change(q, out.s1, -1);
  out.eps2 = certify_sign_change(q, out.s2, 1);
  out.eps3 = certify_sign_change(q, out.s3, -1);
  if (!(out.s1 + out.eps1 < out.s2 - out.eps2 && out.s2 + out.eps2 < out.s3 - out.eps3)) {
    throw RootOrderingFailed("root isolation intervals overlap");
  }
  // Arch orientation: positive on (r1, r2), negative on (r2, r3).
  if (q.exact_sign((out.s1 + out.s2) / 2) <= 0 || q.exact_sign((out.s2 + out.s3) / 2) >= 0) {
    throw RootOrderingFailed("cubic has the wrong sign between its roots");
  }
  return out;
}

void check_unit_interval(const Real& t) {
  if (!(t > 0L) || !(t < 1L)) throw DomainError("t must satisfy 0 < t < 1");
}

CubicRoots roots_at_bits(int l, const Real& t, long bits, int digits) {
  check_unit_interval(t);
  const mpq_class big_t = rational_pow(t.to_rational(), l);
  const SRoots s = solve_s_roots(big_t, bits);
  const Real four_t = Real(big_t, bits) * 4;
  CubicRoots r;
  r.r1 = (s.s1 - four_t) / 3;
  r.r2 = (s.s2 - four_t) / 3;
  r.r3 = (s.s3 - four_t) / 3;
  r.d21 = (s.s2 - s.s1) / 3;
  r.d32 = (s.s3 - s.s2) / 3;
  r.d31 = (s.s3 - s.s1) / 3;
  // Worst relative width of the certified intervals, in decimal digits.
  const Real worst = max(s.eps1 / abs(s.s1), max(s.eps2 / abs(s.s2), s.eps3 / abs(s.s3)));
  const int achieved = static_cast<int>(std::floor(-std::log10(worst.to_double())));
  r.certified_digits = std::max(0, std::min(digits, achieved));
  return r;
}

RfResult agm_rf(const Real& y, const Real& z, long bits) {
  Real a = sqrt(y.with_bits(bits));
  Real b = sqrt(z.with_bits(bits));
  RfResult out{Real(0L, bits), 0};
  while (abs(a - b) > times_pow2(a, -(bits - 2))) {
    Real next_a = (a + b) / 2;
    b = sqrt(a * b);
    a = std::move(next_a);
    if (++out.iterations > 4 * bits) throw DomainError("AGM did not converge");
  }
  out.value = Real::pi(bits) / (a * 2);
  return out;
}

InnerIntegrals inner_at_bits(int l, const Real& t, long bits) {
  const CubicRoots r = roots_at_bits(l, t, bits, 0);
  // int_{r1}^{r2} = 2 R_F(0, r3 - r2, r3 - r1), int_{r2}^{r3} = 2 R_F(0, r2 - r1, r3 - r1)
  return {agm_rf(r.d32, r.d31, bits).value * 2, agm_rf(r.d21, r.d31, bits).value * 2};
}

}  // namespace

int cubic_sign(int l, const mpq_class& t, const mpq_class& x) {
  const mpq_class big_t = rational_pow(t, l);
  return sgn(((x + 9) * x + 24 * big_t) * x + 16 * big_t * big_t);
}

CubicRoots cubic_roots(int l, const Real& t, const Precision& p) {
  if (l < 1) throw std::invalid_argument("l must be >= 1");
  return roots_at_bits(l, t, oracle_bits(p), p.digits);
}

RfResult carlson_rf_duplication(const Real& x, const Real& y, const Real& z, const Precision& p) {
  const long bits = oracle_bits(p);
  if (x < 0L || y < 0L || z < 0L) throw DomainError("carlson_rf: negative argument");
  if ((x.is_zero() ? 1 : 0) + (y.is_zero() ? 1 : 0) + (z.is_zero() ? 1 : 0) > 1) {
    throw DomainError("carlson_rf: more than one zero argument");
  }
  Real xm = x.with_bits(bits), ym = y.with_bits(bits), zm = z.with_bits(bits);
  const Real a0 = (xm + ym + zm) / 3;
  // Carlson's stopping rule for relative error 2^-bits: Q = (3 r)^{-1/6} max |A0 - v|.
  const Real r = times_pow2(Real(1L, bits), -bits);
  const Real q = pow(r * 3, Real(-1L, bits) / 6) * max(abs(a0 - xm), max(abs(a0 - ym), abs(a0 - zm)));
  Real am = a0;
  Real four_m(1L, bits);
  RfResult out{Real(0L, bits), 0};
  while (q / four_m >= abs(am)) {
    const Real sx = sqrt(xm), sy = sqrt(ym), sz = sqrt(zm);
    const Real lambda = sx * sy + sx * sz + sy * sz;
    xm = (xm + lambda) / 4;
    ym = (ym + lambda) / 4;
    zm = (zm + lambda) / 4;
    am = (am + lambda) / 4;
    four_m *= 4;
    if (++out.iterations > 4 * bits) throw DomainError("carlson_rf: duplication did not converge");
  }
  const Real dx = (a0 - x.with_bits(bits)) / (four_m * am);
  const Real dy = (a0 - y.with_bits(bits)) / (four_m * am);
  const Real dz = -(dx + dy);
  const Real e2 = dx * dy - dz * dz;
  const Real e3 = dx * dy * dz;
  const Real series = Real(1L, bits) - e2 / 10 + e3 / 14 + e2 * e2 / 24 - e2 * e3 * 3 / 44;
  out.value = series / sqrt(am);
  return out;
}

Real carlson_rf(const Real& x, const Real& y, const Real& z, const Precision& p) {
  return carlson_rf_duplication(x, y, z, p).value;
}

RfResult carlson_rf_complete(const Real& y, const Real& z, const Precision& p) {
  if (!(y > 0L) || !(z > 0L)) throw DomainError("carlson_rf_complete requires y, z > 0");
  return agm_rf(y, z, oracle_bits(p));
}

InnerIntegrals inner_integrals(int l, const Real& t, const Precision& p) {
  if (l < 1) throw std::invalid_argument("l must be >= 1");
  return inner_at_bits(l, t, oracle_bits(p));
}

GaussLegendreRule gauss_legendre(int n, long bits) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: n must be >= 1");
  GaussLegendreRule rule;
  const Real pi = Real::pi(bits);
  const Real one(1L, bits);
  for (int i = 0; i < n; ++i) {
    Real x = cos(pi * Real(4L * i + 3, bits) / Real(4L * n + 2, bits));
    Real dp(0L, bits);
    for (int it = 0; it < 200; ++it) {
      Real p0 = one, p1 = x;
      for (int k = 1; k < n; ++k) {
        Real p2 = (x * p1 * (2L * k + 1) - p0 * k) / (k + 1L);
        p0 = std::move(p1);
        p1 = std::move(p2);
      }
      dp = (x * p1 - p0) * n / (x * x - 1L);
      const Real step = p1 / dp;
      x -= step;
      if (abs(step) <= times_pow2(one, -(bits - 2))) break;
    }
    // Weight from the derivative at the refined node.
    Real p0 = one, p1 = x;
    for (int k = 1; k < n; ++k) {
      Real p2 = (x * p1 * (2L * k + 1) - p0 * k) / (k + 1L);
      p0 = std::move(p1);
      p1 = std::move(p2);
    }
    dp = (x * p1 - p0) * n / (x * x - 1L);
    rule.weights.push_back(Real(2L, bits) / ((one - x * x) * dp * dp));
    rule.nodes.push_back(std::move(x));
  }
  return rule;
}

namespace {

using Vec = std::vector<Real>;

struct OuterIntegrand {
  int l;
  long bits;

  // Components: t^{j-1} delta_inner for j = 1 .. l-1, then t^{j-1} gamma_inner.
  [[nodiscard]] Vec operator()(const Real& t) const {
    const InnerIntegrals in = inner_at_bits(l, t, bits);
    Vec out(2 * static_cast<std::size_t>(l - 1), Real(0L, bits));
    Real power(1L, bits);
    for (int j = 1; j < l; ++j) {
      out[static_cast<std::size_t>(j - 1)] = in.delta_inner * power;
      out[static_cast<std::size_t>(l - 2 + j)] = in.gamma_inner * power;
      power *= t;
    }
    return out;
  }
};

Vec apply_rule(const OuterIntegrand& f, const GaussLegendreRule& rule, const Real& a, const Real& b) {
  const Real mid = (a + b) / 2;
  const Real half = (b - a) / 2;
  Vec acc;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const Vec v = f(mid + half * rule.nodes[i]);
    if (acc.empty()) acc.assign(v.size(), Real(0L, f.bits));
    for (std::size_t k = 0; k < v.size(); ++k) acc[k] += v[k] * rule.weights[i];
  }
  for (auto& x : acc) x *= half;
  return acc;
}

struct PanelIntegrator {
  const OuterIntegrand& f;
  const GaussLegendreRule& coarse;
  const GaussLegendreRule& fine;
  Real tolerance;
  int max_depth;

  [[nodiscard]] Vec integrate(const Real& a, const Real& b, int depth) const {
    const Vec g1 = apply_rule(f, coarse, a, b);
    Vec g2 = apply_rule(f, fine, a, b);
    bool ok = true;
    for (std::size_t k = 0; k < g1.size() && ok; ++k) ok = abs(g1[k] - g2[k]) <= tolerance;
    if (ok) return g2;
    if (depth >= max_depth) {
      throw QuadratureNotConverged("outer quadrature did not converge on [" + a.to_string(12) + ", " +
                                   b.to_string(12) + "]");
    }
    const Real mid = (a + b) / 2;
    Vec left = integrate(a, mid, depth + 1);
    const Vec right = integrate(mid, b, depth + 1);
    for (std::size_t k = 0; k < left.size(); ++k) left[k] += right[k];
    return left;
  }
};

}  // namespace

std::vector<DirectPeriods> direct_periods_all(int l, const Precision& p, const OracleOptions& options) {
  require_admissible_l(l);
  if (l < 5) throw UnsupportedL("direct_periods requires l >= 5");
  const long bits = oracle_bits(p);
  if (options.end_levels < 2 || options.end_levels > bits - 16) {
    throw std::invalid_argument("end_levels out of range for the working precision");
  }
  const GaussLegendreRule coarse = gauss_legendre(16, bits);
  const GaussLegendreRule fine = gauss_legendre(32, bits);
  const OuterIntegrand f{l, bits};
  const PanelIntegrator integrator{f, coarse, fine, Real(options.panel_tolerance, bits), options.max_depth};

  // Geometric panels [2^{-k-1}, 2^{-k}] and [1 - 2^{-k}, 1 - 2^{-k-1}], in increasing t.
  // The neglected end pieces [0, 2^{-K}] and [1 - 2^{-K}, 1] carry O(K 2^{-K}).
  const Real one(1L, bits);
  std::vector<std::pair<Real, Real>> panels;
  for (int k = options.end_levels - 1; k >= 1; --k) {
    panels.emplace_back(times_pow2(one, -(k + 1)), times_pow2(one, -k));
  }
  for (int k = 1; k < options.end_levels; ++k) {
    panels.emplace_back(one - times_pow2(one, -k), one - times_pow2(one, -(k + 1)));
  }

  std::vector<Vec> results(panels.size());
  const int jobs = std::max(1, options.jobs);
  if (jobs == 1) {
    for (std::size_t i = 0; i < panels.size(); ++i) results[i] = integrator.integrate(panels[i].first, panels[i].second, 0);
  } else {
    std::vector<std::future<void>> workers;
    for (int w = 0; w < jobs; ++w) {
      workers.push_back(std::async(std::launch::async, [&, w] {
        for (std::size_t i = static_cast<std::size_t>(w); i < panels.size(); i += static_cast<std::size_t>(jobs)) {
          results[i] = integrator.integrate(panels[i].first, panels[i].second, 0);
        }
      }));
    }
    for (auto& fut : workers) fut.get();
  }

  // Fixed summation order by panel index.
  Vec total(2 * static_cast<std::size_t>(l - 1), Real(0L, bits));
  for (const auto& r : results) {
    for (std::size_t k = 0; k < total.size(); ++k) total[k] += r[k];
  }
  const Real factor = sqrt(Real(3L, bits)) * 2;
  const int digits = std::min(p.digits, 9);
  std::vector<DirectPeriods> out;
  for (int j = 1; j < l; ++j) {
    out.push_back({l, j, {total[static_cast<std::size_t>(j - 1)] * factor, digits},
                   {total[static_cast<std::size_t>(l - 2 + j)] * factor, digits}});
  }
  return out;
}

DirectPeriods direct_periods(int l, int j, const Precision& p, const OracleOptions& options) {
  if (j < 1 || j > l - 1) throw std::invalid_argument("j must satisfy 1 <= j <= l-1");
  return direct_periods_all(l, p, options)[static_cast<std::size_t>(j - 1)];
}

Real weierstrass_real_period(const Real& g2, const Real& g3, const Precision& p) {
  const long bits = oracle_bits(p);
  const Real a = g2.with_bits(bits), b = g3.with_bits(bits);
  if (!(a > 0L) || !(a * a * a - b * b * 27 > 0L)) throw DomainError("cubic does not have three real roots");
  // 4x^3 - g2 x - g3 = 0 with x = m cos(theta), m = sqrt(g2 / 3): cos(3 theta) = g3 / m^3.
  const Real m = sqrt(a / 3);
  Real phi(0L, bits);
  const Real c = b / (m * m * m);
  mpfr_acos(phi.raw(), c.raw(), MPFR_RNDN);
  const Real two_pi = Real::pi(bits) * 2;
  const Real e1 = m * cos(phi / 3);
  const Real e2 = m * cos((phi - two_pi) / 3);
  const Real e3 = m * cos((phi + two_pi) / 3);
  return agm_rf(e1 - e2, e1 - e3, bits).value * 2;
}

}  // namespace reglab
