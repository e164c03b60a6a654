#pragma once

// Independent evaluation of the Delta- and Gamma-periods as double integrals:
// the inner integral over x between adjacent real roots of
// x^3 + 9x^2 + 24 t^l x + 16 t^{2l} is a complete elliptic integral, the outer
// integral over t in (0, 1) is done by Gauss-Legendre quadrature.

#include <vector>

#include "reglab/real.hpp"

namespace reglab {

/// Roots r1 < r2 < r3 of x^3 + 9x^2 + 24 T x + 16 T^2, T = t^l, with their
/// differences computed without cancellation.
struct CubicRoots {
  Real r1, r2, r3;
  Real d21, d32, d31;  ///< r2 - r1, r3 - r2, r3 - r1
  int certified_digits = 0;
};

/// Throws DomainError unless 0 < t < 1, RootOrderingFailed if the root
/// isolation cannot be certified by exact sign evaluation.
CubicRoots cubic_roots(int l, const Real& t, const Precision& p);

/// Exact sign of the cubic at a rational point.
int cubic_sign(int l, const mpq_class& t, const mpq_class& x);

struct RfResult {
  Real value;
  int iterations = 0;
};

/// Carlson R_F(x, y, z) by the duplication algorithm. Throws DomainError on
/// a negative argument or when more than one argument is zero.
RfResult carlson_rf_duplication(const Real& x, const Real& y, const Real& z, const Precision& p);
Real carlson_rf(const Real& x, const Real& y, const Real& z, const Precision& p);

/// R_F(0, y, z) = pi / (2 AGM(sqrt y, sqrt z)); y, z > 0.
RfResult carlson_rf_complete(const Real& y, const Real& z, const Precision& p);

struct InnerIntegrals {
  Real delta_inner;  ///< int_{r1}^{r2} dx / sqrt(cubic)
  Real gamma_inner;  ///< int_{r2}^{r3} dx / sqrt(-cubic)
};
InnerIntegrals inner_integrals(int l, const Real& t, const Precision& p);

/// Gauss-Legendre rule on [-1, 1].
struct GaussLegendreRule {
  std::vector<Real> nodes;
  std::vector<Real> weights;
};
GaussLegendreRule gauss_legendre(int n, long bits);

struct DirectPeriods {
  int l = 0;
  int j = 0;
  BigReal delta_abs;  ///< 2 sqrt(3) int_0^1 t^{j-1} delta_inner dt
  BigReal gamma_abs;  ///< 2 sqrt(3) int_0^1 t^{j-1} gamma_inner dt
};

struct OracleOptions {
  int jobs = 1;
  double panel_tolerance = 1e-13;  ///< absolute, per panel and component
  int end_levels = 64;             ///< geometric panels toward t = 0 and t = 1
  int max_depth = 24;
};

/// All j = 1 .. l-1 at once (the inner integrals do not depend on j).
/// Throws UnsupportedL and QuadratureNotConverged.
std::vector<DirectPeriods> direct_periods_all(int l, const Precision& p, const OracleOptions& options = {});
DirectPeriods direct_periods(int l, int j, const Precision& p, const OracleOptions& options = {});

/// Real period 2 R_F(0, e1 - e2, e1 - e3) of y^2 = 4x^3 - g2 x - g3 with
/// three real roots e1 > e2 > e3. Throws DomainError otherwise.
Real weierstrass_real_period(const Real& g2, const Real& g3, const Precision& p);

}  // namespace reglab
