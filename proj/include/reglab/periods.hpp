#pragma once

// Period integrals of t^{j-1} dt dx/y over the cycles Delta and Gamma of the
// example family, evaluated through the rapidly converging q-series I(j),
// J(j) at q = c = exp(-2 pi / sqrt 3).

#include <string>
#include <vector>

#include "reglab/exact_series.hpp"
#include "reglab/real.hpp"

namespace reglab {

struct Constants {
  Real pi;
  Real sqrt3;
  Real c;  ///< exp(-2 pi / sqrt 3) = 0.026579933...
};

/// pi, sqrt(3) and c at the working precision of `p`.
Constants constants(const Precision& p);

struct PeriodPair {
  int l = 0;
  int j = 0;
  BigReal i_value;
  BigReal j_value;
  int n_used = 0;  ///< truncation order of the certified evaluation
};

/// Initial truncation order for `digits` decimal digits:
/// ceil(digits / |log10 c|) + 16.
int default_truncation(int digits);

/// Partial sums of I(j) and J(j) using a_n for n < order and b_n for n < order.
struct IJSums {
  Real i_value;
  Real j_value;
};
IJSums ij_partial_sums(int l, int j, int order, const Precision& p);

/// I(j), J(j) with the agreement certificate: the sums at N and N + 16 must
/// agree to the requested digits, N growing from default_truncation until they
/// do. Throws UnsupportedL, std::invalid_argument for j out of range, and
/// PrecisionNotReached when agreement stalls.
PeriodPair eval_ij(int l, int j, const Precision& p);

/// eval_ij for j = 1 .. l-1, optionally on several threads; the result does
/// not depend on `jobs`.
std::vector<PeriodPair> eval_ij_all(int l, const Precision& p, int jobs = 1);

struct SeriesPeriods {
  BigReal delta_period;  ///< |int_Delta t^{j-1} dt dx/y| = (54 pi / l) I(j); lies on the imaginary axis
  BigReal gamma_period;  ///< |int_Gamma t^{j-1} dt dx/y| = (27 / l) J(j); lies on the real axis
  std::string sign_note;
};

SeriesPeriods periods_from_series(int l, int j, const Precision& p);
SeriesPeriods periods_from_pair(const PeriodPair& pair, const Precision& p);

/// Partial sum of E3a or E3b at a real q in (0, 1). order = 0 picks the
/// truncation from a tail bound for the working precision.
Real eisenstein_numeric(EisensteinKind kind, const Real& q, int order, const Precision& p);

/// E3a / (E3a + 27 E3b) at q (the value of t^l).
Real hauptmodul_numeric(const Real& q, int order, const Precision& p);

/// |27 E3b(-1/(3z)) - 3 sqrt(3) i z^3 E3a(z)| for z on the positive imaginary
/// axis. Throws DomainError when Re z != 0 or Im z <= 0.
Real eisenstein_transform_residual(const BigComplex& z, int order, const Precision& p);

}  // namespace reglab
