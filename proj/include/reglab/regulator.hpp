#pragma once

// Regulator matrix of the example family and its maximal minor, evaluated
// from the I(j), J(j) tables. All values are magnitudes: the underlying
// formulas hold only up to sign and up to a rational factor.

#include <string>
#include <vector>

#include "reglab/periods.hpp"

namespace reglab {

inline constexpr const char* kSignPolicy = "magnitudes, sign unresolved, mod Q^x";

/// Complex square matrix, row major.
using ComplexMatrix = std::vector<std::vector<BigComplex>>;

/// Determinant by Gaussian elimination with partial pivoting on the modulus.
BigComplex complex_det(ComplexMatrix m);

struct RegulatorMatrix {
  int l = 0;
  int h = 0;        ///< rows: l - floor((l-1)/3) - 1
  int columns = 0;  ///< (l-1)/2
  /// entries[p-1][q-1] = (zeta^{pq} - zeta^{-pq}) * int_Delta t^{p-1} dt dx/y, a real number
  std::vector<std::vector<Real>> entries;
  Real max_imaginary_residue;  ///< largest |Im| / |Re| met while enforcing realness
  int rank = 0;
  int cokernel_dimension = 0;
  std::vector<PeriodPair> pairs;
};

/// Throws UnsupportedL unless gcd(l, 6) = 1 and l >= 5, PrecisionNotReached
/// if an entry fails the realness check.
RegulatorMatrix build_matrix(int l, const Precision& p);
RegulatorMatrix build_matrix_from_pairs(int l, const std::vector<PeriodPair>& pairs, const Precision& p);

/// |det(zeta^{pq} - zeta^{-pq})|, 1 <= p, q <= (l-1)/2, for odd l >= 3.
Real vandermonde_like_det(int l, const Precision& p);

/// k x k matrix, k = (l+1)/2: columns zeta^{pq} - zeta^{-pq} for q < k and
/// J(p)/I(p) in the last column.
ComplexMatrix ratio_matrix(int l, const std::vector<PeriodPair>& pairs, const Precision& p);

struct RegulatorResult {
  int l = 0;
  int h = 0;
  BigReal det_general;      ///< |det ratio_matrix| * prod_{p<=k} I(p)
  BigReal det_closed_form;  ///< l^{(l-1)/4} prod_{p<=k} I(p) (J_{k-1}/I_{k-1} + J_k/I_k)
  BigReal value_e_ff;       ///< pi^s * det_closed_form, s = (l-1)/2
  BigReal value_e_ind;      ///< (sqrt(l) / pi^s) * value_e_ff
  int det_agreement_digits = 0;
  std::string sign_policy = kSignPolicy;
  std::string sqrt_factor;         ///< "sqrt(l)" for l = 1 mod 4, "sqrt(-l)" for l = 3 mod 4
  std::string normalization_note;  ///< empty for l in {5, 7}
  std::vector<PeriodPair> pairs;
};

/// Both determinant routes from precomputed pairs. Throws PrecisionNotReached
/// when the two routes disagree beyond the certified digits.
RegulatorResult regulator_from_pairs(int l, const std::vector<PeriodPair>& pairs, const Precision& p);

BigReal regulator_general_det(int l, const Precision& p);
RegulatorResult regulator_closed_form(int l, const Precision& p, int jobs = 1);

}  // namespace reglab
