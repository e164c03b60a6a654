#include "reglab/regulator.hpp"

#include <algorithm>

#include "reglab/error.hpp"
#include "reglab/weierstrass.hpp"

namespace reglab {

namespace {

void require_regulator_l(int l) {
  require_admissible_l(l);
  if (l < 5) throw UnsupportedL("l = " + std::to_string(l) + " gives a rational surface; the regulator needs l >= 5");
}

// zeta^{m} - zeta^{-m} = 2i sin(2 pi m / l)
BigComplex cyclotomic_difference(int l, long m, long bits) {
  const Real angle = Real::pi(bits) * 2 * m / static_cast<long>(l);
  return BigComplex::polar_unit(angle) - BigComplex::polar_unit(-angle);
}

void check_pairs(int l, const std::vector<PeriodPair>& pairs) {
  if (static_cast<int>(pairs.size()) != l - 1) throw std::invalid_argument("expected one PeriodPair per j = 1 .. l-1");
  for (int j = 1; j < l; ++j) {
    const auto& pp = pairs[static_cast<std::size_t>(j - 1)];
    if (pp.l != l || pp.j != j) throw std::invalid_argument("PeriodPair list out of order");
  }
}

int numeric_rank(std::vector<std::vector<Real>> m, long bits) {
  if (m.empty()) return 0;
  const std::size_t cols = m.front().size();
  Real scale(0L, bits);
  for (const auto& row : m) {
    for (const auto& v : row) scale = max(scale, abs(v));
  }
  Real tol(0L, bits);
  mpfr_mul_2si(tol.raw(), scale.raw(), -(bits / 2), MPFR_RNDN);
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t piv = rank;
    for (std::size_t r = rank + 1; r < m.size(); ++r) {
      if (abs(m[r][c]) > abs(m[piv][c])) piv = r;
    }
    if (abs(m[piv][c]) <= tol) continue;
    std::swap(m[rank], m[piv]);
    for (std::size_t r = rank + 1; r < m.size(); ++r) {
      const Real f = m[r][c] / m[rank][c];
      for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return static_cast<int>(rank);
}

}  // namespace

BigComplex complex_det(ComplexMatrix m) {
  const std::size_t n = m.size();
  if (n == 0) throw std::invalid_argument("complex_det: empty matrix");
  const long bits = m[0][0].re.bits();
  BigComplex det(Real(1L, bits), Real(0L, bits));
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m[r][c].norm() > m[piv][c].norm()) piv = r;
    }
    if (m[piv][c].norm().is_zero()) return {Real(0L, bits), Real(0L, bits)};
    if (piv != c) {
      std::swap(m[piv], m[c]);
      det = det * Real(-1L, bits);
    }
    det = det * m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      const BigComplex f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] = m[r][k] - f * m[c][k];
    }
  }
  return det;
}

RegulatorMatrix build_matrix_from_pairs(int l, const std::vector<PeriodPair>& pairs, const Precision& p) {
  require_regulator_l(l);
  check_pairs(l, pairs);
  const long bits = p.working_bits();
  const HodgeData hd = hodge_and_dims(l);
  RegulatorMatrix m;
  m.l = l;
  m.h = hd.h;
  m.columns = (l - 1) / 2;
  m.pairs = pairs;
  m.max_imaginary_residue = Real(0L, bits);
  const Real pi = Real::pi(bits);
  Real realness_tol(1L, bits);
  mpfr_mul_2si(realness_tol.raw(), realness_tol.raw(), -(bits - 40), MPFR_RNDN);
  for (int row = 1; row <= m.h; ++row) {
    // int_Delta t^{p-1} dt dx/y lies on the imaginary axis with magnitude (54 pi / l) I(p).
    const BigComplex delta(Real(0L, bits), pi * 54 / static_cast<long>(l) * pairs[static_cast<std::size_t>(row - 1)].i_value.value);
    std::vector<Real> entries;
    for (int q = 1; q <= m.columns; ++q) {
      const BigComplex e = cyclotomic_difference(l, static_cast<long>(row) * q, bits) * delta;
      if (!e.re.is_zero()) {
        const Real residue = abs(e.im) / abs(e.re);
        m.max_imaginary_residue = max(m.max_imaginary_residue, residue);
        if (residue > realness_tol) throw PrecisionNotReached("regulator matrix entry is not real");
      }
      entries.push_back(e.re);
    }
    m.entries.push_back(std::move(entries));
  }
  m.rank = numeric_rank(m.entries, bits);
  m.cokernel_dimension = m.h - m.rank;
  return m;
}

RegulatorMatrix build_matrix(int l, const Precision& p) {
  require_regulator_l(l);
  return build_matrix_from_pairs(l, eval_ij_all(l, p), p);
}

Real vandermonde_like_det(int l, const Precision& p) {
  if (l < 3 || l % 2 == 0) throw std::invalid_argument("vandermonde_like_det requires odd l >= 3");
  const long bits = p.working_bits();
  const int s = (l - 1) / 2;
  ComplexMatrix m(static_cast<std::size_t>(s));
  for (int row = 1; row <= s; ++row) {
    for (int q = 1; q <= s; ++q) m[static_cast<std::size_t>(row - 1)].push_back(cyclotomic_difference(l, static_cast<long>(row) * q, bits));
  }
  return complex_det(std::move(m)).modulus();
}

ComplexMatrix ratio_matrix(int l, const std::vector<PeriodPair>& pairs, const Precision& p) {
  require_regulator_l(l);
  check_pairs(l, pairs);
  const long bits = p.working_bits();
  const int k = (l + 1) / 2;
  ComplexMatrix m(static_cast<std::size_t>(k));
  for (int row = 1; row <= k; ++row) {
    auto& r = m[static_cast<std::size_t>(row - 1)];
    for (int q = 1; q < k; ++q) r.push_back(cyclotomic_difference(l, static_cast<long>(row) * q, bits));
    const auto& pp = pairs[static_cast<std::size_t>(row - 1)];
    r.emplace_back(pp.j_value.value / pp.i_value.value, Real(0L, bits));
  }
  return m;
}

RegulatorResult regulator_from_pairs(int l, const std::vector<PeriodPair>& pairs, const Precision& p) {
  require_regulator_l(l);
  check_pairs(l, pairs);
  const long bits = p.working_bits();
  const int s = (l - 1) / 2;
  const int k = s + 1;

  Real prod_i(1L, bits);
  int certified = p.digits;
  for (int q = 1; q <= k; ++q) {
    const auto& pp = pairs[static_cast<std::size_t>(q - 1)];
    prod_i *= pp.i_value.value;
    certified = std::min({certified, pp.i_value.certified_digits, pp.j_value.certified_digits});
  }
  const auto ratio = [&](int q) {
    const auto& pp = pairs[static_cast<std::size_t>(q - 1)];
    return pp.j_value.value / pp.i_value.value;
  };

  const Real general = complex_det(ratio_matrix(l, pairs, p)).modulus() * prod_i;
  // |det(zeta^{pq} - zeta^{-pq})| = l^{s/2}
  const Real l_power = pow(sqrt(Real(static_cast<long>(l), bits)), static_cast<long>(s));
  const Real closed = l_power * prod_i * (ratio(k - 1) + ratio(k));

  RegulatorResult r;
  r.l = l;
  r.h = hodge_and_dims(l).h;
  r.det_agreement_digits = agreement_digits(general, closed, p.digits + 6);
  if (r.det_agreement_digits < std::min(certified, p.digits) - 3) {
    throw PrecisionNotReached("determinant routes agree to only " + std::to_string(r.det_agreement_digits) + " digits");
  }
  certified = std::min(certified, r.det_agreement_digits);
  const Real pi_s = pow(Real::pi(bits), static_cast<long>(s));
  r.det_general = {general, certified};
  r.det_closed_form = {closed, certified};
  r.value_e_ff = {pi_s * closed, certified};
  r.value_e_ind = {sqrt(Real(static_cast<long>(l), bits)) / pi_s * r.value_e_ff.value, certified};
  r.sqrt_factor = l % 4 == 1 ? "sqrt(l)" : "sqrt(-l)";
  if (l != 5 && l != 7) r.normalization_note = "normalization per generalized example formula, unverified";
  r.pairs = pairs;
  return r;
}

BigReal regulator_general_det(int l, const Precision& p) {
  return regulator_from_pairs(l, eval_ij_all(l, p), p).det_general;
}

RegulatorResult regulator_closed_form(int l, const Precision& p, int jobs) {
  require_regulator_l(l);
  return regulator_from_pairs(l, eval_ij_all(l, p, jobs), p);
}

}  // namespace reglab
