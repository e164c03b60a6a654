#include <doctest.h>

#include <cmath>

#include "reference_tables.hpp"
#include "reglab/error.hpp"
#include "reglab/regulator.hpp"

using namespace reglab;

namespace {

const Precision kP{30};

double rel(const Real& a, const Real& b) { return relative_difference(a, b).to_double(); }

}  // namespace

TEST_CASE("regulator matrix shapes") {
  const auto m5 = build_matrix(5, kP);
  CHECK(m5.h == 3);
  CHECK(m5.columns == 2);
  CHECK(m5.entries.size() == 3);
  CHECK(m5.entries[0].size() == 2);
  CHECK(m5.rank == 2);
  CHECK(m5.cokernel_dimension == 1);
  const auto m7 = build_matrix(7, kP);
  CHECK(m7.entries.size() == 4);
  CHECK(m7.entries[0].size() == 3);
  CHECK(m7.cokernel_dimension == 1);
}

TEST_CASE("first column of the l = 5 matrix") {
  // entry(p, 1) = +-2 sin(2 pi p / 5) (54 pi / 5) I(p)
  const auto m = build_matrix(5, kP);
  const long bits = kP.working_bits();
  const Real pi = Real::pi(bits);
  for (int p = 1; p <= 3; ++p) {
    const Real expected = sin(pi * 2 * static_cast<long>(p) / 5L) * 2 * pi * 54 / 5L * m.pairs[static_cast<std::size_t>(p - 1)].i_value.value;
    CHECK(rel(abs(m.entries[static_cast<std::size_t>(p - 1)][0]), abs(expected)) < 1e-30);
  }
}

TEST_CASE("entries are real") {
  for (int l : {5, 7, 11}) {
    const auto m = build_matrix(l, kP);
    CHECK(m.max_imaginary_residue.to_double() < 1e-20);
  }
}

TEST_CASE("cyclotomic determinant") {
  CHECK(vandermonde_like_det(3, kP).to_fixed(25) == sqrt(Real(3L, kP.working_bits())).to_fixed(25));
  CHECK(vandermonde_like_det(5, kP).to_fixed(25) == "5.0000000000000000000000000");
  CHECK((pow(vandermonde_like_det(7, kP), 2L)).to_fixed(20) == "343.00000000000000000000");
  for (int l = 3; l <= 25; l += 2) {
    CAPTURE(l);
    const Real d = vandermonde_like_det(l, kP);
    const Real expected = pow(Real(static_cast<long>(l), kP.working_bits()), static_cast<long>((l - 1) / 2));
    CHECK(agreement_digits(d * d, expected, 40) >= 20);
  }
  CHECK_THROWS_AS(vandermonde_like_det(4, kP), std::invalid_argument);
  CHECK_THROWS_AS(vandermonde_like_det(1, kP), std::invalid_argument);
}

TEST_CASE("complex determinant") {
  const long b = 128;
  const auto c = [&](long re, long im) { return BigComplex(Real(re, b), Real(im, b)); };
  // [[1, i], [2, 3]] -> 3 - 2i
  const auto d = complex_det({{c(1, 0), c(0, 1)}, {c(2, 0), c(3, 0)}});
  CHECK(d.re == 3L);
  CHECK(d.im == -2L);
  CHECK(complex_det({{c(1, 1), c(2, 2)}, {c(1, 1), c(2, 2)}}).modulus().is_zero());
  CHECK_THROWS_AS(complex_det({}), std::invalid_argument);
}

TEST_CASE("rows k-1 and k of the ratio matrix collapse") {
  for (int l : {5, 7, 11}) {
    const auto pairs = eval_ij_all(l, kP);
    const auto m = ratio_matrix(l, pairs, kP);
    const std::size_t k = static_cast<std::size_t>((l + 1) / 2);
    REQUIRE(m.size() == k);
    for (std::size_t q = 0; q + 1 < k; ++q) {
      const BigComplex s = m[k - 2][q] + m[k - 1][q];
      CHECK(s.modulus().to_double() < 1e-30);
    }
    const auto ratio = [&](std::size_t p) { return pairs[p - 1].j_value.value / pairs[p - 1].i_value.value; };
    CHECK(rel((m[k - 2][k - 1] + m[k - 1][k - 1]).re, ratio(k - 1) + ratio(k)) < 1e-30);
  }
}

TEST_CASE("both determinant routes agree") {
  const Precision p{29};  // 128 working bits
  REQUIRE(p.working_bits() <= 130);
  for (int l : {5, 7, 11, 13}) {
    CAPTURE(l);
    const auto r = regulator_closed_form(l, p);
    CHECK(rel(r.det_general.value, r.det_closed_form.value) < 1e-10);
    CHECK(rel(regulator_general_det(l, p).value, r.det_closed_form.value) < 1e-10);
  }
}

TEST_CASE("regulator values") {
  for (int l : {5, 7}) {
    CAPTURE(l);
    const auto r = regulator_closed_form(l, kP);
    CHECK(abs(r.value_e_ind.value - Real::parse(reference::regulator_value(l), kP.working_bits())).to_double() < 1e-12);
    CHECK(r.normalization_note.empty());
    CHECK(r.sign_policy == kSignPolicy);
    CHECK(r.h == (l == 5 ? 3 : 4));
  }
  CHECK(regulator_closed_form(5, kP).value_e_ind.value.to_fixed(15) == "0.346139631939354");
  CHECK(regulator_closed_form(5, kP).sqrt_factor == "sqrt(l)");
  CHECK(regulator_closed_form(7, kP).sqrt_factor == "sqrt(-l)");
}

TEST_CASE("normalizations are consistent") {
  const auto r = regulator_closed_form(11, kP, 2);
  const long bits = kP.working_bits();
  const Real pi5 = pow(Real::pi(bits), 5L);
  CHECK(rel(r.value_e_ff.value, pi5 * r.det_closed_form.value) < 1e-30);
  CHECK(rel(r.value_e_ind.value, sqrt(Real(11L, bits)) / pi5 * r.value_e_ff.value) < 1e-30);
  CHECK(r.normalization_note == "normalization per generalized example formula, unverified");
}

TEST_CASE("regulator is nonzero for every admissible l tested") {
  for (int l : {5, 7, 11, 13, 17, 19, 23, 25}) {
    CAPTURE(l);
    const auto r = regulator_closed_form(l, Precision{20}, 4);
    CHECK(r.value_e_ind.value > 0L);
    CHECK(r.det_agreement_digits >= 15);
  }
}

TEST_CASE("regulator argument validation") {
  CHECK_THROWS_AS(build_matrix(1, kP), UnsupportedL);
  CHECK_THROWS_AS(build_matrix(9, kP), UnsupportedL);
  CHECK_THROWS_AS(regulator_closed_form(4, kP), UnsupportedL);
  const auto pairs = eval_ij_all(5, kP);
  CHECK_THROWS_AS(regulator_from_pairs(5, {pairs.begin(), pairs.end() - 1}, kP), std::invalid_argument);
  CHECK_THROWS_AS(regulator_from_pairs(7, pairs, kP), std::invalid_argument);
}
