#include <doctest.h>

#include "reference_tables.hpp"
#include "reglab/error.hpp"
#include "reglab/periods.hpp"

using namespace reglab;

namespace {

const Precision kP{30};

Real R(const char* s) { return Real::parse(s, kP.working_bits()); }

bool close(const Real& a, const Real& b, double rel) { return relative_difference(a, b).to_double() < rel; }

}  // namespace

TEST_CASE("constants") {
  const auto k = constants(kP);
  CHECK(k.c.to_fixed(9) == "0.026579933");
  CHECK(close(k.c * exp(k.pi * 2 / k.sqrt3), Real(1L, kP.working_bits()), 1e-35));
  CHECK(close(log(k.c) * k.sqrt3 / (k.pi * -2), Real(1L, kP.working_bits()), 1e-35));
  CHECK(k.c.bits() == kP.working_bits());
}

TEST_CASE("default truncation") {
  CHECK(default_truncation(15) == 26);
  CHECK(default_truncation(30) == 36);
  CHECK(default_truncation(100) > default_truncation(30));
}

TEST_CASE("published tables") {
  for (int l : {5, 7}) {
    for (const auto& row : reference::table(l)) {
      CAPTURE(l);
      CAPTURE(row.j);
      const auto pair = eval_ij(l, row.j, kP);
      CHECK(pair.l == l);
      CHECK(pair.j == row.j);
      CHECK(reference::matches_printed(pair.i_value.value, row.i_value));
      CHECK(reference::matches_printed(pair.j_value.value, row.j_value));
      CHECK(pair.i_value.certified_digits >= 25);
      CHECK(pair.j_value.certified_digits >= 25);
    }
  }
}

TEST_CASE("periods from the series") {
  const auto s = periods_from_series(5, 1, kP);
  CHECK(s.delta_period.value.to_fixed(5) == "14.50337");
  CHECK(s.gamma_period.value.to_fixed(5) == "3.87556");
  const auto pi = Real::pi(kP.working_bits());
  CHECK(close(s.delta_period.value, pi * 54 / 5L * R("0.42745977255318"), 1e-13));
  CHECK(close(s.gamma_period.value, Real(27L, kP.working_bits()) / 5L * R("0.717696894965804"), 1e-14));
  CHECK(s.sign_note.find("magnitudes") != std::string::npos);
}

TEST_CASE("table properties") {
  for (int l : {5, 7, 11}) {
    const auto pairs = eval_ij_all(l, kP);
    REQUIRE(pairs.size() == static_cast<std::size_t>(l - 1));
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      CAPTURE(l);
      CAPTURE(k);
      CHECK(pairs[k].i_value.value > 0L);
      CHECK(pairs[k].j_value.value > 0L);
      CHECK((pairs[k].j_value.value / pairs[k].i_value.value) > 0L);
      if (k > 0) {
        CHECK(pairs[k].i_value.value < pairs[k - 1].i_value.value);
        CHECK(pairs[k].j_value.value < pairs[k - 1].j_value.value);
      }
    }
  }
}

TEST_CASE("doubling the truncation changes no reported digit") {
  for (const auto& [l, j] : std::vector<std::pair<int, int>>{{5, 1}, {5, 4}, {7, 3}, {13, 12}}) {
    CAPTURE(l);
    CAPTURE(j);
    const auto pair = eval_ij(l, j, kP);
    const auto doubled = ij_partial_sums(l, j, 2 * pair.n_used, kP);
    CHECK(pair.i_value.to_string(kP.digits) == BigReal{doubled.i_value, pair.i_value.certified_digits}.to_string(kP.digits));
    CHECK(pair.j_value.to_string(kP.digits) == BigReal{doubled.j_value, pair.j_value.certified_digits}.to_string(kP.digits));
  }
}

TEST_CASE("parallel evaluation is deterministic") {
  const auto serial = eval_ij_all(7, kP, 1);
  const auto parallel = eval_ij_all(7, kP, 4);
  REQUIRE(serial.size() == parallel.size());
  for (std::size_t k = 0; k < serial.size(); ++k) {
    CHECK(serial[k].i_value.value == parallel[k].i_value.value);
    CHECK(serial[k].j_value.value == parallel[k].j_value.value);
    CHECK(serial[k].n_used == parallel[k].n_used);
  }
}

TEST_CASE("argument validation") {
  CHECK_THROWS_AS(eval_ij(4, 1, kP), UnsupportedL);
  CHECK_THROWS_AS(eval_ij(9, 1, kP), UnsupportedL);
  CHECK_THROWS_AS(eval_ij(5, 0, kP), std::invalid_argument);
  CHECK_THROWS_AS(eval_ij(5, 5, kP), std::invalid_argument);
  CHECK_THROWS_AS(ij_partial_sums(5, 1, 1, kP), std::invalid_argument);
}

TEST_CASE("Eisenstein series at real q") {
  const long bits = kP.working_bits();
  const auto k = constants(kP);
  CHECK(eisenstein_numeric(EisensteinKind::E3a, Real(1e-30, bits), 0, kP).to_fixed(20) == "1.00000000000000000000");
  const Real a = eisenstein_numeric(EisensteinKind::E3a, k.c, 0, kP);
  const Real b = eisenstein_numeric(EisensteinKind::E3b, k.c, 0, kP);
  CHECK(agreement_digits(a, b * 27, 40) >= 20);
  CHECK(agreement_digits(hauptmodul_numeric(k.c, 0, kP), Real(mpq_class(1, 2), bits), 40) >= 20);
  CHECK_THROWS_AS(eisenstein_numeric(EisensteinKind::E3a, Real(0L, bits), 0, kP), DomainError);
  CHECK_THROWS_AS(eisenstein_numeric(EisensteinKind::E3a, Real(1L, bits), 0, kP), DomainError);
}

TEST_CASE("transformation law on the imaginary axis") {
  const long bits = kP.working_bits();
  const Real zero(0L, bits);
  const Real sqrt3 = sqrt(Real(3L, bits));
  CHECK(eisenstein_transform_residual({zero, Real(1L, bits)}, 80, kP) < Real(1e-10, bits));
  CHECK(eisenstein_transform_residual({zero, Real(2L, bits)}, 200, kP) < Real(1e-10, bits));
  CHECK(eisenstein_transform_residual({zero, Real(1L, bits) / sqrt3}, 80, kP) < Real(1e-25, bits));
  // truncation this short is visibly wrong
  CHECK(eisenstein_transform_residual({zero, Real(2L, bits)}, 3, kP) > Real(1e-10, bits));
  CHECK_THROWS_AS(eisenstein_transform_residual({Real(1L, bits), Real(1L, bits)}, 80, kP), DomainError);
  CHECK_THROWS_AS(eisenstein_transform_residual({zero, Real(-1L, bits)}, 80, kP), DomainError);
}
