#include <doctest.h>

#include <thread>

#include "reglab/real.hpp"

using namespace reglab;

TEST_CASE("precision in bits covers the requested digits") {
  CHECK(Precision{30}.bits() >= 100);
  CHECK(Precision{30}.working_bits() == Precision{30}.bits() + 32);
  CHECK(Precision{100}.bits() >= 333);
}

TEST_CASE("parse and render") {
  const Real x = Real::parse("0.42745977255318", 128);
  CHECK(x.to_string(14) == "0.42745977255318");
  CHECK(x.to_fixed(5) == "0.42746");
  CHECK(Real::parse("1e-10", 128).to_string(3) == "1.00e-10");
  CHECK_THROWS_AS(Real::parse("0.4x", 128), std::invalid_argument);
}

TEST_CASE("binary values convert to rationals exactly") {
  CHECK(Real(0.5, 64).to_rational() == mpq_class(1, 2));
  CHECK(Real(-3L, 64).to_rational() == -3);
  const Real third(mpq_class(1, 3), 200);
  CHECK(abs(Real(third.to_rational(), 400) - third).is_zero());
}

TEST_CASE("mixed precision uses the larger operand") {
  const Real a(1L, 64), b(3L, 256);
  CHECK((a / b).bits() == 256);
  CHECK((b * 2).bits() == 256);
}

TEST_CASE("agreement digits") {
  const Real ref = Real::parse("1.2345678901", 128);
  CHECK(agreement_digits(Real::parse("1.2345678", 128), ref, 50) == 7);
  CHECK(agreement_digits(ref, ref, 50) == 50);
  CHECK(agreement_digits(Real(2L, 128), ref, 50) == 0);
}

TEST_CASE("BigReal never shows uncertified digits") {
  const BigReal v{Real::pi(200), 5};
  CHECK(v.to_string(30) == "3.1416");
  CHECK(v.to_string(3) == "3.14");
}

TEST_CASE("thread-local default precision") {
  PrecisionScope scope(300);
  CHECK(Real(1L).bits() == 300);
  long other = 0;
  std::thread([&] { other = Real(1L).bits(); }).join();
  CHECK(other != 300);
}

TEST_CASE("complex arithmetic") {
  const long bits = 128;
  const BigComplex z(Real(3L, bits), Real(4L, bits));
  CHECK(z.modulus() == Real(5L, bits));
  const BigComplex w = z / z;
  CHECK(abs(w.re - Real(1L, bits)) < Real(1e-30, bits));
  CHECK(abs(w.im) < Real(1e-30, bits));
  const BigComplex u = BigComplex::polar_unit(Real::pi(bits) / 3);
  CHECK(abs(u.norm() - Real(1L, bits)) < Real(1e-35, bits));
}
