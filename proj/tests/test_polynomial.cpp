#include <doctest.h>

#include "reglab/exact_linalg.hpp"
#include "reglab/polynomial.hpp"

using namespace reglab;

namespace {
Polynomial P(const char* s) { return parse_polynomial(s); }
}  // namespace

TEST_CASE("parsing") {
  CHECK(P("108 - 96*t^5") == Polynomial(108) - Polynomial::monomial(96, 5));
  CHECK(P("(t+1)^2") == P("t^2 + 2*t + 1"));
  CHECK(P("3/2*t - t") == Polynomial::monomial(Rational(1, 2), 1));
  CHECK(P("-(t - 1)*(t + 1)") == P("1 - t^2"));
  CHECK(P("0").is_zero());
  CHECK_THROWS(P("t +"));
  CHECK_THROWS(P("x + 1"));
}

TEST_CASE("degree, derivative and evaluation") {
  const Polynomial f = P("216 - 288*t + 64*t^2");
  CHECK(f.degree() == 2);
  CHECK(Polynomial().degree() == -1);
  CHECK(f.derivative() == P("-288 + 128*t"));
  CHECK(f.evaluate(Rational(1)) == -8);
  CHECK(f.evaluate(Real(0.5, 128)) == Real(88L, 128));
}

TEST_CASE("division and gcd") {
  const auto [q, r] = divmod(P("t^3 - 1"), P("t - 1"));
  CHECK(q == P("t^2 + t + 1"));
  CHECK(r.is_zero());
  CHECK(gcd(P("t^2 - 1"), P("2*t^2 + 4*t + 2")) == P("t + 1"));
  CHECK(exact_quotient(P("t^5 - 1"), P("t - 1")) == P("t^4 + t^3 + t^2 + t + 1"));
  CHECK_THROWS(exact_quotient(P("t^2 + 1"), P("t - 1")));
}

TEST_CASE("multiplicity, squarefree part and rational roots") {
  CHECK(multiplicity(P("t^15*(1 - t^5)"), P("t")) == 15);
  CHECK(squarefree_part(P("t^3*(t-1)^2")) == P("t^2 - t"));
  const auto roots = rational_roots(P("6*t^3 - 5*t^2 - 2*t + 1"));  // (t - 1)(2t + 1)(3t - 1)
  REQUIRE(roots.size() == 3);
  CHECK(roots[0] == Rational(-1, 2));
  CHECK(roots[1] == Rational(1, 3));
  CHECK(roots[2] == 1);
  CHECK(rational_roots(P("t^2 + 1")).empty());
}

TEST_CASE("rational functions normalize") {
  const RationalFunction f(P("2*t^2 - 2"), P("4*t - 4"));
  CHECK(f.numerator() == P("1/2*t + 1/2"));
  CHECK(f.denominator() == Polynomial(1));
  CHECK(f.is_polynomial());
  const RationalFunction g(P("1"), P("3*t"));
  CHECK(g.denominator() == P("t"));
  CHECK(g.numerator() == Polynomial(Rational(1, 3)));
  CHECK((g - g).is_zero());
  CHECK((g * RationalFunction(P("3*t"))) == RationalFunction(1));
  CHECK(g.derivative() == RationalFunction(P("-1/3"), P("t^2")));
  CHECK_THROWS(RationalFunction(P("1"), Polynomial()));
}

TEST_CASE("common denominators") {
  const std::vector<RationalFunction> fs{RationalFunction(P("1"), P("t")), RationalFunction(P("1"), P("t - 1")),
                                         RationalFunction(P("t"))};
  const CommonDenominator c = clear_denominators(fs);
  CHECK(c.denominator == P("t^2 - t"));
  for (std::size_t i = 0; i < fs.size(); ++i) CHECK(RationalFunction(c.numerators[i], c.denominator) == fs[i]);
}

TEST_CASE("exact linear algebra") {
  const RationalMatrix m{{1, 2, 3}, {2, 4, 6}, {0, 1, 1}};
  CHECK(exact_rank(m) == 2);
  const auto c = solve_in_span(m, {1, 3, 4});
  REQUIRE(c.has_value());
  std::vector<Rational> combo(3);
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t k = 0; k < 3; ++k) combo[k] += (*c)[i] * m[i][k];
  }
  CHECK(combo == std::vector<Rational>{1, 3, 4});
  CHECK_FALSE(solve_in_span(m, {0, 0, 1}).has_value());
  CHECK(coefficient_rows({P("1 + t"), P("t^3")}) == RationalMatrix{{1, 1, 0, 0}, {0, 0, 0, 1}});
}
