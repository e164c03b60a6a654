#include <doctest.h>

#include <cmath>
#include <numeric>

#include "reglab/elliptic_oracle.hpp"
#include "reglab/error.hpp"
#include "reglab/exact_linalg.hpp"
#include "reglab/gauss_manin.hpp"

using namespace reglab;

namespace {

Polynomial P(const char* s) { return parse_polynomial(s); }

std::vector<Polynomial> relation_numerators(const WeierstrassFamily& w, int max_m) {
  std::vector<RationalFunction> rels;
  for (int m = 0; m <= max_m; ++m) rels.push_back(pf_relation(w, m));
  return clear_denominators(rels).numerators;
}

}  // namespace

TEST_CASE("connection matrix is trace free") {
  for (int l : {1, 5, 7, 11, 13}) {
    CAPTURE(l);
    CHECK(connection_matrix(example_family(l)).trace().is_zero());
  }
  const WeierstrassFamily w{RationalFunction(P("t")), RationalFunction(1), "g2 = t, g3 = 1"};
  CHECK(connection_matrix(w).trace().is_zero());
}

TEST_CASE("Hodge coefficient of the example family") {
  for (int l : {1, 5, 7}) {
    CAPTURE(l);
    // -l / (6 t (1 - t^l))
    const RationalFunction expected(Polynomial(-l), Polynomial::monomial(6, 1) - Polynomial::monomial(6, l + 1));
    CHECK(connection_matrix(example_family(l)).hodge_coefficient() == expected);
  }
  CHECK(connection_matrix(example_family(1)).hodge_coefficient() == RationalFunction(Polynomial(Rational(1, 6)), P("t^2 - t")));
}

TEST_CASE("degeneracy locus") {
  for (int l = 1; l <= 35; ++l) {
    if (std::gcd(l, 6) != 1) continue;
    CAPTURE(l);
    CHECK(degeneracy_locus(example_family(l)).empty());
  }
  const WeierstrassFamily w{RationalFunction(P("t")), RationalFunction(1), "g2 = t, g3 = 1"};
  CHECK(degeneracy_locus(w).empty());
}

TEST_CASE("Picard-Fuchs operator for l = 1") {
  const auto pf = picard_fuchs(example_family(1));
  CHECK(pf.a == RationalFunction(P("6*t - 6*t^2")));
  CHECK(pf.a_prime == RationalFunction(P("6 - 12*t")));
  CHECK(pf.b == RationalFunction(Polynomial(Rational(-4, 3))));
}

TEST_CASE("pf_apply basics") {
  const auto pf = picard_fuchs(example_family(5));
  CHECK(pf_apply(pf, RationalFunction(1)) == pf.b);
  CHECK(pf_apply(pf, RationalFunction()).is_zero());
  const RationalFunction f(P("t^2 + 1")), g(P("3*t - 2"));
  CHECK(pf_apply(pf, f + g) == pf_apply(pf, f) + pf_apply(pf, g));
  CHECK(pf_apply(pf, RationalFunction(7) * f) == RationalFunction(7) * pf_apply(pf, f));
  CHECK(pf_relation(example_family(5), 0) == RationalFunction(P("-20/3*t^4")));
  CHECK_THROWS_AS(pf_relation(example_family(5), -1), std::invalid_argument);
}

TEST_CASE("isotrivial families have no Picard-Fuchs operator") {
  const WeierstrassFamily w{RationalFunction(P("3*t^2")), RationalFunction(P("t^3")), "constant j"};
  CHECK_THROWS_AS(picard_fuchs(w), IsotrivialFamily);
}

TEST_CASE("exact relations lie in the span of the Picard-Fuchs image") {
  // (l + 3i)(2l + 3i) t^{i-1+l} - 9 i^2 t^{i-1}
  for (const auto& [l, i] : std::vector<std::pair<int, int>>{{5, 1}, {7, 1}, {7, 2}, {11, 3}}) {
    CAPTURE(l);
    CAPTURE(i);
    const Polynomial target = Polynomial::monomial(Rational((l + 3 * i) * (2 * l + 3 * i)), i - 1 + l) -
                              Polynomial::monomial(Rational(9 * i * i), i - 1);
    auto polys = relation_numerators(example_family(l), 3);
    polys.push_back(target);
    const RationalMatrix rows = coefficient_rows(polys);
    const std::vector<Rational> target_row = rows.back();
    const RationalMatrix span(rows.begin(), rows.end() - 1);
    CHECK(solve_in_span(span, target_row).has_value());
    CHECK(exact_rank(span) == 4);
  }
  // t^{l+1} alone is not a relation.
  auto polys = relation_numerators(example_family(5), 3);
  polys.push_back(Polynomial::monomial(1, 6));
  const RationalMatrix rows = coefficient_rows(polys);
  CHECK_FALSE(solve_in_span(RationalMatrix(rows.begin(), rows.end() - 1), rows.back()).has_value());
}

TEST_CASE("the real period solves the Picard-Fuchs equation") {
  const Precision p{30};
  for (int l : {1, 5, 7}) {
    const auto w = example_family(l);
    const auto pf = picard_fuchs(w);
    const auto omega = [&](double t) {
      const Real x(t, p.working_bits());
      return weierstrass_real_period(w.g2.evaluate(x), w.g3.evaluate(x), p).to_double();
    };
    for (double t : {0.2, 0.5, 0.8}) {
      CAPTURE(l);
      CAPTURE(t);
      const double h = 1e-3;
      const double f0 = omega(t), fp = omega(t + h), fm = omega(t - h);
      const double d1 = (fp - fm) / (2 * h), d2 = (fp - 2 * f0 + fm) / (h * h);
      const Real x(t, p.working_bits());
      const double a = pf.a.evaluate(x).to_double(), ap = pf.a_prime.evaluate(x).to_double(), b = pf.b.evaluate(x).to_double();
      CHECK(std::abs((a * d2 + ap * d1 + b * f0) / f0) < 1e-4);
      // a wrong operator is visibly violated
      if (l == 1) CHECK(std::abs(a * d2 + ap * d1 + 2 * b * f0) > 1e-2);
    }
  }
}
