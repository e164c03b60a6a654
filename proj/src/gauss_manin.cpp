#include "reglab/gauss_manin.hpp"

#include <algorithm>

namespace reglab {

namespace {

struct Derivatives {
  RationalFunction g2, g3, dg2, dg3, disc, ddisc;
  RationalFunction e2;  // 2 g2 g3' - 3 g2' g3
};

Derivatives derivatives(const WeierstrassFamily& family) {
  Derivatives d;
  d.g2 = family.g2;
  d.g3 = family.g3;
  d.dg2 = family.g2.derivative();
  d.dg3 = family.g3.derivative();
  d.disc = discriminant_and_j(family).discriminant;
  d.ddisc = d.disc.derivative();
  d.e2 = RationalFunction(2) * d.g2 * d.dg3 - RationalFunction(3) * d.dg2 * d.g3;
  return d;
}

}  // namespace

ConnectionMatrix connection_matrix(const WeierstrassFamily& family) {
  const Derivatives d = derivatives(family);
  const RationalFunction log_term = d.ddisc / (RationalFunction(12) * d.disc);
  ConnectionMatrix c;
  c.m[0][0] = -log_term;
  c.m[1][0] = RationalFunction(3) * d.e2 / d.disc;
  c.m[0][1] = -(d.g2 * d.e2) / (RationalFunction(16) * d.disc);
  c.m[1][1] = log_term;
  return c;
}

std::vector<Place> degeneracy_locus(const WeierstrassFamily& family) {
  const ConnectionMatrix c = connection_matrix(family);
  const RationalFunction& coeff = c.hodge_coefficient();
  const auto disc = discriminant_and_j(family).discriminant;
  std::vector<Place> out;
  if (coeff.is_zero()) {
    throw IsotrivialFamily("induced map vanishes identically (constant j)");
  }
  Polynomial zeros = squarefree_part(coeff.numerator());
  if (zeros.is_constant()) return out;
  // Remove points that are not in S (singular fibers: zeros or poles of the discriminant).
  for (const Polynomial* p : {&disc.numerator(), &disc.denominator()}) {
    if (p->is_constant()) continue;
    for (;;) {
      const Polynomial g = gcd(zeros, *p);
      if (g.is_constant()) break;
      zeros = exact_quotient(zeros, g);
    }
  }
  if (zeros.is_constant()) return out;
  Polynomial rest = zeros.monic();
  for (const auto& root : rational_roots(rest)) {
    const Polynomial linear = Polynomial::t() - Polynomial(root);
    out.push_back(Place::finite(linear));
    rest = exact_quotient(rest, linear);
  }
  if (!rest.is_constant()) out.push_back(Place::finite(rest));
  return out;
}

PicardFuchsOperator picard_fuchs(const WeierstrassFamily& family) {
  const Derivatives d = derivatives(family);
  if (d.e2.is_zero()) throw IsotrivialFamily("2 g2 g3' - 3 g2' g3 vanishes identically (constant j)");
  PicardFuchsOperator pf;
  pf.a = -d.disc / (RationalFunction(3) * d.e2);
  pf.a_prime = pf.a.derivative();
  const RationalFunction first = (d.g2 * d.dg2 * d.dg2 - RationalFunction(12) * d.dg3 * d.dg3) / d.e2;
  const RationalFunction second = (RationalFunction(4) * d.ddisc / (RationalFunction(3) * d.e2)).derivative();
  pf.b = (first - second) / RationalFunction(48);
  return pf;
}

RationalFunction pf_apply(const PicardFuchsOperator& pf, const RationalFunction& f) {
  const RationalFunction df = f.derivative();
  return df.derivative() * pf.a + df * pf.a_prime + f * pf.b;
}

RationalFunction pf_relation(const WeierstrassFamily& family, int m) {
  if (m < 0) throw std::invalid_argument("pf_relation: m must be >= 0");
  return pf_apply(picard_fuchs(family), RationalFunction(Polynomial::monomial(1, m)));
}

}  // namespace reglab
