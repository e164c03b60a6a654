#include "reglab/weierstrass.hpp"

#include <algorithm>
#include <numeric>

namespace reglab {

WeierstrassFamily example_family(int l) {
  if (l < 1) throw UnsupportedL("example_family requires l >= 1");
  const Polynomial tl = Polynomial::monomial(1, l);
  const Polynomial g2 = Polynomial(108) - Polynomial(96) * tl;
  const Polynomial g3 = Polynomial(216) - Polynomial(288) * tl + Polynomial(64) * tl * tl;
  return {g2, g3, "3y^2+x^3+(3x+4t^" + std::to_string(l) + ")^2"};
}

DiscriminantAndJ discriminant_and_j(const WeierstrassFamily& family) {
  const RationalFunction g2_cubed = family.g2 * family.g2 * family.g2;
  const RationalFunction disc = g2_cubed - RationalFunction(27) * family.g3 * family.g3;
  if (disc.is_zero()) throw IsotrivialFamily("discriminant g2^3 - 27 g3^2 vanishes identically");
  return {disc, RationalFunction(1728) * g2_cubed / disc};
}

std::string Place::to_string() const {
  if (kind == Kind::Infinity) return "inf";
  return factor.to_string();
}

std::string KodairaFiber::type_name() const {
  switch (type) {
    case KodairaType::Smooth: return "I0";
    case KodairaType::I: return "I" + std::to_string(n);
    case KodairaType::II: return "II";
    case KodairaType::III: return "III";
    case KodairaType::IV: return "IV";
    case KodairaType::IStar: return "I" + std::to_string(n) + "*";
    case KodairaType::IIStar: return "II*";
    case KodairaType::IIIStar: return "III*";
    case KodairaType::IVStar: return "IV*";
  }
  return "?";
}

int epsilon_for(KodairaType type, int n) {
  switch (type) {
    case KodairaType::Smooth: return 0;
    case KodairaType::I: return n;
    case KodairaType::II: return 2;
    case KodairaType::III: return 3;
    case KodairaType::IV: return 4;
    case KodairaType::IStar: return n + 6;
    case KodairaType::IIStar: return 10;
    case KodairaType::IIIStar: return 9;
    case KodairaType::IVStar: return 8;
  }
  return 0;
}

namespace {

int order_at(const RationalFunction& f, const Place& place) {
  if (f.is_zero()) return kInfiniteOrder;
  if (place.kind == Place::Kind::Infinity) {
    return f.denominator().degree() - f.numerator().degree();
  }
  return multiplicity(f.numerator(), place.factor) - multiplicity(f.denominator(), place.factor);
}

int ceil_div(int a, int b) {
  // b > 0
  return a >= 0 ? (a + b - 1) / b : -((-a) / b);
}

bool coefficient_less(const Polynomial& a, const Polynomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int k = a.degree(); k >= 0; --k) {
    if (a.coefficient(k) != b.coefficient(k)) return a.coefficient(k) < b.coefficient(k);
  }
  return false;
}

// Refines a pairwise coprime list of monic squarefree polynomials by p.
void add_to_coprime_basis(std::vector<Polynomial>& basis, Polynomial p) {
  p = squarefree_part(p);
  std::vector<Polynomial> next;
  for (auto& b : basis) {
    if (p.is_constant()) {
      next.push_back(std::move(b));
      continue;
    }
    const Polynomial g = gcd(b, p);
    if (g.is_constant()) {
      next.push_back(std::move(b));
      continue;
    }
    const Polynomial rest = exact_quotient(b, g).monic();
    if (!rest.is_constant()) next.push_back(rest);
    next.push_back(g);
    p = exact_quotient(p, g).monic();
  }
  if (!p.is_constant()) next.push_back(p.monic());
  basis = std::move(next);
}

}  // namespace

LocalOrders local_orders(const WeierstrassFamily& family, const Place& place) {
  const auto dj = discriminant_and_j(family);
  return {order_at(family.g2, place), order_at(family.g3, place), order_at(dj.discriminant, place)};
}

KodairaFiber kodaira_from_orders(int a, int b, int d, const Place& place) {
  KodairaFiber fiber;
  fiber.place = place;
  auto set = [&](KodairaType type, int n = 0) {
    fiber.type = type;
    fiber.n = n;
    fiber.epsilon_s = epsilon_for(type, n);
    return fiber;
  };
  if (d < 0) throw NotMinimal("negative discriminant order after twisting");
  if (d == 0) return set(KodairaType::Smooth);
  if (a == 0 && b == 0) return set(KodairaType::I, d);
  if (a >= 1 && b >= 1) {
    if (d > 6 && a == 2 && b == 3) return set(KodairaType::IStar, d - 6);
    switch (d) {
      case 2: if (b == 1) return set(KodairaType::II); break;
      case 3: if (a == 1) return set(KodairaType::III); break;
      case 4: if (b == 2) return set(KodairaType::IV); break;
      case 6: if (a >= 2 && b >= 3) return set(KodairaType::IStar, 0); break;
      case 8: if (b == 4) return set(KodairaType::IVStar); break;
      case 9: if (a == 3) return set(KodairaType::IIIStar); break;
      case 10: if (b == 5) return set(KodairaType::IIStar); break;
      default: break;
    }
  }
  throw NotMinimal("orders (" + std::to_string(a) + ", " + std::to_string(b) + ", " + std::to_string(d) +
                   ") match no Kodaira type of a minimal model");
}

KodairaFiber classify_fiber(const WeierstrassFamily& family, const Place& place) {
  const LocalOrders o = local_orders(family, place);
  // Twist (g2, g3) -> (u^{4m} g2, u^{6m} g3) with the least m making both
  // integral; this also strips any non-minimal (4, 6) excess.
  int m = std::numeric_limits<int>::min();
  if (o.g2 != kInfiniteOrder) m = std::max(m, ceil_div(-o.g2, 4));
  if (o.g3 != kInfiniteOrder) m = std::max(m, ceil_div(-o.g3, 6));
  const int a = o.g2 == kInfiniteOrder ? kInfiniteOrder : o.g2 + 4 * m;
  const int b = o.g3 == kInfiniteOrder ? kInfiniteOrder : o.g3 + 6 * m;
  const int d = o.discriminant + 12 * m;
  if (a >= 4 && b >= 6) throw NotMinimal("minimalization failed at " + place.to_string());
  return kodaira_from_orders(a, b, d, place);
}

std::vector<Place> candidate_places(const WeierstrassFamily& family) {
  const auto dj = discriminant_and_j(family);
  std::vector<Polynomial> basis;
  for (const RationalFunction* f : {&family.g2, &family.g3, &dj.discriminant}) {
    if (f->is_zero()) continue;
    for (const Polynomial* p : {&f->numerator(), &f->denominator()}) {
      if (!p->is_constant()) add_to_coprime_basis(basis, *p);
    }
  }
  std::vector<Polynomial> factors;
  for (const auto& b : basis) {
    Polynomial rest = b;
    for (const auto& root : rational_roots(b)) {
      const Polynomial linear = Polynomial::t() - Polynomial(root);
      factors.push_back(linear);
      rest = exact_quotient(rest, linear);
    }
    if (!rest.is_constant()) factors.push_back(rest.monic());
  }
  std::sort(factors.begin(), factors.end(), coefficient_less);
  std::vector<Place> places;
  for (const auto& f : factors) places.push_back(Place::finite(f));
  places.push_back(Place::infinity());
  return places;
}

std::vector<KodairaFiber> singular_fibers(const WeierstrassFamily& family) {
  std::vector<KodairaFiber> out;
  for (const auto& place : candidate_places(family)) {
    KodairaFiber f = classify_fiber(family, place);
    if (f.type != KodairaType::Smooth) out.push_back(std::move(f));
  }
  return out;
}

EulerData euler_epsilon(const WeierstrassFamily& family) {
  EulerData e;
  e.fibers = singular_fibers(family);
  long sum = 0;
  for (const auto& f : e.fibers) {
    sum += static_cast<long>(f.epsilon_s) * f.place.geometric_points();
    if (f.is_additive()) e.additive_count += f.place.geometric_points();
  }
  if (sum % 12 != 0) {
    throw NonIntegralEpsilon("sum of epsilon_s = " + std::to_string(sum) + " is not divisible by 12");
  }
  e.epsilon = static_cast<int>(sum / 12);
  e.deg_h10 = e.epsilon - e.additive_count;
  e.deg_h01 = -e.epsilon;
  return e;
}

void require_admissible_l(int l) {
  if (l < 1 || std::gcd(l, 6) != 1) {
    throw UnsupportedL("l = " + std::to_string(l) + " violates the standing assumption gcd(l, 6) = 1");
  }
}

HodgeData hodge_and_dims(int l) {
  require_admissible_l(l);
  HodgeData d;
  d.l = l;
  d.h20 = (l - 1) / 3;
  d.h11 = 10 * (1 + d.h20);
  d.dim_lambda2 = d.h20;
  d.dim_lambda1 = l - 1 - (l - 1) / 3;
  d.dim_e = l - 1;
  d.dim_e_rel = 2 * l - 1;
  d.h = d.dim_lambda1;
  d.rational_surface = l <= 3;
  return d;
}

}  // namespace reglab
