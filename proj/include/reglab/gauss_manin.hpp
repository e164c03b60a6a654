#pragma once

// Gauss-Manin connection and Picard-Fuchs operator of a Weierstrass family
// in the basis (w_hat, w_star), where w_hat is the class of dx/y and w_star
// the class with x^2/y Cech component. All derivatives are d/dt.

#include <array>
#include <vector>

#include "reglab/weierstrass.hpp"

namespace reglab {

/// nabla(e_c) = sum_r m(r, c) dt (x) e_r with e_0 = w_hat, e_1 = w_star.
struct ConnectionMatrix {
  std::array<std::array<RationalFunction, 2>, 2> m;

  [[nodiscard]] const RationalFunction& operator()(int row, int col) const { return m[row][col]; }
  [[nodiscard]] RationalFunction trace() const { return m[0][0] + m[1][1]; }
  /// Coefficient of dt (x) w_star in nabla(w_hat): (6 g2 g3' - 9 g2' g3) / discriminant.
  [[nodiscard]] const RationalFunction& hodge_coefficient() const { return m[1][0]; }
};

/// PF(f w_star) = (f'' A + f' A' + f B) dt (x) w_hat.
struct PicardFuchsOperator {
  RationalFunction a;
  RationalFunction b;
  RationalFunction a_prime;
};

ConnectionMatrix connection_matrix(const WeierstrassFamily& family);

/// Places of S (outside the zeros and poles of the discriminant and away from
/// infinity) where the induced map H^{1,0} -> Omega^1 (x) H^{0,1} is not an
/// isomorphism.
std::vector<Place> degeneracy_locus(const WeierstrassFamily& family);

/// Throws IsotrivialFamily when the discriminant or 2 g2 g3' - 3 g2' g3
/// vanishes identically (constant j).
PicardFuchsOperator picard_fuchs(const WeierstrassFamily& family);

RationalFunction pf_apply(const PicardFuchsOperator& pf, const RationalFunction& f);

/// pf_apply(picard_fuchs(family), t^m)
RationalFunction pf_relation(const WeierstrassFamily& family, int m);

}  // namespace reglab
