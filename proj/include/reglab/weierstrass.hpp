#pragma once

// Weierstrass families y^2 = 4x^3 - g2(t) x - g3(t) over the t-line, their
// singular fibers, and the Euler-number bookkeeping of the canonical bundle
// formula.

#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "reglab/polynomial.hpp"

namespace reglab {

struct WeierstrassFamily {
  RationalFunction g2;
  RationalFunction g3;
  std::string label;
};

/// 3y^2 + x^3 + (3x + 4t^l)^2 = 0 in Weierstrass form:
/// g2 = 108 - 96 t^l, g3 = 216 - 288 t^l + 64 t^{2l}.
WeierstrassFamily example_family(int l);

struct DiscriminantAndJ {
  RationalFunction discriminant;  ///< g2^3 - 27 g3^2
  RationalFunction j;             ///< 1728 g2^3 / discriminant
};

/// Throws IsotrivialFamily when the discriminant vanishes identically.
DiscriminantAndJ discriminant_and_j(const WeierstrassFamily& family);

/// A closed point of P^1: the roots of a monic squarefree rational
/// polynomial (all sharing the same local invariants), or infinity.
struct Place {
  enum class Kind { Finite, Infinity };
  Kind kind = Kind::Finite;
  Polynomial factor;  ///< monic; unused for Infinity

  static Place infinity() { return {Kind::Infinity, Polynomial()}; }
  static Place finite(const Polynomial& f) { return {Kind::Finite, f.monic()}; }

  /// Number of geometric points represented.
  [[nodiscard]] int geometric_points() const { return kind == Kind::Infinity ? 1 : factor.degree(); }
  [[nodiscard]] std::string to_string() const;
  friend bool operator==(const Place& a, const Place& b) { return a.kind == b.kind && a.factor == b.factor; }
};

enum class KodairaType { Smooth, I, II, III, IV, IStar, IIStar, IIIStar, IVStar };

struct KodairaFiber {
  KodairaType type = KodairaType::Smooth;
  int n = 0;          ///< the index b of I_b and I*_b; 0 otherwise
  int epsilon_s = 0;  ///< Euler number contribution
  Place place;

  [[nodiscard]] bool is_additive() const {
    return type != KodairaType::Smooth && type != KodairaType::I;
  }
  [[nodiscard]] std::string type_name() const;
};

/// Euler number contribution of a fiber type:
/// smooth 0, I_b b, II 2, III 3, IV 4, I*_b b+6, II* 10, III* 9, IV* 8.
int epsilon_for(KodairaType type, int n);

inline constexpr int kInfiniteOrder = std::numeric_limits<int>::max() / 4;

/// Local orders of (g2, g3, discriminant) at a place, before minimalization.
struct LocalOrders {
  int g2 = 0;
  int g3 = 0;
  int discriminant = 0;
};
LocalOrders local_orders(const WeierstrassFamily& family, const Place& place);

/// Kodaira type from the orders of a minimal model (residue characteristic 0).
KodairaFiber kodaira_from_orders(int ord_g2, int ord_g3, int ord_discriminant, const Place& place);

/// Classifies the fiber over `place`, twisting/minimalizing first.
KodairaFiber classify_fiber(const WeierstrassFamily& family, const Place& place);

/// Candidate bad places: a pairwise coprime set of monic squarefree factors
/// covering the zeros and poles of g2, g3 and the discriminant, with rational
/// roots split off as linear factors; infinity last.
std::vector<Place> candidate_places(const WeierstrassFamily& family);

/// All singular fibers, finite places first (ordered by degree, then
/// coefficients) and infinity last.
std::vector<KodairaFiber> singular_fibers(const WeierstrassFamily& family);

struct EulerData {
  int epsilon = 0;         ///< (1/12) sum of epsilon_s over geometric points
  int additive_count = 0;  ///< number of additive geometric fibers
  int deg_h10 = 0;         ///< epsilon - additive_count
  int deg_h01 = 0;         ///< -epsilon
  std::vector<KodairaFiber> fibers;
};

/// Throws NonIntegralEpsilon if the epsilon sum is not divisible by 12.
EulerData euler_epsilon(const WeierstrassFamily& family);

struct HodgeData {
  int l = 0;
  int h20 = 0;
  int h11 = 0;
  int dim_lambda2 = 0;
  int dim_lambda1 = 0;
  int dim_e = 0;
  int dim_e_rel = 0;
  int h = 0;  ///< height of the regulator matrix (= dim_lambda1)
  bool rational_surface = false;  ///< l <= 3: no transcendental part
};

/// Hodge numbers and dimensions for the example family; gcd(l, 6) = 1.
HodgeData hodge_and_dims(int l);

/// Throws UnsupportedL unless l >= 1 and gcd(l, 6) = 1.
void require_admissible_l(int l);

}  // namespace reglab
