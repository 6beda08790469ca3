#pragma once
#include <array>

#include "lct/types.hpp"

namespace lct {

// Real 2x2 unimodular matrix ((a,b),(c,d)), the parameter of every transform.
struct GroupElement {
  double a, b, c, d;
  GroupElement(double a_, double b_, double c_, double d_);
  static GroupElement identity() { return {1, 0, 0, 1}; }
  // ((0,1),(-1,0)); the transform it labels is the Fourier operator up to
  // the e^{-i pi/4} metaplectic phase.
  static GroupElement fourier() { return {0, 1, -1, 0}; }
  double det() const { return a * d - b * c; }
};

GroupElement compose(const GroupElement& m1, const GroupElement& m2);
GroupElement inverse(const GroupElement& m);
GroupElement negate(const GroupElement& m);

// One-parameter subgroup families and their generator parametrisations.
enum class SubgroupTag {
  Elliptic,            // phi   -> ((cos phi/2, -sin phi/2),(sin phi/2, cos phi/2))
  HyperbolicRepulsive, // zeta  -> ((cosh z/2, -sinh z/2),(-sinh z/2, cosh z/2))
  HyperbolicScaling,   // alpha -> diag(e^{-alpha/2}, e^{alpha/2})
  ParabolicFree,       // b     -> ((1,-b),(0,1))
  ParabolicPosition,   // c     -> ((1,0),(c,1))
};
GroupElement subgroup_element(SubgroupTag tag, double t);

struct LorentzMatrix {
  std::array<std::array<double, 3>, 3> m{};
  double operator()(int i, int j) const { return m[i][j]; }
};

// Quadratic 2:1 homomorphism onto the 3x3 pseudo-orthogonal group;
// L(M) = L(-M).
LorentzMatrix to_lorentz(const GroupElement& m);
LorentzMatrix lorentz_product(const LorentzMatrix& l1, const LorentzMatrix& l2);

// Invariant metric of to_lorentz images, determined once by requiring the
// elliptic one-parameter family to map to eta-rotations and the repulsive
// family to eta-boosts: eta = diag(+1, +1, -1).
inline constexpr std::array<double, 3> kLorentzMetric{1.0, 1.0, -1.0};

// M = ((a',0),(c',1/a')) * exp(alpha * elliptic generator), a' > 0.
// alpha is reported in (-2*pi, 2*pi]: the elliptic family has matrix period
// 4*pi, so the principal (-pi, pi] window cannot reproduce inputs with a < 0.
struct EllipticFactorization {
  double a_prime;
  double c_prime;
  double alpha;
};
EllipticFactorization elliptic_factor(const GroupElement& m);

// M * F^{-1} = left * ((1, shear),(0,1)) with left lower-triangular,
// i.e. M = left * ((1, shear),(0,1)) * F.  Defined for |b| >= eps_b.
struct ParabolicFactorization {
  GroupElement left;
  double shear;  // -a/b
};
ParabolicFactorization parabolic_factor(const GroupElement& m, double eps_b = kEpsB);

// Parameter flip ((a,-b),(-c,d)); conjugation relating the lower-bound and
// upper-bound discrete series.  Involution.
GroupElement reflection_conjugate(const GroupElement& m);

// Conjugation by the square root of the Fourier element,
// (1/2)((a+b+c+d, -a+b-c+d),(-a-b+c+d, a-b-c+d)); maps the repulsive
// one-parameter family onto the scaling family.
GroupElement cayley_conjugate_reposc(const GroupElement& m);

}  // namespace lct
