#pragma once
#include "lct/types.hpp"

namespace lct {

// Lower/upper-bound discrete series label, k > 0.
struct DiscreteLabel {
  enum class Sign { plus, minus };
  double k;
  Sign sign = Sign::plus;
  DiscreteLabel(double k_, Sign s = Sign::plus);
};

// Continuous nonexceptional series: eps in {0, 1/2}, k = 1/2 + i s,
// s >= 0 for eps = 0 and s > 0 for eps = 1/2.
struct ContinuousLabel {
  double eps;
  double s;
  ContinuousLabel(double eps_, double s_);
  cplx k() const { return {0.5, s}; }
  double g() const;  // cosh(pi s) or sinh(pi s)
  double h() const { return eps == 0.0 ? 1.0 : -1.0; }
};

// Which generator's eigenbasis indexes rows/columns of a transform.
enum class BasisTag {
  EllipticJ0,
  RepulsiveJ1,
  ScalingJ2,
  FreeJplus,
  PositionJminus,
};

struct TwoComponent {
  cplx plus, minus;  // sigma = +1 / sigma = -1 components
};

namespace bases {

// Radial oscillator mode with eigenvalue m = k + n; real and unit-norm on
// (0, inf) with plain dr measure.
double phi0_discrete(const DiscreteLabel& label, int n, double r);

// e^{i pi k} sqrt(rho r) J_{2k-1}(rho r).
cplx phi_plus_discrete(const DiscreteLabel& label, double rho, double r);

// Repulsive-oscillator generalized eigenfunction, eigenvalue mu; the 1F1
// form is primary, the Whittaker form is kept for cross-checks.
cplx phi1_discrete(const DiscreteLabel& label, double mu, double r);
cplx phi1_discrete_whittaker(const DiscreteLabel& label, double mu, double r);

// Mellin wave r^{-1/2 + i mu} / sqrt(pi); independent of k.
cplx phi2_discrete(double mu, double r);

// Two-component Whittaker-W eigenfunction of the compact generator,
// eigenvalue m with m - eps integer.  Real-valued; orthonormal in the
// summed-over-components inner product.
TwoComponent phi0_continuous(const ContinuousLabel& label, double m, double r);

// (1, tau) r^{-1/2 + i mu} / sqrt(2 pi).
TwoComponent phi2_continuous(int tau, double mu, double r);

}  // namespace bases
}  // namespace lct
