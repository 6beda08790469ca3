#pragma once
#include "lct/types.hpp"

namespace lct::sf {

// Log-gamma with exp(log_gamma(z)) = Gamma(z); imaginary part may differ
// from the continuous branch by multiples of 2*pi*i, which is harmless for
// the Gamma ratios and products built from it.
cplx log_gamma(cplx z);
cplx gamma_fn(cplx z);

// Confluent hypergeometric 1F1(a; b; z).  Power series with compensated
// summation for |z| <= 50, large-|z| expansion beyond.
cplx hyp1f1(cplx a, cplx b, cplx z);

// Gauss hypergeometric 2F1(a, b; c; z) for complex parameters.  Handles
// terminating series (a or b a non-positive integer) first; otherwise the
// principal branch off the cut [1, inf).  Real z < 1 and complex z with
// |z| or |z/(z-1)| < 1 are supported.
cplx hyp2f1(cplx a, cplx b, cplx c, cplx z);

// Bessel J of complex order, positive real argument.
cplx bessel_j(cplx nu, double x);
double bessel_y0(double x);

enum class CutSide { Above, Below };

// Hankel functions of order 2is at real argument zeta != 0.  For zeta < 0
// (on the cut) the value is the boundary value from the chosen side.
// |s| < 1e-6 is routed through the order-zero limit J0 +/- i Y0.
cplx hankel_imaginary_order(int kind, double s, double zeta, CutSide side);

// K_{2is}(x) = int_0^inf exp(-x cosh t) cos(2 s t) dt, real for real s, x>0.
double macdonald_imaginary_order(double s, double x);

// M_{kappa,mu}(z) = e^{-z/2} z^{mu+1/2} 1F1(mu-kappa+1/2; 1+2mu; z),
// principal branch of the power.
cplx whittaker_m(cplx kappa, cplx mu, cplx z);

// W via the M-combination for moderate z, Poincare expansion for large z.
cplx whittaker_w(cplx kappa, cplx mu, double z);

double laguerre(int n, double alpha, double x);

}  // namespace lct::sf
