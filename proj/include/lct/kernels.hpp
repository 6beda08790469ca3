#pragma once
#include <variant>

#include "lct/bases.hpp"
#include "lct/symplectic.hpp"
#include "lct/types.hpp"

namespace lct::kern {

// b -> 0 kernels collapse onto a line: value = amplitude * delta(x' - support).
struct DeltaLine {
  cplx amplitude;
  double support;
};

using KernelValue = std::variant<cplx, DeltaLine>;

// ---- line kernel -----------------------------------------------------------

// (2 pi |b|)^{-1/2} e^{-i pi sign(b)/4} exp(i (d x^2 - 2 x x' + a x'^2)/(2b)).
cplx classic_kernel(const GroupElement& m, double x, double xp, double eps_b = kEpsB);
DeltaLine classic_kernel_b0(const GroupElement& m, double x, double eps_b = kEpsB);

// ---- discrete series -------------------------------------------------------

// Radial kernel (e^{-i pi k}/b) sqrt(rho rho') e^{i(d rho^2 + a rho'^2)/2b}
// J_{2k-1}(rho rho'/b); for b < 0 the Bessel order is continued above the
// cut, J_nu(-x) = e^{i pi nu} J_nu(x).  D^- labels delegate to the
// reflection-conjugated matrix.
cplx radial_kernel(const DiscreteLabel& label, const GroupElement& m, double rho,
                   double rhop, double eps_b = kEpsB);
// Equivalent confluent-hypergeometric form, kept as an independent route.
cplx radial_kernel_1f1(const DiscreteLabel& label, const GroupElement& m, double rho,
                       double rhop, double eps_b = kEpsB);
DeltaLine radial_kernel_b0(const DiscreteLabel& label, const GroupElement& m,
                           double rho, double eps_b = kEpsB);

// Free-generator eigenbasis kernel: the radial kernel at F M F^{-1}.
cplx jplus_kernel(const DiscreteLabel& label, const GroupElement& m, double rho,
                  double rhop, double eps_b = kEpsB);

// Summation-kernel element in the compact eigenbasis, rows m = k + n.
// Throws EllipticDegenerate on the compact orbit through the identity,
// where the diagonal phase branch elliptic_diagonal_element applies.
cplx dk_matrix_element(const DiscreteLabel& label, const GroupElement& m,
                       double mrow, double mcol);
cplx elliptic_diagonal_element(const GroupElement& m, double eigenvalue);
bool is_elliptic_degenerate(const GroupElement& m, double tol = 1e-8);

// Closed-form image of the radial oscillator mode (eigenvalue k + n).
cplx transformed_phi0(const DiscreteLabel& label, const GroupElement& m, int n,
                      double r);

// Scaling-eigenbasis (Mellin) kernel element, and the closed-form image of
// the Mellin wave that it integrates against.
cplx dk_hyperbolic_element(const DiscreteLabel& label, const GroupElement& m,
                           double mu, double mup);
cplx transformed_phi2(const DiscreteLabel& label, const GroupElement& m,
                      double mu, double r);

// Repulsive-oscillator eigenbasis element via the Cayley conjugation.
cplx reposc_element(const DiscreteLabel& label, const GroupElement& m, double mu,
                    double mup);

// ---- continuous series -----------------------------------------------------

// H-block of the 2x2 radial kernel, argument zeta = -r r'/b.
cplx h_function(const ContinuousLabel& label, int sig, int sigp, double zeta);

// 2x2 radial kernel element G * H.
cplx cont_radial_kernel(const ContinuousLabel& label, const GroupElement& m,
                        int sig, double r, int sigp, double rp,
                        double eps_b = kEpsB);
// Same value through the confluent-hypergeometric bracket, with rho = sig*r.
cplx cont_radial_kernel_rho(const ContinuousLabel& label, const GroupElement& m,
                            double rho, double rhop, double eps_b = kEpsB);
DeltaLine cont_radial_b0(const ContinuousLabel& label, const GroupElement& m,
                         int sig, double r, double eps_b = kEpsB);

// Compact-eigenbasis element of the continuous series.  The Gamma-ratio
// prefactor of the printed two-case form is normalised so the element
// matches the quadrature inner product against phi0_continuous.
cplx cont_elliptic_element(const ContinuousLabel& label, const GroupElement& m,
                           double mrow, double mcol);

TwoComponent transformed_phi0_continuous(const ContinuousLabel& label,
                                         const GroupElement& m, double mrow,
                                         double r);

// Scaling-eigenbasis element of the continuous series (T_k bracket with the
// alpha/beta octant phases).
cplx cont_hyperbolic_element(const ContinuousLabel& label, const GroupElement& m,
                             int tau, double mu, int taup, double mup);

}  // namespace lct::kern
