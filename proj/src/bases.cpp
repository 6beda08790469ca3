#include "lct/bases.hpp"

#include <cmath>

#include "lct/errors.hpp"
#include "lct/specfun.hpp"

namespace lct {

DiscreteLabel::DiscreteLabel(double k_, Sign s) : k(k_), sign(s) {
  if (!(k > 0) || !std::isfinite(k))
    throw DomainError("discrete-series index k must be positive");
}

ContinuousLabel::ContinuousLabel(double eps_, double s_) : eps(eps_), s(s_) {
  if (eps != 0.0 && eps != 0.5)
    throw DomainError("continuous-series parity must be 0 or 1/2");
  if (!(s >= 0) || !std::isfinite(s))
    throw DomainError("continuous-series s must be non-negative");
  if (eps == 0.5 && s == 0.0)
    throw DomainError("spinor continuous series requires s > 0");
}

double ContinuousLabel::g() const {
  return eps == 0.0 ? std::cosh(kPi * s) : std::sinh(kPi * s);
}

namespace bases {

double phi0_discrete(const DiscreteLabel& label, int n, double r) {
  if (n < 0) throw DomainError("mode number must be non-negative");
  if (!(r > 0)) throw DomainError("radial argument must be positive");
  const double k = label.k;
  // norm = sqrt(2 n! / Gamma(2k+n)); the factorial under the root is the
  // Gamma value that makes the mode unit-norm and matches the 1F1 form.
  double log_norm = 0.5 * (std::log(2.0) + std::lgamma(n + 1.0) - std::lgamma(2.0 * k + n));
  return std::exp(log_norm + (2.0 * k - 0.5) * std::log(r) - 0.5 * r * r) *
         sf::laguerre(n, 2.0 * k - 1.0, r * r);
}

cplx phi_plus_discrete(const DiscreteLabel& label, double rho, double r) {
  if (!(rho > 0) || !(r > 0)) throw DomainError("arguments must be positive");
  const double k = label.k;
  return std::exp(kI * kPi * k) * std::sqrt(rho * r) *
         sf::bessel_j(cplx(2.0 * k - 1.0), rho * r);
}

cplx phi1_discrete(const DiscreteLabel& label, double mu, double r) {
  if (!(r > 0)) throw DomainError("radial argument must be positive");
  const double k = label.k;
  const cplx pref =
      std::exp(kI * kPi * 0.5 * (k + mu) + cplx(0, mu) * std::log(2.0) +
               sf::log_gamma(cplx(k, mu)) - sf::log_gamma(cplx(2.0 * k)) -
               cplx(0.5 * std::log(kPi)));
  return pref * std::exp((2.0 * k - 0.5) * std::log(r) + kI * 0.5 * r * r) *
         sf::hyp1f1(cplx(k, -mu), cplx(2.0 * k), cplx(0, -r * r));
}

cplx phi1_discrete_whittaker(const DiscreteLabel& label, double mu, double r) {
  if (!(r > 0)) throw DomainError("radial argument must be positive");
  const double k = label.k;
  const cplx pref =
      std::exp(kI * kPi * 0.5 * (2.0 * k + mu) + cplx(0, mu) * std::log(2.0) +
               sf::log_gamma(cplx(k, mu)) - sf::log_gamma(cplx(2.0 * k)) -
               cplx(0.5 * std::log(kPi)));
  return pref / std::sqrt(r) *
         sf::whittaker_m(cplx(0, mu), cplx(k - 0.5), cplx(0, -r * r));
}

cplx phi2_discrete(double mu, double r) {
  if (!(r > 0)) throw DomainError("radial argument must be positive");
  return std::exp(cplx(-0.5, mu) * std::log(r)) / std::sqrt(kPi);
}

TwoComponent phi0_continuous(const ContinuousLabel& label, double m, double r) {
  if (!(r > 0)) throw DomainError("radial argument must be positive");
  const double frac = m - label.eps;
  if (std::abs(frac - std::round(frac)) > 1e-9)
    throw DomainError("eigenvalue must satisfy m - eps integer");
  const cplx k = label.k();
  const cplx mu = k - 0.5;  // = i s
  // Gamma(k -+ m) Gamma(1-k -+ m) = |Gamma(k -+ m)|^2 > 0, so the square
  // roots are real; the parity sign sits on the sigma = +1 component.
  const double g_up = std::exp(sf::log_gamma(k - m).real());   // |Gamma(k-m)|
  const double g_dn = std::exp(sf::log_gamma(k + m).real());   // |Gamma(k+m)|
  const double parity = (static_cast<long long>(std::llround(frac)) % 2 == 0) ? 1.0 : -1.0;
  const double common = label.g() / (kPi * std::sqrt(r));
  const double z = r * r;
  TwoComponent out;
  out.plus = common * parity * std::sqrt(2.0) * g_up *
             sf::whittaker_w(cplx(m), mu, z);
  out.minus = common * std::sqrt(2.0) * g_dn * sf::whittaker_w(cplx(-m), mu, z);
  return out;
}

TwoComponent phi2_continuous(int tau, double mu, double r) {
  if (tau != 1 && tau != -1) throw DomainError("tau must be +1 or -1");
  if (!(r > 0)) throw DomainError("radial argument must be positive");
  const cplx v = std::exp(cplx(-0.5, mu) * std::log(r)) / std::sqrt(2.0 * kPi);
  return {v, static_cast<double>(tau) * v};
}

}  // namespace bases
}  // namespace lct
