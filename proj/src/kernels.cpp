#include "lct/kernels.hpp"

#include <cmath>

#include "lct/errors.hpp"
#include "lct/specfun.hpp"

namespace lct::kern {

namespace {

cplx ipow(cplx z, int n) {
  if (n < 0) return 1.0 / ipow(z, -n);
  cplx r = 1.0;
  while (n-- > 0) r *= z;
  return r;
}

// J_nu continued above the cut: J_nu(-x) = e^{i pi nu} J_nu(x).
cplx bessel_j_signed(cplx nu, double w) {
  if (w > 0) return sf::bessel_j(nu, w);
  return std::exp(kI * kPi * nu) * sf::bessel_j(nu, -w);
}

GroupElement effective(const DiscreteLabel& label, const GroupElement& m) {
  return label.sign == DiscreteLabel::Sign::minus ? reflection_conjugate(m) : m;
}

int require_mode(const DiscreteLabel& label, double mval, const char* what) {
  const double nf = mval - label.k;
  const long long n = std::llround(nf);
  if (n < 0 || std::abs(nf - static_cast<double>(n)) > 1e-9)
    throw DomainError(std::string(what) + ": eigenvalue must be k + n, n = 0, 1, ...");
  return static_cast<int>(n);
}

double quadrance(const GroupElement& m) {
  return m.a * m.a + m.b * m.b + m.c * m.c + m.d * m.d;
}

}  // namespace

cplx classic_kernel(const GroupElement& m, double x, double xp, double eps_b) {
  if (std::abs(m.b) < eps_b)
    throw DegenerateB("classic kernel degenerate at b ~ 0; use classic_kernel_b0");
  const double phase = (m.d * x * x - 2.0 * x * xp + m.a * xp * xp) / (2.0 * m.b);
  const double sgn = m.b > 0 ? 1.0 : -1.0;
  return 1.0 / std::sqrt(2.0 * kPi * std::abs(m.b)) *
         std::exp(cplx(0, phase - 0.25 * kPi * sgn));
}

DeltaLine classic_kernel_b0(const GroupElement& m, double x, double eps_b) {
  if (std::abs(m.b) >= eps_b)
    throw DomainError("classic_kernel_b0 requires b ~ 0");
  if (std::abs(m.a) < eps_b)
    throw DegenerateA("a ~ 0 with b ~ 0 cannot occur for a unimodular element");
  const cplx amp = std::exp(cplx(0, m.c * x * x / (2.0 * m.a))) /
                   std::sqrt(cplx(m.a));
  return {amp, x / m.a};
}

cplx radial_kernel(const DiscreteLabel& label, const GroupElement& m_in, double rho,
                   double rhop, double eps_b) {
  if (!(rho > 0) || !(rhop > 0)) throw DomainError("radial arguments must be positive");
  const GroupElement m = effective(label, m_in);
  if (std::abs(m.b) < eps_b)
    throw DegenerateB("radial kernel degenerate at b ~ 0; use radial_kernel_b0");
  const double k = label.k;
  const double phase = (m.d * rho * rho + m.a * rhop * rhop) / (2.0 * m.b);
  return std::exp(cplx(0, -kPi * k)) / m.b * std::sqrt(rho * rhop) *
         std::exp(cplx(0, phase)) * bessel_j_signed(cplx(2.0 * k - 1.0), rho * rhop / m.b);
}

cplx radial_kernel_1f1(const DiscreteLabel& label, const GroupElement& m_in,
                       double rho, double rhop, double eps_b) {
  if (!(rho > 0) || !(rhop > 0)) throw DomainError("radial arguments must be positive");
  const GroupElement m = effective(label, m_in);
  if (std::abs(m.b) < eps_b)
    throw DegenerateB("radial kernel degenerate at b ~ 0; use radial_kernel_b0");
  const double k = label.k;
  const double phase =
      (m.d * rho * rho - 2.0 * rho * rhop + m.a * rhop * rhop) / (2.0 * m.b);
  const cplx pref = 2.0 * std::pow(rho * rhop, 2.0 * k - 0.5) /
                    (std::pow(cplx(0.0, 2.0 * m.b), 2.0 * k) * sf::gamma_fn(cplx(2.0 * k)));
  return pref * std::exp(cplx(0, phase)) *
         sf::hyp1f1(cplx(2.0 * k - 0.5), cplx(4.0 * k - 1.0),
                    cplx(0, 2.0 * rho * rhop / m.b));
}

DeltaLine radial_kernel_b0(const DiscreteLabel& label, const GroupElement& m_in,
                           double rho, double eps_b) {
  const GroupElement m = effective(label, m_in);
  if (std::abs(m.b) >= eps_b) throw DomainError("radial_kernel_b0 requires b ~ 0");
  if (std::abs(m.a) < eps_b)
    throw DegenerateA("a ~ 0 with b ~ 0 cannot occur for a unimodular element");
  // 1/sqrt(a) read as (sign a)^{2k} / sqrt(|a|) on the half-line.
  const cplx sgn_pow =
      m.a > 0 ? cplx(1.0) : std::exp(cplx(0, 2.0 * kPi * label.k));
  const cplx amp = sgn_pow / std::sqrt(std::abs(m.a)) *
                   std::exp(cplx(0, m.c * rho * rho / (2.0 * m.a)));
  return {amp, rho / std::abs(m.a)};
}

cplx jplus_kernel(const DiscreteLabel& label, const GroupElement& m, double rho,
                  double rhop, double eps_b) {
  // F M F^{-1} = ((d,-c),(-b,a)); its b entry is -c.
  const GroupElement conj{m.d, -m.c, -m.b, m.a};
  return radial_kernel(label, conj, rho, rhop, eps_b);
}

bool is_elliptic_degenerate(const GroupElement& m, double tol) {
  return std::abs(quadrance(m) - 2.0) < tol;
}

cplx elliptic_diagonal_element(const GroupElement& m, double eigenvalue) {
  // Phase convention fixed by the ((a-ib)/(a+ib))^m factor of the action
  // formula, evaluated literally on the principal branch.
  const cplx ratio = cplx(m.a, -m.b) / cplx(m.a, m.b);
  return std::pow(ratio, eigenvalue);
}

cplx dk_matrix_element(const DiscreteLabel& label, const GroupElement& m_in,
                       double mrow, double mcol) {
  const int n = require_mode(label, mrow, "dk_matrix_element row");
  const int np = require_mode(label, mcol, "dk_matrix_element col");
  const GroupElement m = effective(label, m_in);
  if (is_elliptic_degenerate(m))
    throw EllipticDegenerate(
        "matrix on the compact orbit of the identity; use elliptic_diagonal_element");
  const double k = label.k;
  const double mr = k + n, mc = k + np;
  const double a = m.a, b = m.b, c = m.c, d = m.d;
  const double Q = quadrance(m);

  const double log_pref =
      2.0 * k * std::log(2.0) + std::lgamma(mr + mc) -
      0.5 * (std::lgamma(k + mr) + std::lgamma(1.0 - k + mr) +
             std::lgamma(k + mc) + std::lgamma(1.0 - k + mc));
  const cplx p1 = ipow(cplx(d - a, -(b + c)), n);
  const cplx p2 = ipow(cplx(a - d, -(b + c)), np);
  const cplx p3 = std::pow(cplx(a + d, b - c), -(mr + mc));
  const cplx f = sf::hyp2f1(cplx(static_cast<double>(-n)), cplx(static_cast<double>(-np)),
                            cplx(1.0 - mr - mc), cplx((Q + 2.0) / (Q - 2.0)));
  return std::exp(log_pref) * p1 * p2 * p3 * f;
}

cplx transformed_phi0(const DiscreteLabel& label, const GroupElement& m_in, int n,
                      double r) {
  const GroupElement m = effective(label, m_in);
  const double k = label.k;
  const double a = m.a, b = m.b, c = m.c, d = m.d;
  const double q = a * a + b * b;
  const cplx phase = std::pow(cplx(a, -b) / cplx(a, b), k + n);
  const cplx gauss = std::exp(cplx(0, r * r * (a * c + b * d) / (2.0 * q)));
  const DiscreteLabel plus{label.k};
  return phase * gauss / std::pow(q, 0.25) *
         bases::phi0_discrete(plus, n, r / std::sqrt(q));
}

namespace {

// Scaling-basis closed forms carry the Mellin label with a doubled
// frequency relative to the r^{-1/2 + i mu} wave; callers pass the wave's
// mu and these helpers halve it.
cplx dk_hyperbolic_half(double k, const GroupElement& m, double muh, double muph) {
  const double a = m.a, b = m.b, d = m.d;
  const cplx pref = std::exp(cplx(0, -kPi * k)) * std::pow(2.0, cplx(0, muph - muh)) *
                    std::exp(sf::log_gamma(cplx(k, -muh)) + sf::log_gamma(cplx(k, muph)) -
                             sf::log_gamma(cplx(2.0 * k))) /
                    (2.0 * kPi);
  const cplx powers = std::pow(cplx(b), -2.0 * k) *
                      std::pow(cplx(0, -d / b), cplx(-k, muh)) *
                      std::pow(cplx(0, -a / b), cplx(-k, -muph));
  const cplx f = sf::hyp2f1(cplx(k, -muh), cplx(k, muph), cplx(2.0 * k),
                            cplx(1.0 / (a * d)));
  return pref * powers * f;
}

void check_hyperbolic_domain(const GroupElement& m, double eps_b) {
  if (std::abs(m.b) < eps_b) throw DegenerateB("scaling-basis element requires b != 0");
  if (std::abs(m.a) < 1e-10 || std::abs(m.d) < 1e-10)
    throw DegenerateA("scaling-basis element requires a, d != 0");
  const double ad = m.a * m.d;
  if (ad > 0 && ad <= 1.0 + 1e-8)
    throw BranchCutError("1/(ad) within tolerance of the cut [1, inf)");
}

}  // namespace

cplx dk_hyperbolic_element(const DiscreteLabel& label, const GroupElement& m_in,
                           double mu, double mup) {
  const GroupElement m = effective(label, m_in);
  check_hyperbolic_domain(m, kEpsB);
  return dk_hyperbolic_half(label.k, m, 0.5 * mu, 0.5 * mup);
}

cplx transformed_phi2(const DiscreteLabel& label, const GroupElement& m_in,
                      double mu, double r) {
  const GroupElement m = effective(label, m_in);
  if (std::abs(m.b) < kEpsB) throw DegenerateB("transformed_phi2 requires b != 0");
  if (std::abs(m.a) < 1e-10) throw DegenerateA("transformed_phi2 requires a != 0");
  const double k = label.k;
  const double muh = 0.5 * mu;
  const double a = m.a, b = m.b, d = m.d;
  const cplx pref = std::exp(cplx(0, -kPi * k)) /
                    (std::pow(2.0, cplx(k, -muh)) * std::sqrt(kPi)) *
                    std::exp(sf::log_gamma(cplx(k, muh)) - sf::log_gamma(cplx(2.0 * k)));
  const cplx body = std::exp((2.0 * k - 0.5) * std::log(r) + cplx(0, d * r * r / (2.0 * b))) /
                    (std::pow(cplx(b), 2.0 * k) * std::pow(cplx(0, -a / b), cplx(k, muh)));
  return pref * body *
         sf::hyp1f1(cplx(k, muh), cplx(2.0 * k), cplx(0, -r * r / (2.0 * a * b)));
}

cplx reposc_element(const DiscreteLabel& label, const GroupElement& m_in, double mu,
                    double mup) {
  GroupElement m = m_in;
  double mu_eff = mu, mup_eff = mup;
  if (label.sign == DiscreteLabel::Sign::minus) {
    // the series automorphism flips the repulsive generator's spectrum
    m = reflection_conjugate(m);
    mu_eff = -mu;
    mup_eff = -mup;
  }
  const GroupElement w = cayley_conjugate_reposc(m);
  check_hyperbolic_domain(w, kEpsB);
  return dk_hyperbolic_half(label.k, w, 0.5 * mu_eff, 0.5 * mup_eff);
}

// ---------------------------------------------------------------------------
// continuous series
// ---------------------------------------------------------------------------

cplx h_function(const ContinuousLabel& label, int sig, int sigp, double zeta) {
  if ((sig != 1 && sig != -1) || (sigp != 1 && sigp != -1))
    throw DomainError("component signs must be +1 or -1");
  if (zeta == 0.0) throw DomainError("H-function argument must be nonzero");
  const double s = label.s;
  const double h = label.h();
  if (sig == sigp) {
    cplx v = kI * kPi *
             (std::exp(-kPi * s) *
                  sf::hankel_imaginary_order(1, s, zeta, sf::CutSide::Above) -
              h * std::exp(kPi * s) *
                  sf::hankel_imaginary_order(2, s, zeta, sf::CutSide::Below));
    if (sig == -1) v *= h;
    return v;
  }
  double v = 4.0 * (zeta > 0 ? -1.0 : 1.0) * label.g() *
             sf::macdonald_imaginary_order(s, std::abs(zeta));
  if (sig == -1) v *= h;
  return v;
}

cplx cont_radial_kernel(const ContinuousLabel& label, const GroupElement& m,
                        int sig, double r, int sigp, double rp, double eps_b) {
  if (!(r > 0) || !(rp > 0)) throw DomainError("radial arguments must be positive");
  if (std::abs(m.b) < eps_b)
    throw DegenerateB("continuous radial kernel degenerate at b ~ 0; use cont_radial_b0");
  const double g_factor =
      std::sqrt(r * rp) / (2.0 * kPi * std::abs(m.b));
  const cplx phase =
      std::exp(cplx(0, (m.d * sig * r * r + m.a * sigp * rp * rp) / (2.0 * m.b)));
  return g_factor * phase * h_function(label, sig, sigp, -r * rp / m.b);
}

cplx cont_radial_kernel_rho(const ContinuousLabel& label, const GroupElement& m,
                            double rho, double rhop, double eps_b) {
  if (rho == 0.0 || rhop == 0.0) throw DomainError("rho arguments must be nonzero");
  if (std::abs(m.b) < eps_b) throw DegenerateB("rho-form kernel requires b != 0");
  if (label.s < 1e-6)
    throw PoleError("rho-form bracket has a Gamma pole at s = 0; use the Hankel form");
  const int sig = rho > 0 ? 1 : -1;
  const int sigp = rhop > 0 ? 1 : -1;
  const double r = std::abs(rho), rp = std::abs(rhop);
  const double h = label.h();
  const cplx k = label.k();
  const double x = r * rp / std::abs(m.b);
  const double zeta = -r * rp / m.b;

  const cplx common = label.g() / (kPi * std::abs(m.b)) * std::sqrt(r * rp) *
                      std::exp(cplx(0, (m.d * sig * r * r + m.a * sigp * rp * rp) /
                                          (2.0 * m.b)));
  auto bracket_term = [&](cplx kk, cplx z) {
    return std::exp(sf::log_gamma(1.0 - 2.0 * kk) +
                    (2.0 * kk - 1.0) * std::log(0.5 * x)) *
           sf::hyp1f1(2.0 * kk - 0.5, 4.0 * kk - 1.0, z);
  };
  if (sig == sigp) {
    // e^{i zeta} 1F1(...; -2 i zeta) is Kummer-self-dual, so one expression
    // covers both signs of b.
    const cplx z = cplx(0, -2.0 * zeta);
    double hpow = 1.0;
    if (sig == -1) hpow *= h;
    if (m.b > 0) hpow *= h;
    return common * hpow * std::exp(cplx(0, zeta)) *
           (bracket_term(k, z) + h * bracket_term(1.0 - k, z));
  }
  const cplx z = cplx(2.0 * x);
  double fac = (m.b > 0 ? 1.0 : -1.0);
  if (sig == -1) fac *= h;
  return common * fac * std::exp(-x) *
         (bracket_term(k, z) + bracket_term(1.0 - k, z));
}

DeltaLine cont_radial_b0(const ContinuousLabel& label, const GroupElement& m,
                         int sig, double r, double eps_b) {
  if (std::abs(m.b) >= eps_b) throw DomainError("cont_radial_b0 requires b ~ 0");
  if (std::abs(m.a) < eps_b)
    throw DegenerateA("a ~ 0 with b ~ 0 cannot occur for a unimodular element");
  const cplx two_k = 2.0 * label.k();
  const cplx sgn_pow = m.a > 0 ? cplx(1.0) : std::exp(kI * kPi * two_k);
  const cplx amp = sgn_pow / std::sqrt(std::abs(m.a)) *
                   std::exp(cplx(0, sig * m.c * r * r / (2.0 * m.a)));
  return {amp, r / std::abs(m.a)};
}

cplx cont_elliptic_element(const ContinuousLabel& label, const GroupElement& m,
                           double mrow, double mcol) {
  const double fr = mrow - label.eps, fc = mcol - label.eps;
  if (std::abs(fr - std::round(fr)) > 1e-9 || std::abs(fc - std::round(fc)) > 1e-9)
    throw DomainError("row/col eigenvalues must be eps + integer");
  if (is_elliptic_degenerate(m)) {
    if (std::abs(mrow - mcol) > 1e-9) return 0.0;
    return elliptic_diagonal_element(m, mrow);
  }
  const cplx k = label.k();
  const double a = m.a, b = m.b, c = m.c, d = m.d;
  const double Q = quadrance(m);
  const cplx v = cplx(a + d, b - c);
  const cplx x = cplx(-0.25 * (Q - 2.0));
  const int delta = static_cast<int>(std::llround(mrow - mcol));

  // |Gamma(k+m)| ratio; both Gamma pairs are conjugate so the square root
  // of their product is exp(Re log Gamma).
  auto log_abs_gamma = [&](double mm) { return sf::log_gamma(k + mm).real(); };

  if (delta >= 0) {
    const double lr = log_abs_gamma(mrow) - log_abs_gamma(mcol) -
                      std::lgamma(delta + 1.0) + 2.0 * mcol * std::log(2.0);
    const cplx u = cplx(a - d, b + c);
    const cplx f = sf::hyp2f1(k - mcol, 1.0 - k - mcol, cplx(1.0 + delta), x);
    const double sign = (delta % 2 == 0) ? 1.0 : -1.0;
    return sign * std::exp(lr) * ipow(u, delta) * std::pow(v, -(mrow + mcol)) * f;
  }
  const int dd = -delta;
  const double lr = log_abs_gamma(mcol) - log_abs_gamma(mrow) -
                    std::lgamma(dd + 1.0) + 2.0 * mrow * std::log(2.0);
  const cplx ub = cplx(a - d, -(b + c));
  const cplx f = sf::hyp2f1(k - mrow, 1.0 - k - mrow, cplx(1.0 + dd), x);
  return std::exp(lr) * ipow(ub, dd) * std::pow(v, -(mrow + mcol)) * f;
}

TwoComponent transformed_phi0_continuous(const ContinuousLabel& label,
                                         const GroupElement& m, double mrow,
                                         double r) {
  const double a = m.a, b = m.b, c = m.c, d = m.d;
  const double q = a * a + b * b;
  const cplx phase = std::pow(cplx(a, -b) / cplx(a, b), mrow);
  const TwoComponent base = bases::phi0_continuous(label, mrow, r / std::sqrt(q));
  const double w = r * r * (a * c + b * d) / (2.0 * q);
  const double scale = std::pow(q, -0.25);
  TwoComponent out;
  out.plus = phase * std::exp(cplx(0, w)) * scale * base.plus;
  out.minus = phase * std::exp(cplx(0, -w)) * scale * base.minus;
  return out;
}

cplx cont_hyperbolic_element(const ContinuousLabel& label, const GroupElement& m,
                             int tau, double mu, int taup, double mup) {
  if ((tau != 1 && tau != -1) || (taup != 1 && taup != -1))
    throw DomainError("tau labels must be +1 or -1");
  check_hyperbolic_domain(m, kEpsB);
  if (label.s < 1e-6)
    throw PoleError("scaling-basis bracket has a Gamma pole at s = 0");
  const double a = m.a, b = m.b, d = m.d;
  const double h = label.h();
  const double muh = 0.5 * mu, muph = 0.5 * mup;
  const double sab = (a * b > 0) ? 1.0 : -1.0;
  const double sbd = (b * d > 0) ? 1.0 : -1.0;

  auto T = [&](cplx kk) {
    return std::exp(sf::log_gamma(1.0 - 2.0 * kk) + sf::log_gamma(kk - cplx(0, muh)) +
                    sf::log_gamma(kk + cplx(0, muph)) -
                    (kk - cplx(0, muph)) * std::log(std::abs(a)) -
                    cplx(0, muh - muph) * std::log(std::abs(b)) -
                    (kk - cplx(0, muh)) * std::log(std::abs(d))) *
           sf::hyp2f1(kk - cplx(0, muh), kk + cplx(0, muph), 2.0 * kk,
                      cplx(1.0 / (a * d)));
  };
  auto alpha = [&](cplx kk) {
    return std::exp(kI * 0.5 * kPi *
                    ((kk + cplx(0, muph)) * sab + (kk - cplx(0, muh)) * sbd));
  };
  auto beta = [&](cplx kk) {
    return std::exp(kI * 0.5 * kPi *
                    (-(kk + cplx(0, muph)) * sab + (kk - cplx(0, muh)) * sbd));
  };

  const cplx k = label.k();
  const cplx ak = alpha(k), bk = beta(k);
  const cplx ak1 = alpha(1.0 - k), bk1 = beta(1.0 - k);
  const double tt = tau * taup;
  const cplx bracket =
      (ak + tt * h / ak + taup * bk + tau * h / bk) * T(k) +
      (h * ak1 + tt / ak1 + taup * bk1 + tau * h / bk1) * T(1.0 - k);
  const double sb2e = label.eps == 0.0 ? 1.0 : (b > 0 ? -1.0 : 1.0);  // (-sign b)^{2 eps}
  return sb2e * label.g() / (2.0 * kPi) * bracket;
}

}  // namespace lct::kern
