#include "lct/specfun.hpp"

#include <cmath>

#include "lct/errors.hpp"
#include "lct/quadrature.hpp"

namespace lct::sf {

namespace {

constexpr int kMaxTerms = 1000;
constexpr double kTailStop = 1e-16;

bool near_nonpositive_integer(cplx z, double tol = 1e-12) {
  if (std::abs(z.imag()) > tol) return false;
  double r = z.real();
  return r < 0.5 && std::abs(r - std::round(r)) < tol;
}

// n >= 0 such that z ~ -n, or -1.
int nonpositive_integer_of(cplx z, double tol = 1e-9) {
  if (std::abs(z.imag()) > tol) return -1;
  double r = std::round(z.real());
  if (r > 0.5 || std::abs(z.real() - r) > tol) return -1;
  return static_cast<int>(-r);
}

// log(sin(pi z)) stable for large |Im z|.
cplx log_sin_pi(cplx z) {
  const cplx ipz = kI * kPi * z;
  if (z.imag() > 0) {
    // sin(pi z) = -e^{i pi z} (1 - e^{-2 i pi z}) / (2i) ... use decaying exponential
    return -ipz + std::log(cplx(1.0) - std::exp(2.0 * ipz)) - std::log(cplx(0.0, 2.0));
  }
  return ipz + std::log(cplx(1.0) - std::exp(-2.0 * ipz)) - std::log(cplx(0.0, -2.0));
}

// Lanczos, g = 7, 9 terms.
cplx log_gamma_core(cplx z) {
  static const double coef[9] = {
      0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
      771.32342877765313,   -176.61502916214059,   12.507343278686905,
      -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};
  z -= 1.0;
  cplx x = coef[0];
  for (int i = 1; i < 9; ++i) x += coef[i] / (z + static_cast<double>(i));
  const cplx t = z + 7.5;
  return 0.5 * std::log(2.0 * kPi) + (z + 0.5) * std::log(t) - t + std::log(x);
}

}  // namespace

cplx log_gamma(cplx z) {
  if (near_nonpositive_integer(z))
    throw PoleError("log_gamma pole at non-positive integer");
  if (z.real() >= 0.5) return log_gamma_core(z);
  // reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z)
  return std::log(cplx(kPi)) - log_sin_pi(z) - log_gamma_core(1.0 - z);
}

cplx gamma_fn(cplx z) { return std::exp(log_gamma(z)); }

namespace {

cplx hyp1f1_series(cplx a, cplx b, cplx z) {
  cplx term = 1.0, sum = 1.0, comp = 0.0;
  for (int n = 0; n < kMaxTerms; ++n) {
    term *= (a + static_cast<double>(n)) / (b + static_cast<double>(n)) * z /
            (n + 1.0);
    // Kahan update
    const cplx y = term - comp;
    const cplx t = sum + y;
    comp = (t - sum) - y;
    sum = t;
    if (std::abs(term) < kTailStop * (std::abs(sum) + 1e-300) && n > 3) return sum;
  }
  throw NonConvergence("1F1 series did not converge within the term cap");
}

// Poincare-type expansion Sum (p)_s (q)_s / (s! w^s), truncated at the
// smallest term.
cplx asymptotic_2f0(cplx p, cplx q, cplx w, int cap = 40) {
  cplx term = 1.0, sum = 1.0;
  double best = 1.0;
  for (int s = 0; s < cap; ++s) {
    term *= (p + static_cast<double>(s)) * (q + static_cast<double>(s)) /
            ((s + 1.0) * w);
    if (std::abs(term) > best) break;
    best = std::abs(term);
    sum += term;
    if (std::abs(term) < 1e-17 * std::abs(sum)) break;
  }
  return sum;
}

cplx hyp1f1_asymptotic(cplx a, cplx b, cplx z) {
  // 1F1 ~ G(b)/G(a) e^z z^{a-b} 2F0(b-a, 1-a; 1/z)
  //     + G(b)/G(b-a) (z e^{-/+ i pi})^{-a} 2F0(a, a-b+1; -1/z)
  const double sgn = (z.imag() > 0 || (z.imag() == 0 && z.real() < 0)) ? 1.0 : -1.0;
  cplx t1 = 0.0, t2 = 0.0;
  if (!near_nonpositive_integer(a)) {
    t1 = std::exp(z + (a - b) * std::log(z) + log_gamma(b) - log_gamma(a)) *
         asymptotic_2f0(b - a, 1.0 - a, z);
  }
  if (!near_nonpositive_integer(b - a)) {
    t2 = std::exp(-a * std::log(z) + log_gamma(b) - log_gamma(b - a)) *
         std::exp(kI * kPi * a * sgn) * asymptotic_2f0(a, a - b + 1.0, -z);
  }
  return t1 + t2;
}

}  // namespace

cplx hyp1f1(cplx a, cplx b, cplx z) {
  const int na = nonpositive_integer_of(a);
  if (near_nonpositive_integer(b)) {
    const int nb = nonpositive_integer_of(b);
    if (na < 0 || na > nb)
      throw PoleError("1F1 lower parameter at non-positive integer");
  }
  if (na >= 0) {
    // terminating polynomial
    cplx term = 1.0, sum = 1.0;
    for (int n = 0; n < na; ++n) {
      term *= (a + static_cast<double>(n)) / (b + static_cast<double>(n)) * z / (n + 1.0);
      sum += term;
    }
    return sum;
  }
  if (std::abs(z) <= 50.0) return hyp1f1_series(a, b, z);
  return hyp1f1_asymptotic(a, b, z);
}

namespace {

cplx hyp2f1_series(cplx a, cplx b, cplx c, cplx z, int cap = 6000) {
  cplx term = 1.0, sum = 1.0, comp = 0.0;
  for (int n = 0; n < cap; ++n) {
    term *= (a + static_cast<double>(n)) * (b + static_cast<double>(n)) /
            ((c + static_cast<double>(n)) * (n + 1.0)) * z;
    const cplx y = term - comp;
    const cplx t = sum + y;
    comp = (t - sum) - y;
    sum = t;
    if (std::abs(term) < kTailStop * (std::abs(sum) + 1e-300) && n > 3) return sum;
  }
  throw NonConvergence("2F1 series did not converge within the term cap");
}

cplx hyp2f1_terminating(int n, cplx b, cplx c, cplx z) {
  cplx term = 1.0, sum = 1.0;
  for (int j = 0; j < n; ++j) {
    const cplx cj = c + static_cast<double>(j);
    if (std::abs(cj) < 1e-14)
      throw PoleError("2F1 lower-parameter Pochhammer vanished before termination");
    term *= (static_cast<double>(j - n)) * (b + static_cast<double>(j)) /
            (cj * (j + 1.0)) * z;
    sum += term;
  }
  return sum;
}

}  // namespace

cplx hyp2f1(cplx a, cplx b, cplx c, cplx z) {
  const int na = nonpositive_integer_of(a);
  const int nb = nonpositive_integer_of(b);
  const int nc = nonpositive_integer_of(c);
  if (na >= 0 && (nb < 0 || na <= nb) && (nc < 0 || na < nc))
    return hyp2f1_terminating(na, b, c, z);
  if (nb >= 0 && (nc < 0 || nb < nc)) return hyp2f1_terminating(nb, a, c, z);
  if (nc >= 0) throw PoleError("2F1 lower parameter at non-positive integer");

  if (std::abs(z) < 1e-14) return 1.0;
  if (std::abs(z.imag()) < 1e-14 && z.real() >= 1.0 - 1e-12)
    throw BranchCutError("2F1 argument on the cut [1, inf)");

  if (std::abs(z) <= 0.75) return hyp2f1_series(a, b, c, z);
  const cplx w = z / (z - 1.0);
  if (std::abs(w) < std::abs(z)) {
    // Pfaff: (1-z)^{-a} 2F1(a, c-b; c; z/(z-1))
    return std::pow(1.0 - z, -a) * hyp2f1_series(a, c - b, c, w);
  }
  if (std::abs(z) < 1.0) return hyp2f1_series(a, b, c, z, kMaxTerms);
  throw NonConvergence("2F1 argument outside the supported region");
}

// ---------------------------------------------------------------------------
// Bessel family
// ---------------------------------------------------------------------------

namespace {

constexpr double kBesselSeriesMax = 20.0;

cplx bessel_j_series(cplx nu, double x) {
  cplx t0 = std::exp(nu * std::log(0.5 * x) - log_gamma(nu + 1.0));
  cplx term = t0, sum = t0;
  const double q = -0.25 * x * x;
  for (int j = 0; j < 200; ++j) {
    term *= q / ((j + 1.0) * (nu + static_cast<double>(j + 1)));
    sum += term;
    if (std::abs(term) < 1e-17 * (std::abs(sum) + 1e-300) && j > 2) break;
  }
  return sum;
}

struct HankelPair {
  cplx h1, h2;
};

// Large-argument expansion, order nu, x > kBesselSeriesMax.
HankelPair hankel_asymptotic(cplx nu, double x) {
  const cplx mu4 = 4.0 * nu * nu;
  cplx termP = 1.0;
  cplx sp = 1.0, sm = 1.0;  // sums of (+i)^k and (-i)^k coefficients
  cplx ik = 1.0;
  double best = 1.0;
  for (int j = 1; j < 40; ++j) {
    const double o = 2.0 * j - 1.0;
    termP *= (mu4 - o * o) / (8.0 * j * x);
    if (std::abs(termP) > best) break;
    best = std::abs(termP);
    ik *= kI;
    sp += ik * termP;
    sm += std::conj(ik) * termP;
    if (std::abs(termP) < 1e-17) break;
  }
  const cplx chi = x - (0.5 * nu + 0.25) * kPi;
  const cplx amp = std::sqrt(2.0 / (kPi * x));
  return {amp * std::exp(kI * chi) * sp, amp * std::exp(-kI * chi) * sm};
}

double bessel_j0_series(double x) {
  double term = 1.0, sum = 1.0;
  const double q = -0.25 * x * x;
  for (int j = 0; j < 200; ++j) {
    term *= q / ((j + 1.0) * (j + 1.0));
    sum += term;
    if (std::abs(term) < 1e-17 * std::abs(sum)) break;
  }
  return sum;
}

double bessel_y0_series(double x) {
  // (2/pi)(log(x/2)+gamma) J0 + (2/pi) sum (-1)^{j+1} H_j (x^2/4)^j / (j!)^2
  constexpr double kEulerGamma = 0.57721566490153286060651209;
  double term = 1.0, sum = 0.0, hj = 0.0;
  const double q = 0.25 * x * x;
  for (int j = 1; j < 200; ++j) {
    term *= q / (static_cast<double>(j) * j);
    hj += 1.0 / j;
    const double contrib = ((j % 2) ? 1.0 : -1.0) * hj * term;
    sum += contrib;
    if (std::abs(contrib) < 1e-17 * (std::abs(sum) + 1.0) && j > 3) break;
  }
  return 2.0 / kPi * ((std::log(0.5 * x) + kEulerGamma) * bessel_j0_series(x) + sum);
}

// H1, H2 of order 2is at x > 0.
HankelPair hankel_base(double s, double x) {
  const cplx nu = cplx(0, 2.0 * s);
  if (x > kBesselSeriesMax) return hankel_asymptotic(nu, x);
  if (std::abs(s) < 1e-6) {
    const double j0 = bessel_j0_series(x);
    const double y0 = bessel_y0_series(x);
    return {cplx(j0, y0), cplx(j0, -y0)};
  }
  const cplx jp = bessel_j_series(nu, x);
  const cplx jm = bessel_j_series(-nu, x);
  const cplx sin_pinu = cplx(0, std::sinh(2.0 * kPi * s));  // sin(2 pi i s)
  const cplx h1 = (jm - std::exp(-kI * kPi * nu) * jp) / (kI * sin_pinu);
  const cplx h2 = (std::exp(kI * kPi * nu) * jp - jm) / (kI * sin_pinu);
  return {h1, h2};
}

}  // namespace

cplx bessel_j(cplx nu, double x) {
  if (!(x > 0)) throw DomainError("bessel_j requires x > 0");
  if (x <= kBesselSeriesMax) return bessel_j_series(nu, x);
  const HankelPair h = hankel_asymptotic(nu, x);
  return 0.5 * (h.h1 + h.h2);
}

double bessel_y0(double x) {
  if (!(x > 0)) throw DomainError("bessel_y0 requires x > 0");
  if (x <= kBesselSeriesMax) return bessel_y0_series(x);
  return hankel_asymptotic(cplx(0.0), x).h1.imag();
}

cplx hankel_imaginary_order(int kind, double s, double zeta, CutSide side) {
  if (kind != 1 && kind != 2) throw DomainError("hankel kind must be 1 or 2");
  if (zeta == 0.0) throw DomainError("hankel argument must be nonzero");
  const double x = std::abs(zeta);
  const HankelPair base = hankel_base(s, x);
  if (zeta > 0) return kind == 1 ? base.h1 : base.h2;
  // continuation onto the negative axis, nu = 2is:
  //   e^{+i pi nu} = e^{-2 pi s},  e^{-i pi nu} = e^{+2 pi s},
  //   cos(pi nu)   = cosh(2 pi s)
  const double em = std::exp(-2.0 * kPi * s);
  const double ep = std::exp(2.0 * kPi * s);
  const double cs = std::cosh(2.0 * kPi * s);
  if (side == CutSide::Above) {
    if (kind == 1) return -ep * base.h2;                 // H1(x e^{i pi})
    return em * base.h1 + 2.0 * cs * base.h2;            // H2(x e^{i pi})
  }
  if (kind == 1) return 2.0 * cs * base.h1 + ep * base.h2;  // H1(x e^{-i pi})
  return -em * base.h1;                                     // H2(x e^{-i pi})
}

double macdonald_imaginary_order(double s, double x) {
  if (!(x > 0)) throw DomainError("macdonald argument must be positive");
  if (x > 700.0) return 0.0;  // underflow of exp(-x cosh t)
  // integrand support: exp(-x cosh t) negligible past x cosh t ~ 745
  const double tmax = std::acosh(std::max(745.0 / x, 1.0 + 1e-12)) + 1.0;
  const int panels = std::max(12, static_cast<int>(std::ceil(tmax * (2.0 + 2.0 * std::abs(s)))));
  const Rule rule = composite_gl(0.0, tmax, panels, 16);
  double sum = 0.0, comp = 0.0;
  for (size_t i = 0; i < rule.nodes.size(); ++i) {
    const double t = rule.nodes[i];
    const double f = std::exp(-x * std::cosh(t)) * std::cos(2.0 * s * t);
    const double y = rule.weights[i] * f - comp;
    const double tt = sum + y;
    comp = (tt - sum) - y;
    sum = tt;
  }
  return sum;
}

cplx whittaker_m(cplx kappa, cplx mu, cplx z) {
  const cplx two_mu = 2.0 * mu;
  if (nonpositive_integer_of(two_mu + 1.0) >= 0)
    throw PoleError("whittaker_m parameter pole: 1 + 2 mu non-positive integer");
  return std::exp(-0.5 * z + (mu + 0.5) * std::log(z)) *
         hyp1f1(mu - kappa + 0.5, 1.0 + two_mu, z);
}

namespace {
constexpr double kWhittakerAsym = 20.0;
}

cplx whittaker_w(cplx kappa, cplx mu, double z) {
  if (!(z > 0)) throw DomainError("whittaker_w requires z > 0");
  if (std::abs(mu.imag()) < 1e-6) {
    const double half = std::abs(2.0 * mu.real() - std::round(2.0 * mu.real()));
    if (half < 1e-6)
      throw DegenerateMu("whittaker_w combination ill-conditioned: 2 mu near an integer");
  }
  if (z > kWhittakerAsym) {
    return std::exp(-0.5 * z + kappa * std::log(cplx(z))) *
           asymptotic_2f0(0.5 + mu - kappa, 0.5 - mu - kappa, -cplx(z));
  }
  const cplx t1 = std::exp(log_gamma(-2.0 * mu) - log_gamma(0.5 - mu - kappa)) *
                  whittaker_m(kappa, mu, z);
  const cplx t2 = std::exp(log_gamma(2.0 * mu) - log_gamma(0.5 + mu - kappa)) *
                  whittaker_m(kappa, -mu, z);
  return t1 + t2;
}

double laguerre(int n, double alpha, double x) {
  if (n < 0) throw DomainError("laguerre degree must be non-negative");
  if (n == 0) return 1.0;
  double lm1 = 1.0, l = 1.0 + alpha - x;
  for (int j = 1; j < n; ++j) {
    const double lp = ((2.0 * j + 1.0 + alpha - x) * l - (j + alpha) * lm1) / (j + 1.0);
    lm1 = l;
    l = lp;
  }
  return l;
}

}  // namespace lct::sf
