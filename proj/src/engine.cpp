#include "lct/engine.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <thread>

#include "lct/errors.hpp"
#include "lct/quadrature.hpp"
#include "lct/specfun.hpp"

namespace lct::eng {

int thread_count() {
  static int n = [] {
    int hw = static_cast<int>(std::thread::hardware_concurrency());
    if (hw <= 0) hw = 4;
    if (const char* env = std::getenv("LCT_THREADS")) {
      const int cap = std::atoi(env);
      if (cap > 0) hw = std::min(hw, cap);
    }
    return hw;
  }();
  return n;
}

void parallel_for(int n, const std::function<void(int)>& body) {
  const int workers = std::min(thread_count(), n);
  if (workers <= 1) {
    for (int i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int t = 0; t < workers; ++t) {
    pool.emplace_back([&] {
      for (;;) {
        const int i = next.fetch_add(1);
        if (i >= n) return;
        body(i);
      }
    });
  }
  for (auto& th : pool) th.join();
}

namespace {
Grid make_grid(double lo, double hi, int n, int panel_order, bool radial) {
  const int order = std::max(2, panel_order);
  const int panels = std::max(1, n / order);
  Rule r = composite_gl(lo, hi, panels, order);
  Grid g;
  g.nodes = std::move(r.nodes);
  g.weights = std::move(r.weights);
  g.xmin = lo;
  g.xmax = hi;
  g.radial = radial;
  return g;
}
}  // namespace

Grid radial_grid(int n, double rmax, int panel_order) {
  return make_grid(0.0, rmax, n, panel_order, true);
}

Grid line_grid(int n, double xmax, int panel_order) {
  return make_grid(-xmax, xmax, n, panel_order, false);
}

double norm_of(const SampledFunction& f) {
  double s = 0;
  for (int i = 0; i < f.grid.size(); ++i) s += f.grid.weights[i] * std::norm(f.values[i]);
  return std::sqrt(s);
}

double norm_of(const TwoComponentSampled& f) {
  double s = 0;
  for (int i = 0; i < f.grid.size(); ++i)
    s += f.grid.weights[i] * (std::norm(f.plus[i]) + std::norm(f.minus[i]));
  return std::sqrt(s);
}

CMat classic_transform_matrix(const GroupElement& m, const Grid& g) {
  const int n = g.size();
  CMat u(n, n);
  parallel_for(n, [&](int i) {
    for (int j = 0; j < n; ++j)
      u(i, j) = kern::classic_kernel(m, g.nodes[i], g.nodes[j]) * g.weights[j];
  });
  return u;
}

CMat radial_transform_matrix(const DiscreteLabel& label, const GroupElement& m,
                             const Grid& g) {
  const int n = g.size();
  CMat u(n, n);
  parallel_for(n, [&](int i) {
    for (int j = 0; j < n; ++j)
      u(i, j) = kern::radial_kernel(label, m, g.nodes[i], g.nodes[j]) * g.weights[j];
  });
  return u;
}

CMat cont_radial_transform_matrix(const ContinuousLabel& label, const GroupElement& m,
                                  const Grid& g) {
  const int n = g.size();
  CMat u(2 * n, 2 * n);
  parallel_for(n, [&](int i) {
    for (int j = 0; j < n; ++j) {
      const double r = g.nodes[i], rp = g.nodes[j], w = g.weights[j];
      u(i, j) = kern::cont_radial_kernel(label, m, +1, r, +1, rp) * w;
      u(i, n + j) = kern::cont_radial_kernel(label, m, +1, r, -1, rp) * w;
      u(n + i, j) = kern::cont_radial_kernel(label, m, -1, r, +1, rp) * w;
      u(n + i, n + j) = kern::cont_radial_kernel(label, m, -1, r, -1, rp) * w;
    }
  });
  return u;
}

namespace {

std::vector<cplx> matvec(const CMat& u, const std::vector<cplx>& v) {
  std::vector<cplx> out(u.rows);
  parallel_for(u.rows, [&](int i) {
    cplx sum = 0, comp = 0;
    for (int j = 0; j < u.cols; ++j) {
      const cplx y = u(i, j) * v[j] - comp;
      const cplx t = sum + y;
      comp = (t - sum) - y;
      sum = t;
    }
    out[i] = sum;
  });
  return out;
}

// 4-point Lagrange interpolation on the (sorted) grid; zero outside.
cplx interp(const Grid& g, const std::vector<cplx>& v, double x) {
  const auto& xs = g.nodes;
  const int n = g.size();
  if (x < xs.front() - 1e-12 || x > xs.back() + 1e-12) {
    if (g.radial && x <= 0) return 0.0;
    if (x < g.xmin || x > g.xmax) return 0.0;
  }
  int hi = static_cast<int>(std::lower_bound(xs.begin(), xs.end(), x) - xs.begin());
  int i0 = std::clamp(hi - 2, 0, n - 4);
  cplx sum = 0;
  for (int i = i0; i < i0 + 4; ++i) {
    double l = 1.0;
    for (int j = i0; j < i0 + 4; ++j)
      if (j != i) l *= (x - xs[j]) / (xs[i] - xs[j]);
    sum += l * v[i];
  }
  return sum;
}

void warn_if_coarse(const GroupElement& m, const Grid& g, TransformReport* rep) {
  if (!rep) return;
  const double reach = std::max(std::abs(m.a), std::abs(m.d)) *
                       std::max(std::abs(g.xmin), std::abs(g.xmax));
  if (reach <= 0) return;
  const double wavelength = 2.0 * kPi * std::abs(m.b) / reach;
  const double spacing = (g.xmax - g.xmin) / g.size();
  if (wavelength < 4.0 * spacing) {
    rep->grid_warning = true;
    rep->notes.push_back("kernel oscillation under-resolved on this grid");
  }
}

}  // namespace

SampledFunction apply_classic(const GroupElement& m, const SampledFunction& f,
                              TransformReport* rep) {
  if (std::abs(m.b) < kEpsB) {
    SampledFunction out{f.grid, std::vector<cplx>(f.grid.size())};
    for (int i = 0; i < f.grid.size(); ++i) {
      const kern::DeltaLine d = kern::classic_kernel_b0(m, f.grid.nodes[i]);
      out.values[i] = d.amplitude * interp(f.grid, f.values, d.support);
    }
    return out;
  }
  warn_if_coarse(m, f.grid, rep);
  const CMat u = classic_transform_matrix(m, f.grid);
  return {f.grid, matvec(u, f.values)};
}

SampledFunction apply_radial(const DiscreteLabel& label, const GroupElement& m,
                             const SampledFunction& f, TransformReport* rep) {
  if (std::abs(m.b) < kEpsB) {
    SampledFunction out{f.grid, std::vector<cplx>(f.grid.size())};
    for (int i = 0; i < f.grid.size(); ++i) {
      const kern::DeltaLine d = kern::radial_kernel_b0(label, m, f.grid.nodes[i]);
      out.values[i] = d.amplitude * interp(f.grid, f.values, d.support);
    }
    return out;
  }
  warn_if_coarse(m, f.grid, rep);
  const CMat u = radial_transform_matrix(label, m, f.grid);
  return {f.grid, matvec(u, f.values)};
}

TwoComponentSampled apply_cont_radial(const ContinuousLabel& label,
                                      const GroupElement& m,
                                      const TwoComponentSampled& f,
                                      TransformReport* rep) {
  const int n = f.grid.size();
  if (std::abs(m.b) < kEpsB) {
    TwoComponentSampled out{f.grid, std::vector<cplx>(n), std::vector<cplx>(n)};
    for (int i = 0; i < n; ++i) {
      const kern::DeltaLine dp = kern::cont_radial_b0(label, m, +1, f.grid.nodes[i]);
      const kern::DeltaLine dm = kern::cont_radial_b0(label, m, -1, f.grid.nodes[i]);
      out.plus[i] = dp.amplitude * interp(f.grid, f.plus, dp.support);
      out.minus[i] = dm.amplitude * interp(f.grid, f.minus, dm.support);
    }
    return out;
  }
  warn_if_coarse(m, f.grid, rep);
  const CMat u = cont_radial_transform_matrix(label, m, f.grid);
  std::vector<cplx> v(2 * n);
  std::copy(f.plus.begin(), f.plus.end(), v.begin());
  std::copy(f.minus.begin(), f.minus.end(), v.begin() + n);
  const std::vector<cplx> w = matvec(u, v);
  TwoComponentSampled out{f.grid, std::vector<cplx>(n), std::vector<cplx>(n)};
  std::copy(w.begin(), w.begin() + n, out.plus.begin());
  std::copy(w.begin() + n, w.end(), out.minus.begin());
  return out;
}

std::vector<cplx> apply_discrete(const DiscreteLabel& label, const GroupElement& m,
                                 const std::vector<cplx>& coeffs, int n_trunc,
                                 TransformReport* rep) {
  if (n_trunc < 1) throw DomainError("truncation must be at least 1");
  const int n = std::min<int>(n_trunc, static_cast<int>(coeffs.size()));
  CMat u(n, n);
  const bool degenerate = kern::is_elliptic_degenerate(
      label.sign == DiscreteLabel::Sign::minus ? reflection_conjugate(m) : m);
  parallel_for(n, [&](int i) {
    for (int j = 0; j < n; ++j) {
      if (degenerate) {
        const GroupElement eff =
            label.sign == DiscreteLabel::Sign::minus ? reflection_conjugate(m) : m;
        u(i, j) = (i == j) ? kern::elliptic_diagonal_element(eff, label.k + i) : 0.0;
      } else {
        u(i, j) = kern::dk_matrix_element(label, m, label.k + i, label.k + j);
      }
    }
  });
  std::vector<cplx> in(coeffs.begin(), coeffs.begin() + n);
  std::vector<cplx> out = matvec(u, in);
  if (rep) {
    double total = 0, tail = 0;
    for (int i = 0; i < n; ++i) {
      total += std::norm(out[i]);
      if (i >= (3 * n) / 4) tail += std::norm(out[i]);
    }
    rep->notes.push_back("tail-mass fraction " +
                         std::to_string(total > 0 ? tail / total : 0.0));
  }
  return out;
}

// ---------------------------------------------------------------------------
// unitarity defect
// ---------------------------------------------------------------------------

namespace {

// Spectral norm of a Hermitian matrix by power iteration.
double hermitian_norm(const CMat& h) {
  const int n = h.rows;
  std::vector<cplx> v(n);
  for (int i = 0; i < n; ++i) v[i] = cplx(1.0 / std::sqrt(1.0 + i), 1.0 / (2.0 + i));
  double lam = 0;
  for (int it = 0; it < 200; ++it) {
    std::vector<cplx> w(n, 0.0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) w[i] += h(i, j) * v[j];
    double nw = 0;
    for (auto& x : w) nw += std::norm(x);
    nw = std::sqrt(nw);
    if (nw == 0) return 0;
    for (auto& x : w) x /= nw;
    if (std::abs(nw - lam) < 1e-13 * std::max(1.0, nw) && it > 10) return nw;
    lam = nw;
    v = std::move(w);
  }
  return lam;
}

CMat weighted_gram(const CMat& cols, const std::vector<double>& w) {
  CMat g(cols.cols, cols.cols);
  for (int p = 0; p < cols.cols; ++p)
    for (int q = 0; q < cols.cols; ++q) {
      cplx s = 0;
      for (int i = 0; i < cols.rows; ++i)
        s += std::conj(cols(i, p)) * w[i % static_cast<int>(w.size())] * cols(i, q);
      g(p, q) = s;
    }
  return g;
}

}  // namespace

double unitarity_defect(const CMat& u, const std::vector<double>& w, const CMat& probes) {
  if (u.cols != probes.rows) throw DomainError("probe rows must match matrix size");
  CMat ub(u.rows, probes.cols);
  parallel_for(u.rows, [&](int i) {
    for (int p = 0; p < probes.cols; ++p) {
      cplx s = 0;
      for (int j = 0; j < u.cols; ++j) s += u(i, j) * probes(j, p);
      ub(i, p) = s;
    }
  });
  const CMat g = weighted_gram(ub, w);
  const CMat g0 = weighted_gram(probes, w);
  CMat diff(g.rows, g.cols);
  for (size_t i = 0; i < g.a.size(); ++i) diff.a[i] = g.a[i] - g0.a[i];
  const double n0 = hermitian_norm(g0);
  return n0 > 0 ? hermitian_norm(diff) / n0 : 0.0;
}

CMat hermite_probes(const Grid& g, int count) {
  const int n = g.size();
  CMat b(n, count);
  for (int i = 0; i < n; ++i) {
    const double x = g.nodes[i];
    double pm1 = 0.0;
    double p = std::pow(kPi, -0.25) * std::exp(-0.5 * x * x);
    for (int m = 0; m < count; ++m) {
      b(i, m) = p;
      const double pn = std::sqrt(2.0 / (m + 1.0)) * x * p -
                        std::sqrt(static_cast<double>(m) / (m + 1.0)) * pm1;
      pm1 = p;
      p = pn;
    }
  }
  return b;
}

CMat radial_mode_probes(const DiscreteLabel& label, const Grid& g, int count) {
  const int n = g.size();
  CMat b(n, count);
  const DiscreteLabel plus{label.k};
  for (int i = 0; i < n; ++i)
    for (int m = 0; m < count; ++m)
      b(i, m) = bases::phi0_discrete(plus, m, g.nodes[i]);
  return b;
}

CMat cont_radial_probes(const Grid& g, int count) {
  const int n = g.size();
  CMat b(2 * n, count);
  const DiscreteLabel half{0.5};
  for (int i = 0; i < n; ++i)
    for (int m = 0; m < count; ++m) {
      const double v = bases::phi0_discrete(half, m / 2, g.nodes[i]);
      if (m % 2 == 0)
        b(i, m) = v;
      else
        b(n + i, m) = v;
    }
  return b;
}

int composition_sign(const GroupElement& m1, const GroupElement& m2,
                     const std::function<SampledFunction(const GroupElement&,
                                                         const SampledFunction&)>& apply,
                     const SampledFunction& probe, double tol, double* residual_out) {
  const SampledFunction two_step = apply(m1, apply(m2, probe));
  const SampledFunction one_step = apply(compose(m1, m2), probe);
  const double pn = norm_of(probe);
  double rplus = 0, rminus = 0;
  for (int i = 0; i < probe.grid.size(); ++i) {
    const double w = probe.grid.weights[i];
    rplus += w * std::norm(two_step.values[i] - one_step.values[i]);
    rminus += w * std::norm(two_step.values[i] + one_step.values[i]);
  }
  rplus = std::sqrt(rplus) / pn;
  rminus = std::sqrt(rminus) / pn;
  const double best = std::min(rplus, rminus);
  if (residual_out) *residual_out = best;
  if (best > tol) return 0;
  return rplus <= rminus ? +1 : -1;
}

// ---------------------------------------------------------------------------
// Mellin oracles
// ---------------------------------------------------------------------------

namespace {

// quintic smoothstep taper: 1 on the interior, rolls to 0 over the tail.
double taper(double u, double u_lo, double u1, double u2) {
  double w = 1.0;
  if (u > u1) {
    const double t = (u - u1) / (u2 - u1);
    w *= 1.0 - t * t * t * (10.0 + t * (-15.0 + 6.0 * t));
  }
  (void)u_lo;
  return w;
}

struct MellinGrid {
  std::vector<double> r, dr_w;  // nodes in r and w_u/(2 sqrt(u)) du weights * taper
};

MellinGrid mellin_grid(const GroupElement& m, const MellinOptions& opt) {
  const double u_lo = opt.r_min * opt.r_min;
  const double u_hi = opt.r_max * opt.r_max;
  const double slope = std::max(std::abs(m.a), std::abs(m.d)) / (2.0 * std::abs(m.b));
  const double radians = slope * (u_hi - u_lo) + 2.0 * u_hi / std::abs(m.b);
  int points = std::max(opt.min_points,
                        static_cast<int>(opt.points_per_radian * radians));
  points = std::min(points, 1 << 14);
  const int order = 16;
  Rule rule = composite_gl(u_lo, u_hi, std::max(1, points / order), order);
  const double u1 = u_lo + (1.0 - opt.taper_fraction) * (u_hi - u_lo);
  MellinGrid g;
  g.r.resize(rule.nodes.size());
  g.dr_w.resize(rule.nodes.size());
  for (size_t i = 0; i < rule.nodes.size(); ++i) {
    const double u = rule.nodes[i];
    g.r[i] = std::sqrt(u);
    g.dr_w[i] = rule.weights[i] / (2.0 * g.r[i]) * taper(u, u_lo, u1, u_hi);
  }
  return g;
}

cplx mellin_window_value_dk(const DiscreteLabel& label, const GroupElement& m,
                            double mu, double mup, const MellinOptions& opt) {
  const MellinGrid g = mellin_grid(m, opt);
  const int n = static_cast<int>(g.r.size());
  // row factors conj(phi2(mu, r)), column factors phi2(mup, r')
  std::vector<cplx> row(n), col(n);
  for (int i = 0; i < n; ++i) {
    row[i] = std::conj(bases::phi2_discrete(mu, g.r[i])) * g.dr_w[i];
    col[i] = bases::phi2_discrete(mup, g.r[i]) * g.dr_w[i];
  }
  std::vector<cplx> partial(n);
  parallel_for(n, [&](int i) {
    cplx s = 0, compn = 0;
    for (int j = 0; j < n; ++j) {
      const cplx y = kern::radial_kernel(label, m, g.r[i], g.r[j]) * col[j] - compn;
      const cplx t = s + y;
      compn = (t - s) - y;
      s = t;
    }
    partial[i] = row[i] * s;
  });
  cplx total = 0;
  for (const cplx& p : partial) total += p;
  return total;
}

cplx mellin_window_value_cont(const ContinuousLabel& label, const GroupElement& m,
                              int tau, double mu, int taup, double mup,
                              const MellinOptions& opt) {
  const MellinGrid g = mellin_grid(m, opt);
  const int n = static_cast<int>(g.r.size());
  std::vector<cplx> mell_row(n), mell_col(n);
  for (int i = 0; i < n; ++i) {
    mell_row[i] = std::exp(cplx(-0.5, -mu) * std::log(g.r[i])) / std::sqrt(2.0 * kPi) *
                  g.dr_w[i];
    mell_col[i] = std::exp(cplx(-0.5, mup) * std::log(g.r[i])) / std::sqrt(2.0 * kPi) *
                  g.dr_w[i];
  }
  cplx total = 0;
  for (int sig = 1; sig >= -1; sig -= 2)
    for (int sigp = 1; sigp >= -1; sigp -= 2) {
      const double wrow = (sig == -1) ? tau : 1;    // conj of real tau weight
      const double wcol = (sigp == -1) ? taup : 1;
      std::vector<cplx> partial(n);
      parallel_for(n, [&](int i) {
        cplx s = 0, compn = 0;
        for (int j = 0; j < n; ++j) {
          const cplx y =
              kern::cont_radial_kernel(label, m, sig, g.r[i], sigp, g.r[j]) *
                  mell_col[j] -
              compn;
          const cplx t = s + y;
          compn = (t - s) - y;
          s = t;
        }
        partial[i] = mell_row[i] * s;
      });
      cplx block = 0;
      for (const cplx& p : partial) block += p;
      total += wrow * wcol * block;
    }
  return total;
}

}  // namespace

MellinResult mellin_oracle_dk(const DiscreteLabel& label, const GroupElement& m,
                              double mu, double mup, const MellinOptions& opt) {
  MellinOptions half = opt;
  half.r_max = opt.r_max / 2.0;
  const cplx v = mellin_window_value_dk(label, m, mu, mup, opt);
  const cplx vh = mellin_window_value_dk(label, m, mu, mup, half);
  return {v, std::abs(v - vh)};
}

MellinResult mellin_oracle_cont(const ContinuousLabel& label, const GroupElement& m,
                                int tau, double mu, int taup, double mup,
                                const MellinOptions& opt) {
  MellinOptions half = opt;
  half.r_max = opt.r_max / 2.0;
  const cplx v = mellin_window_value_cont(label, m, tau, mu, taup, mup, opt);
  const cplx vh = mellin_window_value_cont(label, m, tau, mu, taup, mup, half);
  return {v, std::abs(v - vh)};
}

// ---------------------------------------------------------------------------
// b -> 0 limit studies
// ---------------------------------------------------------------------------

namespace {

GroupElement with_small_b(const GroupElement& m0, double b) {
  // keep a and c, restore unimodularity through d
  const double d = (1.0 + b * m0.c) / m0.a;
  return {m0.a, b, m0.c, d};
}

// oscillation-resolving one-point quadrature of the kernel transform
cplx integrate_kernel(const std::function<cplx(double)>& kernel_times_f, double lo,
                      double hi, double radians) {
  const int order = 16;
  int points = std::max(256, static_cast<int>(2.5 * radians));
  points = std::min(points, 1 << 21);
  const Rule rule = composite_gl(lo, hi, std::max(1, points / order), order);
  cplx s = 0, comp = 0;
  for (size_t i = 0; i < rule.nodes.size(); ++i) {
    const cplx y = rule.weights[i] * kernel_times_f(rule.nodes[i]) - comp;
    const cplx t = s + y;
    comp = (t - s) - y;
    s = t;
  }
  return s;
}

LimitStudy finish_study(std::vector<double> bs, std::vector<double> devs) {
  LimitStudy out;
  out.b_values = std::move(bs);
  out.deviations = std::move(devs);
  out.monotone = true;
  for (size_t i = 1; i < out.deviations.size(); ++i)
    if (out.deviations[i] >= out.deviations[i - 1]) out.monotone = false;
  return out;
}

}  // namespace

LimitStudy b_limit_classic(const GroupElement& m0, const std::function<cplx(double)>& f,
                           const std::vector<double>& bs, double xmax) {
  if (std::abs(m0.b) >= kEpsB) throw DomainError("base element must have b = 0");
  const double support = 8.0;
  std::vector<double> devs;
  std::vector<double> outs;
  for (int i = -8; i <= 8; ++i) outs.push_back(xmax * i / 8.0);
  for (double b : bs) {
    const GroupElement m = with_small_b(m0, b);
    double dev = 0, scale = 0;
    for (double x : outs) {
      const kern::DeltaLine dl = kern::classic_kernel_b0(m0, x);
      const cplx target = dl.amplitude * f(dl.support);
      const double radians =
          (std::abs(m.a) * support * support + 2.0 * std::abs(x) * support +
           std::abs(m.d) * x * x) /
          (2.0 * std::abs(b));
      const cplx got = integrate_kernel(
          [&](double xp) { return kern::classic_kernel(m, x, xp) * f(xp); }, -support,
          support, radians);
      dev = std::max(dev, std::abs(got - target));
      scale = std::max(scale, std::abs(target));
    }
    devs.push_back(dev / std::max(scale, 1e-300));
  }
  return finish_study(bs, devs);
}

LimitStudy b_limit_radial(const DiscreteLabel& label, const GroupElement& m0,
                          const std::function<cplx(double)>& f,
                          const std::vector<double>& bs, double rmax) {
  if (std::abs(m0.b) >= kEpsB) throw DomainError("base element must have b = 0");
  const double support = 8.0;
  std::vector<double> devs;
  std::vector<double> outs;
  for (int i = 1; i <= 9; ++i) outs.push_back(0.25 + (rmax - 0.25) * (i - 1) / 8.0);
  for (double b : bs) {
    const GroupElement m = with_small_b(m0, b);
    double dev = 0, scale = 0;
    for (double r : outs) {
      const kern::DeltaLine dl = kern::radial_kernel_b0(label, m0, r);
      const cplx target = dl.amplitude * f(dl.support);
      const double radians =
          (std::abs(m.a) * support * support + 2.0 * r * support +
           std::abs(m.d) * r * r) /
          (2.0 * std::abs(b));
      const cplx got = integrate_kernel(
          [&](double rp) { return kern::radial_kernel(label, m, r, rp) * f(rp); }, 1e-9,
          support, radians);
      dev = std::max(dev, std::abs(got - target));
      scale = std::max(scale, std::abs(target));
    }
    devs.push_back(dev / std::max(scale, 1e-300));
  }
  return finish_study(bs, devs);
}

LimitStudy b_limit_cont(const ContinuousLabel& label, const GroupElement& m0,
                        const std::function<cplx(double)>& fplus,
                        const std::function<cplx(double)>& fminus,
                        const std::vector<double>& bs, double rmax) {
  if (std::abs(m0.b) >= kEpsB) throw DomainError("base element must have b = 0");
  const double support = 8.0;
  std::vector<double> devs;
  std::vector<double> outs;
  for (int i = 1; i <= 7; ++i) outs.push_back(0.3 + (rmax - 0.3) * (i - 1) / 6.0);
  for (double b : bs) {
    const GroupElement m = with_small_b(m0, b);
    double dev = 0, scale = 0;
    for (double r : outs) {
      for (int sig = 1; sig >= -1; sig -= 2) {
        const kern::DeltaLine dl = kern::cont_radial_b0(label, m0, sig, r);
        const auto& fs = (sig == 1) ? fplus : fminus;
        const cplx target = dl.amplitude * fs(dl.support);
        const double radians =
            (std::abs(m.a) * support * support + 2.0 * r * support +
             std::abs(m.d) * r * r) /
            (2.0 * std::abs(b));
        cplx got = 0;
        for (int sigp = 1; sigp >= -1; sigp -= 2) {
          const auto& fcol = (sigp == 1) ? fplus : fminus;
          got += integrate_kernel(
              [&](double rp) {
                return kern::cont_radial_kernel(label, m, sig, r, sigp, rp) * fcol(rp);
              },
              1e-9, support, radians);
        }
        dev = std::max(dev, std::abs(got - target));
        scale = std::max(scale, std::abs(target));
      }
    }
    devs.push_back(dev / std::max(scale, 1e-300));
  }
  return finish_study(bs, devs);
}

}  // namespace lct::eng
