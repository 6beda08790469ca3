#pragma once
#include <functional>
#include <string>
#include <vector>

#include "lct/bases.hpp"
#include "lct/kernels.hpp"
#include "lct/symplectic.hpp"
#include "lct/types.hpp"

namespace lct::eng {

// Composite Gauss-Legendre sampling grid, either on (0, rmax] (radial) or
// on the symmetric interval [-xmax, xmax].
struct Grid {
  std::vector<double> nodes;
  std::vector<double> weights;
  double xmin = 0, xmax = 0;
  bool radial = true;
  int size() const { return static_cast<int>(nodes.size()); }
};
Grid radial_grid(int n, double rmax, int panel_order = 16);
Grid line_grid(int n, double xmax, int panel_order = 16);

struct SampledFunction {
  Grid grid;
  std::vector<cplx> values;
};

struct TwoComponentSampled {
  Grid grid;
  std::vector<cplx> plus, minus;
};

double norm_of(const SampledFunction& f);
double norm_of(const TwoComponentSampled& f);

struct TransformReport {
  double unitarity_defect = -1.0;
  int composition_sign = 0;  // +1 / -1 / 0 = undetermined
  double max_abs_error = 0.0;
  bool grid_warning = false;
  std::vector<std::string> notes;
};

// Dense complex matrix, row major.
struct CMat {
  int rows = 0, cols = 0;
  std::vector<cplx> a;
  CMat() = default;
  CMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}
  cplx& operator()(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  cplx operator()(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }
};

// Discrete transform matrix U with U_ij = K(x_i, x_j) w_j; applying U to the
// sample vector performs the quadrature of the integral transform.
CMat classic_transform_matrix(const GroupElement& m, const Grid& g);
CMat radial_transform_matrix(const DiscreteLabel& label, const GroupElement& m,
                             const Grid& g);
// 2N x 2N with component blocks ordered (+, -).
CMat cont_radial_transform_matrix(const ContinuousLabel& label,
                                  const GroupElement& m, const Grid& g);

SampledFunction apply_classic(const GroupElement& m, const SampledFunction& f,
                              TransformReport* rep = nullptr);
SampledFunction apply_radial(const DiscreteLabel& label, const GroupElement& m,
                             const SampledFunction& f, TransformReport* rep = nullptr);
TwoComponentSampled apply_cont_radial(const ContinuousLabel& label,
                                      const GroupElement& m,
                                      const TwoComponentSampled& f,
                                      TransformReport* rep = nullptr);

// Truncated summation transform in the compact eigenbasis; the report notes
// carry a tail-mass estimate.
std::vector<cplx> apply_discrete(const DiscreteLabel& label, const GroupElement& m,
                                 const std::vector<cplx>& coeffs, int n_trunc,
                                 TransformReport* rep = nullptr);

// Weighted unitarity defect of the transform matrix U restricted to the span
// of the probe columns B: ||(UB)* W (UB) - B* W B|| / ||B* W B||, spectral
// norm.  The full-grid operator norm is structurally O(1) for any window
// because lattice modes beyond the kernel band are annihilated, so the
// defect is measured on the resolved decaying subspace spanned by B.
double unitarity_defect(const CMat& u, const std::vector<double>& w, const CMat& probes);

// Orthonormal-ish decaying probe columns for each kernel family.
CMat hermite_probes(const Grid& g, int count);
CMat radial_mode_probes(const DiscreteLabel& label, const Grid& g, int count);
CMat cont_radial_probes(const Grid& g, int count);  // 2N rows

// Sign of the metaplectic composition, determined on a probe signal:
// the sign minimising || apply(m1, apply(m2, p)) - s * apply(m1*m2, p) ||.
// Returns 0 when neither sign brings the residual under tol.
int composition_sign(const GroupElement& m1, const GroupElement& m2,
                     const std::function<SampledFunction(const GroupElement&,
                                                         const SampledFunction&)>& apply,
                     const SampledFunction& probe, double tol = 1e-4,
                     double* residual_out = nullptr);

// Truncated double-Mellin quadrature of a radial kernel: the independent
// check of the scaling-basis closed forms.  A smooth taper over the tail
// fraction suppresses the oscillatory boundary error; `doubling_delta`
// reports the change when the window is halved.
struct MellinOptions {
  double r_min = 1e-3;
  double r_max = 40.0;
  int min_points = 512;
  double points_per_radian = 2.0;
  double taper_fraction = 0.35;
};
struct MellinResult {
  cplx value;
  double doubling_delta;
};
MellinResult mellin_oracle_dk(const DiscreteLabel& label, const GroupElement& m,
                              double mu, double mup, const MellinOptions& opt = {});
MellinResult mellin_oracle_cont(const ContinuousLabel& label, const GroupElement& m,
                                int tau, double mu, int taup, double mup,
                                const MellinOptions& opt = {});

// b -> 0 limit study: the kernel applied at decreasing |b| (with d adjusted
// to keep the element unimodular) against the Dirac-line action.
struct LimitStudy {
  std::vector<double> b_values;
  std::vector<double> deviations;
  bool monotone = false;
};
LimitStudy b_limit_classic(const GroupElement& m0,
                           const std::function<cplx(double)>& f,
                           const std::vector<double>& bs, double xmax = 3.0);
LimitStudy b_limit_radial(const DiscreteLabel& label, const GroupElement& m0,
                          const std::function<cplx(double)>& f,
                          const std::vector<double>& bs, double rmax = 3.0);
LimitStudy b_limit_cont(const ContinuousLabel& label, const GroupElement& m0,
                        const std::function<cplx(double)>& fplus,
                        const std::function<cplx(double)>& fminus,
                        const std::vector<double>& bs, double rmax = 3.0);

// Parallelism helpers; worker count is capped by the LCT_THREADS variable.
int thread_count();
void parallel_for(int n, const std::function<void(int)>& body);

}  // namespace lct::eng
