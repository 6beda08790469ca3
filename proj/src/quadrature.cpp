#include "lct/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>

#include "lct/types.hpp"

namespace lct {

// Newton iteration on the Legendre recurrence; roots are symmetric so only
// half of them are solved for.
void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w) {
  x.assign(n, 0.0);
  w.assign(n, 0.0);
  const int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    double z = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p1 = 1.0, p2 = 0.0;
      for (int j = 0; j < n; ++j) {
        double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1.0);
      }
      pp = n * (z * p1 - p2) / (z * z - 1.0);
      double z1 = z;
      z = z1 - p1 / pp;
      if (std::abs(z - z1) < 1e-15) break;
    }
    x[i] = -z;
    x[n - 1 - i] = z;
    w[i] = 2.0 / ((1.0 - z * z) * pp * pp);
    w[n - 1 - i] = w[i];
  }
}

namespace {
const std::vector<double>* cached_nodes(int order, bool want_weights,
                                        const std::vector<double>** wout) {
  static std::map<int, std::pair<std::vector<double>, std::vector<double>>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(order);
  if (it == cache.end()) {
    std::vector<double> x, w;
    gauss_legendre(order, x, w);
    it = cache.emplace(order, std::make_pair(std::move(x), std::move(w))).first;
  }
  if (want_weights && wout) *wout = &it->second.second;
  return &it->second.first;
}
}  // namespace

Rule composite_gl(double a, double b, int panels, int order) {
  const std::vector<double>* w01 = nullptr;
  const std::vector<double>* x01 = cached_nodes(order, true, &w01);
  Rule r;
  r.nodes.reserve(static_cast<size_t>(panels) * order);
  r.weights.reserve(static_cast<size_t>(panels) * order);
  const double h = (b - a) / panels;
  for (int p = 0; p < panels; ++p) {
    const double lo = a + p * h;
    const double mid = lo + 0.5 * h;
    for (int j = 0; j < order; ++j) {
      r.nodes.push_back(mid + 0.5 * h * (*x01)[j]);
      r.weights.push_back(0.5 * h * (*w01)[j]);
    }
  }
  return r;
}

}  // namespace lct
