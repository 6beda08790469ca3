#pragma once
#include <vector>

namespace lct {

// Gauss-Legendre nodes/weights on [-1, 1].
void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w);

// Composite rule: `panels` panels of `order`-point Gauss-Legendre on [a, b].
struct Rule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
Rule composite_gl(double a, double b, int panels, int order);

}  // namespace lct
