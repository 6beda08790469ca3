#include "lct/symplectic.hpp"

#include <cmath>

#include "lct/errors.hpp"

namespace lct {

GroupElement::GroupElement(double a_, double b_, double c_, double d_)
    : a(a_), b(b_), c(c_), d(d_) {
  if (!(std::isfinite(a) && std::isfinite(b) && std::isfinite(c) && std::isfinite(d)))
    throw DomainError("group element entries must be finite");
  if (std::abs(det() - 1.0) > 1e-12)
    throw DomainError("group element must be unimodular: |ad - bc - 1| > 1e-12");
}

GroupElement compose(const GroupElement& m1, const GroupElement& m2) {
  return {m1.a * m2.a + m1.b * m2.c, m1.a * m2.b + m1.b * m2.d,
          m1.c * m2.a + m1.d * m2.c, m1.c * m2.b + m1.d * m2.d};
}

GroupElement inverse(const GroupElement& m) { return {m.d, -m.b, -m.c, m.a}; }

GroupElement negate(const GroupElement& m) { return {-m.a, -m.b, -m.c, -m.d}; }

GroupElement subgroup_element(SubgroupTag tag, double t) {
  if (!std::isfinite(t)) throw DomainError("subgroup parameter must be finite");
  switch (tag) {
    case SubgroupTag::Elliptic:
      return {std::cos(0.5 * t), -std::sin(0.5 * t), std::sin(0.5 * t), std::cos(0.5 * t)};
    case SubgroupTag::HyperbolicRepulsive:
      return {std::cosh(0.5 * t), -std::sinh(0.5 * t), -std::sinh(0.5 * t), std::cosh(0.5 * t)};
    case SubgroupTag::HyperbolicScaling:
      return {std::exp(-0.5 * t), 0, 0, std::exp(0.5 * t)};
    case SubgroupTag::ParabolicFree:
      return {1, -t, 0, 1};
    case SubgroupTag::ParabolicPosition:
      return {1, 0, t, 1};
  }
  throw DomainError("unknown subgroup tag");
}

LorentzMatrix to_lorentz(const GroupElement& g) {
  const double a = g.a, b = g.b, c = g.c, d = g.d;
  LorentzMatrix l;
  l.m[0] = {0.5 * (a * a - b * b - c * c + d * d), b * d - a * c,
            0.5 * (a * a - b * b + c * c - d * d)};
  l.m[1] = {c * d - a * b, a * d + b * c, -c * d - a * b};
  l.m[2] = {0.5 * (a * a + b * b - c * c - d * d), -b * d - a * c,
            0.5 * (a * a + b * b + c * c + d * d)};
  return l;
}

LorentzMatrix lorentz_product(const LorentzMatrix& l1, const LorentzMatrix& l2) {
  LorentzMatrix out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      double s = 0;
      for (int k = 0; k < 3; ++k) s += l1.m[i][k] * l2.m[k][j];
      out.m[i][j] = s;
    }
  return out;
}

EllipticFactorization elliptic_factor(const GroupElement& m) {
  const double ap = std::hypot(m.a, m.b);
  const double cp = (m.a * m.c + m.b * m.d) / ap;
  // Half-angle taken on the sheet with cos(alpha/2) = a/a', so the left
  // factor keeps a' > 0 and the reassembly is exact for every input.
  const double alpha = 2.0 * std::atan2(-m.b, m.a);
  return {ap, cp, alpha};
}

ParabolicFactorization parabolic_factor(const GroupElement& m, double eps_b) {
  if (std::abs(m.b) < eps_b)
    throw DegenerateB("parabolic factorization undefined for b ~ 0; use the Dirac-line kernel branch");
  return {GroupElement{m.b, 0, m.d, 1.0 / m.b}, -m.a / m.b};
}

GroupElement reflection_conjugate(const GroupElement& m) {
  return {m.a, -m.b, -m.c, m.d};
}

GroupElement cayley_conjugate_reposc(const GroupElement& m) {
  const double a = m.a, b = m.b, c = m.c, d = m.d;
  return {0.5 * (a + b + c + d), 0.5 * (-a + b - c + d),
          0.5 * (-a - b + c + d), 0.5 * (a - b - c + d)};
}

}  // namespace lct
