#pragma once
#include <complex>

namespace lct {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline constexpr cplx kI{0.0, 1.0};

// Shared threshold below which the b entry of a group element is treated as
// zero and the Dirac-line branch of a kernel must be used.
inline constexpr double kEpsB = 1e-12;

}  // namespace lct
