#pragma once

#include <complex>
#include <Eigen/Dense>

namespace utq {

using cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;
using RealVec = Eigen::VectorXd;

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kTwoPi = 2.0 * kPi;
inline constexpr cplx kI{0.0, 1.0};

namespace tol {
// Absolute tolerance for identities that hold exactly in the algebra and
// only pick up rounding error numerically.
inline constexpr double kAlgebraic = 1e-12;
// Spectral assemblies (FFT columns, quadrature oracles) on oversampled grids.
inline constexpr double kSpectral = 1e-8;
// Identities degraded by mode truncation, asserted on band-limited vectors.
inline constexpr double kTruncation = 1e-6;
}  // namespace tol

}  // namespace utq
