#pragma once

#include <Eigen/Core>
#include <cmath>
#include <limits>

namespace elabc {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;
using Index = Eigen::Index;

/// Log-likelihood value standing for "posterior is zero here".
/// -inf keeps all log-space arithmetic total: adding anything finite
/// leaves it -inf, and exp() of it is exactly 0.
inline constexpr double kLogZero = -std::numeric_limits<double>::infinity();

inline bool is_log_zero(double x) { return std::isinf(x) && x < 0; }

inline bool all_finite(const Vector& v) { return v.allFinite(); }
inline bool all_finite(const Matrix& m) { return m.allFinite(); }

}  // namespace elabc
