// Test-only reference computations. Nothing here calls into the code path it
// is used to check.
#pragma once

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <vector>

namespace oracle {

using cplx = std::complex<double>;

// Composite Simpson on [a, b] with n (even) panels.
inline double simpson(const std::function<double(double)>& f, double a, double b, int n) {
  if (n % 2) ++n;
  const double h = (b - a) / n;
  double s = f(a) + f(b);
  for (int i = 1; i < n; ++i) s += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
  return s * h / 3.0;
}

// Fourth-order Magnus propagation of i hbar dc/dt = H(t) c with two Gauss
// points per step.
inline Eigen::Vector4cd magnus_propagate(const std::function<Eigen::Matrix4d(double)>& hamiltonian,
                                         Eigen::Vector4cd c, double t_end, double dt,
                                         double hbar = 1.0) {
  const int n = static_cast<int>(std::ceil(t_end / dt));
  const double h = t_end / n;
  const double r = std::sqrt(3.0) / 6.0;
  const cplx minus_i(0.0, -1.0 / hbar);
  for (int k = 0; k < n; ++k) {
    const double t = k * h;
    const Eigen::Matrix4cd a1 = minus_i * hamiltonian(t + (0.5 - r) * h).cast<cplx>();
    const Eigen::Matrix4cd a2 = minus_i * hamiltonian(t + (0.5 + r) * h).cast<cplx>();
    const Eigen::Matrix4cd omega =
        0.5 * h * (a1 + a2) + (std::sqrt(3.0) / 12.0) * h * h * (a2 * a1 - a1 * a2);
    c = omega.exp() * c;
  }
  return c;
}

// |sum_k w_k y_k exp(-i nu t_k)| with a Hann window.
inline double dft_magnitude(const std::vector<double>& t, const std::vector<double>& y, double nu) {
  cplx acc = 0.0;
  const double span = t.back() - t.front();
  for (std::size_t k = 0; k < t.size(); ++k) {
    const double w = 0.5 - 0.5 * std::cos(2.0 * std::numbers::pi * (t[k] - t.front()) / span);
    acc += w * y[k] * std::exp(cplx(0.0, -nu * t[k]));
  }
  return std::abs(acc);
}

// Mean period from upward crossings of the sample mean, linearly interpolated.
inline double crossing_period(const std::vector<double>& t, const std::vector<double>& y) {
  double mean = 0.0;
  for (double v : y) mean += v;
  mean /= static_cast<double>(y.size());
  std::vector<double> crossings;
  for (std::size_t k = 1; k < y.size(); ++k) {
    if (y[k - 1] < mean && y[k] >= mean) {
      const double w = (mean - y[k - 1]) / (y[k] - y[k - 1]);
      crossings.push_back(t[k - 1] + w * (t[k] - t[k - 1]));
    }
  }
  if (crossings.size() < 2) return std::nan("");
  return (crossings.back() - crossings.front()) / static_cast<double>(crossings.size() - 1);
}

// Plain trapezoid mean of f on [0, T] with n intervals.
inline double trapezoid_mean(const std::function<double(double)>& f, double T, long n) {
  const double h = T / static_cast<double>(n);
  double s = 0.5 * (f(0.0) + f(T));
  for (long k = 1; k < n; ++k) s += f(static_cast<double>(k) * h);
  return s * h / T;
}

}  // namespace oracle
