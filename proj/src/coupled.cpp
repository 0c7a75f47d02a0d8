#include "razavy/coupled.hpp"

#include <cmath>
#include <stdexcept>

namespace razavy {

CoupledSystem build_coupled(const SingleWellBasis& basis, double g) {
  if (!std::isfinite(g) || g < 0.0) {
    throw std::invalid_argument("coupling g must be finite and non-negative");
  }
  CoupledSystem sys;
  sys.g = g;
  sys.basis = basis;

  const double eps = basis.eps_sum();
  const double delta = basis.delta();
  const double coupling = g * basis.gamma * basis.gamma;
  const double split = std::sqrt(delta * delta + coupling * coupling);

  sys.energies = {eps - split, eps - coupling, eps + coupling, eps + split};
  // delta > 0 and coupling >= 0 keep theta on [0, pi/4).
  sys.theta = 0.5 * std::atan2(coupling, delta);
  const double c = std::cos(sys.theta);
  const double s = std::sin(sys.theta);
  sys.alpha = std::sqrt(2.0) * basis.gamma * (c + s);
  sys.beta = std::sqrt(2.0) * basis.gamma * (c - s);

  const double hbar = basis.params.hbar;
  for (int nu = 0; nu < 4; ++nu) {
    for (int mu = 0; mu < 4; ++mu) {
      sys.gaps(nu, mu) = (sys.energies[nu] - sys.energies[mu]) / hbar;
    }
  }
  return sys;
}

Matrix4 eigenvector_matrix(const CoupledSystem& sys) {
  const double c = std::cos(sys.theta);
  const double s = std::sin(sys.theta);
  const double r = 1.0 / std::sqrt(2.0);
  Matrix4 u;
  // rows: |00>, |01>, |10>, |11>; columns: Phi_0..Phi_3
  u << c, 0.0, 0.0, -s,
       0.0, r, -r, 0.0,
       0.0, r, r, 0.0,
       s, 0.0, 0.0, c;
  return u;
}

Matrix4 energy_matrix_product_basis(const CoupledSystem& sys, double field1, double field2) {
  const auto& eps = sys.basis.eps;
  const double gamma = sys.basis.gamma;
  const double coupling = sys.g * gamma * gamma;
  Matrix4 h = Matrix4::Zero();
  h(0, 0) = 2.0 * eps[0];
  h(1, 1) = eps[0] + eps[1];
  h(2, 2) = eps[0] + eps[1];
  h(3, 3) = 2.0 * eps[1];
  h(0, 3) = h(3, 0) = -coupling;
  h(1, 2) = h(2, 1) = -coupling;
  // x2 flips the second index, x1 the first.
  h(0, 1) = h(1, 0) = -gamma * field2;
  h(2, 3) = h(3, 2) = -gamma * field2;
  h(0, 2) = h(2, 0) = -gamma * field1;
  h(1, 3) = h(3, 1) = -gamma * field1;
  return h;
}

Matrix4 energy_matrix_eigen_basis(const CoupledSystem& sys, double field1, double field2) {
  const double sum = field1 + field2;
  const double diff = field1 - field2;
  const double a = sys.alpha / 2.0;
  const double b = sys.beta / 2.0;
  Matrix4 h = Matrix4::Zero();
  for (int nu = 0; nu < 4; ++nu) h(nu, nu) = sys.energies[nu];
  h(0, 1) = h(1, 0) = -a * sum;
  h(0, 2) = h(2, 0) = -b * diff;
  h(1, 3) = h(3, 1) = -b * sum;
  h(2, 3) = h(3, 2) = a * diff;
  return h;
}

Matrix4 position_matrix_eigen_basis(const CoupledSystem& sys, int well) {
  if (well != 1 && well != 2) {
    throw std::invalid_argument("well index must be 1 or 2");
  }
  // H_I = -x1 F1 - x2 F2, so x_n is minus the unit-field interaction block.
  Matrix4 h = well == 1 ? energy_matrix_eigen_basis(sys, 1.0, 0.0)
                        : energy_matrix_eigen_basis(sys, 0.0, 1.0);
  for (int nu = 0; nu < 4; ++nu) h(nu, nu) -= sys.energies[nu];
  return -h;
}

}  // namespace razavy
