#pragma once

#include <Eigen/Dense>

#include <array>

#include "razavy/potential.hpp"

namespace razavy {

using Matrix4 = Eigen::Matrix4d;

/// Two identical wells coupled by -g x1 x2, truncated to the lowest two
/// single-well levels. Eigenstates Phi_0..Phi_3 in the product basis
/// {|00>, |01>, |10>, |11>} (|kl> = phi_k(x1) phi_l(x2)):
///
///   Phi_0 =  cos(theta)|00> + sin(theta)|11>
///   Phi_1 = (|01> + |10>) / sqrt(2)
///   Phi_2 = (-|01> + |10>) / sqrt(2)
///   Phi_3 = -sin(theta)|00> + cos(theta)|11>
struct CoupledSystem {
  double g = 0.0;
  std::array<double, 4> energies{};
  double theta = 0.0;
  double alpha = 0.0;  // <Phi_0|x1 + x2|Phi_1>
  double beta = 0.0;   // <Phi_1|x1 + x2|Phi_3>
  Matrix4 gaps = Matrix4::Zero();  // gaps(nu, mu) = (E_nu - E_mu) / hbar
  SingleWellBasis basis;

  double hbar() const { return basis.params.hbar; }
  double gap(int nu, int mu) const { return gaps(nu, mu); }
  double delta10() const { return gaps(1, 0); }
};

/// Throws std::invalid_argument for negative or non-finite g.
CoupledSystem build_coupled(const SingleWellBasis& basis, double g);

/// Columns are Phi_0..Phi_3 expanded in the product basis.
Matrix4 eigenvector_matrix(const CoupledSystem& sys);

/// Energy matrix of H0 + HC + HI in the product basis for fields F1 on the
/// first well and F2 on the second.
Matrix4 energy_matrix_product_basis(const CoupledSystem& sys, double field1, double field2);

/// Symmetric drive F1 = F2 = F.
inline Matrix4 energy_matrix_product_basis(const CoupledSystem& sys, double field) {
  return energy_matrix_product_basis(sys, field, field);
}

/// Energy matrix of H in the Phi basis for per-well fields.
Matrix4 energy_matrix_eigen_basis(const CoupledSystem& sys, double field1, double field2);

/// Matrices of x1 and x2 in the Phi basis.
Matrix4 position_matrix_eigen_basis(const CoupledSystem& sys, int well);

}  // namespace razavy
