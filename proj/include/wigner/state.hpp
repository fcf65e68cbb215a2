#ifndef WIGNER_STATE_HPP
#define WIGNER_STATE_HPP

#include <random>

#include "wigner/irreps.hpp"

namespace wigner {

/// N complex amplitudes psi(g) in the position basis, ordered by element
/// index.
using StateVector = Vector;

/// N x N density matrix in the position basis.
using DensityOperator = Matrix;

/// Complex standard normal components, then normalize. Deterministic for a
/// given seed.
inline StateVector random_state(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> nd(0.0, 1.0);
  StateVector psi(n);
  for (int i = 0; i < n; ++i) psi(i) = cplx(nd(rng), nd(rng));
  psi.normalize();
  return psi;
}

inline StateVector position_eigenstate(int n, int g) {
  StateVector psi = StateVector::Zero(n);
  psi(g) = 1.0;
  return psi;
}

inline DensityOperator pure_density(const StateVector& psi) {
  return psi * psi.adjoint();
}

inline bool is_valid_density(const DensityOperator& rho, double tol = 1e-10) {
  if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > tol) return false;
  if (std::abs(rho.trace() - cplx(1.0, 0.0)) > tol) return false;
  Eigen::SelfAdjointEigenSolver<Matrix> es(rho);
  return es.eigenvalues().minCoeff() >= -tol;
}

/// Momentum-space wave function psi_jmn = <jmn|psi>, returned in the flat
/// label order of the basis.
inline Vector momentum_wavefunction(const StateVector& psi,
                                    const MomentumBasis& basis) {
  return basis.vectors.adjoint() * psi;
}

}  // namespace wigner

#endif
