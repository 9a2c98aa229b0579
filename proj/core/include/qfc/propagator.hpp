// propagator.hpp: exact evolution under a time-independent Hermitian
// Hamiltonian through one spectral decomposition.

#pragma once

#include "qfc/fock.hpp"

#include <span>
#include <vector>

namespace qfc {

// H = V diag(E) V†, eigenvalues ascending, eigenvectors in the columns of V.
struct SpectralDecomposition {
    RealVector eigenvalues;
    ComplexMatrix eigenvectors;

    Eigen::Index dim() const noexcept { return eigenvalues.size(); }
};

// Hermiticity is checked to `hermitian_tol` (absolute, max-norm). Real
// symmetric input takes the real solver path.
SpectralDecomposition eigendecompose(const ComplexMatrix& h, double hermitian_tol = 1e-10);

// Eigendecomposition of a real symmetric matrix; shared by the complex path.
void symmetric_eigensolve(RealMatrix& a_inout, RealVector& eigenvalues);

// U(t) = V diag(exp(-i E t)) V†.
ComplexMatrix evolve_unitary(const SpectralDecomposition& decomp, double t);

// psi(t) = U(t) psi0 without forming U.
StateVector evolve_state(const SpectralDecomposition& decomp, const StateVector& psi0, double t);

// <psi(t)|P|psi(t)> for each t. The initial state is transformed into the
// eigenbasis once.
std::vector<double> population_timeseries(const SpectralDecomposition& decomp, const StateVector& psi0,
                                          std::span<const double> times, const ComplexMatrix& projector);

// Diagonal projector variant: P = diag(weights).
std::vector<double> population_timeseries_diagonal(const SpectralDecomposition& decomp, const StateVector& psi0,
                                                   std::span<const double> times, const RealVector& weights);

}  // namespace qfc
