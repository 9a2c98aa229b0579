#include "qfc/propagator.hpp"

#include <lapacke.h>

#include <cmath>
#include <stdexcept>
#include <string>

namespace qfc {

namespace {

void check_square(const ComplexMatrix& m, const char* where) {
    if (m.rows() != m.cols() || m.rows() == 0) {
        throw std::invalid_argument(std::string(where) + ": matrix must be square and non-empty");
    }
}

void hermitian_eigensolve(ComplexMatrix& a_inout, RealVector& eigenvalues) {
    const lapack_int n = static_cast<lapack_int>(a_inout.rows());
    eigenvalues.resize(n);
    const lapack_int info = LAPACKE_zheevd(LAPACK_COL_MAJOR, 'V', 'L', n,
                                           reinterpret_cast<lapack_complex_double*>(a_inout.data()), n,
                                           eigenvalues.data());
    if (info != 0) {
        throw std::runtime_error("eigendecompose: zheevd failed with info = " + std::to_string(info));
    }
}

}  // namespace

void symmetric_eigensolve(RealMatrix& a_inout, RealVector& eigenvalues) {
    const lapack_int n = static_cast<lapack_int>(a_inout.rows());
    eigenvalues.resize(n);
    const lapack_int info =
        LAPACKE_dsyevd(LAPACK_COL_MAJOR, 'V', 'L', n, a_inout.data(), n, eigenvalues.data());
    if (info != 0) {
        throw std::runtime_error("eigendecompose: dsyevd failed with info = " + std::to_string(info));
    }
}

SpectralDecomposition eigendecompose(const ComplexMatrix& h, double hermitian_tol) {
    check_square(h, "eigendecompose");
    const double dev = max_abs_deviation_from_hermitian(h);
    if (!(dev <= hermitian_tol)) {
        throw std::invalid_argument("eigendecompose: matrix is not Hermitian (max |H - H†| = " +
                                    std::to_string(dev) + ")");
    }
    SpectralDecomposition out;
    if (h.imag().cwiseAbs().maxCoeff() == 0.0) {
        RealMatrix a = h.real();
        symmetric_eigensolve(a, out.eigenvalues);
        out.eigenvectors = a.cast<Complex>();
    } else {
        out.eigenvectors = h;
        hermitian_eigensolve(out.eigenvectors, out.eigenvalues);
    }
    return out;
}

ComplexMatrix evolve_unitary(const SpectralDecomposition& decomp, double t) {
    const StateVector phases = (decomp.eigenvalues * (-t)).unaryExpr([](double x) { return std::polar(1.0, x); });
    return decomp.eigenvectors * phases.asDiagonal() * decomp.eigenvectors.adjoint();
}

StateVector evolve_state(const SpectralDecomposition& decomp, const StateVector& psi0, double t) {
    if (psi0.size() != decomp.dim()) {
        throw std::invalid_argument("evolve_state: state dimension does not match the Hamiltonian");
    }
    const StateVector c = decomp.eigenvectors.adjoint() * psi0;
    const StateVector phases = (decomp.eigenvalues * (-t)).unaryExpr([](double x) { return std::polar(1.0, x); });
    return decomp.eigenvectors * phases.cwiseProduct(c);
}

std::vector<double> population_timeseries(const SpectralDecomposition& decomp, const StateVector& psi0,
                                          std::span<const double> times, const ComplexMatrix& projector) {
    if (psi0.size() != decomp.dim()) {
        throw std::invalid_argument("population_timeseries: state dimension does not match the Hamiltonian");
    }
    if (projector.rows() != decomp.dim() || projector.cols() != decomp.dim()) {
        throw std::invalid_argument("population_timeseries: projector dimension does not match the Hamiltonian");
    }
    // <psi(t)|P|psi(t)> = c(t)† (V† P V) c(t), c(t) = exp(-iEt) V† psi0
    const ComplexMatrix p_eig = decomp.eigenvectors.adjoint() * projector * decomp.eigenvectors;
    const StateVector c0 = decomp.eigenvectors.adjoint() * psi0;
    std::vector<double> out;
    out.reserve(times.size());
    for (double t : times) {
        StateVector c(c0.size());
        for (Eigen::Index k = 0; k < c0.size(); ++k) {
            c(k) = std::polar(1.0, -decomp.eigenvalues(k) * t) * c0(k);
        }
        out.push_back(std::real(c.dot(p_eig * c)));
    }
    return out;
}

std::vector<double> population_timeseries_diagonal(const SpectralDecomposition& decomp, const StateVector& psi0,
                                                   std::span<const double> times, const RealVector& weights) {
    if (psi0.size() != decomp.dim() || weights.size() != decomp.dim()) {
        throw std::invalid_argument("population_timeseries_diagonal: dimension mismatch");
    }
    const StateVector c0 = decomp.eigenvectors.adjoint() * psi0;
    std::vector<double> out;
    out.reserve(times.size());
    for (double t : times) {
        StateVector c(c0.size());
        for (Eigen::Index k = 0; k < c0.size(); ++k) {
            c(k) = std::polar(1.0, -decomp.eigenvalues(k) * t) * c0(k);
        }
        const StateVector psi = decomp.eigenvectors * c;
        out.push_back(weights.dot(psi.cwiseAbs2()));
    }
    return out;
}

}  // namespace qfc
