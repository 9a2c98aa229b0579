// analysis.hpp: field-state diagnostics.

#pragma once

#include "qfc/fock.hpp"

#include <vector>

namespace qfc {

struct AnalysisReport {
    StateVector fock_amplitudes;
    double n_av{0.0};
    double mandel_q{0.0};  // NaN for the vacuum
    double parity_expectation{0.0};
};

AnalysisReport fock_statistics(const StateVector& state);

// p_n = n_av^n e^{-n_av} / n!, n = 0..n_trunc.
std::vector<double> poisson_reference(double n_av, int n_trunc);

struct WignerAxes {
    double x_min{-6.0};
    double x_max{6.0};
    int x_points{121};
    double p_min{-6.0};
    double p_max{6.0};
    int p_points{121};
    // Fock dimension used for the displacement operator; 0 picks one large
    // enough for the grid, (r + sqrt(s) + 5)^2 with r the largest |beta| and
    // s the state's occupied Fock range.
    // States are zero-padded up to it.
    int basis_dim{0};
};

// W(x + ip) in the quadrature convention X = (a + a†)/2, P = (a - a†)/(2i):
// peak 2/pi for the vacuum, unit integral over dx dp.
struct WignerGrid {
    std::vector<double> x;
    std::vector<double> p;
    RealMatrix values;  // values(ix, ip)
    bool beyond_reliable_region{false};  // some |beta|^2 > 0.8 (basis_dim - 1)

    double integral() const;
};

WignerGrid wigner(const StateVector& state, const WignerAxes& axes);

// Single point, same construction as the grid (basis chosen from |beta|).
double wigner_at(const StateVector& state, Complex beta, int basis_dim = 0);

// D(beta) = exp(beta a† - beta* a) on a truncated Fock space, obtained from
// one spectral decomposition: the generator is a diagonal phase rotation of
// -2i |beta| X.
class DisplacementBuilder {
public:
    explicit DisplacementBuilder(int dim);

    int dim() const noexcept { return dim_; }
    ComplexMatrix displacement(Complex beta) const;
    // D(beta)† psi
    StateVector apply_inverse(Complex beta, const StateVector& psi) const;
    // Column b holds D(betas[b])† psi.
    ComplexMatrix apply_inverse(const std::vector<Complex>& betas, const StateVector& psi) const;

private:
    int dim_;
    RealVector x_eigenvalues_;
    RealMatrix x_eigenvectors_;
};

// Nearest integer n to (pi (2k + 1) / (2 g T))^2; throws when n > n_max.
int jc_fock_resonance(double g, double control_time, int k, int n_max);

// Von Neumann entropy (bits) of the field marginal of a composite pure state
// with field-major ordering.
double entanglement_entropy_bits(const StateVector& psi, int field_dim, int atomic_dim);

}  // namespace qfc
