#include "qfc/analysis.hpp"

#include "qfc/propagator.hpp"

#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qfc {

AnalysisReport fock_statistics(const StateVector& state) {
    AnalysisReport r;
    r.fock_amplitudes = state;
    double n1 = 0.0;
    double n2 = 0.0;
    double parity = 0.0;
    for (Eigen::Index n = 0; n < state.size(); ++n) {
        const double p = std::norm(state(n));
        const double dn = static_cast<double>(n);
        n1 += dn * p;
        n2 += dn * dn * p;
        parity += (n % 2 == 0 ? 1.0 : -1.0) * p;
    }
    r.n_av = n1;
    r.parity_expectation = parity;
    r.mandel_q = n1 > 0.0 ? (n2 - n1 * n1 - n1) / n1 : std::numeric_limits<double>::quiet_NaN();
    return r;
}

std::vector<double> poisson_reference(double n_av, int n_trunc) {
    if (!(n_av >= 0.0) || !std::isfinite(n_av)) {
        throw std::invalid_argument("poisson_reference: n_av must be finite and >= 0");
    }
    if (n_trunc < 0) {
        throw std::invalid_argument("poisson_reference: n_trunc must be >= 0");
    }
    std::vector<double> p(static_cast<std::size_t>(n_trunc) + 1, 0.0);
    if (n_av == 0.0) {
        p[0] = 1.0;
        return p;
    }
    for (int n = 0; n <= n_trunc; ++n) {
        p[n] = std::exp(n * std::log(n_av) - n_av - std::lgamma(n + 1.0));
    }
    return p;
}

// With S = diag(i^n), S† (a† - a) S = -2i X, so
//   D(beta) = R(theta) S exp(-2i |beta| X) S† R(theta)†,  R(theta) = diag(e^{i theta n}),
// and X is real symmetric: one real eigendecomposition serves every beta.
DisplacementBuilder::DisplacementBuilder(int dim) : dim_(dim) {
    if (dim < 1) {
        throw std::invalid_argument("DisplacementBuilder: dimension must be >= 1");
    }
    x_eigenvectors_ = RealMatrix::Zero(dim, dim);
    for (int n = 1; n < dim; ++n) {
        x_eigenvectors_(n - 1, n) = x_eigenvectors_(n, n - 1) = 0.5 * std::sqrt(static_cast<double>(n));
    }
    symmetric_eigensolve(x_eigenvectors_, x_eigenvalues_);
}

namespace {

// i^n e^{i theta n}
Complex frame_phase(double theta, int n) {
    return std::polar(1.0, n * (theta + 0.5 * std::numbers::pi));
}

}  // namespace

ComplexMatrix DisplacementBuilder::displacement(Complex beta) const {
    const double r = std::abs(beta);
    const double theta = std::arg(beta);
    StateVector frame(dim_);
    for (int n = 0; n < dim_; ++n) {
        frame(n) = frame_phase(theta, n);
    }
    const StateVector phases =
        (x_eigenvalues_ * (-2.0 * r)).unaryExpr([](double x) { return std::polar(1.0, x); });
    const ComplexMatrix w = x_eigenvectors_.cast<Complex>();
    return frame.asDiagonal() * (w * phases.asDiagonal() * w.transpose()) * frame.conjugate().asDiagonal();
}

StateVector DisplacementBuilder::apply_inverse(Complex beta, const StateVector& psi) const {
    return apply_inverse(std::vector<Complex>{beta}, psi).col(0);
}

ComplexMatrix DisplacementBuilder::apply_inverse(const std::vector<Complex>& betas, const StateVector& psi) const {
    if (psi.size() != dim_) {
        throw std::invalid_argument("DisplacementBuilder: state dimension mismatch");
    }
    const auto count = static_cast<Eigen::Index>(betas.size());
    // real and imaginary parts side by side so both products are real GEMMs
    RealMatrix v(dim_, 2 * count);
    for (Eigen::Index b = 0; b < count; ++b) {
        const double theta = std::arg(betas[b]);
        for (int n = 0; n < dim_; ++n) {
            const Complex z = std::conj(frame_phase(theta, n)) * psi(n);
            v(n, b) = z.real();
            v(n, count + b) = z.imag();
        }
    }
    // padded states: only the occupied rows of W contribute
    Eigen::Index support = dim_;
    while (support > 1 && psi(support - 1) == Complex{0.0, 0.0}) {
        --support;
    }
    RealMatrix c = x_eigenvectors_.topRows(support).transpose() * v.topRows(support);
    for (Eigen::Index b = 0; b < count; ++b) {
        const double r = std::abs(betas[b]);
        for (int k = 0; k < dim_; ++k) {
            const Complex z = std::polar(1.0, 2.0 * r * x_eigenvalues_(k)) * Complex{c(k, b), c(k, count + b)};
            c(k, b) = z.real();
            c(k, count + b) = z.imag();
        }
    }
    v.noalias() = x_eigenvectors_ * c;
    ComplexMatrix out(dim_, count);
    for (Eigen::Index b = 0; b < count; ++b) {
        const double theta = std::arg(betas[b]);
        for (int n = 0; n < dim_; ++n) {
            out(n, b) = frame_phase(theta, n) * Complex{v(n, b), v(n, count + b)};
        }
    }
    return out;
}

namespace {

// Basis large enough that D(beta)† keeps a state of this size away from the
// truncation edge for |beta| <= radius.
int automatic_basis(const StateVector& state, double radius) {
    Eigen::Index support = state.size();
    while (support > 1 && std::norm(state(support - 1)) < 1e-24) {
        --support;
    }
    const double reach = radius + std::sqrt(static_cast<double>(support)) + 5.0;
    return std::max(static_cast<int>(state.size()), static_cast<int>(std::ceil(reach * reach)));
}

StateVector padded(const StateVector& state, int basis_dim) {
    const int d = basis_dim > 0 ? basis_dim : static_cast<int>(state.size());
    if (d < state.size()) {
        throw std::invalid_argument("wigner: basis_dim smaller than the state dimension");
    }
    StateVector out = StateVector::Zero(d);
    out.head(state.size()) = state;
    return out;
}

template <typename Vec>
double parity_weighted(const Vec& v) {
    double w = 0.0;
    for (Eigen::Index n = 0; n < v.size(); ++n) {
        w += (n % 2 == 0 ? 1.0 : -1.0) * std::norm(v(n));
    }
    return w;
}

std::vector<double> axis(double lo, double hi, int count) {
    if (count < 1) {
        throw std::invalid_argument("wigner: axis needs at least one point");
    }
    std::vector<double> a(count);
    for (int i = 0; i < count; ++i) {
        a[i] = count == 1 ? lo : lo + (hi - lo) * i / (count - 1);
    }
    return a;
}

}  // namespace

double WignerGrid::integral() const {
    const double dx = x.size() > 1 ? x[1] - x[0] : 1.0;
    const double dp = p.size() > 1 ? p[1] - p[0] : 1.0;
    return values.sum() * dx * dp;
}

WignerGrid wigner(const StateVector& state, const WignerAxes& axes) {
    if (!std::isfinite(axes.x_min) || !std::isfinite(axes.x_max) || !std::isfinite(axes.p_min) ||
        !std::isfinite(axes.p_max)) {
        throw std::invalid_argument("wigner: grid bounds must be finite");
    }
    const double radius = std::hypot(std::max(std::abs(axes.x_min), std::abs(axes.x_max)),
                                     std::max(std::abs(axes.p_min), std::abs(axes.p_max)));
    const StateVector psi =
        padded(state, axes.basis_dim > 0 ? axes.basis_dim : automatic_basis(state, radius));
    const DisplacementBuilder builder(static_cast<int>(psi.size()));
    WignerGrid grid;
    grid.x = axis(axes.x_min, axes.x_max, axes.x_points);
    grid.p = axis(axes.p_min, axes.p_max, axes.p_points);
    grid.values.resize(axes.x_points, axes.p_points);
    const double reliable = 0.8 * static_cast<double>(psi.size() - 1);
    std::vector<Complex> row(axes.p_points);
    for (int i = 0; i < axes.x_points; ++i) {
        for (int j = 0; j < axes.p_points; ++j) {
            row[j] = {grid.x[i], grid.p[j]};
            if (std::norm(row[j]) > reliable) {
                grid.beyond_reliable_region = true;
            }
        }
        const ComplexMatrix displaced = builder.apply_inverse(row, psi);
        for (int j = 0; j < axes.p_points; ++j) {
            grid.values(i, j) = (2.0 / std::numbers::pi) * parity_weighted(displaced.col(j));
        }
    }
    return grid;
}

double wigner_at(const StateVector& state, Complex beta, int basis_dim) {
    const StateVector psi = padded(state, basis_dim > 0 ? basis_dim : automatic_basis(state, std::abs(beta)));
    const DisplacementBuilder builder(static_cast<int>(psi.size()));
    return (2.0 / std::numbers::pi) * parity_weighted(builder.apply_inverse(beta, psi));
}

int jc_fock_resonance(double g, double control_time, int k, int n_max) {
    if (!(g > 0.0) || !(control_time > 0.0)) {
        throw std::invalid_argument("jc_fock_resonance: g and T must be positive");
    }
    if (k < 0) {
        throw std::invalid_argument("jc_fock_resonance: k must be >= 0");
    }
    const double root = std::numbers::pi * (2 * k + 1) / (2.0 * g * control_time);
    const double n = std::round(root * root);
    if (n > static_cast<double>(n_max)) {
        throw std::out_of_range("jc_fock_resonance: resonant Fock number " + std::to_string(n) +
                                " exceeds n_max = " + std::to_string(n_max) +
                                "; increase n_max to at least that value");
    }
    return static_cast<int>(n);
}

double entanglement_entropy_bits(const StateVector& psi, int field_dim, int atomic_dim) {
    if (psi.size() != static_cast<Eigen::Index>(field_dim) * atomic_dim) {
        throw std::invalid_argument("entanglement_entropy_bits: dimension mismatch");
    }
    using RowMajor = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
    const Eigen::Map<const RowMajor> c(psi.data(), field_dim, atomic_dim);
    const Eigen::JacobiSVD<ComplexMatrix> svd{ComplexMatrix(c)};
    double s = 0.0;
    const double norm = psi.squaredNorm();
    for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i) {
        const double p = svd.singularValues()(i) * svd.singularValues()(i) / norm;
        if (p > 1e-300) {
            s -= p * std::log2(p);
        }
    }
    return s;
}

}  // namespace qfc
