#include "qfc/fock.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace qfc {

namespace {

constexpr double kCouplingSymmetryTol = 1e-12;

std::string atom_label(int j) { return "atom " + std::to_string(j); }

}  // namespace

int poisson_truncation(double mean, double tail) {
    if (mean < 0.0 || !std::isfinite(mean)) {
        throw std::invalid_argument("poisson_truncation: mean must be finite and >= 0");
    }
    if (mean == 0.0) {
        return 0;
    }
    const int upper = static_cast<int>(std::ceil(mean + 40.0 * std::sqrt(mean) + 60.0));
    std::vector<double> pmf(static_cast<std::size_t>(upper) + 1);
    for (int k = 0; k <= upper; ++k) {
        pmf[k] = std::exp(k * std::log(mean) - mean - std::lgamma(k + 1.0));
    }
    // tail_after[k] = sum_{j>k} pmf[j]
    double acc = 0.0;
    int answer = upper;
    for (int k = upper; k >= 0; --k) {
        if (acc >= tail) {
            break;
        }
        answer = k;
        acc += pmf[k];
    }
    return answer;
}

FieldSpace FieldSpace::with_default_buffer(int n_max) {
    if (n_max < 0) {
        throw std::invalid_argument("FieldSpace: n_max must be >= 0, got " + std::to_string(n_max));
    }
    const int leakage_bound = poisson_truncation(static_cast<double>(n_max), 1e-8);
    return FieldSpace{n_max, std::max(2 * n_max, leakage_bound)};
}

void FieldSpace::validate() const {
    if (n_max < 0) {
        throw std::invalid_argument("FieldSpace: n_max must be >= 0, got " + std::to_string(n_max));
    }
    if (n_trunc < n_max) {
        throw std::invalid_argument("FieldSpace: n_trunc (" + std::to_string(n_trunc) +
                                    ") must be >= n_max (" + std::to_string(n_max) + ")");
    }
}

int AtomicSystem::dim() const noexcept {
    int d = 1;
    for (const auto& a : atoms) {
        d *= a.levels();
    }
    return d;
}

void AtomicSystem::validate() const {
    if (atoms.empty()) {
        throw std::invalid_argument("AtomicSystem: at least one atom is required");
    }
    for (int j = 0; j < count(); ++j) {
        const Atom& a = atoms[j];
        if (a.levels() < 2) {
            throw std::invalid_argument(atom_label(j) + ": needs at least 2 levels");
        }
        if (a.couplings.rows() != a.levels() || a.couplings.cols() != a.levels()) {
            throw std::invalid_argument(atom_label(j) + ": coupling matrix must be " +
                                        std::to_string(a.levels()) + "x" + std::to_string(a.levels()));
        }
        if (!a.energies.allFinite() || !a.couplings.allFinite()) {
            throw std::invalid_argument(atom_label(j) + ": energies and couplings must be finite");
        }
        for (int k = 0; k < a.levels(); ++k) {
            if (a.couplings(k, k) != 0.0) {
                throw std::invalid_argument(atom_label(j) + ": diagonal coupling g_kk must vanish (k=" +
                                            std::to_string(k + 1) + ")");
            }
            for (int l = k + 1; l < a.levels(); ++l) {
                if (std::abs(a.couplings(k, l) - a.couplings(l, k)) > kCouplingSymmetryTol) {
                    throw std::invalid_argument(atom_label(j) + ": coupling matrix is not symmetric at (" +
                                                std::to_string(k + 1) + "," + std::to_string(l + 1) + ")");
                }
            }
        }
    }
}

CompositeSpace::CompositeSpace(FieldSpace field, AtomicSystem atoms)
    : field_(field), atoms_(std::move(atoms)), atomic_dim_(0) {
    field_.validate();
    atoms_.validate();
    atomic_dim_ = atoms_.dim();
}

int CompositeSpace::flatten(int fock, int atomic) const {
    if (fock < 0 || fock >= field_dim() || atomic < 0 || atomic >= atomic_dim_) {
        throw std::out_of_range("CompositeSpace::flatten: index out of range");
    }
    return fock * atomic_dim_ + atomic;
}

std::pair<int, int> CompositeSpace::unflatten(int flat) const {
    if (flat < 0 || flat >= dim()) {
        throw std::out_of_range("CompositeSpace::unflatten: index out of range");
    }
    return {flat / atomic_dim_, flat % atomic_dim_};
}

int CompositeSpace::atomic_index(const std::vector<int>& levels) const {
    if (static_cast<int>(levels.size()) != atoms_.count()) {
        throw std::invalid_argument("CompositeSpace::atomic_index: expected one level per atom");
    }
    int idx = 0;
    for (int j = 0; j < atoms_.count(); ++j) {
        const int nl = atoms_.atoms[j].levels();
        if (levels[j] < 0 || levels[j] >= nl) {
            throw std::out_of_range("CompositeSpace::atomic_index: level out of range for " + atom_label(j));
        }
        idx = idx * nl + levels[j];
    }
    return idx;
}

std::vector<int> CompositeSpace::atomic_levels(int atomic) const {
    if (atomic < 0 || atomic >= atomic_dim_) {
        throw std::out_of_range("CompositeSpace::atomic_levels: index out of range");
    }
    std::vector<int> levels(atoms_.count());
    for (int j = atoms_.count() - 1; j >= 0; --j) {
        const int nl = atoms_.atoms[j].levels();
        levels[j] = atomic % nl;
        atomic /= nl;
    }
    return levels;
}

ComplexMatrix annihilation_matrix(const FieldSpace& space) {
    space.validate();
    const int d = space.dim();
    ComplexMatrix a = ComplexMatrix::Zero(d, d);
    for (int n = 1; n < d; ++n) {
        a(n - 1, n) = std::sqrt(static_cast<double>(n));
    }
    return a;
}

ComplexMatrix number_matrix(const FieldSpace& space) {
    space.validate();
    RealVector n = RealVector::LinSpaced(space.dim(), 0.0, static_cast<double>(space.n_trunc));
    return n.cast<Complex>().asDiagonal();
}

Quadratures quadratures(const FieldSpace& space) {
    const ComplexMatrix a = annihilation_matrix(space);
    const ComplexMatrix ad = a.adjoint();
    const Complex two_i{0.0, 2.0};
    return {(a + ad) / 2.0, (a - ad) / two_i};
}

ComplexMatrix field_parity_matrix(int dim) {
    ComplexMatrix p = ComplexMatrix::Zero(dim, dim);
    for (int n = 0; n < dim; ++n) {
        p(n, n) = (n % 2 == 0) ? 1.0 : -1.0;
    }
    return p;
}

ComplexMatrix transition_operator_matrix(const AtomicSystem& atoms, int atom, int k, int l) {
    if (atom < 0 || atom >= atoms.count()) {
        throw std::out_of_range("transition_operator_matrix: atom index " + std::to_string(atom) +
                                " out of range [0, " + std::to_string(atoms.count()) + ")");
    }
    const int nl = atoms.atoms[atom].levels();
    if (k < 0 || k >= nl) {
        throw std::out_of_range("transition_operator_matrix: level index k=" + std::to_string(k) +
                                " out of range for " + atom_label(atom));
    }
    if (l < 0 || l >= nl) {
        throw std::out_of_range("transition_operator_matrix: level index l=" + std::to_string(l) +
                                " out of range for " + atom_label(atom));
    }
    ComplexMatrix result = ComplexMatrix::Identity(1, 1);
    for (int j = 0; j < atoms.count(); ++j) {
        const int d = atoms.atoms[j].levels();
        ComplexMatrix factor;
        if (j == atom) {
            factor = ComplexMatrix::Zero(d, d);
            factor(k, l) = 1.0;
        } else {
            factor = ComplexMatrix::Identity(d, d);
        }
        result = kronecker(result, factor);
    }
    return result;
}

ComplexMatrix kronecker(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

ComplexMatrix embed_field_operator(const ComplexMatrix& op, const CompositeSpace& space) {
    if (op.rows() != space.field_dim() || op.cols() != space.field_dim()) {
        throw std::invalid_argument("embed_field_operator: operator is " + std::to_string(op.rows()) + "x" +
                                    std::to_string(op.cols()) + ", field dimension is " +
                                    std::to_string(space.field_dim()));
    }
    return kronecker(op, ComplexMatrix::Identity(space.atomic_dim(), space.atomic_dim()));
}

ComplexMatrix embed_atomic_operator(const ComplexMatrix& op, const CompositeSpace& space) {
    if (op.rows() != space.atomic_dim() || op.cols() != space.atomic_dim()) {
        throw std::invalid_argument("embed_atomic_operator: operator is " + std::to_string(op.rows()) + "x" +
                                    std::to_string(op.cols()) + ", atomic dimension is " +
                                    std::to_string(space.atomic_dim()));
    }
    return kronecker(ComplexMatrix::Identity(space.field_dim(), space.field_dim()), op);
}

StateVector product_state(const StateVector& field, const StateVector& atoms) {
    StateVector out(field.size() * atoms.size());
    for (Eigen::Index n = 0; n < field.size(); ++n) {
        out.segment(n * atoms.size(), atoms.size()) = field(n) * atoms;
    }
    return out;
}

StateVector fock_state(int n, int dim) {
    if (n < 0 || n >= dim) {
        throw std::out_of_range("fock_state: |" + std::to_string(n) + "> outside dimension " + std::to_string(dim));
    }
    StateVector v = StateVector::Zero(dim);
    v(n) = 1.0;
    return v;
}

StateVector coherent_state(Complex alpha, int dim) {
    if (dim < 1) {
        throw std::invalid_argument("coherent_state: dimension must be >= 1");
    }
    StateVector v(dim);
    // alpha^n / sqrt(n!) by recursion; the Gaussian prefactor cancels on
    // renormalization but is kept so the vector stays O(1).
    v(0) = std::exp(-0.5 * std::norm(alpha));
    for (int n = 1; n < dim; ++n) {
        v(n) = v(n - 1) * alpha / std::sqrt(static_cast<double>(n));
    }
    return v / v.norm();
}

double max_abs_deviation_from_hermitian(const ComplexMatrix& m) {
    if (m.rows() != m.cols()) {
        return std::numeric_limits<double>::infinity();
    }
    return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

}  // namespace qfc
