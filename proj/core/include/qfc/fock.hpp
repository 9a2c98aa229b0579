// fock.hpp: truncated Fock space, atomic level structure and the composite
// (field ⊗ atoms) operator algebra used by every other module.

#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstddef>
#include <utility>
#include <vector>

namespace qfc {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using StateVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

// Truncated single-mode Fock space.
//
// n_max is the excitation cap of the control projector; n_trunc is the last
// Fock index kept in the numerics. The buffer n_trunc - n_max absorbs the
// photons the dynamics pushes above the cap.
struct FieldSpace {
    int n_max{0};
    int n_trunc{0};

    // Default buffer: n_trunc = 2 n_max, raised for small caps until the
    // Poisson tail of a coherent state with |alpha|^2 = n_max beyond n_trunc
    // is below 1e-8.
    static FieldSpace with_default_buffer(int n_max);

    int dim() const noexcept { return n_trunc + 1; }
    void validate() const;

    bool operator==(const FieldSpace&) const = default;
};

// Smallest truncation n such that sum_{k>n} Poisson(mean)(k) < tail.
int poisson_truncation(double mean, double tail);

// One multi-level emitter: level energies (units of omega_c) and the real,
// symmetric, zero-diagonal coupling matrix g_kl multiplying sigma_kl X.
struct Atom {
    RealVector energies;
    RealMatrix couplings;

    int levels() const noexcept { return static_cast<int>(energies.size()); }
};

struct AtomicSystem {
    std::vector<Atom> atoms;

    int count() const noexcept { return static_cast<int>(atoms.size()); }
    int dim() const noexcept;
    void validate() const;
};

// Basis ordering contract: flat = n * atomic_dim + m, where m is the
// lexicographic atomic multi-index with atom 0 most significant.
class CompositeSpace {
public:
    CompositeSpace(FieldSpace field, AtomicSystem atoms);

    const FieldSpace& field() const noexcept { return field_; }
    const AtomicSystem& atoms() const noexcept { return atoms_; }

    int field_dim() const noexcept { return field_.dim(); }
    int atomic_dim() const noexcept { return atomic_dim_; }
    int dim() const noexcept { return field_.dim() * atomic_dim_; }

    int flatten(int fock, int atomic) const;
    std::pair<int, int> unflatten(int flat) const;

    // Atomic multi-index <-> flat atomic index.
    int atomic_index(const std::vector<int>& levels) const;
    std::vector<int> atomic_levels(int atomic) const;

private:
    FieldSpace field_;
    AtomicSystem atoms_;
    int atomic_dim_;
};

ComplexMatrix annihilation_matrix(const FieldSpace& space);
ComplexMatrix number_matrix(const FieldSpace& space);

// X = (a + a†)/2 and P = (a - a†)/(2i).
struct Quadratures {
    ComplexMatrix x;
    ComplexMatrix p;
};
Quadratures quadratures(const FieldSpace& space);

// Diagonal (-1)^n on the field.
ComplexMatrix field_parity_matrix(int dim);

// |k><l| on atom `atom`, identity on the other atoms. Indices are 0-based.
ComplexMatrix transition_operator_matrix(const AtomicSystem& atoms, int atom, int k, int l);

ComplexMatrix embed_field_operator(const ComplexMatrix& op, const CompositeSpace& space);
ComplexMatrix embed_atomic_operator(const ComplexMatrix& op, const CompositeSpace& space);

ComplexMatrix kronecker(const ComplexMatrix& a, const ComplexMatrix& b);

// |field> ⊗ |atoms> in the composite ordering.
StateVector product_state(const StateVector& field, const StateVector& atoms);

StateVector fock_state(int n, int dim);

// Truncated coherent state on Fock indices 0..dim-1, renormalized.
StateVector coherent_state(Complex alpha, int dim);

double max_abs_deviation_from_hermitian(const ComplexMatrix& m);

}  // namespace qfc
