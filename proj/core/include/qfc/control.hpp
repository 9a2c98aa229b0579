// control.hpp: optimal initial field states.
//
// For a target emitter prepared in |i> and a desired final state |f>, the
// field-space transition operator T_fi(t) = <f|U(t)|i> defines the control
// operator M = T_fi† Pi T_fi, Pi the projector on Fock states n <= n_max.
// The best achievable target population is the largest eigenvalue of M on
// the excitation-capped subspace; its eigenvector is the optimal field state.

#pragma once

#include "qfc/fock.hpp"
#include "qfc/model.hpp"
#include "qfc/propagator.hpp"

#include <memory>
#include <optional>
#include <vector>

namespace qfc {

// Which initial field states the eigenproblem ranges over.
enum class Subspace {
    restricted,  // Fock indices <= n_max (default)
    full,        // the whole truncated space
};

struct CoherentBaseline {
    double fidelity{0.0};
    Complex alpha{0.0, 0.0};
};

struct ControlSolution {
    std::vector<double> spectrum;     // descending
    std::vector<StateVector> states;  // on the full truncated field space
    double fidelity{0.0};             // spectrum[0]
    int n_max{0};
    Subspace subspace{Subspace::restricted};
    std::optional<CoherentBaseline> baseline;

    const StateVector& optimal_state() const { return states.front(); }
};

// T[n, m] = (<f| ⊗ <n|) U (|i> ⊗ |m>).
ComplexMatrix transition_operator(const ComplexMatrix& u, const CompositeSpace& space, const StateVector& initial,
                                  const StateVector& target);

// Evaluates T_fi(t) = L diag(exp(-iEt)) R from one spectral decomposition,
// with L = (<f| ⊗ 1) V and R = V† (|i> ⊗ 1). Cost per time is
// O(field_dim^2 * dim) instead of the O(dim^3) of forming U(t).
class TransitionOperatorFactory {
public:
    TransitionOperatorFactory(const SpectralDecomposition& decomp, const CompositeSpace& space,
                              const StateVector& initial, const StateVector& target);

    ComplexMatrix at(double t) const;
    int field_dim() const noexcept { return static_cast<int>(left_.rows()); }

private:
    ComplexMatrix left_;
    ComplexMatrix right_;
    RealVector energies_;
};

// M = T† Pi T.
ComplexMatrix control_operator(const ComplexMatrix& transition, int n_max);

// Top `count` eigenpairs of M (restricted to n <= n_max unless `subspace` is
// full). The largest-magnitude amplitude of every returned state is real
// and positive.
ControlSolution solve_optimal(const ComplexMatrix& m, int n_max, int count, Subspace subspace = Subspace::restricted);

struct BaselineOptions {
    int radial_points{200};
    int phase_points{128};
    double tolerance{1e-4};  // final pattern-search step in |delta alpha|
    int refine_starts{8};
};

// max <alpha|M|alpha> over |alpha|^2 <= n_max. Coherent states live on the
// truncated field space of M and are renormalized.
CoherentBaseline coherent_baseline(const ComplexMatrix& m, int n_max, const BaselineOptions& options = {});

// <alpha|M|alpha> for one truncated, renormalized coherent state.
double coherent_expectation(const ComplexMatrix& m, Complex alpha);

// alpha = <X> + i<P> (which equals <a>).
Complex coherent_approximation(const StateVector& phi);

struct ParitySuperposition {
    StateVector state;
    bool applied{false};
    double chi{0.0};
    double localization{0.0};  // max_alpha |<alpha|state>|^2 on the baseline grid
    Complex best_alpha{0.0, 0.0};
};

// Combines the two leading solutions (phi0 + e^{i chi} phi1)/sqrt(2) when they
// are degenerate within `degeneracy_tol` and carry opposite Fock parity,
// choosing chi among 64 uniform values to maximize coherent-state overlap.
// Falls back to phi0 (applied = false) otherwise.
ParitySuperposition parity_superposition(const ControlSolution& solution, double degeneracy_tol = 1e-3,
                                         const BaselineOptions& grid = {});

// Best coherent-state overlap on the polar grid of the baseline, radius up to
// sqrt(radius_sq_max).
struct CoherentOverlap {
    double value{0.0};
    Complex alpha{0.0, 0.0};
};
CoherentOverlap max_coherent_overlap(const StateVector& psi, double radius_sq_max, const BaselineOptions& grid = {});

// <psi(T)| Pi ⊗ |f><f| |psi(T)> for psi(0) = |phi> ⊗ |i>, by direct propagation.
double propagated_fidelity(const SpectralDecomposition& decomp, const CompositeSpace& space, const StateVector& phi,
                           const StateVector& initial, const StateVector& target, double t, int n_max);

// A scenario with its Hamiltonian diagonalized once; solves the control
// problem at any number of control times.
class ControlProblem {
public:
    explicit ControlProblem(ScenarioSpec spec);
    // Reuses a decomposition of build_hamiltonian(spec) computed elsewhere.
    ControlProblem(ScenarioSpec spec, std::shared_ptr<const SpectralDecomposition> decomp);

    const ScenarioSpec& spec() const noexcept { return spec_; }
    const CompositeSpace& space() const noexcept { return space_; }
    const SpectralDecomposition& decomposition() const noexcept { return *decomp_; }
    std::shared_ptr<const SpectralDecomposition> shared_decomposition() const noexcept { return decomp_; }

    ComplexMatrix transition_at(double t) const { return factory_.at(t); }
    ComplexMatrix control_operator_at(double t) const;

    ControlSolution solve_at(double t, int count = 2, Subspace subspace = Subspace::restricted) const;
    ControlSolution solve(int count = 2, Subspace subspace = Subspace::restricted) const {
        return solve_at(spec_.control_time, count, subspace);
    }

    double propagated_fidelity_of(const StateVector& phi, double t) const;

private:
    ScenarioSpec spec_;
    CompositeSpace space_;
    std::shared_ptr<const SpectralDecomposition> decomp_;
    TransitionOperatorFactory factory_;
};

}  // namespace qfc
