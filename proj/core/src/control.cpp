#include "qfc/control.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qfc {

namespace {

// Normalized real coherent-state amplitudes r^n / sqrt(n!) on 0..dim-1.
RealVector coherent_radial(double r, int dim) {
    RealVector c(dim);
    c(0) = std::exp(-0.5 * r * r);
    for (int n = 1; n < dim; ++n) {
        c(n) = c(n - 1) * r / std::sqrt(static_cast<double>(n));
    }
    return c / c.norm();
}

// Polar grid over the disk |alpha| <= radius_max.
struct PolarGrid {
    RealVector radii;
    RealVector phases;

    PolarGrid(double radius_max, int radial_points, int phase_points) {
        if (radial_points < 2 || phase_points < 1) {
            throw std::invalid_argument("coherent grid needs >= 2 radial and >= 1 phase points");
        }
        radii = RealVector::LinSpaced(radial_points, 0.0, radius_max);
        phases.resize(phase_points);
        for (int j = 0; j < phase_points; ++j) {
            phases(j) = 2.0 * std::numbers::pi * j / phase_points;
        }
    }
};

// table(j, n) = exp(sign * i * n * phase_j) for n = offset .. offset + count - 1
ComplexMatrix phase_table(const RealVector& phases, int offset, int count, double sign) {
    ComplexMatrix table(phases.size(), count);
    for (Eigen::Index j = 0; j < phases.size(); ++j) {
        for (int k = 0; k < count; ++k) {
            table(j, k) = std::polar(1.0, sign * (offset + k) * phases(j));
        }
    }
    return table;
}

void fix_phase(StateVector& v) {
    Eigen::Index idx = 0;
    v.cwiseAbs().maxCoeff(&idx);
    const Complex z = v(idx);
    if (std::abs(z) > 0.0) {
        v *= std::conj(z) / std::abs(z);
    }
}

void check_control_dims(const ComplexMatrix& m, int n_max, const char* where) {
    if (m.rows() != m.cols() || m.rows() == 0) {
        throw std::invalid_argument(std::string(where) + ": matrix must be square and non-empty");
    }
    if (n_max < 0 || n_max >= m.rows()) {
        throw std::invalid_argument(std::string(where) + ": n_max = " + std::to_string(n_max) +
                                    " out of range for field dimension " + std::to_string(m.rows()));
    }
}

double parity_of(const StateVector& v) {
    double p = 0.0;
    for (Eigen::Index n = 0; n < v.size(); ++n) {
        p += (n % 2 == 0 ? 1.0 : -1.0) * std::norm(v(n));
    }
    return p;
}

}  // namespace

ComplexMatrix transition_operator(const ComplexMatrix& u, const CompositeSpace& space, const StateVector& initial,
                                  const StateVector& target) {
    const int da = space.atomic_dim();
    const int df = space.field_dim();
    if (u.rows() != space.dim() || u.cols() != space.dim()) {
        throw std::invalid_argument("transition_operator: propagator dimension " + std::to_string(u.rows()) +
                                    " does not match composite dimension " + std::to_string(space.dim()));
    }
    if (initial.size() != da || target.size() != da) {
        throw std::invalid_argument("transition_operator: atomic states must have dimension " + std::to_string(da));
    }
    ComplexMatrix t(df, df);
    for (int n = 0; n < df; ++n) {
        for (int m = 0; m < df; ++m) {
            t(n, m) = target.dot(u.block(n * da, m * da, da, da) * initial);
        }
    }
    return t;
}

TransitionOperatorFactory::TransitionOperatorFactory(const SpectralDecomposition& decomp, const CompositeSpace& space,
                                                     const StateVector& initial, const StateVector& target)
    : energies_(decomp.eigenvalues) {
    const int da = space.atomic_dim();
    const int df = space.field_dim();
    if (decomp.dim() != space.dim()) {
        throw std::invalid_argument("TransitionOperatorFactory: decomposition does not match composite space");
    }
    if (initial.size() != da || target.size() != da) {
        throw std::invalid_argument("TransitionOperatorFactory: atomic states must have dimension " +
                                    std::to_string(da));
    }
    const auto& v = decomp.eigenvectors;
    left_.resize(df, decomp.dim());
    ComplexMatrix initial_rows(df, decomp.dim());
    for (int n = 0; n < df; ++n) {
        left_.row(n) = target.adjoint() * v.middleRows(n * da, da);
        initial_rows.row(n) = initial.adjoint() * v.middleRows(n * da, da);
    }
    right_ = initial_rows.adjoint();
}

ComplexMatrix TransitionOperatorFactory::at(double t) const {
    const StateVector phases = (energies_ * (-t)).unaryExpr([](double x) { return std::polar(1.0, x); });
    return left_ * phases.asDiagonal() * right_;
}

ComplexMatrix control_operator(const ComplexMatrix& transition, int n_max) {
    check_control_dims(transition, n_max, "control_operator");
    const auto capped = transition.topRows(n_max + 1);
    ComplexMatrix m = capped.adjoint() * capped;
    // exact Hermiticity
    return (m + m.adjoint().eval()) * 0.5;
}

ControlSolution solve_optimal(const ComplexMatrix& m, int n_max, int count, Subspace subspace) {
    check_control_dims(m, n_max, "solve_optimal");
    if (count < 1) {
        throw std::invalid_argument("solve_optimal: count must be >= 1");
    }
    const int dim = static_cast<int>(m.rows());
    const int sub = subspace == Subspace::restricted ? n_max + 1 : dim;
    const ComplexMatrix block = m.topLeftCorner(sub, sub);
    const SpectralDecomposition decomp = eigendecompose((block + block.adjoint()) * 0.5, 1e-10);

    ControlSolution out;
    out.n_max = n_max;
    out.subspace = subspace;
    const int take = std::min(count, sub);
    for (int i = 0; i < take; ++i) {
        const Eigen::Index col = sub - 1 - i;
        out.spectrum.push_back(decomp.eigenvalues(col));
        StateVector phi = StateVector::Zero(dim);
        phi.head(sub) = decomp.eigenvectors.col(col);
        phi.normalize();
        fix_phase(phi);
        out.states.push_back(std::move(phi));
    }
    out.fidelity = out.spectrum.front();
    return out;
}

double coherent_expectation(const ComplexMatrix& m, Complex alpha) {
    const StateVector c = coherent_state(alpha, static_cast<int>(m.rows()));
    return std::real(c.dot(m * c));
}

CoherentBaseline coherent_baseline(const ComplexMatrix& m, int n_max, const BaselineOptions& options) {
    check_control_dims(m, n_max, "coherent_baseline");
    const int d = static_cast<int>(m.rows());
    const double r_max = std::sqrt(static_cast<double>(n_max));
    const PolarGrid grid(r_max, options.radial_points, options.phase_points);

    // <alpha|M|alpha> = sum_k S_k(r) exp(i k phi), S_k = sum_{m-n=k} c_n c_m M_nm
    const ComplexMatrix table = phase_table(grid.phases, -(d - 1), 2 * d - 1, 1.0);
    struct Candidate {
        double value;
        double r;
        double phi;
    };
    std::vector<Candidate> candidates;
    candidates.reserve(static_cast<std::size_t>(grid.radii.size() * grid.phases.size()));
    StateVector s(2 * d - 1);
    for (Eigen::Index i = 0; i < grid.radii.size(); ++i) {
        const double r = grid.radii(i);
        const RealVector c = coherent_radial(r, d);
        s.setZero();
        for (int col = 0; col < d; ++col) {
            for (int row = 0; row < d; ++row) {
                s(col - row + d - 1) += c(row) * c(col) * m(row, col);
            }
        }
        const StateVector values = table * s;
        const Eigen::Index nphase = (r == 0.0) ? 1 : grid.phases.size();
        for (Eigen::Index j = 0; j < nphase; ++j) {
            candidates.push_back({values(j).real(), r, grid.phases(j)});
        }
    }
    const int starts = std::clamp(options.refine_starts, 1, static_cast<int>(candidates.size()));
    std::partial_sort(candidates.begin(), candidates.begin() + starts, candidates.end(),
                      [](const Candidate& a, const Candidate& b) { return a.value > b.value; });

    const double initial_step = r_max / (options.radial_points - 1);
    CoherentBaseline best{candidates.front().value, std::polar(candidates.front().r, candidates.front().phi)};
    for (int s_idx = 0; s_idx < starts; ++s_idx) {
        double r = candidates[s_idx].r;
        double phi = candidates[s_idx].phi;
        double value = coherent_expectation(m, std::polar(r, phi));
        double step = std::max(initial_step, 2.0 * options.tolerance);
        // polar compass search; r clamped to the feasible disk
        while (step >= options.tolerance) {
            bool improved = false;
            const double dphi = step / std::max(r, step);
            const std::pair<double, double> moves[] = {{step, 0.0}, {-step, 0.0}, {0.0, dphi}, {0.0, -dphi}};
            for (const auto& [dr, dp] : moves) {
                const double r_try = std::clamp(r + dr, 0.0, r_max);
                const double p_try = phi + dp;
                const double v = coherent_expectation(m, std::polar(r_try, p_try));
                if (v > value) {
                    value = v;
                    r = r_try;
                    phi = p_try;
                    improved = true;
                    break;
                }
            }
            if (!improved) {
                step *= 0.5;
            }
        }
        if (value > best.fidelity) {
            best = {value, std::polar(r, phi)};
        }
    }
    return best;
}

Complex coherent_approximation(const StateVector& phi) {
    Complex a{0.0, 0.0};
    for (Eigen::Index n = 1; n < phi.size(); ++n) {
        a += std::conj(phi(n - 1)) * std::sqrt(static_cast<double>(n)) * phi(n);
    }
    return a;
}

CoherentOverlap max_coherent_overlap(const StateVector& psi, double radius_sq_max, const BaselineOptions& options) {
    const int d = static_cast<int>(psi.size());
    const PolarGrid grid(std::sqrt(radius_sq_max), options.radial_points, options.phase_points);
    const ComplexMatrix table = phase_table(grid.phases, 0, d, -1.0);
    CoherentOverlap best;
    for (Eigen::Index i = 0; i < grid.radii.size(); ++i) {
        const RealVector c = coherent_radial(grid.radii(i), d);
        const StateVector overlaps = table * c.cast<Complex>().cwiseProduct(psi);
        for (Eigen::Index j = 0; j < overlaps.size(); ++j) {
            const double v = std::norm(overlaps(j));
            if (v > best.value) {
                best = {v, std::polar(grid.radii(i), grid.phases(j))};
            }
        }
    }
    return best;
}

ParitySuperposition parity_superposition(const ControlSolution& solution, double degeneracy_tol,
                                         const BaselineOptions& options) {
    if (solution.states.empty()) {
        throw std::invalid_argument("parity_superposition: solution holds no states");
    }
    const double radius_sq = static_cast<double>(solution.n_max);
    ParitySuperposition out;
    out.state = solution.states.front();

    bool eligible = solution.states.size() >= 2 && solution.spectrum[0] - solution.spectrum[1] < degeneracy_tol;
    if (eligible) {
        const double p0 = parity_of(solution.states[0]);
        const double p1 = parity_of(solution.states[1]);
        eligible = std::abs(p0) > 0.99 && std::abs(p1) > 0.99 && p0 * p1 < 0.0;
    }
    if (!eligible) {
        const CoherentOverlap ov = max_coherent_overlap(out.state, radius_sq, options);
        out.localization = ov.value;
        out.best_alpha = ov.alpha;
        return out;
    }

    const StateVector& phi0 = solution.states[0];
    const StateVector& phi1 = solution.states[1];
    const int d = static_cast<int>(phi0.size());
    const PolarGrid grid(std::sqrt(radius_sq), options.radial_points, options.phase_points);
    const ComplexMatrix table = phase_table(grid.phases, 0, d, -1.0);
    const Eigen::Index nr = grid.radii.size();
    const Eigen::Index np = grid.phases.size();
    ComplexMatrix o0(nr, np);
    ComplexMatrix o1(nr, np);
    for (Eigen::Index i = 0; i < nr; ++i) {
        const StateVector c = coherent_radial(grid.radii(i), d).cast<Complex>();
        o0.row(i) = (table * c.cwiseProduct(phi0)).transpose();
        o1.row(i) = (table * c.cwiseProduct(phi1)).transpose();
    }

    constexpr int kChiSteps = 64;
    out.applied = true;
    out.localization = -1.0;
    for (int k = 0; k < kChiSteps; ++k) {
        const double chi = 2.0 * std::numbers::pi * k / kChiSteps;
        const Complex w = std::polar(1.0, chi);
        Eigen::Index bi = 0;
        Eigen::Index bj = 0;
        const double v = (o0 + w * o1).cwiseAbs2().maxCoeff(&bi, &bj) * 0.5;
        if (v > out.localization) {
            out.localization = v;
            out.chi = chi;
            out.best_alpha = std::polar(grid.radii(bi), grid.phases(bj));
        }
    }
    out.state = (phi0 + std::polar(1.0, out.chi) * phi1) / std::sqrt(2.0);
    out.state.normalize();
    return out;
}

double propagated_fidelity(const SpectralDecomposition& decomp, const CompositeSpace& space, const StateVector& phi,
                           const StateVector& initial, const StateVector& target, double t, int n_max) {
    if (phi.size() != space.field_dim()) {
        throw std::invalid_argument("propagated_fidelity: field state dimension mismatch");
    }
    if (n_max < 0 || n_max >= space.field_dim()) {
        throw std::invalid_argument("propagated_fidelity: n_max out of range");
    }
    const StateVector psi = evolve_state(decomp, product_state(phi, initial), t);
    const int da = space.atomic_dim();
    double p = 0.0;
    for (int n = 0; n <= n_max; ++n) {
        p += std::norm(target.dot(psi.segment(n * da, da)));
    }
    return p;
}

ControlProblem::ControlProblem(ScenarioSpec spec)
    : spec_((spec.validate(), std::move(spec))),
      space_(spec_.space()),
      decomp_(std::make_shared<const SpectralDecomposition>(eigendecompose(build_hamiltonian(spec_)))),
      factory_(*decomp_, space_, spec_.initial_atomic, spec_.target_atomic) {}

ControlProblem::ControlProblem(ScenarioSpec spec, std::shared_ptr<const SpectralDecomposition> decomp)
    : spec_((spec.validate(), std::move(spec))),
      space_(spec_.space()),
      decomp_(decomp ? std::move(decomp) : throw std::invalid_argument("ControlProblem: null decomposition")),
      factory_((decomp_->dim() == space_.dim()
                    ? *decomp_
                    : throw std::invalid_argument("ControlProblem: decomposition dimension does not match scenario")),
               space_, spec_.initial_atomic, spec_.target_atomic) {}

ComplexMatrix ControlProblem::control_operator_at(double t) const {
    return control_operator(factory_.at(t), spec_.field.n_max);
}

ControlSolution ControlProblem::solve_at(double t, int count, Subspace subspace) const {
    return solve_optimal(control_operator_at(t), spec_.field.n_max, count, subspace);
}

double ControlProblem::propagated_fidelity_of(const StateVector& phi, double t) const {
    return propagated_fidelity(*decomp_, space_, phi, spec_.initial_atomic, spec_.target_atomic, t,
                               spec_.field.n_max);
}

}  // namespace qfc
