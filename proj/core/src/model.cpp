#include "qfc/model.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qfc {

namespace {

constexpr double kNormTol = 1e-10;

double require(const std::optional<double>& value, const char* name, Preset preset) {
    if (!value) {
        throw std::invalid_argument("preset " + to_string(preset) + ": missing required parameter '" + name + "'");
    }
    return *value;
}

FieldSpace resolve_field(const PresetParams& params) {
    FieldSpace f = FieldSpace::with_default_buffer(params.n_max);
    if (params.n_trunc) {
        f.n_trunc = *params.n_trunc;
    }
    f.validate();
    return f;
}

}  // namespace

void ScenarioSpec::validate() const {
    if (!(omega_c > 0.0) || !std::isfinite(omega_c)) {
        throw std::invalid_argument("scenario: omega_c must be positive and finite");
    }
    if (!(control_time >= 0.0) || !std::isfinite(control_time)) {
        throw std::invalid_argument("scenario: control_time must be finite and >= 0");
    }
    field.validate();
    atoms.validate();
    const int da = atoms.dim();
    if (initial_atomic.size() != da) {
        throw std::invalid_argument("scenario: initial atomic state has dimension " +
                                    std::to_string(initial_atomic.size()) + ", atomic space has " +
                                    std::to_string(da));
    }
    if (target_atomic.size() != da) {
        throw std::invalid_argument("scenario: target atomic state has dimension " +
                                    std::to_string(target_atomic.size()) + ", atomic space has " +
                                    std::to_string(da));
    }
    if (std::abs(initial_atomic.norm() - 1.0) > kNormTol) {
        throw std::invalid_argument("scenario: initial atomic state is not normalized");
    }
    if (std::abs(target_atomic.norm() - 1.0) > kNormTol) {
        throw std::invalid_argument("scenario: target atomic state is not normalized");
    }
}

ComplexMatrix atomic_energy_operator(const AtomicSystem& atoms) {
    const int da = atoms.dim();
    ComplexMatrix h = ComplexMatrix::Zero(da, da);
    for (int j = 0; j < atoms.count(); ++j) {
        const Atom& a = atoms.atoms[j];
        for (int k = 0; k < a.levels(); ++k) {
            if (a.energies(k) != 0.0) {
                h += a.energies(k) * transition_operator_matrix(atoms, j, k, k);
            }
        }
    }
    return h;
}

ComplexMatrix atomic_coupling_operator(const AtomicSystem& atoms) {
    const int da = atoms.dim();
    ComplexMatrix c = ComplexMatrix::Zero(da, da);
    for (int j = 0; j < atoms.count(); ++j) {
        const Atom& a = atoms.atoms[j];
        for (int k = 0; k < a.levels(); ++k) {
            for (int l = 0; l < a.levels(); ++l) {
                if (k != l && a.couplings(k, l) != 0.0) {
                    c += a.couplings(k, l) * transition_operator_matrix(atoms, j, k, l);
                }
            }
        }
    }
    return c;
}

ComplexMatrix build_hamiltonian(const ScenarioSpec& spec) {
    spec.field.validate();
    spec.atoms.validate();
    const CompositeSpace space = spec.space();
    const int df = space.field_dim();
    const int da = space.atomic_dim();

    const ComplexMatrix x = quadratures(spec.field).x;
    const ComplexMatrix h_atom = atomic_energy_operator(spec.atoms);
    const ComplexMatrix coupling = atomic_coupling_operator(spec.atoms);

    ComplexMatrix h = ComplexMatrix::Zero(space.dim(), space.dim());
    for (int n = 0; n < df; ++n) {
        auto diag_block = h.block(n * da, n * da, da, da);
        diag_block = h_atom;
        diag_block.diagonal().array() += spec.omega_c * n;
        // X only connects n and n +- 1
        for (int m : {n - 1, n + 1}) {
            if (m >= 0 && m < df) {
                h.block(n * da, m * da, da, da) = x(n, m) * coupling;
            }
        }
    }
    return h;
}

Preset parse_preset(std::string_view name) {
    if (name == "rabi_resonant") return Preset::rabi_resonant;
    if (name == "multilevel_jc") return Preset::multilevel_jc;
    if (name == "multilevel_rsc") return Preset::multilevel_rsc;
    if (name == "multilevel_dr") return Preset::multilevel_dr;
    if (name == "multiqubit") return Preset::multiqubit;
    throw std::invalid_argument("unknown preset '" + std::string(name) +
                                "' (expected rabi_resonant, multilevel_jc, multilevel_rsc, multilevel_dr, multiqubit)");
}

std::string to_string(Preset preset) {
    switch (preset) {
        case Preset::rabi_resonant: return "rabi_resonant";
        case Preset::multilevel_jc: return "multilevel_jc";
        case Preset::multilevel_rsc: return "multilevel_rsc";
        case Preset::multilevel_dr: return "multilevel_dr";
        case Preset::multiqubit: return "multiqubit";
    }
    return "unknown";
}

RealVector multilevel_energies(Preset preset) {
    RealVector e(6);
    switch (preset) {
        case Preset::multilevel_jc:
        case Preset::multilevel_rsc:
            e << 0.0, 0.86, 0.92, 1.1, 1.2, 2.0;
            return e;
        case Preset::multilevel_dr:
            e << 0.0, 0.32, 0.35, 0.4, 0.42, 0.5;
            return e;
        default:
            throw std::invalid_argument("multilevel_energies: " + to_string(preset) + " is not a multilevel preset");
    }
}

double multilevel_default_coupling(Preset preset) {
    switch (preset) {
        case Preset::multilevel_jc: return 0.001;
        case Preset::multilevel_rsc: return 0.1;
        case Preset::multilevel_dr: return 0.5;
        default:
            throw std::invalid_argument("multilevel_default_coupling: " + to_string(preset) +
                                        " is not a multilevel preset");
    }
}

Atom rabi_atom(double omega_e, double g) {
    Atom a;
    a.energies = RealVector(2);
    a.energies << 0.0, omega_e;
    a.couplings = RealMatrix::Zero(2, 2);
    a.couplings(0, 1) = a.couplings(1, 0) = 2.0 * g;
    return a;
}

ScenarioSpec make_preset(Preset preset, const PresetParams& params) {
    ScenarioSpec spec;
    spec.field = resolve_field(params);
    spec.label = to_string(preset);

    switch (preset) {
        case Preset::rabi_resonant: {
            const double g = require(params.g, "g", preset);
            spec.control_time = require(params.control_time, "T", preset);
            const double theta = require(params.theta, "theta", preset);
            spec.atoms.atoms.push_back(rabi_atom(1.0, g));
            spec.target_atomic = bloch_target(theta, params.phi);
            break;
        }
        case Preset::multilevel_jc:
        case Preset::multilevel_rsc:
        case Preset::multilevel_dr: {
            const double g = params.g.value_or(multilevel_default_coupling(preset));
            spec.control_time = require(params.control_time, "T", preset);
            Atom a;
            a.energies = multilevel_energies(preset);
            a.couplings = RealMatrix::Zero(6, 6);
            // G <-> E_i and E_i <-> F only
            for (int e = 1; e <= 4; ++e) {
                a.couplings(0, e) = a.couplings(e, 0) = 2.0 * g;
                a.couplings(e, 5) = a.couplings(5, e) = 2.0 * g;
            }
            spec.atoms.atoms.push_back(std::move(a));
            spec.target_atomic = fock_state(5, 6);
            break;
        }
        case Preset::multiqubit: {
            const double g = params.g.value_or(0.01);
            spec.control_time = require(params.control_time, "T", preset);
            for (int j = 0; j < params.n_atoms; ++j) {
                spec.atoms.atoms.push_back(rabi_atom(1.0, g));
            }
            spec.target_atomic = named_target(params.target, params.n_atoms);
            spec.label += "_" + to_string(params.target);
            break;
        }
    }
    spec.initial_atomic = ground_state(spec.atoms.dim());
    spec.validate();
    return spec;
}

}  // namespace qfc
