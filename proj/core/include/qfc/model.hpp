// model.hpp: the joint field/emitter Hamiltonian and the named scenarios.
//
//   H = omega_c a†a + sum_{j,k} w_k^(j) sigma_kk^(j) + sum_{j, k!=l} g_kl^(j) sigma_kl^(j) X
//
// with X = (a + a†)/2. No rotating-wave approximation is made anywhere.

#pragma once

#include "qfc/fock.hpp"
#include "qfc/targets.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace qfc {

struct ScenarioSpec {
    double omega_c{1.0};
    AtomicSystem atoms;
    FieldSpace field;
    double control_time{0.0};
    StateVector initial_atomic;
    StateVector target_atomic;
    std::string label;

    CompositeSpace space() const { return CompositeSpace(field, atoms); }
    void validate() const;
};

ComplexMatrix build_hamiltonian(const ScenarioSpec& spec);

// sum_j sum_{k!=l} g_kl^(j) sigma_kl^(j) on the atomic space.
ComplexMatrix atomic_coupling_operator(const AtomicSystem& atoms);
ComplexMatrix atomic_energy_operator(const AtomicSystem& atoms);

enum class Preset { rabi_resonant, multilevel_jc, multilevel_rsc, multilevel_dr, multiqubit };

Preset parse_preset(std::string_view name);
std::string to_string(Preset preset);

// Preset parameters. `g` is always the coefficient of (a + a†), i.e. the
// coupling of the textbook Rabi form g sigma_x (a + a†); presets store twice
// that value in the g_kl matrix because the generic Hamiltonian couples to X.
struct PresetParams {
    std::optional<double> g;
    std::optional<double> control_time;
    std::optional<double> theta;
    double phi{0.0};
    int n_max{80};
    std::optional<int> n_trunc;
    int n_atoms{3};
    QubitTarget target{QubitTarget::ghz};
};

ScenarioSpec make_preset(Preset preset, const PresetParams& params);

// Named multilevel spectra (level order G, E1..E4, F).
RealVector multilevel_energies(Preset preset);
double multilevel_default_coupling(Preset preset);

// One resonant two-level emitter with Rabi coupling g.
Atom rabi_atom(double omega_e, double g);

}  // namespace qfc
