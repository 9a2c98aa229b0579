// targets.hpp: named atomic target states.

#pragma once

#include "qfc/fock.hpp"

#include <string>
#include <string_view>

namespace qfc {

enum class QubitTarget { ghz, w, all_excited, all_plus };

QubitTarget parse_qubit_target(std::string_view name);
std::string to_string(QubitTarget target);

// Register of n_atoms qubits in lexicographic order (G = 0, E = 1, first
// qubit most significant).
StateVector named_target(QubitTarget target, int n_atoms);

// cos(theta/2)|G> + e^{i phi} sin(theta/2)|E>.
StateVector bloch_target(double theta, double phi);

StateVector ground_state(int atomic_dim);

}  // namespace qfc
