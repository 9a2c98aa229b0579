#include "qfc/targets.hpp"

#include <cmath>
#include <stdexcept>

namespace qfc {

QubitTarget parse_qubit_target(std::string_view name) {
    if (name == "ghz") return QubitTarget::ghz;
    if (name == "w") return QubitTarget::w;
    if (name == "all_excited") return QubitTarget::all_excited;
    if (name == "all_plus") return QubitTarget::all_plus;
    throw std::invalid_argument("unknown qubit target '" + std::string(name) +
                                "' (expected ghz, w, all_excited, all_plus)");
}

std::string to_string(QubitTarget target) {
    switch (target) {
        case QubitTarget::ghz: return "ghz";
        case QubitTarget::w: return "w";
        case QubitTarget::all_excited: return "all_excited";
        case QubitTarget::all_plus: return "all_plus";
    }
    return "unknown";
}

StateVector named_target(QubitTarget target, int n_atoms) {
    if (n_atoms < 1) {
        throw std::invalid_argument("named_target: n_atoms must be >= 1");
    }
    if ((target == QubitTarget::ghz || target == QubitTarget::w) && n_atoms < 2) {
        throw std::invalid_argument("named_target: " + to_string(target) + " needs at least 2 qubits");
    }
    if (n_atoms > 20) {
        throw std::invalid_argument("named_target: register of " + std::to_string(n_atoms) + " qubits is too large");
    }
    const int dim = 1 << n_atoms;
    StateVector v = StateVector::Zero(dim);
    switch (target) {
        case QubitTarget::ghz:
            v(0) = 1.0;
            v(dim - 1) = 1.0;
            break;
        case QubitTarget::w:
            // single excitation on qubit j sits at bit (n_atoms - 1 - j)
            for (int j = 0; j < n_atoms; ++j) {
                v(1 << j) = 1.0;
            }
            break;
        case QubitTarget::all_excited:
            v(dim - 1) = 1.0;
            break;
        case QubitTarget::all_plus:
            v.setOnes();
            break;
    }
    return v / v.norm();
}

StateVector bloch_target(double theta, double phi) {
    StateVector v(2);
    v(0) = std::cos(theta / 2.0);
    v(1) = std::polar(std::sin(theta / 2.0), phi);
    return v;
}

StateVector ground_state(int atomic_dim) {
    return fock_state(0, atomic_dim);
}

}  // namespace qfc
