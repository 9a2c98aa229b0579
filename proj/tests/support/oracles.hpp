// Independent reference computations used only by tests.

#pragma once

#include "qfc/fock.hpp"

#include <cmath>
#include <numbers>
#include <random>

namespace qfc::oracle {

inline ComplexMatrix random_hermitian(int dim, std::uint32_t seed, double scale = 1.0) {
    std::mt19937 rng(seed);
    std::normal_distribution<double> nd(0.0, scale);
    ComplexMatrix a(dim, dim);
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
            a(i, j) = {nd(rng), nd(rng)};
        }
    }
    return (a + a.adjoint()) / 2.0;
}

inline StateVector random_state(int dim, std::uint32_t seed) {
    std::mt19937 rng(seed);
    std::normal_distribution<double> nd;
    StateVector v(dim);
    for (int i = 0; i < dim; ++i) {
        v(i) = {nd(rng), nd(rng)};
    }
    return v.normalized();
}

inline ComplexMatrix random_unitary(int dim, std::uint32_t seed) {
    std::mt19937 rng(seed);
    std::normal_distribution<double> nd;
    ComplexMatrix a(dim, dim);
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
            a(i, j) = {nd(rng), nd(rng)};
        }
    }
    Eigen::HouseholderQR<ComplexMatrix> qr(a);
    return qr.householderQ() * ComplexMatrix::Identity(dim, dim);
}

// Classical fourth-order Runge-Kutta for i d/dt psi = H psi.
inline StateVector rk4(const ComplexMatrix& h, StateVector psi, double t, double dt) {
    const Complex mi{0.0, -1.0};
    const int steps = static_cast<int>(std::llround(t / dt));
    const double step = t / steps;
    for (int s = 0; s < steps; ++s) {
        const StateVector k1 = mi * (h * psi);
        const StateVector k2 = mi * (h * (psi + 0.5 * step * k1));
        const StateVector k3 = mi * (h * (psi + 0.5 * step * k2));
        const StateVector k4 = mi * (h * (psi + step * k3));
        psi += step / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }
    return psi;
}

// Wigner function of |m><n| (m >= n) in the X = (a + a†)/2 convention, from
// the associated Laguerre closed form.
inline Complex wigner_element(int m, int n, Complex beta) {
    if (m < n) {
        return std::conj(wigner_element(n, m, beta));
    }
    const double r2 = std::norm(beta);
    const double lf = std::exp(0.5 * (std::lgamma(n + 1.0) - std::lgamma(m + 1.0)));
    const Complex power = std::pow(2.0 * std::conj(beta), m - n);
    const double sign = (n % 2 == 0) ? 1.0 : -1.0;
    return (2.0 / std::numbers::pi) * sign * lf * power * std::exp(-2.0 * r2) *
           std::assoc_laguerre(static_cast<unsigned>(n), static_cast<unsigned>(m - n), 4.0 * r2);
}

inline double wigner_laguerre(const StateVector& psi, Complex beta) {
    Complex w{0.0, 0.0};
    for (int m = 0; m < psi.size(); ++m) {
        for (int n = 0; n < psi.size(); ++n) {
            w += psi(m) * std::conj(psi(n)) * wigner_element(m, n, beta);
        }
    }
    return w.real();
}

// Direct maximization of <phi|M|phi> over normalized complex vectors:
// dense random starts, then stochastic hill climbing with a shrinking step.
inline double brute_force_max(const ComplexMatrix& m, std::uint32_t seed) {
    const int d = static_cast<int>(m.rows());
    std::mt19937 rng(seed);
    std::normal_distribution<double> nd;
    auto value = [&](const StateVector& v) { return v.dot(m * v).real(); };
    StateVector best;
    double best_val = -1e300;
    for (int s = 0; s < 4000; ++s) {
        StateVector v(d);
        for (int i = 0; i < d; ++i) v(i) = {nd(rng), nd(rng)};
        v.normalize();
        const double f = value(v);
        if (f > best_val) {
            best_val = f;
            best = v;
        }
    }
    for (double step = 0.1; step > 1e-7; step *= 0.7) {
        for (int trial = 0; trial < 400; ++trial) {
            StateVector v = best;
            for (int i = 0; i < d; ++i) v(i) += step * Complex{nd(rng), nd(rng)};
            v.normalize();
            const double f = value(v);
            if (f > best_val) {
                best_val = f;
                best = v;
            }
        }
    }
    return best_val;
}

}  // namespace qfc::oracle
