// config.hpp: declarative run configuration (JSON).
//
// A config names either a preset plus its scalar parameters, or an explicit
// scenario (atoms, couplings, atomic states). Complex numbers are written as
// two-element arrays [re, im]; atomic level indices are 1-based.

#pragma once

#include "qfc/analysis.hpp"
#include "qfc/control.hpp"
#include "qfc/model.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qfc {

// Thrown for syntax and validation problems; `where` is a JSON pointer.
class ConfigError : public std::runtime_error {
public:
    ConfigError(std::string where, const std::string& message)
        : std::runtime_error(where.empty() ? message : where + ": " + message), where_(std::move(where)) {}

    const std::string& where() const noexcept { return where_; }

private:
    std::string where_;
};

enum class Task { solve, baseline, wigner, evolve, sweep };

Task parse_task(std::string_view name);
std::string to_string(Task task);

struct SweepAxis {
    std::string parameter;
    double start{0.0};
    double stop{0.0};
    int count{1};
    bool log{false};

    std::vector<double> values() const;
    bool operator==(const SweepAxis&) const = default;
};

struct CouplingEntry {
    int k{1};  // 1-based level indices
    int l{2};
    double g{0.0};

    bool operator==(const CouplingEntry&) const = default;
};

struct ExplicitAtom {
    std::vector<double> energies;
    std::vector<CouplingEntry> couplings;  // each unordered pair once; g_kl = g_lk

    bool operator==(const ExplicitAtom&) const = default;
};

struct ExplicitScenario {
    double omega_c{1.0};
    std::vector<ExplicitAtom> atoms;
    std::vector<Complex> initial;  // empty: ground state
    std::vector<Complex> target;

    bool operator==(const ExplicitScenario&) const = default;
};

// Scalars shared by presets and explicit scenarios.
struct ScenarioParams {
    std::optional<double> g;
    std::optional<double> control_time;
    std::optional<double> theta;
    double phi{0.0};
    int n_max{80};
    std::optional<int> n_trunc;
    int n_atoms{3};
    std::string target{"ghz"};

    bool operator==(const ScenarioParams&) const = default;
};

enum class FieldStateChoice { superposition, optimal };

struct SolverSettings {
    int count{2};
    Subspace subspace{Subspace::restricted};
    double degeneracy_tol{1e-3};
    FieldStateChoice field_state{FieldStateChoice::superposition};
    bool sweep_baseline{true};

    bool operator==(const SolverSettings&) const = default;
};

struct BaselineSettings {
    int radial_points{200};
    int phase_points{128};
    double tolerance{1e-4};

    BaselineOptions options() const { return {radial_points, phase_points, tolerance}; }
    bool operator==(const BaselineSettings&) const = default;
};

struct WignerSettings {
    double x_min{-6.0};
    double x_max{6.0};
    int x_points{121};
    double p_min{-6.0};
    double p_max{6.0};
    int p_points{121};
    int basis_dim{0};

    WignerAxes axes() const { return {x_min, x_max, x_points, p_min, p_max, p_points, basis_dim}; }
    bool operator==(const WignerSettings&) const = default;
};

struct EvolveSettings {
    double t_start{0.0};
    std::optional<double> t_stop;  // default: max(2 T, 4 pi / omega_c)
    int count{401};

    bool operator==(const EvolveSettings&) const = default;
};

struct RunConfig {
    std::string label;
    std::optional<std::string> preset;
    std::optional<ExplicitScenario> scenario;
    ScenarioParams params;
    std::vector<Task> tasks;
    std::string output{"out"};
    std::vector<SweepAxis> sweep;
    SolverSettings solver;
    BaselineSettings baseline;
    WignerSettings wigner;
    EvolveSettings evolve;
    int threads{0};

    bool has_task(Task t) const;
    bool operator==(const RunConfig&) const = default;
};

RunConfig parse_config(std::string_view text);
RunConfig load_config(const std::string& path);
std::string serialize_config(const RunConfig& config);

// Scalar overrides (sweep points): keys g, T, theta, phi, n_atoms, n_max.
using ParameterOverrides = std::map<std::string, double>;

ScenarioSpec resolve_scenario(const RunConfig& config, const ParameterOverrides& overrides = {});

// Names that may appear as sweep axes for this config.
std::vector<std::string> sweepable_parameters(const RunConfig& config);

}  // namespace qfc
