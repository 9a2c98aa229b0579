// runner.hpp: executes a RunConfig and writes its artifacts.

#pragma once

#include "qfc/analysis.hpp"
#include "qfc/config.hpp"
#include "qfc/control.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qfc {

// Solution of one scenario at one control time plus the derived field-state
// quantities every task reports.
struct SolvedScenario {
    ControlSolution solution;
    ParitySuperposition field;   // the reported field state (see SolverSettings::field_state)
    Complex alpha{0.0, 0.0};     // coherent approximation <a> of field.state
    double coherent_fidelity{0.0};  // F_coh: propagated fidelity of |alpha>
    AnalysisReport statistics;   // of field.state
};

SolvedScenario solve_scenario(const ControlProblem& problem, double t, const SolverSettings& solver,
                              const BaselineSettings& grid);

struct SweepPoint {
    std::vector<double> coordinates;  // one value per axis
    double fidelity{0.0};
    double coherent_fidelity{0.0};
    double ratio{0.0};
    double n_av{0.0};
    double mandel_q{0.0};
    std::string error;  // non-empty when this point failed
};

// Row-major over the axes (the last axis varies fastest). Workers share one
// decomposition per distinct Hamiltonian; results do not depend on `threads`
// (0 = hardware concurrency).
std::vector<SweepPoint> run_sweep(const RunConfig& config, int threads);

struct RunOptions {
    std::optional<std::string> out_dir;
    std::optional<int> threads;
    bool overwrite{false};
    std::optional<int> n_trunc;
    std::optional<std::uint64_t> seed;  // recorded only; the pipeline is deterministic
    std::optional<std::vector<Task>> tasks;
};

struct TaskReport {
    Task task{Task::solve};
    bool ok{false};
    std::string message;
    std::vector<std::string> files;
    double seconds{0.0};
};

struct RunReport {
    std::vector<TaskReport> tasks;
    std::string out_dir;

    int exit_code() const;
};

// Applies RunOptions on top of the config (n_trunc, task list, output dir,
// threads) and returns the effective config.
RunConfig apply_options(RunConfig config, const RunOptions& options);

// Runs every task, never letting one failure abort the others; writes
// manifest.json last.
RunReport run(const RunConfig& config, const RunOptions& options = {});

}  // namespace qfc
