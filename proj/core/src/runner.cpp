#include "qfc/runner.hpp"

#include "qfc/csv.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <future>
#include <map>
#include <mutex>
#include <numbers>
#include <thread>

#ifndef QFC_VERSION
#define QFC_VERSION "unknown"
#endif

namespace qfc {

using ordered_json = nlohmann::ordered_json;
namespace fs = std::filesystem;

namespace {

ordered_json complex_json(Complex z) { return ordered_json::array({z.real(), z.imag()}); }

ordered_json state_json(const StateVector& v) {
    ordered_json a = ordered_json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        a.push_back(complex_json(v(i)));
    }
    return a;
}

ordered_json number_or_null(double v) { return std::isfinite(v) ? ordered_json(v) : ordered_json(nullptr); }

ordered_json scenario_json(const ScenarioSpec& s) {
    ordered_json j;
    j["label"] = s.label;
    j["omega_c"] = s.omega_c;
    j["n_max"] = s.field.n_max;
    j["n_trunc"] = s.field.n_trunc;
    j["control_time"] = s.control_time;
    j["atoms"] = ordered_json::array();
    for (const auto& a : s.atoms.atoms) {
        ordered_json aj;
        aj["energies"] = std::vector<double>(a.energies.data(), a.energies.data() + a.energies.size());
        ordered_json rows = ordered_json::array();
        for (Eigen::Index k = 0; k < a.couplings.rows(); ++k) {
            std::vector<double> row(a.couplings.cols());
            for (Eigen::Index l = 0; l < a.couplings.cols(); ++l) row[l] = a.couplings(k, l);
            rows.push_back(row);
        }
        aj["couplings"] = rows;
        j["atoms"].push_back(aj);
    }
    j["initial_atomic"] = state_json(s.initial_atomic);
    j["target_atomic"] = state_json(s.target_atomic);
    return j;
}

std::string hamiltonian_key(const ScenarioSpec& s) {
    std::string key = format_double(s.omega_c) + "|" + std::to_string(s.field.n_trunc);
    for (const auto& a : s.atoms.atoms) {
        key += "|A";
        for (Eigen::Index k = 0; k < a.energies.size(); ++k) key += "," + format_double(a.energies(k));
        for (Eigen::Index k = 0; k < a.couplings.size(); ++k) key += "," + format_double(a.couplings.data()[k]);
    }
    return key;
}

int worker_count(int threads, std::size_t jobs) {
    int n = threads > 0 ? threads : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    return static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(n), std::max<std::size_t>(jobs, 1)));
}

double evolve_stop(const RunConfig& c, const ScenarioSpec& s) {
    if (c.evolve.t_stop) return *c.evolve.t_stop;
    return std::max(2.0 * s.control_time, 4.0 * std::numbers::pi / s.omega_c);
}

}  // namespace

SolvedScenario solve_scenario(const ControlProblem& problem, double t, const SolverSettings& solver,
                              const BaselineSettings& grid) {
    SolvedScenario out;
    out.solution = problem.solve_at(t, std::max(solver.count, 2), solver.subspace);
    if (solver.field_state == FieldStateChoice::superposition) {
        out.field = parity_superposition(out.solution, solver.degeneracy_tol, grid.options());
    } else {
        out.field.state = out.solution.optimal_state();
    }
    out.alpha = coherent_approximation(out.field.state);
    out.coherent_fidelity =
        problem.propagated_fidelity_of(coherent_state(out.alpha, problem.space().field_dim()), t);
    out.statistics = fock_statistics(out.field.state);
    return out;
}

std::vector<SweepPoint> run_sweep(const RunConfig& config, int threads) {
    if (config.sweep.empty()) {
        throw ConfigError("/sweep", "no sweep axes");
    }
    std::vector<std::vector<double>> axes;
    std::size_t total = 1;
    for (const auto& ax : config.sweep) {
        axes.push_back(ax.values());
        total *= axes.back().size();
    }

    std::vector<SweepPoint> points(total);
    for (std::size_t idx = 0; idx < total; ++idx) {
        std::size_t rem = idx;
        points[idx].coordinates.resize(axes.size());
        for (std::size_t a = axes.size(); a-- > 0;) {
            points[idx].coordinates[a] = axes[a][rem % axes[a].size()];
            rem /= axes[a].size();
        }
    }

    std::mutex cache_mutex;
    std::map<std::string, std::shared_future<std::shared_ptr<const SpectralDecomposition>>> cache;
    auto decomposition_for = [&](const ScenarioSpec& spec) {
        const std::string key = hamiltonian_key(spec);
        std::promise<std::shared_ptr<const SpectralDecomposition>> promise;
        std::shared_future<std::shared_ptr<const SpectralDecomposition>> future;
        bool owner = false;
        {
            std::lock_guard lock(cache_mutex);
            auto it = cache.find(key);
            if (it == cache.end()) {
                future = promise.get_future().share();
                cache.emplace(key, future);
                owner = true;
            } else {
                future = it->second;
            }
        }
        if (owner) {
            try {
                promise.set_value(
                    std::make_shared<const SpectralDecomposition>(eigendecompose(build_hamiltonian(spec))));
            } catch (...) {
                promise.set_exception(std::current_exception());
            }
        }
        return future.get();
    };

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t idx = next++; idx < total; idx = next++) {
            SweepPoint& pt = points[idx];
            try {
                ParameterOverrides ov;
                for (std::size_t a = 0; a < axes.size(); ++a) {
                    ov[config.sweep[a].parameter] = pt.coordinates[a];
                }
                const ScenarioSpec spec = resolve_scenario(config, ov);
                const ControlProblem problem(spec, decomposition_for(spec));
                const SolvedScenario s = solve_scenario(problem, spec.control_time, config.solver, config.baseline);
                pt.fidelity = s.solution.fidelity;
                pt.coherent_fidelity = s.coherent_fidelity;
                if (config.solver.sweep_baseline) {
                    const CoherentBaseline b = coherent_baseline(problem.control_operator_at(spec.control_time),
                                                                 spec.field.n_max, config.baseline.options());
                    pt.coherent_fidelity = std::max(pt.coherent_fidelity, b.fidelity);
                }
                pt.ratio = pt.fidelity > 0.0 ? pt.coherent_fidelity / pt.fidelity
                                             : std::numeric_limits<double>::quiet_NaN();
                pt.n_av = s.statistics.n_av;
                pt.mandel_q = s.statistics.mandel_q;
            } catch (const std::exception& e) {
                pt.error = e.what();
                pt.fidelity = pt.coherent_fidelity = pt.ratio = pt.n_av = pt.mandel_q =
                    std::numeric_limits<double>::quiet_NaN();
            }
        }
    };

    const int n = worker_count(threads, total);
    std::vector<std::thread> pool;
    for (int i = 1; i < n; ++i) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    return points;
}

int RunReport::exit_code() const {
    return std::all_of(tasks.begin(), tasks.end(), [](const TaskReport& t) { return t.ok; }) ? 0 : 1;
}

RunConfig apply_options(RunConfig config, const RunOptions& options) {
    if (options.out_dir) config.output = *options.out_dir;
    if (options.threads) config.threads = *options.threads;
    if (options.n_trunc) config.params.n_trunc = *options.n_trunc;
    if (options.tasks) config.tasks = *options.tasks;
    return parse_config(serialize_config(config));
}

RunReport run(const RunConfig& input, const RunOptions& options) {
    const auto wall_start = std::chrono::steady_clock::now();
    const RunConfig config = apply_options(input, options);
    RunReport report;
    report.out_dir = config.output;

    std::error_code ec;
    fs::create_directories(config.output, ec);
    if (ec || !fs::is_directory(config.output)) {
        for (Task t : config.tasks) {
            report.tasks.push_back({t, false, "cannot create output directory '" + config.output + "'", {}, 0.0});
        }
        return report;
    }
    auto path_of = [&](const char* name) { return (fs::path(config.output) / name).string(); };

    // tasks are executed in a fixed order regardless of how they are listed
    std::vector<Task> order;
    for (Task t : {Task::solve, Task::baseline, Task::wigner, Task::evolve, Task::sweep}) {
        if (config.has_task(t)) order.push_back(t);
    }

    std::optional<ScenarioSpec> spec;
    std::optional<ControlProblem> problem;
    std::optional<SolvedScenario> solved;
    std::optional<CoherentBaseline> baseline;
    std::string setup_error;
    const bool needs_problem = std::any_of(order.begin(), order.end(), [](Task t) { return t != Task::sweep; });
    if (needs_problem) {
        try {
            spec = resolve_scenario(config);
            problem.emplace(*spec);
            solved = solve_scenario(*problem, spec->control_time, config.solver, config.baseline);
        } catch (const std::exception& e) {
            setup_error = e.what();
        }
    }

    auto timed = [&](Task task, auto&& body) {
        const auto t0 = std::chrono::steady_clock::now();
        TaskReport r{task, true, "", {}, 0.0};
        try {
            if (task != Task::sweep && !setup_error.empty()) {
                throw std::runtime_error(setup_error);
            }
            body(r);
        } catch (const std::exception& e) {
            r.ok = false;
            r.message = e.what();
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        report.tasks.push_back(std::move(r));
    };

    auto write_solution = [&](TaskReport& r) {
        const SolvedScenario& s = *solved;
        ordered_json j;
        j["label"] = spec->label;
        j["control_time"] = spec->control_time;
        j["n_max"] = spec->field.n_max;
        j["n_trunc"] = spec->field.n_trunc;
        j["subspace"] = s.solution.subspace == Subspace::full ? "full" : "restricted";
        j["fidelity"] = s.solution.fidelity;
        j["spectrum"] = s.solution.spectrum;
        j["phi_opt"] = state_json(s.solution.optimal_state());
        ordered_json field;
        field["kind"] = config.solver.field_state == FieldStateChoice::optimal ? "optimal" : "superposition";
        field["parity_superposition_applied"] = s.field.applied;
        field["chi"] = s.field.chi;
        field["amplitudes"] = state_json(s.field.state);
        j["field_state"] = field;
        j["alpha"] = complex_json(s.alpha);
        j["F_coh"] = s.coherent_fidelity;
        j["n_av"] = s.statistics.n_av;
        j["mandel_q"] = number_or_null(s.statistics.mandel_q);
        j["parity"] = s.statistics.parity_expectation;
        if (baseline) {
            j["baseline"] = {{"fidelity", baseline->fidelity},
                             {"alpha", complex_json(baseline->alpha)},
                             {"ratio", baseline->fidelity / s.solution.fidelity}};
        }
        const std::string path = path_of("solution.json");
        write_text_file(path, j.dump(2) + "\n", options.overwrite);
        r.files.push_back(path);
    };

    for (Task task : order) {
        switch (task) {
            case Task::solve:
                timed(task, [&](TaskReport& r) {
                    if (config.has_task(Task::baseline)) {
                        try {
                            baseline = coherent_baseline(problem->control_operator_at(spec->control_time),
                                                         spec->field.n_max, config.baseline.options());
                        } catch (const std::exception&) {
                            // reported by the baseline task
                        }
                    }
                    write_solution(r);
                    const SolvedScenario& s = *solved;
                    const auto poisson =
                        poisson_reference(s.statistics.n_av, static_cast<int>(s.field.state.size()) - 1);
                    std::vector<std::vector<double>> rows;
                    for (Eigen::Index n = 0; n < s.field.state.size(); ++n) {
                        rows.push_back({static_cast<double>(n), s.field.state(n).real(), s.field.state(n).imag(),
                                        std::norm(s.field.state(n)), poisson[n]});
                    }
                    const std::string path = path_of("statistics.csv");
                    write_text_file(path, csv_text({"n", "re", "im", "abs2", "poisson"}, rows), options.overwrite);
                    r.files.push_back(path);
                });
                break;
            case Task::baseline:
                timed(task, [&](TaskReport& r) {
                    if (!baseline) {
                        baseline = coherent_baseline(problem->control_operator_at(spec->control_time),
                                                     spec->field.n_max, config.baseline.options());
                    }
                    if (!config.has_task(Task::solve)) {
                        write_solution(r);
                    }
                    r.message = "F_coh(best) = " + format_double(baseline->fidelity);
                });
                break;
            case Task::wigner:
                timed(task, [&](TaskReport& r) {
                    const WignerGrid w = wigner(solved->field.state, config.wigner.axes());
                    std::vector<std::vector<double>> rows;
                    for (std::size_t i = 0; i < w.x.size(); ++i) {
                        for (std::size_t k = 0; k < w.p.size(); ++k) {
                            rows.push_back({w.x[i], w.p[k], w.values(i, k)});
                        }
                    }
                    const std::string path = path_of("wigner.csv");
                    write_text_file(path, csv_text({"x", "p", "W"}, rows), options.overwrite);
                    r.files.push_back(path);
                    if (w.beyond_reliable_region) {
                        r.message = "grid extends beyond the region resolved by the truncated basis";
                    }
                });
                break;
            case Task::evolve:
                timed(task, [&](TaskReport& r) {
                    const CompositeSpace& space = problem->space();
                    const double t1 = evolve_stop(config, *spec);
                    std::vector<double> times(config.evolve.count);
                    for (int i = 0; i < config.evolve.count; ++i) {
                        times[i] = config.evolve.count == 1
                                       ? config.evolve.t_start
                                       : config.evolve.t_start + (t1 - config.evolve.t_start) * i /
                                                                     (config.evolve.count - 1);
                    }
                    const ComplexMatrix pf = embed_atomic_operator(
                        spec->target_atomic * spec->target_atomic.adjoint(), space);
                    const ComplexMatrix pi = embed_atomic_operator(
                        spec->initial_atomic * spec->initial_atomic.adjoint(), space);
                    const StateVector opt = product_state(solved->field.state, spec->initial_atomic);
                    const StateVector coh =
                        product_state(coherent_state(solved->alpha, space.field_dim()), spec->initial_atomic);
                    const auto& d = problem->decomposition();
                    const auto a = population_timeseries(d, opt, times, pf);
                    const auto b = population_timeseries(d, opt, times, pi);
                    const auto c = population_timeseries(d, coh, times, pf);
                    const auto e = population_timeseries(d, coh, times, pi);
                    std::vector<std::vector<double>> rows;
                    for (std::size_t i = 0; i < times.size(); ++i) {
                        rows.push_back({times[i], a[i], b[i], c[i], e[i]});
                    }
                    const std::string path = path_of("populations.csv");
                    write_text_file(path,
                                    csv_text({"t", "target_opt", "initial_opt", "target_coh", "initial_coh"}, rows),
                                    options.overwrite);
                    r.files.push_back(path);
                });
                break;
            case Task::sweep:
                timed(task, [&](TaskReport& r) {
                    const std::string path = path_of("sweep.csv");
                    if (!options.overwrite && fs::exists(path)) {
                        write_text_file(path, "", false);
                    }
                    const auto points = run_sweep(config, config.threads);
                    std::vector<std::string> header;
                    for (const auto& ax : config.sweep) header.push_back(ax.parameter);
                    for (const char* h : {"F", "F_coh", "ratio", "n_av", "Q"}) header.emplace_back(h);
                    std::vector<std::vector<double>> rows;
                    std::size_t failed = 0;
                    for (const auto& pt : points) {
                        std::vector<double> row = pt.coordinates;
                        row.insert(row.end(), {pt.fidelity, pt.coherent_fidelity, pt.ratio, pt.n_av, pt.mandel_q});
                        rows.push_back(std::move(row));
                        failed += pt.error.empty() ? 0 : 1;
                    }
                    write_text_file(path, csv_text(header, rows), options.overwrite);
                    r.files.push_back(path);
                    if (failed > 0) {
                        const auto first = std::find_if(points.begin(), points.end(),
                                                         [](const SweepPoint& p) { return !p.error.empty(); });
                        throw std::runtime_error(std::to_string(failed) + " of " + std::to_string(points.size()) +
                                                 " sweep points failed; first: " + first->error);
                    }
                });
                break;
        }
    }

    ordered_json m;
    m["tool"] = "qfc";
    m["version"] = QFC_VERSION;
    m["config"] = ordered_json::parse(serialize_config(config));
    if (spec) m["scenario"] = scenario_json(*spec);
    if (options.seed) m["seed"] = *options.seed;
    m["threads"] = worker_count(config.threads, std::numeric_limits<std::size_t>::max());
    m["tasks"] = ordered_json::array();
    for (const auto& t : report.tasks) {
        m["tasks"].push_back({{"task", to_string(t.task)},
                              {"ok", t.ok},
                              {"message", t.message},
                              {"files", t.files},
                              {"seconds", t.seconds}});
    }
    m["wall_clock_seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - wall_start).count();
    try {
        write_text_file(path_of("manifest.json"), m.dump(2) + "\n", options.overwrite);
    } catch (const std::exception& e) {
        report.tasks.push_back({order.empty() ? Task::solve : order.back(), false, e.what(), {}, 0.0});
    }
    return report;
}

}  // namespace qfc
