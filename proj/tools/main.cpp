// qfc: command-line front end.
//
//   qfc solve|sweep|wigner|evolve|run <config.json> [--out DIR] [--threads N]
//       [--overwrite] [--n-trunc N] [--seed N]
//   qfc validate <config.json>

#include "qfc/config.hpp"
#include "qfc/runner.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>

namespace {

struct Common {
    std::string config_path;
    std::string out;
    int threads{-1};
    bool overwrite{false};
    int n_trunc{-1};
    std::int64_t seed{-1};
};

void add_common(CLI::App* cmd, Common& c) {
    cmd->add_option("config", c.config_path, "JSON run configuration")->required()->check(CLI::ExistingFile);
    cmd->add_option("--out", c.out, "output directory (overrides the config)");
    cmd->add_option("--threads", c.threads, "sweep workers, 0 = all cores")->check(CLI::NonNegativeNumber);
    cmd->add_flag("--overwrite", c.overwrite, "replace existing output files");
    cmd->add_option("--n-trunc", c.n_trunc, "Fock truncation (highest kept photon number)")
        ->check(CLI::NonNegativeNumber);
    cmd->add_option("--seed", c.seed, "recorded in the manifest; the pipeline is deterministic")
        ->check(CLI::NonNegativeNumber);
}

int execute(const Common& c, std::optional<std::vector<qfc::Task>> tasks) {
    try {
        const qfc::RunConfig config = qfc::load_config(c.config_path);
        qfc::RunOptions opt;
        if (!c.out.empty()) opt.out_dir = c.out;
        if (c.threads >= 0) opt.threads = c.threads;
        opt.overwrite = c.overwrite;
        if (c.n_trunc >= 0) opt.n_trunc = c.n_trunc;
        if (c.seed >= 0) opt.seed = static_cast<std::uint64_t>(c.seed);
        if (tasks) {
            if (tasks->front() == qfc::Task::solve && config.has_task(qfc::Task::baseline)) {
                tasks->push_back(qfc::Task::baseline);
            }
            opt.tasks = std::move(tasks);
        }
        const qfc::RunReport report = qfc::run(config, opt);
        for (const auto& t : report.tasks) {
            std::cout << qfc::to_string(t.task) << ": " << (t.ok ? "ok" : "FAILED");
            if (!t.message.empty()) std::cout << " (" << t.message << ")";
            std::cout << "\n";
            for (const auto& f : t.files) std::cout << "  " << f << "\n";
        }
        return report.exit_code();
    } catch (const qfc::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Optimal quantum field states for emitter control"};
    app.set_version_flag("--version", QFC_VERSION);
    app.require_subcommand(1);

    Common common;
    struct Sub {
        const char* name;
        const char* help;
        std::optional<qfc::Task> task;
    };
    const Sub subs[] = {
        {"solve", "solve the control problem (solution.json, statistics.csv)", qfc::Task::solve},
        {"sweep", "parameter sweep (sweep.csv)", qfc::Task::sweep},
        {"wigner", "Wigner function of the reported field state (wigner.csv)", qfc::Task::wigner},
        {"evolve", "population time series (populations.csv)", qfc::Task::evolve},
        {"run", "run every task listed in the config", std::nullopt},
    };
    std::vector<std::pair<CLI::App*, std::optional<qfc::Task>>> commands;
    for (const auto& s : subs) {
        CLI::App* cmd = app.add_subcommand(s.name, s.help);
        add_common(cmd, common);
        commands.emplace_back(cmd, s.task);
    }
    std::string validate_path;
    CLI::App* validate = app.add_subcommand("validate", "parse and validate a config");
    validate->add_option("config", validate_path, "JSON run configuration")->required()->check(CLI::ExistingFile);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (validate->parsed()) {
        try {
            const qfc::RunConfig c = qfc::load_config(validate_path);
            std::cout << "ok: " << (c.preset ? "preset " + *c.preset : std::string("explicit scenario")) << ", "
                      << c.tasks.size() << " task(s)\n";
            return 0;
        } catch (const qfc::ConfigError& e) {
            std::cerr << "config error: " << e.what() << "\n";
            return 2;
        }
    }
    for (const auto& [cmd, task] : commands) {
        if (cmd->parsed()) {
            return execute(common, task ? std::optional<std::vector<qfc::Task>>({*task}) : std::nullopt);
        }
    }
    return 2;
}
