#include "qfc/config.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace qfc {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

namespace {

constexpr double kStateNormTol = 1e-8;

std::string child(const std::string& path, std::string_view key) { return path + "/" + std::string(key); }
std::string child(const std::string& path, std::size_t index) { return path + "/" + std::to_string(index); }

void reject_unknown(const json& obj, const std::string& path, std::initializer_list<std::string_view> allowed) {
    for (const auto& [key, _] : obj.items()) {
        if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
            throw ConfigError(child(path, key), "unknown key '" + key + "'");
        }
    }
}

const json& require_object(const json& j, const std::string& path) {
    if (!j.is_object()) {
        throw ConfigError(path, "expected an object");
    }
    return j;
}

double get_number(const json& j, const std::string& path) {
    if (!j.is_number()) {
        throw ConfigError(path, "expected a number");
    }
    const double v = j.get<double>();
    if (!std::isfinite(v)) {
        throw ConfigError(path, "expected a finite number");
    }
    return v;
}

int get_int(const json& j, const std::string& path) {
    if (j.is_number_integer()) {
        return j.get<int>();
    }
    if (j.is_number_float()) {
        const double v = j.get<double>();
        if (std::isfinite(v) && v == std::floor(v) && std::abs(v) < 1e9) {
            return static_cast<int>(v);
        }
    }
    throw ConfigError(path, "expected an integer");
}

bool get_bool(const json& j, const std::string& path) {
    if (!j.is_boolean()) {
        throw ConfigError(path, "expected true or false");
    }
    return j.get<bool>();
}

std::string get_string(const json& j, const std::string& path) {
    if (!j.is_string()) {
        throw ConfigError(path, "expected a string");
    }
    return j.get<std::string>();
}

Complex get_complex(const json& j, const std::string& path) {
    if (j.is_number()) {
        return {get_number(j, path), 0.0};
    }
    if (!j.is_array() || j.size() != 2) {
        throw ConfigError(path, "expected a complex number [re, im]");
    }
    return {get_number(j[0], child(path, 0)), get_number(j[1], child(path, 1))};
}

std::vector<Complex> get_complex_vector(const json& j, const std::string& path) {
    if (!j.is_array()) {
        throw ConfigError(path, "expected an array of complex numbers");
    }
    std::vector<Complex> v;
    for (std::size_t i = 0; i < j.size(); ++i) {
        v.push_back(get_complex(j[i], child(path, i)));
    }
    return v;
}

ordered_json complex_json(Complex z) { return ordered_json::array({z.real(), z.imag()}); }

ExplicitScenario parse_scenario(const json& j, const std::string& path) {
    require_object(j, path);
    reject_unknown(j, path, {"omega_c", "atoms", "initial", "target"});
    ExplicitScenario s;
    if (j.contains("omega_c")) {
        s.omega_c = get_number(j["omega_c"], child(path, "omega_c"));
        if (s.omega_c <= 0.0) {
            throw ConfigError(child(path, "omega_c"), "omega_c must be positive");
        }
    }
    if (!j.contains("atoms") || !j["atoms"].is_array() || j["atoms"].empty()) {
        throw ConfigError(child(path, "atoms"), "expected a non-empty array of atoms");
    }
    const auto& atoms = j["atoms"];
    for (std::size_t a = 0; a < atoms.size(); ++a) {
        const std::string ap = child(child(path, "atoms"), a);
        require_object(atoms[a], ap);
        reject_unknown(atoms[a], ap, {"energies", "couplings"});
        ExplicitAtom atom;
        if (!atoms[a].contains("energies") || !atoms[a]["energies"].is_array()) {
            throw ConfigError(child(ap, "energies"), "expected an array of level energies");
        }
        for (std::size_t k = 0; k < atoms[a]["energies"].size(); ++k) {
            atom.energies.push_back(get_number(atoms[a]["energies"][k], child(child(ap, "energies"), k)));
        }
        if (atom.energies.size() < 2) {
            throw ConfigError(child(ap, "energies"), "an atom needs at least 2 levels");
        }
        const int nl = static_cast<int>(atom.energies.size());
        if (atoms[a].contains("couplings")) {
            const auto& cs = atoms[a]["couplings"];
            const std::string cp = child(ap, "couplings");
            if (!cs.is_array()) {
                throw ConfigError(cp, "expected an array of [k, l, g] entries");
            }
            std::set<std::pair<int, int>> seen;
            for (std::size_t c = 0; c < cs.size(); ++c) {
                const std::string ep = child(cp, c);
                if (!cs[c].is_array() || cs[c].size() != 3) {
                    throw ConfigError(ep, "expected [k, l, g] with 1-based level indices");
                }
                CouplingEntry e{get_int(cs[c][0], child(ep, 0)), get_int(cs[c][1], child(ep, 1)),
                                get_number(cs[c][2], child(ep, 2))};
                if (e.k < 1 || e.k > nl) {
                    throw ConfigError(child(ep, 0), "level index k=" + std::to_string(e.k) + " out of range 1.." +
                                                        std::to_string(nl));
                }
                if (e.l < 1 || e.l > nl) {
                    throw ConfigError(child(ep, 1), "level index l=" + std::to_string(e.l) + " out of range 1.." +
                                                        std::to_string(nl));
                }
                if (e.k == e.l) {
                    throw ConfigError(ep, "diagonal couplings are not allowed");
                }
                if (!seen.insert({std::min(e.k, e.l), std::max(e.k, e.l)}).second) {
                    throw ConfigError(ep, "coupling between levels " + std::to_string(e.k) + " and " +
                                              std::to_string(e.l) + " listed twice");
                }
                atom.couplings.push_back(e);
            }
        }
        s.atoms.push_back(std::move(atom));
    }
    if (j.contains("initial")) {
        s.initial = get_complex_vector(j["initial"], child(path, "initial"));
    }
    if (!j.contains("target")) {
        throw ConfigError(child(path, "target"), "explicit scenarios need a target atomic state");
    }
    s.target = get_complex_vector(j["target"], child(path, "target"));
    return s;
}

AtomicSystem to_atomic_system(const ExplicitScenario& s) {
    AtomicSystem sys;
    for (const auto& ea : s.atoms) {
        Atom a;
        const int nl = static_cast<int>(ea.energies.size());
        a.energies = Eigen::Map<const RealVector>(ea.energies.data(), nl);
        a.couplings = RealMatrix::Zero(nl, nl);
        for (const auto& c : ea.couplings) {
            a.couplings(c.k - 1, c.l - 1) = c.g;
            a.couplings(c.l - 1, c.k - 1) = c.g;
        }
        sys.atoms.push_back(std::move(a));
    }
    return sys;
}

StateVector to_state(const std::vector<Complex>& v, int dim, const std::string& path) {
    if (static_cast<int>(v.size()) != dim) {
        throw ConfigError(path, "state has " + std::to_string(v.size()) + " amplitudes, atomic dimension is " +
                                    std::to_string(dim));
    }
    StateVector s(dim);
    for (int i = 0; i < dim; ++i) {
        s(i) = v[i];
    }
    if (std::abs(s.norm() - 1.0) > kStateNormTol) {
        throw ConfigError(path, "state is not normalized (norm " + std::to_string(s.norm()) + ")");
    }
    return s / s.norm();
}

void apply_overrides(ScenarioParams& p, const ParameterOverrides& overrides) {
    for (const auto& [key, value] : overrides) {
        if (key == "g") {
            p.g = value;
        } else if (key == "T") {
            p.control_time = value;
        } else if (key == "theta") {
            p.theta = value;
        } else if (key == "phi") {
            p.phi = value;
        } else if (key == "n_atoms") {
            p.n_atoms = static_cast<int>(std::lround(value));
        } else if (key == "n_max") {
            p.n_max = static_cast<int>(std::lround(value));
        } else {
            throw ConfigError("/sweep", "parameter '" + key + "' cannot be overridden");
        }
    }
}

void validate(const RunConfig& c) {
    if (c.preset.has_value() == c.scenario.has_value()) {
        throw ConfigError("", "exactly one of 'preset' or 'scenario' must be given");
    }
    if (c.preset) {
        try {
            (void)parse_preset(*c.preset);
        } catch (const std::invalid_argument& e) {
            throw ConfigError("/preset", e.what());
        }
    }
    const auto& p = c.params;
    if (p.control_time && !(*p.control_time >= 0.0)) {
        throw ConfigError("/T", "control_time (T) must be >= 0");
    }
    if (p.n_max < 0) {
        throw ConfigError("/n_max", "n_max must be >= 0");
    }
    if (p.n_trunc && *p.n_trunc < p.n_max) {
        throw ConfigError("/n_trunc", "n_trunc must be >= n_max");
    }
    if (p.n_atoms < 1) {
        throw ConfigError("/n_atoms", "n_atoms must be >= 1");
    }
    try {
        (void)parse_qubit_target(p.target);
    } catch (const std::invalid_argument& e) {
        throw ConfigError("/target", e.what());
    }
    if (c.tasks.empty()) {
        throw ConfigError("/tasks", "at least one task is required");
    }
    if (c.output.empty()) {
        throw ConfigError("/output", "output directory must not be empty");
    }
    if (c.threads < 0) {
        throw ConfigError("/threads", "threads must be >= 0");
    }
    if (c.solver.count < 1) {
        throw ConfigError("/solver/count", "count must be >= 1");
    }
    if (!(c.solver.degeneracy_tol > 0.0)) {
        throw ConfigError("/solver/degeneracy_tol", "degeneracy_tol must be positive");
    }
    if (c.baseline.radial_points < 2 || c.baseline.phase_points < 1) {
        throw ConfigError("/baseline", "need radial_points >= 2 and phase_points >= 1");
    }
    if (!(c.baseline.tolerance > 0.0)) {
        throw ConfigError("/baseline/tolerance", "tolerance must be positive");
    }
    if (c.wigner.x_points < 1 || c.wigner.p_points < 1 || c.wigner.basis_dim < 0) {
        throw ConfigError("/wigner", "grid needs at least one point per axis and basis_dim >= 0");
    }
    if (c.evolve.count < 1) {
        throw ConfigError("/evolve/count", "count must be >= 1");
    }
    if (c.evolve.t_stop && *c.evolve.t_stop < c.evolve.t_start) {
        throw ConfigError("/evolve/t_stop", "t_stop must be >= t_start");
    }

    const auto allowed = sweepable_parameters(c);
    std::set<std::string> seen;
    for (std::size_t i = 0; i < c.sweep.size(); ++i) {
        const auto& ax = c.sweep[i];
        const std::string path = child("/sweep", i);
        if (std::find(allowed.begin(), allowed.end(), ax.parameter) == allowed.end()) {
            std::string list;
            for (const auto& a : allowed) {
                list += (list.empty() ? "" : ", ") + a;
            }
            throw ConfigError(child(path, "parameter"),
                              "'" + ax.parameter + "' is not a sweepable parameter here (allowed: " + list + ")");
        }
        if (!seen.insert(ax.parameter).second) {
            throw ConfigError(child(path, "parameter"), "axis '" + ax.parameter + "' appears twice");
        }
        if (ax.count < 1) {
            throw ConfigError(child(path, "count"), "count must be >= 1");
        }
        if (ax.log && !(ax.start > 0.0 && ax.stop > 0.0)) {
            throw ConfigError(child(path, "log"), "logarithmic axes need positive start and stop");
        }
        if (ax.parameter == "T" && (ax.start < 0.0 || ax.stop < 0.0)) {
            throw ConfigError(child(path, "start"), "control_time (T) must be >= 0");
        }
    }
    if (c.has_task(Task::sweep) && c.sweep.empty()) {
        throw ConfigError("/sweep", "the sweep task needs at least one axis");
    }

    // resolve once at the first sweep point to surface missing parameters
    ParameterOverrides first;
    for (const auto& ax : c.sweep) {
        first[ax.parameter] = ax.values().front();
    }
    (void)resolve_scenario(c, first);
}

}  // namespace

Task parse_task(std::string_view name) {
    if (name == "solve") return Task::solve;
    if (name == "baseline") return Task::baseline;
    if (name == "wigner") return Task::wigner;
    if (name == "evolve") return Task::evolve;
    if (name == "sweep") return Task::sweep;
    throw std::invalid_argument("unknown task '" + std::string(name) +
                                "' (expected solve, baseline, wigner, evolve, sweep)");
}

std::string to_string(Task task) {
    switch (task) {
        case Task::solve: return "solve";
        case Task::baseline: return "baseline";
        case Task::wigner: return "wigner";
        case Task::evolve: return "evolve";
        case Task::sweep: return "sweep";
    }
    return "unknown";
}

std::vector<double> SweepAxis::values() const {
    std::vector<double> v(count);
    for (int i = 0; i < count; ++i) {
        const double f = count == 1 ? 0.0 : static_cast<double>(i) / (count - 1);
        v[i] = log ? std::exp(std::log(start) + f * (std::log(stop) - std::log(start))) : start + f * (stop - start);
    }
    if (count > 1) {
        v.back() = stop;
    }
    return v;
}

bool RunConfig::has_task(Task t) const { return std::find(tasks.begin(), tasks.end(), t) != tasks.end(); }

std::vector<std::string> sweepable_parameters(const RunConfig& config) {
    if (config.scenario) {
        return {"T", "n_max"};
    }
    Preset preset = Preset::rabi_resonant;
    try {
        preset = parse_preset(config.preset.value_or(""));
    } catch (const std::invalid_argument&) {
        return {};
    }
    switch (preset) {
        case Preset::rabi_resonant: return {"g", "T", "theta", "phi", "n_max"};
        case Preset::multiqubit: return {"g", "T", "n_atoms", "n_max"};
        default: return {"g", "T", "n_max"};
    }
}

RunConfig parse_config(std::string_view text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError("", std::string("syntax error: ") + e.what());
    }
    require_object(j, "");
    reject_unknown(j, "", {"label", "preset", "scenario", "g", "T", "theta", "phi", "n_max", "n_trunc", "n_atoms",
                           "target", "tasks", "output", "sweep", "solver", "baseline", "wigner", "evolve",
                           "threads"});
    RunConfig c;
    if (j.contains("label")) c.label = get_string(j["label"], "/label");
    if (j.contains("preset")) c.preset = get_string(j["preset"], "/preset");
    if (j.contains("scenario")) c.scenario = parse_scenario(j["scenario"], "/scenario");

    auto& p = c.params;
    if (j.contains("g")) p.g = get_number(j["g"], "/g");
    if (j.contains("T")) p.control_time = get_number(j["T"], "/T");
    if (j.contains("theta")) p.theta = get_number(j["theta"], "/theta");
    if (j.contains("phi")) p.phi = get_number(j["phi"], "/phi");
    if (j.contains("n_max")) p.n_max = get_int(j["n_max"], "/n_max");
    if (j.contains("n_trunc")) p.n_trunc = get_int(j["n_trunc"], "/n_trunc");
    if (j.contains("n_atoms")) p.n_atoms = get_int(j["n_atoms"], "/n_atoms");
    if (j.contains("target")) p.target = get_string(j["target"], "/target");

    if (!j.contains("tasks") || !j["tasks"].is_array()) {
        throw ConfigError("/tasks", "expected an array of task names");
    }
    for (std::size_t i = 0; i < j["tasks"].size(); ++i) {
        const std::string path = child("/tasks", i);
        try {
            c.tasks.push_back(parse_task(get_string(j["tasks"][i], path)));
        } catch (const std::invalid_argument& e) {
            throw ConfigError(path, e.what());
        }
    }
    if (j.contains("output")) c.output = get_string(j["output"], "/output");
    if (j.contains("threads")) c.threads = get_int(j["threads"], "/threads");

    if (j.contains("sweep")) {
        const auto& sw = j["sweep"];
        if (!sw.is_array()) {
            throw ConfigError("/sweep", "expected an array of axes");
        }
        for (std::size_t i = 0; i < sw.size(); ++i) {
            const std::string path = child("/sweep", i);
            require_object(sw[i], path);
            reject_unknown(sw[i], path, {"parameter", "start", "stop", "count", "scale"});
            for (const char* key : {"parameter", "start", "stop", "count"}) {
                if (!sw[i].contains(key)) {
                    throw ConfigError(child(path, key), "missing required key");
                }
            }
            SweepAxis ax;
            ax.parameter = get_string(sw[i]["parameter"], child(path, "parameter"));
            ax.start = get_number(sw[i]["start"], child(path, "start"));
            ax.stop = get_number(sw[i]["stop"], child(path, "stop"));
            ax.count = get_int(sw[i]["count"], child(path, "count"));
            if (sw[i].contains("scale")) {
                const std::string scale = get_string(sw[i]["scale"], child(path, "scale"));
                if (scale != "linear" && scale != "log") {
                    throw ConfigError(child(path, "scale"), "expected 'linear' or 'log'");
                }
                ax.log = scale == "log";
            }
            c.sweep.push_back(ax);
        }
    }

    if (j.contains("solver")) {
        const auto& s = require_object(j["solver"], "/solver");
        reject_unknown(s, "/solver", {"count", "subspace", "degeneracy_tol", "field_state", "sweep_baseline"});
        if (s.contains("count")) c.solver.count = get_int(s["count"], "/solver/count");
        if (s.contains("subspace")) {
            const std::string v = get_string(s["subspace"], "/solver/subspace");
            if (v != "restricted" && v != "full") {
                throw ConfigError("/solver/subspace", "expected 'restricted' or 'full'");
            }
            c.solver.subspace = v == "full" ? Subspace::full : Subspace::restricted;
        }
        if (s.contains("degeneracy_tol")) {
            c.solver.degeneracy_tol = get_number(s["degeneracy_tol"], "/solver/degeneracy_tol");
        }
        if (s.contains("field_state")) {
            const std::string v = get_string(s["field_state"], "/solver/field_state");
            if (v != "superposition" && v != "optimal") {
                throw ConfigError("/solver/field_state", "expected 'superposition' or 'optimal'");
            }
            c.solver.field_state = v == "optimal" ? FieldStateChoice::optimal : FieldStateChoice::superposition;
        }
        if (s.contains("sweep_baseline")) {
            c.solver.sweep_baseline = get_bool(s["sweep_baseline"], "/solver/sweep_baseline");
        }
    }
    if (j.contains("baseline")) {
        const auto& b = require_object(j["baseline"], "/baseline");
        reject_unknown(b, "/baseline", {"radial_points", "phase_points", "tolerance"});
        if (b.contains("radial_points")) c.baseline.radial_points = get_int(b["radial_points"], "/baseline/radial_points");
        if (b.contains("phase_points")) c.baseline.phase_points = get_int(b["phase_points"], "/baseline/phase_points");
        if (b.contains("tolerance")) c.baseline.tolerance = get_number(b["tolerance"], "/baseline/tolerance");
    }
    if (j.contains("wigner")) {
        const auto& w = require_object(j["wigner"], "/wigner");
        reject_unknown(w, "/wigner", {"x", "p", "basis_dim"});
        auto read_axis = [&](const char* key, double& lo, double& hi, int& n) {
            const std::string path = child("/wigner", key);
            if (!w.contains(key)) return;
            const auto& a = w[key];
            if (!a.is_array() || a.size() != 3) {
                throw ConfigError(path, "expected [min, max, points]");
            }
            lo = get_number(a[0], child(path, 0));
            hi = get_number(a[1], child(path, 1));
            n = get_int(a[2], child(path, 2));
        };
        read_axis("x", c.wigner.x_min, c.wigner.x_max, c.wigner.x_points);
        read_axis("p", c.wigner.p_min, c.wigner.p_max, c.wigner.p_points);
        if (w.contains("basis_dim")) c.wigner.basis_dim = get_int(w["basis_dim"], "/wigner/basis_dim");
    }
    if (j.contains("evolve")) {
        const auto& e = require_object(j["evolve"], "/evolve");
        reject_unknown(e, "/evolve", {"t_start", "t_stop", "count"});
        if (e.contains("t_start")) c.evolve.t_start = get_number(e["t_start"], "/evolve/t_start");
        if (e.contains("t_stop")) c.evolve.t_stop = get_number(e["t_stop"], "/evolve/t_stop");
        if (e.contains("count")) c.evolve.count = get_int(e["count"], "/evolve/count");
    }

    validate(c);
    return c;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ConfigError("", "cannot open config file '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

std::string serialize_config(const RunConfig& c) {
    ordered_json j;
    j["label"] = c.label;
    if (c.preset) j["preset"] = *c.preset;
    if (c.scenario) {
        ordered_json s;
        s["omega_c"] = c.scenario->omega_c;
        s["atoms"] = ordered_json::array();
        for (const auto& a : c.scenario->atoms) {
            ordered_json aj;
            aj["energies"] = a.energies;
            aj["couplings"] = ordered_json::array();
            for (const auto& e : a.couplings) {
                aj["couplings"].push_back(ordered_json::array({e.k, e.l, e.g}));
            }
            s["atoms"].push_back(aj);
        }
        if (!c.scenario->initial.empty()) {
            s["initial"] = ordered_json::array();
            for (auto z : c.scenario->initial) s["initial"].push_back(complex_json(z));
        }
        s["target"] = ordered_json::array();
        for (auto z : c.scenario->target) s["target"].push_back(complex_json(z));
        j["scenario"] = s;
    }
    const auto& p = c.params;
    if (p.g) j["g"] = *p.g;
    if (p.control_time) j["T"] = *p.control_time;
    if (p.theta) j["theta"] = *p.theta;
    j["phi"] = p.phi;
    j["n_max"] = p.n_max;
    if (p.n_trunc) j["n_trunc"] = *p.n_trunc;
    j["n_atoms"] = p.n_atoms;
    j["target"] = p.target;
    j["tasks"] = ordered_json::array();
    for (Task t : c.tasks) j["tasks"].push_back(to_string(t));
    j["output"] = c.output;
    j["threads"] = c.threads;
    j["sweep"] = ordered_json::array();
    for (const auto& ax : c.sweep) {
        ordered_json a;
        a["parameter"] = ax.parameter;
        a["start"] = ax.start;
        a["stop"] = ax.stop;
        a["count"] = ax.count;
        a["scale"] = ax.log ? "log" : "linear";
        j["sweep"].push_back(a);
    }
    j["solver"] = {{"count", c.solver.count},
                   {"subspace", c.solver.subspace == Subspace::full ? "full" : "restricted"},
                   {"degeneracy_tol", c.solver.degeneracy_tol},
                   {"field_state", c.solver.field_state == FieldStateChoice::optimal ? "optimal" : "superposition"},
                   {"sweep_baseline", c.solver.sweep_baseline}};
    j["baseline"] = {{"radial_points", c.baseline.radial_points},
                     {"phase_points", c.baseline.phase_points},
                     {"tolerance", c.baseline.tolerance}};
    j["wigner"] = {{"x", {c.wigner.x_min, c.wigner.x_max, c.wigner.x_points}},
                   {"p", {c.wigner.p_min, c.wigner.p_max, c.wigner.p_points}},
                   {"basis_dim", c.wigner.basis_dim}};
    ordered_json ev;
    ev["t_start"] = c.evolve.t_start;
    if (c.evolve.t_stop) ev["t_stop"] = *c.evolve.t_stop;
    ev["count"] = c.evolve.count;
    j["evolve"] = ev;
    return j.dump(2) + "\n";
}

ScenarioSpec resolve_scenario(const RunConfig& config, const ParameterOverrides& overrides) {
    ScenarioParams p = config.params;
    apply_overrides(p, overrides);
    try {
        if (config.scenario) {
            if (!p.control_time) {
                throw ConfigError("/T", "control_time (T) is required");
            }
            ScenarioSpec spec;
            spec.omega_c = config.scenario->omega_c;
            spec.atoms = to_atomic_system(*config.scenario);
            spec.field = FieldSpace::with_default_buffer(p.n_max);
            if (p.n_trunc) spec.field.n_trunc = *p.n_trunc;
            spec.control_time = *p.control_time;
            const int da = spec.atoms.dim();
            spec.initial_atomic = config.scenario->initial.empty()
                                      ? ground_state(da)
                                      : to_state(config.scenario->initial, da, "/scenario/initial");
            spec.target_atomic = to_state(config.scenario->target, da, "/scenario/target");
            spec.label = config.label.empty() ? "explicit" : config.label;
            spec.validate();
            return spec;
        }
        PresetParams pp;
        pp.g = p.g;
        pp.control_time = p.control_time;
        pp.theta = p.theta;
        pp.phi = p.phi;
        pp.n_max = p.n_max;
        pp.n_trunc = p.n_trunc;
        pp.n_atoms = p.n_atoms;
        pp.target = parse_qubit_target(p.target);
        ScenarioSpec spec = make_preset(parse_preset(config.preset.value_or("")), pp);
        if (!config.label.empty()) spec.label = config.label;
        return spec;
    } catch (const ConfigError&) {
        throw;
    } catch (const std::exception& e) {
        throw ConfigError("", e.what());
    }
}

}  // namespace qfc
