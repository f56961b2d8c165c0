/// @file config.cpp
/// @brief Scenario configuration: grammar, validation, canonical form, sweeps.

#include "bivel/harness/config.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "bivel/analysis/manufactured.hpp"
#include "bivel/core/errors.hpp"
#include "bivel/harness/csv.hpp"
#include "bivel/harness/scenarios.hpp"

namespace bivel::harness {

namespace {

// ---------------------------------------------------------------------------
// Raw tokenization of the `key = value` grammar.
// ---------------------------------------------------------------------------

struct RawEntry {
    std::string value;
    int line = 0; ///< 1-based line in the user's text; 0 = scenario default
};

using RawMap = std::map<std::string, RawEntry>;

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

bool valid_key_charset(const std::string& key) {
    return !key.empty() &&
           key.find_first_not_of("abcdefghijklmnopqrstuvwxyz0123456789_.-") == std::string::npos;
}

RawMap tokenize(const std::string& text, std::vector<std::string>& errors) {
    RawMap map;
    std::istringstream stream(text);
    std::string line;
    int line_no = 0;
    while (std::getline(stream, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            errors.push_back("line " + std::to_string(line_no) +
                             ": expected 'key = value', got '" + line + "'");
            continue;
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (!valid_key_charset(key)) {
            errors.push_back("line " + std::to_string(line_no) + ": invalid key '" + key +
                             "' (lowercase letters, digits, '.', '_', '-' only)");
            continue;
        }
        if (value.empty()) {
            errors.push_back("line " + std::to_string(line_no) + ": key '" + key +
                             "' has an empty value");
            continue;
        }
        const auto [it, inserted] = map.emplace(key, RawEntry{value, line_no});
        if (!inserted) {
            errors.push_back("line " + std::to_string(line_no) + ": duplicate key '" + key +
                             "' (first set on line " + std::to_string(it->second.line) + ")");
        }
    }
    return map;
}

// ---------------------------------------------------------------------------
// Typed reads with error collection.
// ---------------------------------------------------------------------------

class Reader {
public:
    Reader(RawMap map, std::vector<std::string>& errors)
        : map_(std::move(map)), errors_(errors) {}

    bool has(const std::string& key) const { return map_.count(key) > 0; }

    bool has_prefix(const std::string& prefix) const {
        const auto it = map_.lower_bound(prefix);
        return it != map_.end() && it->first.compare(0, prefix.size(), prefix) == 0;
    }

    /// Keys under `prefix` not yet consumed by a take_* call.
    std::vector<std::string> keys_with_prefix(const std::string& prefix) const {
        std::vector<std::string> keys;
        for (auto it = map_.lower_bound(prefix);
             it != map_.end() && it->first.compare(0, prefix.size(), prefix) == 0; ++it) {
            if (!consumed_.count(it->first)) keys.push_back(it->first);
        }
        return keys;
    }

    void error(const std::string& key, const std::string& message) {
        const auto it = map_.find(key);
        if (it != map_.end() && it->second.line > 0) {
            errors_.push_back("line " + std::to_string(it->second.line) + ": " + message);
        } else {
            errors_.push_back(message);
        }
    }

    std::optional<std::string> take_string(const std::string& key) {
        const auto it = map_.find(key);
        if (it == map_.end()) return std::nullopt;
        consumed_.insert(key);
        return it->second.value;
    }

    std::optional<double> take_double(const std::string& key) {
        const auto raw = take_string(key);
        if (!raw) return std::nullopt;
        const auto parsed = parse_double(*raw);
        if (!parsed) {
            error(key, "key '" + key + "': expected a number, got '" + *raw + "'");
            return std::nullopt;
        }
        return parsed;
    }

    std::optional<long> take_int(const std::string& key) {
        const auto value = take_double(key);
        if (!value) return std::nullopt;
        if (*value != std::floor(*value) || std::abs(*value) > 1e15) {
            error(key, "key '" + key + "': expected an integer, got " + format_double(*value));
            return std::nullopt;
        }
        return static_cast<long>(*value);
    }

    std::optional<bool> take_bool(const std::string& key) {
        const auto raw = take_string(key);
        if (!raw) return std::nullopt;
        if (*raw == "true") return true;
        if (*raw == "false") return false;
        error(key, "key '" + key + "': expected true or false, got '" + *raw + "'");
        return std::nullopt;
    }

    std::optional<std::vector<std::string>> take_string_list(const std::string& key) {
        const auto raw = take_string(key);
        if (!raw) return std::nullopt;
        std::vector<std::string> items;
        std::string item;
        std::istringstream stream(*raw);
        while (std::getline(stream, item, ',')) {
            item = trim(item);
            if (item.empty()) {
                error(key, "key '" + key + "': empty item in list '" + *raw + "'");
                return std::nullopt;
            }
            items.push_back(item);
        }
        if (items.empty()) {
            error(key, "key '" + key + "': expected a non-empty list");
            return std::nullopt;
        }
        return items;
    }

    std::optional<std::vector<double>> take_double_list(const std::string& key) {
        const auto items = take_string_list(key);
        if (!items) return std::nullopt;
        std::vector<double> values;
        values.reserve(items->size());
        for (const auto& item : *items) {
            const auto parsed = parse_double(item);
            if (!parsed) {
                error(key, "key '" + key + "': expected a number, got '" + item + "'");
                return std::nullopt;
            }
            values.push_back(*parsed);
        }
        return values;
    }

    /// Reports every key never consumed as unknown.
    void finish() {
        for (const auto& [key, entry] : map_) {
            if (consumed_.count(key)) continue;
            if (entry.line > 0) {
                errors_.push_back("line " + std::to_string(entry.line) + ": unknown key '" +
                                  key + "'");
            } else {
                errors_.push_back("unknown key '" + key + "' (from scenario defaults)");
            }
        }
    }

    static std::optional<double> parse_double(const std::string& text) {
        const char* begin = text.c_str();
        char* end = nullptr;
        const double value = std::strtod(begin, &end);
        if (end == begin || *end != '\0' || !std::isfinite(value)) return std::nullopt;
        return value;
    }

private:
    RawMap map_;
    std::vector<std::string>& errors_;
    std::set<std::string> consumed_;
};

// ---------------------------------------------------------------------------
// Initial-condition profile parameter tables.
// ---------------------------------------------------------------------------

const std::map<std::string, std::map<std::string, double>>& profile_defaults() {
    static const std::map<std::string, std::map<std::string, double>> table = {
        {"uniform", {{"density", 1.0}, {"velocity", 0.0}, {"temperature", 1.0}}},
        {"sinusoidal-acoustic",
         {{"density", 1.0},
          {"velocity", 0.0},
          {"temperature", 1.0},
          {"amplitude", 0.01},
          {"wavenumber", 1.0}}},
        {"gaussian-pulse",
         {{"density", 1.0},
          {"velocity", 0.0},
          {"temperature", 1.0},
          {"amplitude", 0.3},
          {"sigma", 0.06},
          {"center", 0.5}}},
        {"manufactured",
         {{"density", 1.0},
          {"velocity", 0.0},
          {"temperature", 1.0},
          {"density_amplitude", 0.1},
          {"velocity_amplitude", 0.1},
          {"temperature_amplitude", 0.1},
          {"volume_amplitude", 0.05},
          {"density_phase", 0.0},
          {"velocity_phase", 0.7},
          {"temperature_phase", 1.9},
          {"volume_phase", 3.1}}},
        {"rigid-rotation-field", {{"omega", 1.0}, {"density", 1.0}, {"temperature", 1.0}}},
    };
    return table;
}

std::string joined_names(const std::map<std::string, double>& params) {
    std::string out;
    for (const auto& [name, value] : params) {
        if (!out.empty()) out += ", ";
        out += name;
    }
    return out;
}

std::string joined_profile_names() {
    std::string out;
    for (const auto& [name, params] : profile_defaults()) {
        if (!out.empty()) out += ", ";
        out += name;
    }
    return out;
}

/// Range constraints on individual profile parameters; appends an error
/// message when violated.
bool check_initial_param(const std::string& profile, const std::string& name, double value,
                         std::string& message) {
    if (name == "density" || name == "temperature") {
        if (value <= 0.0) {
            message = "initial." + name + " must be > 0";
            return false;
        }
    }
    if (name == "sigma" && value <= 0.0) {
        message = "initial.sigma must be > 0";
        return false;
    }
    if (name == "wavenumber" && value <= 0.0) {
        message = "initial.wavenumber must be > 0";
        return false;
    }
    const bool relative_amplitude =
        (profile == "sinusoidal-acoustic" && name == "amplitude") ||
        name == "density_amplitude" || name == "temperature_amplitude";
    if (relative_amplitude && std::abs(value) >= 1.0) {
        message = "initial." + name + " must satisfy |value| < 1 to keep the state positive";
        return false;
    }
    if (profile == "gaussian-pulse" && name == "amplitude" && value <= -1.0) {
        message = "initial.amplitude must be > -1 to keep the density positive";
        return false;
    }
    return true;
}

const std::set<std::string>& diagnostic_names() {
    static const std::set<std::string> names = {"conserved", "volume-budget",
                                                "klimontovich-budget", "reduced-budget"};
    return names;
}

// ---------------------------------------------------------------------------
// Numeric overrides shared by sweep validation and sweep expansion.
// ---------------------------------------------------------------------------

/// Applies `key = value` to an already-valid config. Returns false with a
/// message when the key is not a sweepable numeric key for this config or the
/// value violates its constraint.
bool apply_numeric(ScenarioConfig& config, const std::string& key, double value,
                   std::string& message) {
    auto positive = [&](double v, const char* what) {
        if (v > 0.0) return true;
        message = std::string(what) + " must be > 0";
        return false;
    };
    auto non_negative = [&](double v, const char* what) {
        if (v >= 0.0) return true;
        message = std::string(what) + " must be >= 0";
        return false;
    };
    auto integral = [&](double v, const char* what) {
        if (v == std::floor(v) && std::abs(v) <= 1e15) return true;
        message = std::string(what) + " must be an integer";
        return false;
    };

    if (key == "gas.molecular_mass") {
        if (!positive(value, key.c_str())) return false;
        config.gas_molecular_mass = value;
        if (config.dimensionless) config.scales.molecular_mass = value;
        return true;
    }
    if (key == "gas.constant") {
        if (config.dimensionless) {
            message = "gas.constant is derived from scales.speed and scales.temperature "
                      "in dimensionless mode";
            return false;
        }
        if (!positive(value, key.c_str())) return false;
        config.gas_constant = value;
        return true;
    }
    if (key.rfind("transport.", 0) == 0) {
        if (config.dimensionless) {
            message = "transport coefficients are derived from scales.* in dimensionless "
                      "mode; '" + key + "' cannot be set";
            return false;
        }
        if (!non_negative(value, key.c_str())) return false;
        if (key == "transport.mu") config.mu = value;
        else if (key == "transport.kappa_m") config.kappa_m = value;
        else if (key == "transport.kappa_h") config.kappa_h = value;
        else if (key == "transport.kappa_klim") config.kappa_klim = value;
        else {
            message = "unknown transport coefficient '" + key + "'";
            return false;
        }
        return true;
    }
    if (key.rfind("scales.", 0) == 0) {
        if (!config.dimensionless) {
            message = "'" + key + "' requires dimensionless mode (set scales.knudsen)";
            return false;
        }
        if (!positive(value, key.c_str())) return false;
        const std::string field = key.substr(7);
        auto& s = config.scales;
        if (field == "knudsen") s.mean_free_path = value * s.macroscopic_length;
        else if (field == "length") {
            const double kn = s.knudsen();
            s.macroscopic_length = value;
            s.mean_free_path = kn * value;
        } else if (field == "speed") s.molecular_speed = value;
        else if (field == "density") s.density = value;
        else if (field == "temperature") s.temperature = value;
        else if (field == "molecular_mass") {
            s.molecular_mass = value;
            config.gas_molecular_mass = value;
        } else {
            message = "unknown scale '" + key + "'";
            return false;
        }
        config.gas_constant = s.gas_constant();
        return true;
    }
    if (key == "grid.cells") {
        if (!integral(value, key.c_str())) return false;
        if (value < 8) {
            message = "grid.cells must be >= 8";
            return false;
        }
        config.grid_cells = static_cast<int>(value);
        return true;
    }
    if (key == "grid.length") {
        if (!positive(value, key.c_str())) return false;
        config.grid_length = value;
        return true;
    }
    if (key.rfind("initial.", 0) == 0) {
        const std::string name = key.substr(8);
        if (name == "profile") {
            message = "initial.profile is not numeric and cannot be swept";
            return false;
        }
        const auto& allowed = profile_defaults().at(config.initial.profile);
        if (!allowed.count(name)) {
            message = "profile '" + config.initial.profile + "' has no parameter '" + name +
                      "' (allowed: " + joined_names(allowed) + ")";
            return false;
        }
        if (!check_initial_param(config.initial.profile, name, value, message)) return false;
        config.initial.params[name] = value;
        return true;
    }
    if (key == "integrator.cfl_advective") {
        if (!positive(value, key.c_str())) return false;
        config.integrator.cfl_advective = value;
        return true;
    }
    if (key == "integrator.cfl_diffusive") {
        if (!positive(value, key.c_str())) return false;
        config.integrator.cfl_diffusive = value;
        return true;
    }
    if (key == "integrator.fixed_dt") {
        if (!non_negative(value, key.c_str())) return false;
        config.integrator.fixed_dt = value;
        return true;
    }
    if (key == "integrator.t_end") {
        if (!positive(value, key.c_str())) return false;
        config.integrator.t_end = value;
        return true;
    }
    if (key == "integrator.max_steps") {
        if (!integral(value, key.c_str())) return false;
        if (value < 1) {
            message = "integrator.max_steps must be >= 1";
            return false;
        }
        config.integrator.max_steps = static_cast<long>(value);
        return true;
    }
    if (key == "integrator.store_every") {
        if (!integral(value, key.c_str()) || value < 0) {
            message = "integrator.store_every must be an integer >= 0";
            return false;
        }
        config.integrator.store_every = static_cast<int>(value);
        return true;
    }
    if (key == "workers") {
        if (!integral(value, key.c_str()) || value < 0) {
            message = "workers must be an integer >= 0";
            return false;
        }
        config.workers = static_cast<int>(value);
        return true;
    }
    message = "'" + key + "' is not a sweepable numeric key";
    return false;
}

} // namespace

// ---------------------------------------------------------------------------
// Equality helpers for round-trip comparison.
// ---------------------------------------------------------------------------

bool operator==(const solver::IntegratorConfig& a, const solver::IntegratorConfig& b) {
    return a.cfl_advective == b.cfl_advective && a.cfl_diffusive == b.cfl_diffusive &&
           a.fixed_dt == b.fixed_dt && a.t_end == b.t_end && a.max_steps == b.max_steps &&
           a.store_every == b.store_every;
}

bool operator==(const analysis::ReferenceScales& a, const analysis::ReferenceScales& b) {
    return a.mean_free_path == b.mean_free_path &&
           a.macroscopic_length == b.macroscopic_length &&
           a.molecular_speed == b.molecular_speed && a.density == b.density &&
           a.temperature == b.temperature && a.molecular_mass == b.molecular_mass;
}

double InitialSpec::at(const std::string& name) const {
    const auto it = params.find(name);
    if (it == params.end()) {
        throw core::ValidationError("initial-condition profile '" + profile +
                                    "' has no parameter '" + name + "'");
    }
    return it->second;
}

// ---------------------------------------------------------------------------
// Resolved views.
// ---------------------------------------------------------------------------

core::GasModel ScenarioConfig::gas() const {
    return core::GasModel::monatomic(gas_molecular_mass, gas_constant);
}

core::TransportCoefficients ScenarioConfig::transport() const {
    if (dimensionless) {
        return core::TransportCoefficients(scales.mu0(), scales.kappa_m0(), scales.kappa_h0(),
                                           scales.kappa_m0());
    }
    return core::TransportCoefficients(mu, kappa_m, kappa_h, kappa_klim);
}

core::Grid1D ScenarioConfig::grid() const {
    return core::Grid1D::make(grid_cells, grid_length, boundary);
}

core::FlowState ScenarioConfig::initial_state() const {
    const auto g = grid();
    const auto gm = gas();
    core::FlowState state(g);

    if (initial.profile == "uniform" || initial.profile == "sinusoidal-acoustic" ||
        initial.profile == "gaussian-pulse") {
        const double rho0 = initial.at("density");
        const double u0 = initial.at("velocity");
        const double T0 = initial.at("temperature");
        for (int i = 0; i < g.n_cells; ++i) {
            const double x = g.center(i);
            double rho = rho0, u = u0, T = T0;
            if (initial.profile == "sinusoidal-acoustic") {
                const double a = initial.at("amplitude");
                const double m = initial.at("wavenumber");
                const double s = std::sin(2.0 * M_PI * m * x / g.length);
                // right-moving acoustic eigenmode to first order in the amplitude
                rho = rho0 * (1.0 + a * s);
                u = u0 + a * gm.sound_speed(T0) * s;
                T = T0 * (1.0 + (gm.gamma() - 1.0) * a * s);
            } else if (initial.profile == "gaussian-pulse") {
                const double a = initial.at("amplitude");
                const double sigma = initial.at("sigma");
                const double center = initial.at("center") * g.length;
                const double dxc = x - center;
                rho = rho0 * (1.0 + a * std::exp(-0.5 * dxc * dxc / (sigma * sigma)));
            }
            state.a_n[i] = rho / gm.molecular_mass;
            state.u_m[i] = u;
            state.e_in[i] = gm.c_v * T;
        }
        state.identify_volume_with_density();
        return state;
    }

    if (initial.profile == "manufactured") {
        analysis::ManufacturedProfile profile;
        profile.rho0 = initial.at("density");
        profile.u0 = initial.at("velocity");
        profile.T0 = initial.at("temperature");
        profile.rho_amp = initial.at("density_amplitude");
        profile.u_amp = initial.at("velocity_amplitude");
        profile.T_amp = initial.at("temperature_amplitude");
        profile.vb_amp = initial.at("volume_amplitude");
        profile.rho_phase = initial.at("density_phase");
        profile.u_phase = initial.at("velocity_phase");
        profile.T_phase = initial.at("temperature_phase");
        profile.vb_phase = initial.at("volume_phase");
        return analysis::manufactured_state(g, gm, profile, model);
    }

    throw core::ValidationError("initial-condition profile '" + initial.profile +
                                "' describes a planar field and cannot seed a 1-D run");
}

// ---------------------------------------------------------------------------
// parse_config
// ---------------------------------------------------------------------------

ScenarioConfig parse_config(const std::string& text) {
    std::vector<std::string> errors;
    RawMap user = tokenize(text, errors);

    // Merge scenario defaults underneath the user's keys.
    RawMap merged;
    std::string scenario_name;
    if (const auto it = user.find("scenario"); it != user.end()) {
        scenario_name = it->second.value;
        const Scenario* scenario = find_scenario(scenario_name);
        if (scenario == nullptr) {
            errors.push_back("line " + std::to_string(it->second.line) +
                             ": unknown scenario '" + scenario_name +
                             "' (see `bivel list` for the library)");
            scenario_name.clear();
        } else {
            std::vector<std::string> default_errors;
            merged = tokenize(scenario->defaults, default_errors);
            for (auto& [key, entry] : merged) entry.line = 0;
            for (const auto& e : default_errors) {
                errors.push_back("scenario '" + scenario_name + "' defaults: " + e);
            }
        }
        user.erase(it);
    }
    for (const auto& [key, entry] : user) merged[key] = entry;

    Reader reader(std::move(merged), errors);
    ScenarioConfig config;
    config.scenario = scenario_name;

    // Manifests mirror the config grammar plus version stamps; accept the
    // stamps so a manifest can be fed straight back into `run`.
    reader.take_string("meta.version");
    reader.take_string("meta.generator");

    if (const auto name = reader.take_string("model")) {
        if (const auto variant = governing::variant_from_name(*name)) {
            config.model = *variant;
        } else {
            reader.error("model", "unknown model '" + *name +
                                      "' (nsf_baseline, bivelocity_reduced, volume_full, "
                                      "klimontovich)");
        }
    }

    // Transport mode: explicit coefficients vs. dimensionless scales.
    const bool has_scales = reader.has_prefix("scales.");
    const bool has_transport = reader.has_prefix("transport.");
    if (has_scales && has_transport) {
        std::string listed;
        for (const auto& key : reader.keys_with_prefix("transport."))
            listed += (listed.empty() ? "" : ", ") + key;
        for (const auto& key : reader.keys_with_prefix("scales."))
            listed += ", " + key;
        errors.push_back("transport.* and scales.* keys are mutually exclusive, got: " +
                         listed);
    }
    config.dimensionless = has_scales && !has_transport;

    if (config.dimensionless) {
        if (reader.has("gas.constant")) {
            reader.error("gas.constant",
                         "gas.constant is derived from scales.speed and scales.temperature "
                         "in dimensionless mode; remove it");
            reader.take_string("gas.constant");
        }
        if (reader.has("gas.molecular_mass") && reader.has("scales.molecular_mass")) {
            reader.error("gas.molecular_mass",
                         "set either gas.molecular_mass or scales.molecular_mass, not both");
        }
        const auto knudsen = reader.take_double("scales.knudsen");
        if (!knudsen) {
            errors.push_back("dimensionless mode requires scales.knudsen");
        }
        auto scale = [&](const char* key, double fallback) {
            const auto v = reader.take_double(key);
            if (!v) return fallback;
            if (*v <= 0.0) {
                reader.error(key, std::string(key) + " must be > 0");
                return fallback;
            }
            return *v;
        };
        const double length = scale("scales.length", 1.0);
        const double speed = scale("scales.speed", 1.0);
        const double density = scale("scales.density", 1.0);
        const double temperature = scale("scales.temperature", 1.0);
        double molecular_mass = scale("scales.molecular_mass", 1.0);
        if (const auto m = reader.take_double("gas.molecular_mass")) {
            if (*m <= 0.0) reader.error("gas.molecular_mass", "gas.molecular_mass must be > 0");
            else molecular_mass = *m;
        }
        if (knudsen && *knudsen > 0.0) {
            config.scales = analysis::ReferenceScales::from_knudsen(
                *knudsen, length, speed, density, temperature, molecular_mass);
            config.gas_molecular_mass = molecular_mass;
            config.gas_constant = config.scales.gas_constant();
        } else if (knudsen) {
            reader.error("scales.knudsen", "scales.knudsen must be > 0");
        }
    } else {
        auto explicit_double = [&](const char* key, double& target, bool allow_zero) {
            if (const auto v = reader.take_double(key)) {
                if (allow_zero ? *v >= 0.0 : *v > 0.0) target = *v;
                else reader.error(key, std::string(key) + (allow_zero ? " must be >= 0"
                                                                      : " must be > 0"));
            }
        };
        explicit_double("gas.molecular_mass", config.gas_molecular_mass, false);
        explicit_double("gas.constant", config.gas_constant, false);
        explicit_double("transport.mu", config.mu, true);
        explicit_double("transport.kappa_m", config.kappa_m, true);
        explicit_double("transport.kappa_h", config.kappa_h, true);
        explicit_double("transport.kappa_klim", config.kappa_klim, true);
    }

    if (const auto cells = reader.take_int("grid.cells")) {
        if (*cells >= 8) config.grid_cells = static_cast<int>(*cells);
        else reader.error("grid.cells", "grid.cells must be >= 8");
    }
    if (const auto length = reader.take_double("grid.length")) {
        if (*length > 0.0) config.grid_length = *length;
        else reader.error("grid.length", "grid.length must be > 0");
    }
    if (const auto boundary = reader.take_string("grid.boundary")) {
        if (*boundary == "periodic") config.boundary = core::Boundary::periodic;
        else if (*boundary == "reflective") config.boundary = core::Boundary::reflective;
        else reader.error("grid.boundary",
                          "grid.boundary must be periodic or reflective, got '" + *boundary +
                              "'");
    }

    // Initial condition: profile plus the profile's own parameter set.
    if (const auto profile = reader.take_string("initial.profile")) {
        if (profile_defaults().count(*profile)) config.initial.profile = *profile;
        else reader.error("initial.profile", "unknown initial.profile '" + *profile +
                                                 "' (" + joined_profile_names() + ")");
    }
    config.initial.params = profile_defaults().at(config.initial.profile);
    for (const auto& key : reader.keys_with_prefix("initial.")) {
        if (key == "initial.profile") continue;
        const std::string name = key.substr(8);
        if (!config.initial.params.count(name)) {
            reader.error(key, "profile '" + config.initial.profile + "' has no parameter '" +
                                  name + "' (allowed: " +
                                  joined_names(profile_defaults().at(config.initial.profile)) +
                                  ")");
            reader.take_string(key);
            continue;
        }
        if (const auto value = reader.take_double(key)) {
            std::string message;
            if (check_initial_param(config.initial.profile, name, *value, message)) {
                config.initial.params[name] = *value;
            } else {
                reader.error(key, message);
            }
        }
    }

    auto integrator_double = [&](const char* key, double& target, bool allow_zero) {
        if (const auto v = reader.take_double(key)) {
            if (allow_zero ? *v >= 0.0 : *v > 0.0) target = *v;
            else reader.error(key, std::string(key) + (allow_zero ? " must be >= 0"
                                                                  : " must be > 0"));
        }
    };
    integrator_double("integrator.cfl_advective", config.integrator.cfl_advective, false);
    integrator_double("integrator.cfl_diffusive", config.integrator.cfl_diffusive, false);
    integrator_double("integrator.fixed_dt", config.integrator.fixed_dt, true);
    integrator_double("integrator.t_end", config.integrator.t_end, false);
    if (const auto steps = reader.take_int("integrator.max_steps")) {
        if (*steps >= 1) config.integrator.max_steps = *steps;
        else reader.error("integrator.max_steps", "integrator.max_steps must be >= 1");
    }
    if (const auto every = reader.take_int("integrator.store_every")) {
        if (*every >= 0) config.integrator.store_every = static_cast<int>(*every);
        else reader.error("integrator.store_every", "integrator.store_every must be >= 0");
    }

    if (const auto list = reader.take_string_list("diagnostics")) {
        std::set<std::string> seen;
        config.diagnostics.clear();
        for (const auto& item : *list) {
            if (!diagnostic_names().count(item)) {
                std::string allowed;
                for (const auto& name : diagnostic_names())
                    allowed += (allowed.empty() ? "" : ", ") + name;
                reader.error("diagnostics",
                             "unknown diagnostic '" + item + "' (allowed: " + allowed + ")");
            } else if (!seen.insert(item).second) {
                reader.error("diagnostics", "duplicate diagnostic '" + item + "'");
            } else {
                config.diagnostics.push_back(item);
            }
        }
    }

    if (const auto dir = reader.take_string("output.dir")) config.output_dir = *dir;
    if (const auto plot = reader.take_bool("output.plot")) config.emit_plot = *plot;
    if (const auto workers = reader.take_int("workers")) {
        if (*workers >= 0) config.workers = static_cast<int>(*workers);
        else reader.error("workers", "workers must be >= 0");
    }

    // Sweep axes: contiguous indices from 1, each with parameter + values.
    for (int index = 1;; ++index) {
        const std::string prefix = "sweep." + std::to_string(index) + ".";
        const bool has_parameter = reader.has(prefix + "parameter");
        const bool has_values = reader.has(prefix + "values");
        if (!has_parameter && !has_values) break;
        SweepAxis axis;
        if (const auto parameter = reader.take_string(prefix + "parameter")) {
            axis.parameter = *parameter;
        } else {
            errors.push_back("sweep axis " + std::to_string(index) + " is missing " + prefix +
                             "parameter");
        }
        if (const auto values = reader.take_double_list(prefix + "values")) {
            axis.values = *values;
        } else if (has_parameter) {
            errors.push_back("sweep axis " + std::to_string(index) + " is missing " + prefix +
                             "values");
        }
        if (!axis.parameter.empty() && !axis.values.empty()) {
            // Validate every value by applying it to a scratch copy.
            for (std::size_t i = 0; i < axis.values.size(); ++i) {
                ScenarioConfig scratch = config;
                std::string message;
                if (!apply_numeric(scratch, axis.parameter, axis.values[i], message)) {
                    errors.push_back(prefix + "values[" + std::to_string(i) + "] = " +
                                     format_double(axis.values[i]) + ": " + message);
                    break;
                }
            }
            config.sweep.push_back(std::move(axis));
        }
    }
    // Reject gaps like sweep.1 + sweep.3 (the loop above stopped at the gap).
    for (const auto& key : reader.keys_with_prefix("sweep.")) {
        reader.error(key, "sweep axes must be numbered contiguously from 1; '" + key +
                              "' is orphaned");
        reader.take_string(key);
    }

    reader.finish();

    if (!errors.empty()) {
        std::string joined = "configuration errors:";
        for (const auto& e : errors) joined += "\n  - " + e;
        throw core::ConfigError(joined);
    }
    return config;
}

// ---------------------------------------------------------------------------
// serialize_config
// ---------------------------------------------------------------------------

std::string serialize_config(const ScenarioConfig& config) {
    std::ostringstream out;
    auto emit = [&](const std::string& key, const std::string& value) {
        out << key << " = " << value << "\n";
    };
    auto emit_double = [&](const std::string& key, double value) {
        emit(key, format_double(value));
    };

    if (!config.scenario.empty()) emit("scenario", config.scenario);
    emit("model", governing::variant_name(config.model));
    if (config.dimensionless) {
        emit_double("scales.knudsen", config.scales.knudsen());
        emit_double("scales.length", config.scales.macroscopic_length);
        emit_double("scales.speed", config.scales.molecular_speed);
        emit_double("scales.density", config.scales.density);
        emit_double("scales.temperature", config.scales.temperature);
        emit_double("scales.molecular_mass", config.scales.molecular_mass);
    } else {
        emit_double("gas.molecular_mass", config.gas_molecular_mass);
        emit_double("gas.constant", config.gas_constant);
        emit_double("transport.mu", config.mu);
        emit_double("transport.kappa_m", config.kappa_m);
        emit_double("transport.kappa_h", config.kappa_h);
        emit_double("transport.kappa_klim", config.kappa_klim);
    }
    emit("grid.cells", std::to_string(config.grid_cells));
    emit_double("grid.length", config.grid_length);
    emit("grid.boundary",
         config.boundary == core::Boundary::periodic ? "periodic" : "reflective");
    emit("initial.profile", config.initial.profile);
    for (const auto& [name, value] : config.initial.params) {
        emit_double("initial." + name, value);
    }
    emit_double("integrator.cfl_advective", config.integrator.cfl_advective);
    emit_double("integrator.cfl_diffusive", config.integrator.cfl_diffusive);
    emit_double("integrator.fixed_dt", config.integrator.fixed_dt);
    emit_double("integrator.t_end", config.integrator.t_end);
    emit("integrator.max_steps", std::to_string(config.integrator.max_steps));
    emit("integrator.store_every", std::to_string(config.integrator.store_every));
    std::string diagnostics;
    for (const auto& d : config.diagnostics)
        diagnostics += (diagnostics.empty() ? "" : ", ") + d;
    emit("diagnostics", diagnostics);
    emit("output.dir", config.output_dir);
    emit("output.plot", config.emit_plot ? "true" : "false");
    emit("workers", std::to_string(config.workers));
    for (std::size_t i = 0; i < config.sweep.size(); ++i) {
        const std::string prefix = "sweep." + std::to_string(i + 1) + ".";
        emit(prefix + "parameter", config.sweep[i].parameter);
        std::string values;
        for (double v : config.sweep[i].values)
            values += (values.empty() ? "" : ", ") + format_double(v);
        emit(prefix + "values", values);
    }
    return out.str();
}

// ---------------------------------------------------------------------------
// Sweep expansion
// ---------------------------------------------------------------------------

std::string sweep_point_name(const std::vector<std::pair<std::string, double>>& assignment) {
    std::string name;
    for (const auto& [key, value] : assignment) {
        char buffer[32];
        std::snprintf(buffer, sizeof(buffer), "%.9g", value);
        name += (name.empty() ? "" : "_") + key + "=" + buffer;
    }
    return name;
}

std::vector<std::vector<std::pair<std::string, double>>>
sweep_assignments(const ScenarioConfig& config) {
    std::vector<std::vector<std::pair<std::string, double>>> all;
    if (config.sweep.empty()) return all;

    std::vector<std::size_t> odometer(config.sweep.size(), 0);
    while (true) {
        std::vector<std::pair<std::string, double>> assignment;
        assignment.reserve(config.sweep.size());
        for (std::size_t axis = 0; axis < config.sweep.size(); ++axis) {
            assignment.emplace_back(config.sweep[axis].parameter,
                                    config.sweep[axis].values[odometer[axis]]);
        }
        all.push_back(std::move(assignment));

        // Advance the odometer, last axis fastest.
        std::size_t axis = config.sweep.size();
        while (axis > 0) {
            --axis;
            if (++odometer[axis] < config.sweep[axis].values.size()) break;
            odometer[axis] = 0;
            if (axis == 0) return all;
        }
    }
}

std::vector<ScenarioConfig> expand_sweep(const ScenarioConfig& config) {
    if (config.sweep.empty()) return {config};

    std::vector<ScenarioConfig> runs;
    for (const auto& assignment : sweep_assignments(config)) {
        ScenarioConfig run = config;
        run.sweep.clear();
        for (const auto& [key, value] : assignment) {
            std::string message;
            if (!apply_numeric(run, key, value, message)) {
                throw core::ConfigError("sweep expansion: " + key + " = " +
                                        format_double(value) + ": " + message);
            }
        }
        run.output_dir = config.output_dir + "/runs/" + sweep_point_name(assignment);
        runs.push_back(std::move(run));
    }
    return runs;
}

} // namespace bivel::harness
