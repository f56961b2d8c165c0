#include "bivel/core/flow_state.hpp"

#include <cmath>
#include <random>
#include <sstream>

namespace bivel::core {

FlowState::FlowState(const Grid1D& grid_)
    : grid(grid_),
      a_n(static_cast<size_t>(grid_.n_cells), 0.0),
      v_bar(static_cast<size_t>(grid_.n_cells), 0.0),
      u_m(static_cast<size_t>(grid_.n_cells), 0.0),
      e_in(static_cast<size_t>(grid_.n_cells), 0.0) {}

void FlowState::identify_volume_with_density() {
    for (size_t i = 0; i < a_n.size(); ++i) {
        v_bar[i] = 1.0 / a_n[i];
    }
}

DerivedFields derived_quantities(const FlowState& state, const GasModel& gas) {
    const size_t n = state.a_n.size();
    DerivedFields d;
    d.rho_bar.resize(n);
    d.pressure.resize(n);
    d.temperature.resize(n);
    d.sound_speed.resize(n);
    for (size_t i = 0; i < n; ++i) {
        d.rho_bar[i] = gas.molecular_mass / state.v_bar[i];
        d.pressure[i] = gas.pressure(d.rho_bar[i], state.e_in[i]);
        d.temperature[i] = gas.temperature(state.e_in[i]);
        d.sound_speed[i] = gas.sound_speed(d.temperature[i]);
    }
    return d;
}

namespace {

void check_positive(const Field& f, const char* name, ValidationReport& report) {
    for (size_t i = 0; i < f.size(); ++i) {
        if (!(f[i] > 0.0) || !std::isfinite(f[i])) {
            std::ostringstream msg;
            msg << name << " must be positive and finite; first offending cell " << i
                << " has value " << f[i];
            report.ok = false;
            report.messages.push_back(msg.str());
            return;
        }
    }
}

void check_finite(const Field& f, const char* name, ValidationReport& report) {
    for (size_t i = 0; i < f.size(); ++i) {
        if (!std::isfinite(f[i])) {
            std::ostringstream msg;
            msg << name << " must be finite; first offending cell " << i << " has value " << f[i];
            report.ok = false;
            report.messages.push_back(msg.str());
            return;
        }
    }
}

} // namespace

std::string ValidationReport::joined() const {
    std::string out;
    for (const auto& m : messages) {
        if (!out.empty()) {
            out += "; ";
        }
        out += m;
    }
    return out;
}

ValidationReport validate(const FlowState& state) {
    ValidationReport report;
    check_positive(state.a_n, "a_n", report);
    check_positive(state.v_bar, "v_bar", report);
    check_finite(state.u_m, "u_m", report);
    check_positive(state.e_in, "e_in", report);
    return report;
}

FlowState random_smooth_state(const Grid1D& grid, const GasModel& gas, unsigned long seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> amp(-0.1, 0.1);
    std::uniform_real_distribution<double> phase(0.0, 6.283185307179586);

    // Three Fourier modes per field; total amplitude < 0.3 keeps fields positive.
    const int modes = 3;
    struct Profile {
        double a[3], ph[3];
    };
    auto draw = [&](Profile& p) {
        for (int m = 0; m < modes; ++m) {
            p.a[m] = amp(rng);
            p.ph[m] = phase(rng);
        }
    };
    Profile pr{}, pu{}, pe{};
    draw(pr);
    draw(pu);
    draw(pe);

    auto series = [&](const Profile& p, double x, double L) {
        double s = 0.0;
        for (int m = 0; m < modes; ++m) {
            s += p.a[m] * std::sin(2.0 * M_PI * (m + 1) * x / L + p.ph[m]);
        }
        return s;
    };

    FlowState state(grid);
    const double rho0 = 1.0;
    const double e0 = 1.5; // T' = 1 for R = 1
    for (int i = 0; i < grid.n_cells; ++i) {
        const double x = grid.center(i);
        const double rho = rho0 * (1.0 + series(pr, x, grid.length));
        state.a_n[i] = rho / gas.molecular_mass;
        state.u_m[i] = 0.5 * series(pu, x, grid.length);
        state.e_in[i] = e0 * (1.0 + series(pe, x, grid.length));
    }
    state.identify_volume_with_density();
    return state;
}

} // namespace bivel::core
