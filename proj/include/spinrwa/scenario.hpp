#ifndef SPINRWA_SCENARIO_HPP
#define SPINRWA_SCENARIO_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <istream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "spinrwa/dynamics.hpp"
#include "spinrwa/errors.hpp"
#include "spinrwa/spin.hpp"

namespace spinrwa {

/// Drive frequency selector. The three named drives are the ones used by
/// every built-in scenario: on resonance, at the edge of the resonance
/// peak (omega0 + omega1), and well off resonance (omega0 + 3 omega1).
struct Drive {
    enum class Kind { resonance, peak, off_resonance, explicit_omega };
    Kind kind = Kind::resonance;
    double omega = 0.0; // used only by explicit_omega

    static Drive resonance() { return {Kind::resonance, 0.0}; }
    static Drive peak() { return {Kind::peak, 0.0}; }
    static Drive off() { return {Kind::off_resonance, 0.0}; }
    static Drive at(double omega) { return {Kind::explicit_omega, omega}; }

    double resolve(double omega0, double omega1) const {
        switch (kind) {
        case Kind::resonance: return omega0;
        case Kind::peak: return omega0 + omega1;
        case Kind::off_resonance: return omega0 + 3.0 * omega1;
        case Kind::explicit_omega: return omega;
        }
        return omega0;
    }

    /// Parses "resonance", "peak" or "off".
    static Drive parse(const std::string& text) {
        if (text == "resonance") return resonance();
        if (text == "peak") return peak();
        if (text == "off") return off();
        throw std::invalid_argument("drive: expected resonance|peak|off, got '" + text + "'");
    }
};

/// One runnable configuration: spin, initial substate probabilities
/// (taken as real non-negative amplitudes sqrt(p)), drive selection and
/// the sampling of the output series. omega0 is fixed to 1 in reduced
/// units; omega1 = ratio and omega scale from it.
struct Scenario {
    std::string name;
    SpinQuantum spin{1};
    std::vector<double> initial_probabilities{1.0, 0.0};
    Drive drive = Drive::resonance();
    double ratio = 0.01; // omega1 / omega0
    double n_periods = 1.0;
    int samples = 501;

    void validate() const {
        if (static_cast<int>(initial_probabilities.size()) != spin.dimension())
            throw std::invalid_argument("scenario: expected " +
                                        std::to_string(spin.dimension()) +
                                        " probabilities, got " +
                                        std::to_string(initial_probabilities.size()));
        double sum = 0.0;
        for (double p : initial_probabilities) {
            if (!(p >= 0.0))
                throw std::invalid_argument("scenario: probabilities must be non-negative");
            sum += p;
        }
        if (std::abs(sum - 1.0) > 1e-12)
            throw NotNormalized("scenario: probabilities sum to " + std::to_string(sum));
        if (samples < 2)
            throw std::invalid_argument("scenario: need at least 2 samples");
        if (!(n_periods > 0.0))
            throw std::invalid_argument("scenario: periods must be positive");
        if (!(ratio > 0.0))
            throw std::invalid_argument("scenario: ratio must be positive");
    }

    FieldConfig field() const {
        const double omega0 = 1.0;
        const double omega1 = ratio * omega0;
        return FieldConfig(omega0, omega1, drive.resolve(omega0, omega1));
    }

    StateVector initial_state() const {
        return StateVector::from_probabilities(spin, initial_probabilities);
    }
};

namespace detail {

struct BuiltinFamily {
    const char* prefix;
    int twice_s;
    // init_code >= 0: all weight on that substate (descending-m index);
    // -1: equal probabilities on every substate; -2: the (1/3, 2/3) split.
    int init_code;
};

// The eight figure families: spins 1/2, 1, 2, 7/2, 9/2 with either a
// single populated substate or equal initial probabilities.
inline constexpr std::array<BuiltinFamily, 8> builtin_families{{
    {"fig1", 1, 0},  // s=1/2, all weight on m=+1/2
    {"fig2", 1, -2}, // s=1/2, |C_{1/2}|^2 = 1/3, |C_{-1/2}|^2 = 2/3
    {"fig3", 2, -1}, // s=1, uniform thirds
    {"fig4", 2, 0},  // s=1, all weight on m=+1
    {"fig5", 2, 1},  // s=1, all weight on m=0
    {"fig6", 4, -1}, // s=2, uniform fifths
    {"fig7", 7, -1}, // s=7/2, uniform eighths
    {"fig8", 9, -1}, // s=9/2, uniform tenths
}};

} // namespace detail

/// The 24 built-in ids: {fig1..fig8} x {top, middle, bottom}.
inline std::vector<std::string> builtin_scenario_ids() {
    std::vector<std::string> ids;
    ids.reserve(24);
    for (const auto& fam : detail::builtin_families)
        for (const char* suffix : {"top", "middle", "bottom"})
            ids.push_back(std::string(fam.prefix) + "-" + suffix);
    return ids;
}

/// Look up one of the built-in scenarios, e.g. "fig1-top". The suffix maps
/// to the drive: top = resonance, middle = peak, bottom = off-resonance.
inline Scenario builtin_scenario(const std::string& id) {
    const auto dash = id.find('-');
    const std::string prefix = id.substr(0, dash);
    const std::string suffix = dash == std::string::npos ? "" : id.substr(dash + 1);

    const detail::BuiltinFamily* fam = nullptr;
    for (const auto& f : detail::builtin_families)
        if (prefix == f.prefix)
            fam = &f;
    Drive drive;
    if (suffix == "top")
        drive = Drive::resonance();
    else if (suffix == "middle")
        drive = Drive::peak();
    else if (suffix == "bottom")
        drive = Drive::off();
    else
        fam = nullptr;
    if (fam == nullptr)
        throw UnknownScenario("unknown scenario '" + id + "' (expected fig1..fig8 x top|middle|bottom)");

    Scenario scenario;
    scenario.name = id;
    scenario.spin = SpinQuantum(fam->twice_s);
    scenario.drive = drive;
    const int dim = scenario.spin.dimension();
    if (fam->init_code >= 0) {
        scenario.initial_probabilities.assign(static_cast<std::size_t>(dim), 0.0);
        scenario.initial_probabilities[static_cast<std::size_t>(fam->init_code)] = 1.0;
    } else if (fam->init_code == -2) {
        scenario.initial_probabilities = {1.0 / 3.0, 2.0 / 3.0};
    } else {
        scenario.initial_probabilities.assign(static_cast<std::size_t>(dim), 1.0 / dim);
    }
    return scenario;
}

/// Run a scenario: one evolve_series with omega0 = 1.
inline TimeSeries run_scenario(const Scenario& scenario) {
    scenario.validate();
    return evolve_series(scenario.spin, scenario.initial_state(), scenario.field(),
                         scenario.n_periods, scenario.samples);
}

/// Parses "p1,p2,..." as probabilities; "uniform" and "stretched" are
/// accepted as shorthands.
inline std::vector<double> parse_probabilities(const std::string& text, SpinQuantum spin) {
    if (text == "uniform")
        return std::vector<double>(static_cast<std::size_t>(spin.dimension()),
                                   1.0 / spin.dimension());
    if (text == "stretched") {
        std::vector<double> p(static_cast<std::size_t>(spin.dimension()), 0.0);
        p[0] = 1.0;
        return p;
    }
    std::vector<double> probs;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t pos = 0;
            const double v = std::stod(item, &pos);
            if (pos != item.size())
                throw std::invalid_argument("");
            probs.push_back(v);
        } catch (const std::exception&) {
            throw std::invalid_argument("probabilities: cannot parse '" + item + "'");
        }
    }
    if (probs.empty())
        throw std::invalid_argument("probabilities: empty list");
    return probs;
}

/// key=value configuration stream; '#' starts a comment, blank lines are
/// skipped. Keys mirror the scenario fields:
///   name, spin, init, drive, omega, ratio, periods, samples.
inline std::map<std::string, std::string> parse_config_stream(std::istream& in) {
    std::map<std::string, std::string> entries;
    std::string line;
    int line_no = 0;
    auto trim = [](std::string s) {
        const auto a = s.find_first_not_of(" \t\r");
        const auto b = s.find_last_not_of(" \t\r");
        return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        line = trim(line);
        if (line.empty())
            continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config line " + std::to_string(line_no) +
                                        ": expected key=value");
        entries[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
    }
    return entries;
}

/// Apply one config entry to a scenario. "init" is resolved against the
/// spin already set, so "spin" should come first in mixed configs; the
/// map-based apply below handles the ordering.
inline void apply_config_entry(Scenario& scenario, const std::string& key,
                               const std::string& value) {
    const auto numeric = [&](auto parser) {
        try {
            std::size_t pos = 0;
            auto v = parser(value, &pos);
            if (pos != value.size())
                throw std::invalid_argument("");
            return v;
        } catch (const std::exception&) {
            throw std::invalid_argument("config: invalid value '" + value + "' for '" +
                                        key + "'");
        }
    };
    const auto as_double = [&] {
        return numeric([](const std::string& s, std::size_t* pos) { return std::stod(s, pos); });
    };

    if (key == "name") {
        scenario.name = value;
    } else if (key == "spin") {
        scenario.spin = SpinQuantum::parse(value);
    } else if (key == "init") {
        scenario.initial_probabilities = parse_probabilities(value, scenario.spin);
    } else if (key == "drive") {
        scenario.drive = Drive::parse(value);
    } else if (key == "omega") {
        scenario.drive = Drive::at(as_double());
    } else if (key == "ratio") {
        scenario.ratio = as_double();
    } else if (key == "periods") {
        scenario.n_periods = as_double();
    } else if (key == "samples") {
        scenario.samples = numeric(
            [](const std::string& s, std::size_t* pos) { return std::stoi(s, pos); });
    } else {
        throw std::invalid_argument("config: unknown key '" + key + "'");
    }
}

inline void apply_config(Scenario& scenario, const std::map<std::string, std::string>& entries) {
    // spin first so that "init" can validate its length against it
    if (auto it = entries.find("spin"); it != entries.end())
        apply_config_entry(scenario, "spin", it->second);
    for (const auto& [key, value] : entries) {
        if (key == "spin")
            continue;
        apply_config_entry(scenario, key, value);
    }
}

} // namespace spinrwa

#endif // SPINRWA_SCENARIO_HPP
