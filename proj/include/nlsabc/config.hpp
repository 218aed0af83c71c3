#pragma once

#include <yaml-cpp/yaml.h>

#include <array>
#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "nlsabc/errors.hpp"
#include "nlsabc/presets.hpp"
#include "nlsabc/solver.hpp"

// Configuration files are YAML documents with one mapping per section:
//
//   preset: example1            # optional; start from a built-in experiment
//   physics:      {hbar, mass, g}
//   grid:         {x_left, x_right, intervals | dx, dt, steps | t_final}
//   nonlinearity: {kind: none | cubic | quintic}
//   potential:    {kind: zero | gaussian | tabulated, amplitude, width, center, x: [..], v: [..]}
//   initial:      {kind: bright_soliton | chirped_gaussian | gaussian, A, B, x0, g, k0, alpha}
//   boundary:     {order: abc1 | abc2 | abc3 | dirichlet | neumann, k0 | k0_left, k0_right}
//   solver:       {picard_tol, picard_max_iter, blowup_factor}
//
// Keys given in the file replace the preset's; everything else is inherited.
// Without a preset every key the chosen kinds need must be present.

namespace nlsabc {

namespace config_detail {

inline const std::map<std::string, std::set<std::string>>& schema() {
    static const std::map<std::string, std::set<std::string>> s{
        {"physics", {"hbar", "mass", "g"}},
        {"grid", {"x_left", "x_right", "intervals", "dx", "dt", "steps", "t_final"}},
        {"nonlinearity", {"kind"}},
        {"potential", {"kind", "amplitude", "width", "center", "x", "v"}},
        {"initial", {"kind", "A", "B", "x0", "g", "k0", "alpha"}},
        {"boundary", {"order", "k0", "k0_left", "k0_right"}},
        {"solver", {"picard_tol", "picard_max_iter", "blowup_factor"}},
    };
    return s;
}

inline std::string format_double(double v) {
    std::array<char, 64> buf{};
    auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), res.ptr);
}

inline int line_of(const YAML::Node& node) { return node.Mark().line >= 0 ? node.Mark().line + 1 : 0; }

}  // namespace config_detail

/**
 * Flat "section.key" view of a configuration assembled from layers (preset,
 * file, command-line overrides). Later layers win. Mutually exclusive spellings
 * (intervals/dx, steps/t_final, k0/k0_left+k0_right) displace each other.
 */
class ConfigLayers {
public:
    struct Entry {
        YAML::Node value;
        int line = 0;
    };

    void set(const std::string& key, const YAML::Node& value, int line = 0) {
        const auto dot = key.find('.');
        const auto& sch = config_detail::schema();
        const auto sec = dot == std::string::npos ? sch.end() : sch.find(key.substr(0, dot));
        if (sec == sch.end() || !sec->second.count(key.substr(dot + 1)))
            throw ConfigError(key, "unknown key", line);

        auto displace = [&](const char* other) { entries_.erase(other); };
        if (key == "grid.dx") displace("grid.intervals");
        if (key == "grid.intervals") displace("grid.dx");
        if (key == "grid.t_final") displace("grid.steps");
        if (key == "grid.steps") displace("grid.t_final");
        if (key == "boundary.k0") {
            displace("boundary.k0_left");
            displace("boundary.k0_right");
        }
        if (key == "boundary.k0_left" || key == "boundary.k0_right") {
            auto both = entries_.find("boundary.k0");
            if (both != entries_.end()) {
                const Entry e = both->second;
                entries_.erase(both);
                entries_.emplace("boundary.k0_left", e);
                entries_.emplace("boundary.k0_right", e);
            }
        }
        entries_[key] = Entry{value, line};
    }

    /// Adds every key of a parsed document. A top-level `preset` key is
    /// expanded first, underneath the document's own keys.
    void merge(const YAML::Node& root, bool track_lines = true) {
        if (!root || root.IsNull()) return;
        if (!root.IsMap()) throw ConfigError("<document>", "expected a mapping", config_detail::line_of(root));
        if (const auto p = root["preset"]) {
            const auto name = p.as<std::string>();
            const auto preset = preset_from_name(name);
            if (!preset) throw ConfigError("preset", "unknown preset '" + name + "'", config_detail::line_of(p));
            merge_preset(*preset);
        }
        for (const auto& section : root) {
            const auto sec = section.first.as<std::string>();
            if (sec == "preset") continue;
            if (!section.second.IsMap())
                throw ConfigError(sec, "expected a mapping", config_detail::line_of(section.second));
            for (const auto& kv : section.second)
                set(sec + "." + kv.first.as<std::string>(), kv.second,
                    track_lines ? config_detail::line_of(kv.first) : 0);
        }
    }

    void merge_preset(Preset p);

    /// "section.key=value", value parsed as a YAML scalar or flow sequence.
    void apply_override(const std::string& assignment) {
        const auto eq = assignment.find('=');
        if (eq == std::string::npos || eq == 0)
            throw ConfigError(assignment, "override must have the form section.key=value");
        YAML::Node value;
        try {
            value = YAML::Load(assignment.substr(eq + 1));
        } catch (const YAML::Exception& e) {
            throw ConfigError(assignment.substr(0, eq), e.msg);
        }
        set(assignment.substr(0, eq), value);
    }

    bool has(const std::string& key) const { return entries_.count(key) != 0; }

    const Entry& at(const std::string& key) const {
        auto it = entries_.find(key);
        if (it == entries_.end()) throw ConfigError(key, "missing key");
        return it->second;
    }

    template <typename T>
    T get(const std::string& key) const {
        const Entry& e = at(key);
        try {
            return e.value.as<T>();
        } catch (const YAML::Exception&) {
            throw ConfigError(key, std::is_arithmetic_v<T> ? "expected a number" : "type mismatch", e.line);
        }
    }

    int line(const std::string& key) const { return has(key) ? at(key).line : 0; }

    SimulationConfig build() const;

private:
    std::map<std::string, Entry> entries_;
};

/// Full YAML document describing the configuration; parses back to an equal
/// SimulationConfig.
inline std::string serialize_config(const SimulationConfig& c) {
    using config_detail::format_double;
    YAML::Emitter out;
    out << YAML::BeginMap;

    auto num = [&](const char* key, double v) { out << YAML::Key << key << YAML::Value << format_double(v); };

    out << YAML::Key << "physics" << YAML::Value << YAML::BeginMap;
    num("hbar", c.physics.hbar);
    num("mass", c.physics.mass);
    num("g", c.physics.g);
    out << YAML::EndMap;

    out << YAML::Key << "grid" << YAML::Value << YAML::BeginMap;
    num("x_left", c.grid.x_left);
    num("x_right", c.grid.x_right);
    out << YAML::Key << "intervals" << YAML::Value << c.grid.intervals;
    num("dt", c.grid.dt);
    num("t_final", c.grid.t_final());
    out << YAML::EndMap;

    out << YAML::Key << "nonlinearity" << YAML::Value << YAML::BeginMap;
    out << YAML::Key << "kind" << YAML::Value << std::string(to_string(c.nonlinearity.kind));
    out << YAML::EndMap;

    out << YAML::Key << "potential" << YAML::Value << YAML::BeginMap;
    out << YAML::Key << "kind" << YAML::Value << std::string(to_string(c.potential.kind));
    if (c.potential.kind == PotentialKind::gaussian) {
        num("amplitude", c.potential.amplitude);
        num("width", c.potential.width);
        num("center", c.potential.center);
    } else if (c.potential.kind == PotentialKind::tabulated) {
        auto list = [&](const char* key, const std::vector<double>& v) {
            out << YAML::Key << key << YAML::Value << YAML::Flow << YAML::BeginSeq;
            for (double x : v) out << format_double(x);
            out << YAML::EndSeq;
        };
        list("x", c.potential.sample_x);
        list("v", c.potential.sample_v);
    }
    out << YAML::EndMap;

    out << YAML::Key << "initial" << YAML::Value << YAML::BeginMap;
    out << YAML::Key << "kind" << YAML::Value << std::string(to_string(c.initial.kind));
    switch (c.initial.kind) {
        case InitialKind::bright_soliton:
            num("A", c.initial.A);
            num("B", c.initial.B);
            num("x0", c.initial.x0);
            if (c.initial.g != c.physics.g) num("g", c.initial.g);
            break;
        case InitialKind::chirped_gaussian: num("k0", c.initial.k0); break;
        case InitialKind::gaussian:
            num("alpha", c.initial.alpha);
            num("x0", c.initial.x0);
            break;
    }
    out << YAML::EndMap;

    out << YAML::Key << "boundary" << YAML::Value << YAML::BeginMap;
    out << YAML::Key << "order" << YAML::Value << std::string(to_string(c.boundary.order));
    num("k0_left", c.boundary.k0_left);
    num("k0_right", c.boundary.k0_right);
    out << YAML::EndMap;

    out << YAML::Key << "solver" << YAML::Value << YAML::BeginMap;
    num("picard_tol", c.solver.picard_tol);
    out << YAML::Key << "picard_max_iter" << YAML::Value << c.solver.picard_max_iter;
    num("blowup_factor", c.solver.blowup_factor);
    out << YAML::EndMap;

    out << YAML::EndMap;
    return std::string(out.c_str()) + "\n";
}

inline void ConfigLayers::merge_preset(Preset p) { merge(YAML::Load(serialize_config(make_preset(p))), false); }

inline BoundaryOrder boundary_order_from_name(const std::string& name) {
    for (auto o : {BoundaryOrder::abc1_linear, BoundaryOrder::abc2_nonlinear, BoundaryOrder::abc3_nonlinear,
                   BoundaryOrder::dirichlet_zero, BoundaryOrder::neumann_zero})
        if (to_string(o) == name) return o;
    if (name == "1") return BoundaryOrder::abc1_linear;
    if (name == "2") return BoundaryOrder::abc2_nonlinear;
    if (name == "3") return BoundaryOrder::abc3_nonlinear;
    throw DomainError("unknown boundary order '" + name + "'");
}

inline SimulationConfig ConfigLayers::build() const {
    SimulationConfig c;
    auto fail = [&](const std::string& key, const std::string& what) -> void {
        throw ConfigError(key, what, line(key));
    };
    auto positive = [&](const std::string& key) {
        const double v = get<double>(key);
        if (!(v > 0.0)) fail(key, "must be positive");
        return v;
    };

    c.physics.hbar = positive("physics.hbar");
    c.physics.mass = positive("physics.mass");
    c.physics.g = get<double>("physics.g");

    const double x_left = get<double>("grid.x_left");
    const double x_right = get<double>("grid.x_right");
    if (!(x_right > x_left)) fail("grid.x_right", "must exceed x_left");
    int intervals = 0;
    if (has("grid.dx")) {
        const double dx = positive("grid.dx");
        try {
            intervals = intervals_for_spacing(x_left, x_right, dx);
        } catch (const DomainError& e) {
            fail("grid.dx", e.what());
        }
    } else {
        intervals = get<int>("grid.intervals");
    }
    if (intervals < min_intervals)
        fail(has("grid.dx") ? "grid.dx" : "grid.intervals", "need at least 4 intervals");
    const double dt = positive("grid.dt");
    long steps = 0;
    if (has("grid.t_final")) {
        const double t_final = positive("grid.t_final");
        try {
            steps = steps_for_time(t_final, dt);
        } catch (const DomainError& e) {
            fail("grid.t_final", e.what());
        }
    } else {
        steps = get<long>("grid.steps");
        if (steps < 1) fail("grid.steps", "must be >= 1");
    }
    c.grid = make_grid(x_left, x_right, intervals, dt, steps);

    const auto nl = get<std::string>("nonlinearity.kind");
    if (nl == "none") c.nonlinearity.kind = NonlinearityKind::none;
    else if (nl == "cubic") c.nonlinearity.kind = NonlinearityKind::cubic;
    else if (nl == "quintic") c.nonlinearity.kind = NonlinearityKind::quintic;
    else fail("nonlinearity.kind", "unknown kind '" + nl + "'");

    const auto pk = get<std::string>("potential.kind");
    if (pk == "zero") {
        c.potential = PotentialSpec::zero();
    } else if (pk == "gaussian") {
        c.potential = PotentialSpec::gaussian(get<double>("potential.amplitude"), get<double>("potential.width"),
                                              get<double>("potential.center"));
        if (!(c.potential.width >= 0.0)) fail("potential.width", "must be non-negative");
    } else if (pk == "tabulated") {
        try {
            c.potential = PotentialSpec::tabulated(get<std::vector<double>>("potential.x"),
                                                   get<std::vector<double>>("potential.v"));
        } catch (const DomainError& e) {
            fail("potential.x", e.what());
        }
    } else {
        fail("potential.kind", "unknown kind '" + pk + "'");
    }

    const auto ik = get<std::string>("initial.kind");
    if (ik == "bright_soliton") {
        const double g = has("initial.g") ? get<double>("initial.g") : c.physics.g;
        if (!(g < 0.0)) fail(has("initial.g") ? "initial.g" : "physics.g", "soliton needs g < 0");
        c.initial = InitialCondition::bright_soliton(get<double>("initial.A"), get<double>("initial.B"),
                                                     get<double>("initial.x0"), g);
    } else if (ik == "chirped_gaussian") {
        c.initial = InitialCondition::chirped_gaussian(get<double>("initial.k0"));
    } else if (ik == "gaussian") {
        c.initial = InitialCondition::gaussian(positive("initial.alpha"), get<double>("initial.x0"));
    } else {
        fail("initial.kind", "unknown kind '" + ik + "'");
    }

    const auto order = get<std::string>("boundary.order");
    try {
        c.boundary.order = boundary_order_from_name(order);
    } catch (const DomainError& e) {
        fail("boundary.order", e.what());
    }
    if (has("boundary.k0")) {
        c.boundary.k0_left = c.boundary.k0_right = positive("boundary.k0");
    } else {
        c.boundary.k0_left = positive("boundary.k0_left");
        c.boundary.k0_right = positive("boundary.k0_right");
    }

    if (has("solver.picard_tol")) c.solver.picard_tol = positive("solver.picard_tol");
    if (has("solver.picard_max_iter")) {
        c.solver.picard_max_iter = get<int>("solver.picard_max_iter");
        if (c.solver.picard_max_iter < 1) fail("solver.picard_max_iter", "must be >= 1");
    }
    if (has("solver.blowup_factor")) {
        c.solver.blowup_factor = get<double>("solver.blowup_factor");
        if (!(c.solver.blowup_factor > 1.0)) fail("solver.blowup_factor", "must exceed 1");
    }

    try {
        c.validate();
    } catch (const DomainError& e) {
        throw ConfigError("config", e.what());
    }
    return c;
}

/// Parses a configuration document held in memory, then applies overrides.
inline SimulationConfig parse_config_text(const std::string& text, const std::vector<std::string>& overrides = {}) {
    ConfigLayers layers;
    try {
        layers.merge(YAML::Load(text));
    } catch (const YAML::ParserException& e) {
        throw ConfigError("<document>", e.msg, e.mark.line + 1);
    }
    for (const auto& o : overrides) layers.apply_override(o);
    return layers.build();
}

inline SimulationConfig parse_config(const std::string& path, const std::vector<std::string>& overrides = {}) {
    std::ifstream in(path);
    if (!in) throw ConfigError(path, "cannot open configuration file");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str(), overrides);
}

/// A preset with overrides applied.
inline SimulationConfig preset_config(Preset p, const std::vector<std::string>& overrides = {}) {
    ConfigLayers layers;
    layers.merge_preset(p);
    for (const auto& o : overrides) layers.apply_override(o);
    return layers.build();
}

}  // namespace nlsabc
