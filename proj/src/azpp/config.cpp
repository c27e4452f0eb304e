#include "azpp/config.hpp"

#include <algorithm>
#include <cerrno>
#include <charconv>
#include <cstring>
#include <fstream>
#include <sstream>

namespace azpp {

namespace {

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

[[noreturn]] void bad_value(const std::string& key, const std::string& what) {
    throw ConfigError(key + ": " + what);
}

double parse_double(const std::string& key, const std::string& v) {
    double out = 0.0;
    auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc() || p != v.data() + v.size()) bad_value(key, "expected a number (got '" + v + "')");
    return out;
}

long parse_long(const std::string& key, const std::string& v) {
    long out = 0;
    auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc() || p != v.data() + v.size()) bad_value(key, "expected an integer (got '" + v + "')");
    return out;
}

int parse_int(const std::string& key, const std::string& v) {
    long l = parse_long(key, v);
    if (l < INT_MIN || l > INT_MAX) bad_value(key, "integer out of range");
    return static_cast<int>(l);
}

uint64_t parse_u64(const std::string& key, const std::string& v) {
    uint64_t out = 0;
    auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc() || p != v.data() + v.size())
        bad_value(key, "expected an unsigned integer (got '" + v + "')");
    return out;
}

bool parse_bool(const std::string& key, const std::string& v) {
    if (v == "true") return true;
    if (v == "false") return false;
    bad_value(key, "expected true or false (got '" + v + "')");
}

std::string format_double(double v) {
    char buf[64];
    auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    (void)ec;
    return std::string(buf, p);
}

const char* bool_name(bool b) { return b ? "true" : "false"; }

void apply_key(SimConfig& c, const std::string& section, const std::string& key,
               const std::string& value) {
    const std::string full = section + "." + key;
    if (section == "engine") {
        if (key == "n_agents") c.n_agents = parse_int(full, value);
        else if (key == "n_ticks") c.n_ticks = parse_long(full, value);
        else if (key == "seed") c.master_seed = parse_u64(full, value);
        else throw ConfigError("unknown key: " + full);
    } else if (section == "grid") {
        if (key == "width") c.grid_width = parse_int(full, value);
        else if (key == "height") c.grid_height = parse_int(full, value);
        else throw ConfigError("unknown key: " + full);
    } else if (section == "environment") {
        if (key == "attack_rate") c.env.attack_rate = parse_double(full, value);
        else if (key == "extinction_rate") c.env.extinction_rate = parse_double(full, value);
        else throw ConfigError("unknown key: " + full);
    } else if (section == "cognition") {
        if (key == "alpha_rw") c.rw.alpha_rw = parse_double(full, value);
        else if (key == "beta_rw") c.rw.beta_rw = parse_double(full, value);
        else if (key == "theta_base") c.theta_base = parse_double(full, value);
        else if (key == "p_flight") c.p_flight = parse_double(full, value);
        else if (key == "memory_length") c.memory_length = parse_int(full, value);
        else if (key == "sampling_radius") c.sampling_radius = parse_int(full, value);
        else if (key == "fixed_radius") c.fixed_radius = parse_int(full, value);
        else if (key == "age_mean") c.age_mean = parse_double(full, value);
        else if (key == "age_sd") c.age_sd = parse_double(full, value);
        else throw ConfigError("unknown key: " + full);
    } else if (section == "conflict") {
        if (key == "alpha_aggr") c.conflict.alpha_aggr = parse_double(full, value);
        else if (key == "beta_ret") c.conflict.beta_ret = parse_double(full, value);
        else if (key == "damage_decay") c.conflict.damage_decay = parse_double(full, value);
        else if (key == "damage_penalty_coeff") c.damage_penalty_coeff = parse_double(full, value);
        else if (key == "flight_radius") c.conflict.flight_radius = parse_int(full, value);
        else throw ConfigError("unknown key: " + full);
    } else if (section == "network") {
        if (key == "alpha_hom") c.alpha_hom = parse_double(full, value);
        else throw ConfigError("unknown key: " + full);
    } else if (section == "extensions") {
        if (key == "age_impulse") c.ext.age_impulse = parse_bool(full, value);
        else if (key == "endogenous_radius") c.ext.endogenous_radius = parse_bool(full, value);
        else if (key == "flight") c.ext.flight = parse_bool(full, value);
        else if (key == "memory") c.ext.memory = parse_bool(full, value);
        else if (key == "retaliation") c.ext.retaliation = parse_bool(full, value);
        else if (key == "coupling_surface_output") c.ext.coupling_surface_output = parse_bool(full, value);
        else if (key == "homophily") c.ext.homophily = parse_bool(full, value);
        else if (key == "shocks") c.ext.shocks = parse_bool(full, value);
        else throw ConfigError("unknown key: " + full);
    } else if (section == "shocks") {
        if (key == "period") c.shock.period = parse_int(full, value);
        else if (key == "magnitude") c.shock.magnitude = parse_double(full, value);
        else if (key == "mode") {
            if (value == "uniform") c.shock.mode = ShockMode::Uniform;
            else if (value == "per_agent_random") c.shock.mode = ShockMode::PerAgentRandom;
            else bad_value(full, "expected uniform or per_agent_random (got '" + value + "')");
        } else throw ConfigError("unknown key: " + full);
    } else if (section == "pulse") {
        if (key == "enabled") c.pulse.enabled = parse_bool(full, value);
        else if (key == "start") c.pulse.start = parse_int(full, value);
        else if (key == "end") c.pulse.end = parse_int(full, value);
        else if (key == "x") c.pulse.x = parse_int(full, value);
        else if (key == "y") c.pulse.y = parse_int(full, value);
        else if (key == "width") c.pulse.width = parse_int(full, value);
        else if (key == "height") c.pulse.height = parse_int(full, value);
        else throw ConfigError("unknown key: " + full);
    } else if (section == "surface") {
        if (key == "resolution") c.surface.resolution = parse_int(full, value);
        else if (key == "p_fixed") c.surface.p_fixed = parse_double(full, value);
        else if (key == "c_max") c.surface.c_max = parse_double(full, value);
        else throw ConfigError("unknown key: " + full);
    } else if (section == "output") {
        if (key == "dir") c.output.dir = value;
        else if (key == "network_dump") c.output.network_dump = parse_bool(full, value);
        else throw ConfigError("unknown key: " + full);
    } else if (section.rfind("agent.", 0) == 0) {
        const std::string id_str = section.substr(6);
        int id = parse_int(section, id_str.empty() ? "?" : id_str);
        AgentOverride& a = c.agents[id];
        if (key == "age") a.age = parse_double(full, value);
        else if (key == "mobile") a.mobile = parse_bool(full, value);
        else if (key == "memory_length") a.memory_length = parse_int(full, value);
        else if (key == "x") a.x = parse_int(full, value);
        else if (key == "y") a.y = parse_int(full, value);
        else throw ConfigError("unknown key: " + full);
    } else {
        throw ConfigError("unknown section: [" + section + "]");
    }
}

}  // namespace

SimConfig parse_config_text(const std::string& text) {
    SimConfig c;
    std::istringstream in(text);
    std::string line;
    std::string section;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw ConfigError("line " + std::to_string(lineno) + ": malformed section header");
            section = trim(line.substr(1, line.size() - 2));
            continue;
        }
        const size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("line " + std::to_string(lineno) + ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (section.empty())
            throw ConfigError("line " + std::to_string(lineno) + ": key '" + key +
                              "' outside any [section]");
        apply_key(c, section, key, value);
    }
    validate_config(c);
    return c;
}

SimConfig parse_config(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open config file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config_text(ss.str());
}

std::string serialize_config(const SimConfig& c) {
    std::ostringstream o;
    o << "[engine]\n";
    o << "n_agents = " << c.n_agents << "\n";
    o << "n_ticks = " << c.n_ticks << "\n";
    o << "seed = " << c.master_seed << "\n";
    o << "\n[grid]\n";
    o << "width = " << c.grid_width << "\n";
    o << "height = " << c.grid_height << "\n";
    o << "\n[environment]\n";
    o << "attack_rate = " << format_double(c.env.attack_rate) << "\n";
    o << "extinction_rate = " << format_double(c.env.extinction_rate) << "\n";
    o << "\n[cognition]\n";
    o << "alpha_rw = " << format_double(c.rw.alpha_rw) << "\n";
    o << "beta_rw = " << format_double(c.rw.beta_rw) << "\n";
    o << "theta_base = " << format_double(c.theta_base) << "\n";
    o << "p_flight = " << format_double(c.p_flight) << "\n";
    o << "memory_length = " << c.memory_length << "\n";
    o << "sampling_radius = " << c.sampling_radius << "\n";
    o << "fixed_radius = " << c.fixed_radius << "\n";
    o << "age_mean = " << format_double(c.age_mean) << "\n";
    o << "age_sd = " << format_double(c.age_sd) << "\n";
    o << "\n[conflict]\n";
    o << "alpha_aggr = " << format_double(c.conflict.alpha_aggr) << "\n";
    o << "beta_ret = " << format_double(c.conflict.beta_ret) << "\n";
    o << "damage_decay = " << format_double(c.conflict.damage_decay) << "\n";
    o << "damage_penalty_coeff = " << format_double(c.damage_penalty_coeff) << "\n";
    o << "flight_radius = " << c.conflict.flight_radius << "\n";
    o << "\n[network]\n";
    o << "alpha_hom = " << format_double(c.alpha_hom) << "\n";
    o << "\n[extensions]\n";
    o << "age_impulse = " << bool_name(c.ext.age_impulse) << "\n";
    o << "endogenous_radius = " << bool_name(c.ext.endogenous_radius) << "\n";
    o << "flight = " << bool_name(c.ext.flight) << "\n";
    o << "memory = " << bool_name(c.ext.memory) << "\n";
    o << "retaliation = " << bool_name(c.ext.retaliation) << "\n";
    o << "coupling_surface_output = " << bool_name(c.ext.coupling_surface_output) << "\n";
    o << "homophily = " << bool_name(c.ext.homophily) << "\n";
    o << "shocks = " << bool_name(c.ext.shocks) << "\n";
    o << "\n[shocks]\n";
    o << "period = " << c.shock.period << "\n";
    o << "magnitude = " << format_double(c.shock.magnitude) << "\n";
    o << "mode = " << (c.shock.mode == ShockMode::Uniform ? "uniform" : "per_agent_random") << "\n";
    o << "\n[pulse]\n";
    o << "enabled = " << bool_name(c.pulse.enabled) << "\n";
    o << "start = " << c.pulse.start << "\n";
    o << "end = " << c.pulse.end << "\n";
    o << "x = " << c.pulse.x << "\n";
    o << "y = " << c.pulse.y << "\n";
    o << "width = " << c.pulse.width << "\n";
    o << "height = " << c.pulse.height << "\n";
    o << "\n[surface]\n";
    o << "resolution = " << c.surface.resolution << "\n";
    o << "p_fixed = " << format_double(c.surface.p_fixed) << "\n";
    o << "c_max = " << format_double(c.surface.c_max) << "\n";
    o << "\n[output]\n";
    if (!c.output.dir.empty()) o << "dir = " << c.output.dir << "\n";
    o << "network_dump = " << bool_name(c.output.network_dump) << "\n";
    for (const auto& [id, a] : c.agents) {
        o << "\n[agent." << id << "]\n";
        if (a.age) o << "age = " << format_double(*a.age) << "\n";
        if (a.mobile) o << "mobile = " << bool_name(*a.mobile) << "\n";
        if (a.memory_length) o << "memory_length = " << *a.memory_length << "\n";
        if (a.x) o << "x = " << *a.x << "\n";
        if (a.y) o << "y = " << *a.y << "\n";
    }
    return o.str();
}

void validate_config(const SimConfig& c) {
    auto require = [](bool ok, const std::string& key, const std::string& constraint) {
        if (!ok) throw ConfigError(key + ": must be " + constraint);
    };
    auto in01 = [&](double v, const std::string& key) {
        if (!(v >= 0.0 && v <= 1.0))
            throw ConfigError(key + ": must be in [0,1] (got " + format_double(v) + ")");
    };

    require(c.grid_width >= 1, "grid.width", ">= 1");
    require(c.grid_height >= 1, "grid.height", ">= 1");
    require(c.n_agents >= 1, "engine.n_agents", ">= 1");
    require(c.n_ticks >= 1, "engine.n_ticks", ">= 1");

    in01(c.env.attack_rate, "environment.attack_rate");
    in01(c.env.extinction_rate, "environment.extinction_rate");

    require(c.rw.alpha_rw > 0.0 && c.rw.alpha_rw <= 1.0, "cognition.alpha_rw", "in (0,1]");
    require(c.rw.beta_rw > 0.0 && c.rw.beta_rw <= 1.0, "cognition.beta_rw", "in (0,1]");
    require(c.theta_base >= 0.0, "cognition.theta_base", ">= 0");
    in01(c.p_flight, "cognition.p_flight");
    require(c.memory_length >= 1, "cognition.memory_length", ">= 1");
    require(c.age_sd >= 0.0, "cognition.age_sd", ">= 0");
    require(c.age_mean >= 18.0, "cognition.age_mean", ">= 18");

    const int min_dim = std::min(c.grid_width, c.grid_height);
    auto fits = [&](int radius, const std::string& key) {
        require(radius >= 0, key, ">= 0");
        if (2 * radius + 1 > min_dim)
            throw ConfigError(key + ": 2*radius+1 must not exceed min(grid.width, grid.height)");
    };
    fits(c.sampling_radius, "cognition.sampling_radius");
    fits(c.fixed_radius, "cognition.fixed_radius");
    require(c.conflict.flight_radius >= 1, "conflict.flight_radius", ">= 1");
    fits(c.conflict.flight_radius, "conflict.flight_radius");
    if (c.ext.endogenous_radius && min_dim < 11)
        throw ConfigError(
            "extensions.endogenous_radius: requires min(grid.width, grid.height) >= 11 "
            "(max endogenous radius is 5)");

    require(c.conflict.alpha_aggr >= 0.0, "conflict.alpha_aggr", ">= 0");
    require(c.conflict.beta_ret >= 0.0, "conflict.beta_ret", ">= 0");
    in01(c.conflict.damage_decay, "conflict.damage_decay");
    require(c.damage_penalty_coeff >= 0.0, "conflict.damage_penalty_coeff", ">= 0");

    require(c.alpha_hom > 0.0, "network.alpha_hom", "> 0");

    require(c.shock.period >= 1, "shocks.period", ">= 1");
    require(c.shock.magnitude >= 0.0, "shocks.magnitude", ">= 0");

    if (c.pulse.enabled) {
        require(c.pulse.start >= 1, "pulse.start", ">= 1");
        require(c.pulse.end >= c.pulse.start, "pulse.end", ">= pulse.start");
        require(c.pulse.width >= 1, "pulse.width", ">= 1");
        require(c.pulse.height >= 1, "pulse.height", ">= 1");
        require(c.pulse.x >= 0 && c.pulse.x + c.pulse.width <= c.grid_width, "pulse.x",
                "a rect within the grid");
        require(c.pulse.y >= 0 && c.pulse.y + c.pulse.height <= c.grid_height, "pulse.y",
                "a rect within the grid");
    }

    require(c.surface.resolution >= 2, "surface.resolution", ">= 2");
    in01(c.surface.p_fixed, "surface.p_fixed");
    require(c.surface.c_max > 0.0, "surface.c_max", "> 0");

    for (const auto& [id, a] : c.agents) {
        const std::string prefix = "agent." + std::to_string(id);
        require(id >= 0 && id < c.n_agents, prefix, "an agent id in [0, engine.n_agents)");
        if (a.age) require(*a.age >= 18.0, prefix + ".age", ">= 18");
        if (a.memory_length) require(*a.memory_length >= 1, prefix + ".memory_length", ">= 1");
        if (a.x.has_value() != a.y.has_value())
            throw ConfigError(prefix + ": x and y must be given together");
        if (a.x) require(*a.x >= 0 && *a.x < c.grid_width, prefix + ".x", "in [0, grid.width)");
        if (a.y) require(*a.y >= 0 && *a.y < c.grid_height, prefix + ".y", "in [0, grid.height)");
    }
}

uint64_t config_hash(const SimConfig& c) {
    const std::string text = serialize_config(c);
    uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char ch : text) {
        h ^= ch;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string config_hash_hex(const SimConfig& c) {
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(config_hash(c)));
    return buf;
}

}  // namespace azpp
