#include "cli/config.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "eap/serialize.hpp"
#include "eap/stress.hpp"

namespace eap::cli {

namespace {

std::string trim(const std::string& s) {
    size_t b = 0;
    size_t e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

}  // namespace

Config Config::parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_string(buf.str());
}

Config Config::parse_string(const std::string& text) {
    Config cfg;
    std::istringstream in(text);
    std::string line;
    std::string section;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const size_t comment = line.find_first_of("#;");
        if (comment != std::string::npos) line.erase(comment);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']') {
                throw ConfigError("line " + std::to_string(line_no) + ": unterminated section");
            }
            section = trim(line.substr(1, line.size() - 2));
            if (section.empty()) {
                throw ConfigError("line " + std::to_string(line_no) + ": empty section name");
            }
            continue;
        }
        const size_t eq = line.find('=');
        if (eq == std::string::npos) {
            throw ConfigError("line " + std::to_string(line_no) + ": expected key = value");
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty()) {
            throw ConfigError("line " + std::to_string(line_no) + ": empty key");
        }
        if (section.empty()) {
            throw ConfigError("line " + std::to_string(line_no) + ": key outside any section");
        }
        cfg.sections_[section][key] = value;
    }
    return cfg;
}

void Config::apply_override(const std::string& assignment) {
    const size_t eq = assignment.find('=');
    if (eq == std::string::npos) {
        throw ConfigError("override must be section.key=value: " + assignment);
    }
    const std::string path = trim(assignment.substr(0, eq));
    const size_t dot = path.find('.');
    if (dot == std::string::npos || dot == 0 || dot + 1 == path.size()) {
        throw ConfigError("override must be section.key=value: " + assignment);
    }
    set(path.substr(0, dot), path.substr(dot + 1), trim(assignment.substr(eq + 1)));
}

void Config::set(const std::string& section, const std::string& key, const std::string& value) {
    sections_[section][key] = value;
}

bool Config::has(const std::string& section, const std::string& key) const {
    const auto sec = sections_.find(section);
    return sec != sections_.end() && sec->second.count(key) > 0;
}

std::string Config::get_string(const std::string& section, const std::string& key) const {
    const auto sec = sections_.find(section);
    if (sec != sections_.end()) {
        const auto it = sec->second.find(key);
        if (it != sec->second.end()) return it->second;
    }
    throw ConfigError("missing config key: " + section + "." + key);
}

std::string Config::get_string_or(const std::string& section, const std::string& key,
                                  const std::string& fallback) const {
    return has(section, key) ? get_string(section, key) : fallback;
}

double Config::get_double(const std::string& section, const std::string& key) const {
    const std::string raw = get_string(section, key);
    try {
        return parse_double(raw);
    } catch (const Error&) {
        throw ConfigError("config key " + section + "." + key + " is not a number: " + raw);
    }
}

double Config::get_double_or(const std::string& section, const std::string& key,
                             double fallback) const {
    return has(section, key) ? get_double(section, key) : fallback;
}

int Config::get_int(const std::string& section, const std::string& key) const {
    const double v = get_double(section, key);
    const int i = static_cast<int>(v);
    if (static_cast<double>(i) != v) {
        throw ConfigError("config key " + section + "." + key + " is not an integer");
    }
    return i;
}

bool Config::get_bool_or(const std::string& section, const std::string& key,
                         bool fallback) const {
    if (!has(section, key)) return fallback;
    const std::string v = get_string(section, key);
    if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
    if (v == "false" || v == "0" || v == "no" || v == "off") return false;
    throw ConfigError("config key " + section + "." + key + " is not a boolean: " + v);
}

std::vector<double> Config::get_double_list(const std::string& section,
                                            const std::string& key) const {
    std::string raw = get_string(section, key);
    for (char& c : raw) {
        if (c == ',') c = ' ';
    }
    std::istringstream in(raw);
    std::vector<double> out;
    std::string token;
    while (in >> token) {
        try {
            out.push_back(parse_double(token));
        } catch (const Error&) {
            throw ConfigError("config key " + section + "." + key +
                              " has a non-numeric entry: " + token);
        }
    }
    if (out.empty()) {
        throw ConfigError("config key " + section + "." + key + " is an empty list");
    }
    return out;
}

eap::MaterialModel material_from_config(const Config& config) {
    const std::string kind = config.get_string("material", "kind");
    try {
        if (kind == "mooney-rivlin") {
            return MaterialModel::mooney_rivlin(config.get_double_or("material", "c1", 0.0),
                                                config.get_double_or("material", "c2", 0.0));
        }
        if (kind == "neo-hookean") {
            return MaterialModel::neo_hookean(config.get_double("material", "mu"));
        }
    } catch (const DegenerateMaterial& e) {
        throw ConfigError(std::string("invalid material: ") + e.what());
    }
    throw ConfigError("material.kind must be mooney-rivlin or neo-hookean, got: " + kind);
}

double activation_from_config(const Config& config) {
    const bool direct = config.has("load", "k_v");
    const bool triple = config.has("load", "permittivity") || config.has("load", "voltage") ||
                        config.has("load", "thickness");
    if (direct && triple) {
        throw ConfigError("load: provide either k_v or the permittivity/voltage/thickness "
                          "triple, not both");
    }
    try {
        if (direct) {
            return ElectricLoad::from_activation(config.get_double("load", "k_v")).activation();
        }
        if (triple) {
            return ElectricLoad::from_voltage(config.get_double("load", "permittivity"),
                                              config.get_double("load", "voltage"),
                                              config.get_double("load", "thickness"))
                .activation();
        }
    } catch (const InvalidLoad& e) {
        throw ConfigError(std::string("invalid load: ") + e.what());
    }
    throw ConfigError("load: provide k_v or the permittivity/voltage/thickness triple");
}

std::vector<double> activation_list(const Config& config, const std::string& section) {
    if (config.has(section, "k_v_list")) {
        auto list = config.get_double_list(section, "k_v_list");
        for (const double k : list) {
            if (!(k >= 0.0)) throw ConfigError(section + ".k_v_list entries must be >= 0");
        }
        return list;
    }
    return {activation_from_config(config)};
}

}  // namespace eap::cli
