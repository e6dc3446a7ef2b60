#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "eap/material.hpp"

namespace eap::cli {

/// Invalid or missing configuration; mapped to exit code 2.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// Flat key-value configuration with [section] headers. Later assignments and
/// command-line overrides win over earlier ones.
class Config {
public:
    Config() = default;

    static Config parse_file(const std::string& path);
    static Config parse_string(const std::string& text);

    /// Applies "section.key=value".
    void apply_override(const std::string& assignment);

    void set(const std::string& section, const std::string& key, const std::string& value);

    bool has(const std::string& section, const std::string& key) const;

    std::string get_string(const std::string& section, const std::string& key) const;
    std::string get_string_or(const std::string& section, const std::string& key,
                              const std::string& fallback) const;
    double get_double(const std::string& section, const std::string& key) const;
    double get_double_or(const std::string& section, const std::string& key,
                         double fallback) const;
    int get_int(const std::string& section, const std::string& key) const;
    bool get_bool_or(const std::string& section, const std::string& key, bool fallback) const;

    /// Comma- or whitespace-separated list of numbers.
    std::vector<double> get_double_list(const std::string& section, const std::string& key) const;

private:
    std::map<std::string, std::map<std::string, std::string>> sections_;
};

/// Builds the material from the [material] section:
///   kind = mooney-rivlin | neo-hookean, with c1/c2 or mu keys.
eap::MaterialModel material_from_config(const Config& config);

/// Activation from the [load] section: exactly one of k_v or the
/// (permittivity, voltage, thickness) triple.
double activation_from_config(const Config& config);

/// k_v values for a command: <section>.k_v_list when present, otherwise the
/// single [load] value.
std::vector<double> activation_list(const Config& config, const std::string& section);

}  // namespace eap::cli
