#include "cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>
#include <vector>

#include "eap/scenarios.hpp"
#include "eap/serialize.hpp"

namespace eap::cli {

namespace {

void emit(const Config& config, const std::string& section, Streams io, const std::string& text) {
    const std::string path = config.get_string_or(section, "output", "");
    if (path.empty()) {
        io.out << text;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw ConfigError("cannot open output path: " + path);
    file << text;
    if (!file) throw ConfigError("failed writing output: " + path);
}

std::string split_path(const std::string& base, size_t index) {
    const std::filesystem::path p(base);
    std::filesystem::path out = p.parent_path();
    out /= p.stem();
    return out.string() + ".k" + std::to_string(index) + p.extension().string();
}

StretchState stretch_from_config(const Config& config, const std::string& section) {
    const double l1 = config.get_double(section, "lambda1");
    const double l2 = config.get_double(section, "lambda2");
    try {
        return StretchState(l1, l2);
    } catch (const InvalidStretch& e) {
        throw ConfigError(std::string("invalid stretch state: ") + e.what());
    }
}

nlohmann::json optimal_to_json(const OptimalPrestretch& opt) {
    nlohmann::json j;
    if (opt.status == OptimalPrestretch::Status::Converged) {
        j["status"] = "converged";
        j["prestretch"] = opt.prestretch;
        j["k_v"] = opt.k_v;
    } else {
        j["status"] = "unbounded";
        j["prestretch"] = nullptr;
        j["k_v"] = nullptr;
    }
    return j;
}

struct SweepAxes {
    std::vector<double> lambda1;
    std::vector<double> lambda2;
    std::vector<double> k_v;
    std::vector<std::pair<double, double>> moduli;  // (c1, c2) pairs
};

std::vector<double> axis_from_config(const Config& config, const std::string& prefix) {
    const double lo = config.get_double("sweep", prefix + "_min");
    const int count = config.get_int("sweep", prefix + "_count");
    if (count < 1) throw ConfigError("sweep." + prefix + "_count must be >= 1 (empty grid)");
    if (count == 1) return {lo};
    const double hi = config.get_double("sweep", prefix + "_max");
    if (!(lo > 0.0) || !(hi > lo)) {
        throw ConfigError("sweep: require 0 < " + prefix + "_min < " + prefix + "_max");
    }
    std::vector<double> axis(count);
    const double llo = std::log(lo);
    const double lhi = std::log(hi);
    for (int i = 0; i < count; ++i) {
        axis[i] = std::exp(llo + (lhi - llo) * static_cast<double>(i) / (count - 1));
    }
    axis.front() = lo;
    axis.back() = hi;
    return axis;
}

SweepAxes sweep_axes(const Config& config) {
    SweepAxes axes;
    axes.lambda1 = axis_from_config(config, "lambda1");
    axes.lambda2 = axis_from_config(config, "lambda2");
    axes.k_v = activation_list(config, "sweep");
    std::vector<double> c1s;
    std::vector<double> c2s;
    if (config.has("sweep", "c1_list") || config.has("sweep", "c2_list")) {
        c1s = config.has("sweep", "c1_list") ? config.get_double_list("sweep", "c1_list")
                                             : std::vector<double>{config.get_double_or("material", "c1", 0.0)};
        c2s = config.has("sweep", "c2_list") ? config.get_double_list("sweep", "c2_list")
                                             : std::vector<double>{config.get_double_or("material", "c2", 0.0)};
    } else {
        const auto model = material_from_config(config);
        c1s = {model.c1()};
        c2s = {model.c2()};
    }
    for (const double c1 : c1s) {
        for (const double c2 : c2s) {
            axes.moduli.emplace_back(c1, c2);
        }
    }
    return axes;
}

struct SweepRow {
    double lambda1, lambda2, k_v, c1, c2;
    StressRegime regime;
    double t1, t2, t1_relaxed, t2_relaxed;
};

SweepRow evaluate_sweep_row(const SweepAxes& axes, size_t flat) {
    const size_t nm = axes.moduli.size();
    const size_t nk = axes.k_v.size();
    const size_t n2 = axes.lambda2.size();
    const size_t im = flat % nm;
    const size_t ik = (flat / nm) % nk;
    const size_t i2 = (flat / (nm * nk)) % n2;
    const size_t i1 = flat / (nm * nk * n2);
    const auto [c1, c2] = axes.moduli[im];
    const auto model = MaterialModel::mooney_rivlin(c1, c2);
    const StretchState s(axes.lambda1[i1], axes.lambda2[i2]);
    const double k = axes.k_v[ik];
    const auto ps = plane_stress(model, s, k);
    const auto rs = relaxed_stress(model, s, k);
    return {s.lambda1, s.lambda2, k, c1, c2, ps.regime, ps.t1, ps.t2, rs.t1, rs.t2};
}

}  // namespace

unsigned worker_count() {
    if (const char* env = std::getenv("TENSILE_DOMAIN_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != nullptr && *end == '\0' && v > 0) return static_cast<unsigned>(v);
    }
    const unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : hc;
}

int cmd_classify(const Config& config, Streams io) {
    const auto model = material_from_config(config);
    const double k_v = activation_from_config(config);
    const auto s = stretch_from_config(config, "classify");

    const auto stress = plane_stress(model, s, k_v);
    const auto relaxed = relaxed_stress(model, s, k_v);

    nlohmann::json j;
    j["material"] = material_to_json(model);
    j["k_v"] = k_v;
    j["lambda1"] = s.lambda1;
    j["lambda2"] = s.lambda2;
    j["regime"] = to_string(stress.regime);
    j["on_boundary"] = stress.on_boundary;
    j["stress"] = plane_stress_to_json(stress);
    j["relaxed"] = relaxed_stress_to_json(relaxed);
    emit(config, "classify", io, j.dump(2) + "\n");
    return 0;
}

int cmd_boundary(const Config& config, Streams io) {
    const auto model = material_from_config(config);
    const auto k_list = activation_list(config, "boundary");
    const double lo = config.get_double("boundary", "lambda1_min");
    const double hi = config.get_double("boundary", "lambda1_max");
    const int n = config.get_int("boundary", "samples");
    if (n < 2) throw ConfigError("boundary.samples must be >= 2");
    if (!(lo > 0.0) || !(hi > lo)) {
        throw ConfigError("boundary: require 0 < lambda1_min < lambda1_max");
    }
    const bool split = config.get_bool_or("boundary", "split", false);
    const std::string output = config.get_string_or("boundary", "output", "");
    if (split && output.empty()) {
        throw ConfigError("boundary: --split requires an output path");
    }

    std::vector<DomainBoundary> curves;
    curves.reserve(k_list.size());
    for (const double k : k_list) {
        curves.push_back(boundary(model, k, lo, hi, n));
        if (curves.back().truncated) {
            io.err << "warning: boundary range crosses the asymptote at k_v = "
                   << format_double(k) << "; samples truncated\n";
        }
    }

    if (split) {
        for (size_t i = 0; i < curves.size(); ++i) {
            CsvTable table;
            table.header = boundary_csv_header();
            append_boundary_rows(table, curves[i]);
            std::ofstream file(split_path(output, i), std::ios::binary);
            if (!file) throw ConfigError("cannot open output path: " + split_path(output, i));
            write_csv(file, table);
        }
        return 0;
    }

    CsvTable table;
    table.header = boundary_csv_header();
    for (const auto& curve : curves) append_boundary_rows(table, curve);
    std::ostringstream text;
    write_csv(text, table);
    emit(config, "boundary", io, text.str());
    return 0;
}

int cmd_critical(const Config& config, Streams io) {
    const auto model = material_from_config(config);
    const auto result = pull_in(model);
    const auto generic = critical_activation_generic(model);

    nlohmann::json j;
    j["material"] = material_to_json(model);
    if (result.converged()) {
        j["status"] = "converged";
        j["k_v_crit"] = result.point.k_v_crit;
        j["lambda_crit"] = result.point.lambda_crit;
    } else {
        j["status"] = "unbounded";
        j["k_v_crit"] = nullptr;
        j["lambda_crit"] = nullptr;
    }
    j["generic"] = critical_to_json(generic);

    const bool closed_form = model.has_constant_moduli() && model.c2() == 0.0 && model.c1() > 0.0;
    if (closed_form) {
        const double mu = 2.0 * model.c1();
        const double k_closed = 3.0 * mu / std::pow(2.0, 11.0 / 3.0);
        const double lambda_closed = std::cbrt(2.0);
        j["closed_form"] = {{"k_v_crit", k_closed}, {"lambda_crit", lambda_closed}};
        if (generic.converged()) {
            const double dk = std::abs(generic.point.k_v_crit - k_closed) / k_closed;
            const double dl = std::abs(generic.point.lambda_crit - lambda_closed) / lambda_closed;
            j["discrepancy"] = std::max(dk, dl);
        } else {
            j["discrepancy"] = nullptr;
        }
    } else {
        j["closed_form"] = nullptr;
        j["discrepancy"] = nullptr;
    }

    if (result.converged()) {
        j["optimal_prestretch"] = optimal_to_json(optimal_prestretch(model));
    } else {
        j["optimal_prestretch"] = optimal_to_json(
            {OptimalPrestretch::Status::Unbounded, 0.0, 0.0});
    }
    emit(config, "critical", io, j.dump(2) + "\n");
    return 0;
}

int cmd_sweep(const Config& config, Streams io) {
    const auto axes = sweep_axes(config);
    for (const auto& [c1, c2] : axes.moduli) {
        try {
            (void)MaterialModel::mooney_rivlin(c1, c2);
        } catch (const DegenerateMaterial& e) {
            throw ConfigError(std::string("invalid sweep moduli: ") + e.what());
        }
    }
    const size_t total =
        axes.lambda1.size() * axes.lambda2.size() * axes.k_v.size() * axes.moduli.size();

    std::vector<SweepRow> rows(total);
    const unsigned workers = std::min<size_t>(worker_count(), total);
    if (workers <= 1) {
        for (size_t i = 0; i < total; ++i) rows[i] = evaluate_sweep_row(axes, i);
    } else {
        // Rows are written by flat index, so the output is deterministic
        // regardless of the worker count.
        std::vector<std::thread> pool;
        std::exception_ptr first_error;
        std::mutex error_mutex;
        const size_t chunk = (total + workers - 1) / workers;
        for (unsigned w = 0; w < workers; ++w) {
            const size_t begin = w * chunk;
            const size_t end = std::min(total, begin + chunk);
            pool.emplace_back([&, begin, end] {
                try {
                    for (size_t i = begin; i < end; ++i) rows[i] = evaluate_sweep_row(axes, i);
                } catch (...) {
                    const std::lock_guard<std::mutex> lock(error_mutex);
                    if (!first_error) first_error = std::current_exception();
                }
            });
        }
        for (auto& t : pool) t.join();
        if (first_error) std::rethrow_exception(first_error);
    }

    CsvTable table;
    table.header = {"lambda1", "lambda2", "k_v",        "c1",        "c2",
                    "regime",  "t1",      "t2",         "t1_relaxed", "t2_relaxed"};
    table.rows.reserve(total);
    for (const auto& r : rows) {
        table.rows.push_back({format_double(r.lambda1), format_double(r.lambda2),
                              format_double(r.k_v), format_double(r.c1), format_double(r.c2),
                              to_string(r.regime), format_double(r.t1), format_double(r.t2),
                              format_double(r.t1_relaxed), format_double(r.t2_relaxed)});
    }
    std::ostringstream text;
    write_csv(text, table);
    emit(config, "sweep", io, text.str());
    return 0;
}

int cmd_scenario(const Config& config, Streams io) {
    const auto model = material_from_config(config);
    const std::string type = config.get_string("scenario", "type");
    const auto k_list = activation_list(config, "scenario");

    nlohmann::json j;
    j["scenario"] = type;
    j["material"] = material_to_json(model);
    nlohmann::json results = nlohmann::json::array();

    if (type == "free") {
        for (const double k : k_list) {
            const auto branch = free_actuation(model, k);
            nlohmann::json states = nlohmann::json::array();
            for (const auto& state : branch.states) {
                states.push_back({{"lambda", state.lambda}, {"branch", to_string(state.branch)}});
            }
            results.push_back({{"k_v", k}, {"states", std::move(states)}});
        }
    } else if (type == "prestretch") {
        const double prestretch = config.get_double("scenario", "prestretch");
        if (!(prestretch > 0.0) || !std::isfinite(prestretch)) {
            throw ConfigError("scenario.prestretch must be positive");
        }
        j["prestretch"] = prestretch;
        for (const double k : k_list) {
            const auto sol = prestretched_actuation(model, prestretch, k);
            nlohmann::json record{{"k_v", k}, {"feasible", sol.feasible}};
            if (sol.lambda1) {
                record["lambda1"] = *sol.lambda1;
            } else {
                record["lambda1"] = nullptr;
            }
            results.push_back(std::move(record));
        }
    } else {
        throw ConfigError("scenario.type must be free or prestretch, got: " + type);
    }

    j["results"] = std::move(results);
    emit(config, "scenario", io, j.dump(2) + "\n");
    return 0;
}

int run_command(const std::string& name, const Config& config, Streams io) {
    if (name == "classify") return cmd_classify(config, io);
    if (name == "boundary") return cmd_boundary(config, io);
    if (name == "critical") return cmd_critical(config, io);
    if (name == "sweep") return cmd_sweep(config, io);
    if (name == "scenario") return cmd_scenario(config, io);
    throw ConfigError("unknown command: " + name);
}

}  // namespace eap::cli
