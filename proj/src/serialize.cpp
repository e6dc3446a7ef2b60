#include "eap/serialize.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <ostream>
#include <sstream>

namespace eap {

std::string format_double(double x) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, res.ptr);
}

double parse_double(std::string_view text) {
    double value = 0.0;
    const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
    if (res.ec != std::errc{} || res.ptr != text.data() + text.size()) {
        throw Error("parse_double: malformed number '" + std::string(text) + "'");
    }
    return value;
}

void write_csv(std::ostream& out, const CsvTable& table) {
    const auto write_row = [&out](const std::vector<std::string>& row) {
        for (size_t i = 0; i < row.size(); ++i) {
            if (i > 0) out << ',';
            out << row[i];
        }
        out << '\n';
    };
    write_row(table.header);
    for (const auto& row : table.rows) write_row(row);
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    size_t start = 0;
    while (true) {
        const size_t pos = line.find(',', start);
        if (pos == std::string::npos) {
            fields.push_back(line.substr(start));
            break;
        }
        fields.push_back(line.substr(start, pos - start));
        start = pos + 1;
    }
    return fields;
}

}  // namespace

CsvTable read_csv(std::istream& in) {
    CsvTable table;
    std::string line;
    bool header_read = false;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (!header_read) {
            table.header = split_csv_line(line);
            header_read = true;
        } else {
            table.rows.push_back(split_csv_line(line));
        }
    }
    if (!header_read) throw Error("read_csv: missing header row");
    return table;
}

nlohmann::json material_to_json(const MaterialModel& model) {
    nlohmann::json j;
    switch (model.kind()) {
        case MaterialKind::MooneyRivlin:
            j["kind"] = "mooney-rivlin";
            j["c1"] = model.c1();
            j["c2"] = model.c2();
            break;
        case MaterialKind::NeoHookean:
            j["kind"] = "neo-hookean";
            j["c1"] = model.c1();
            j["c2"] = model.c2();
            j["mu"] = *model.shear_modulus();
            break;
        case MaterialKind::Generic:
            j["kind"] = "generic";
            if (const auto mu = model.shear_modulus()) {
                j["mu"] = *mu;
            } else {
                j["mu"] = nullptr;
            }
            break;
    }
    return j;
}

nlohmann::json boundary_to_json(const DomainBoundary& boundary) {
    nlohmann::json samples = nlohmann::json::array();
    for (const auto& s : boundary.samples) {
        samples.push_back({{"lambda1", s.lambda1},
                           {"lambda2", s.lambda2},
                           {"t2_residual", s.t2_residual}});
    }
    nlohmann::json j;
    j["k_v"] = boundary.k_v;
    j["samples"] = std::move(samples);
    j["vertices"] = boundary.vertices;
    if (boundary.asymptote) {
        j["asymptote"] = *boundary.asymptote;
    } else {
        j["asymptote"] = nullptr;
    }
    j["truncated"] = boundary.truncated;
    return j;
}

nlohmann::json plane_stress_to_json(const PlaneStress& stress) {
    return {{"t1", stress.t1},
            {"t2", stress.t2},
            {"regime", to_string(stress.regime)},
            {"on_boundary", stress.on_boundary}};
}

nlohmann::json relaxed_stress_to_json(const RelaxedStress& stress) {
    nlohmann::json j{{"t1", stress.t1},
                     {"t2", stress.t2},
                     {"regime", to_string(stress.regime)}};
    switch (stress.diagnostic) {
        case RelaxDiagnostic::None:
            j["diagnostic"] = nullptr;
            break;
        case RelaxDiagnostic::NaturalWidthUnavailable:
            j["diagnostic"] = "natural-width-unavailable";
            break;
        case RelaxDiagnostic::TensionNotSustainable:
            j["diagnostic"] = "tension-not-sustainable";
            break;
    }
    return j;
}

nlohmann::json critical_to_json(const CriticalResult& result) {
    nlohmann::json j;
    if (result.converged()) {
        j["status"] = "converged";
        j["k_v_crit"] = result.point.k_v_crit;
        j["lambda_crit"] = result.point.lambda_crit;
    } else {
        j["status"] = "unbounded";
        j["k_v_crit"] = nullptr;
        j["lambda_crit"] = nullptr;
    }
    return j;
}

std::vector<std::string> boundary_csv_header() {
    return {"k_v", "kind", "lambda1", "lambda2", "t2_residual"};
}

void append_boundary_rows(CsvTable& table, const DomainBoundary& boundary) {
    const std::string k_v = format_double(boundary.k_v);
    const std::string nan = format_double(std::numeric_limits<double>::quiet_NaN());
    for (const auto& s : boundary.samples) {
        table.rows.push_back({k_v, "sample", format_double(s.lambda1), format_double(s.lambda2),
                              format_double(s.t2_residual)});
    }
    for (const double v : boundary.vertices) {
        table.rows.push_back({k_v, "vertex", format_double(v), format_double(v), nan});
    }
    if (boundary.asymptote) {
        table.rows.push_back({k_v, "asymptote", format_double(*boundary.asymptote), nan, nan});
    }
}

}  // namespace eap
