#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "eap/domain.hpp"
#include "eap/scenarios.hpp"

namespace eap {

/// Shortest decimal representation that parses back to the same double
/// (at most 17 significant digits).
std::string format_double(double x);

/// Exact inverse of format_double; throws Error on malformed input.
double parse_double(std::string_view text);

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

void write_csv(std::ostream& out, const CsvTable& table);
CsvTable read_csv(std::istream& in);

nlohmann::json material_to_json(const MaterialModel& model);
nlohmann::json boundary_to_json(const DomainBoundary& boundary);
nlohmann::json plane_stress_to_json(const PlaneStress& stress);
nlohmann::json relaxed_stress_to_json(const RelaxedStress& stress);
nlohmann::json critical_to_json(const CriticalResult& result);

/// DomainBoundary rows for CSV output: kind is "sample", "vertex", or
/// "asymptote"; vertex rows carry the equibiaxial stretch in both columns,
/// the asymptote row has no lambda2/residual (nan).
void append_boundary_rows(CsvTable& table, const DomainBoundary& boundary);

/// Header matching append_boundary_rows: k_v,kind,lambda1,lambda2,t2_residual.
std::vector<std::string> boundary_csv_header();

}  // namespace eap
