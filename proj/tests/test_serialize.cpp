#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "eap/serialize.hpp"
#include "support.hpp"

TEST_CASE("format_double round-trips exactly") {
    std::mt19937_64 rng(41);
    for (int i = 0; i < 1000; ++i) {
        const int exponent = static_cast<int>(testsupport::uniform(rng, -300.0, 300.0));
        const double x = testsupport::uniform(rng, -1.0, 1.0) * std::pow(10.0, exponent);
        const std::string text = eap::format_double(x);
        CHECK(text.size() <= 24);  // shortest representation, <= 17 significant digits
        CHECK(eap::parse_double(text) == x);
    }
    CHECK(eap::format_double(0.5) == "0.5");
    CHECK(eap::format_double(0.0) == "0");
    CHECK(std::isnan(eap::parse_double(eap::format_double(std::nan("")))));
    CHECK_THROWS_AS(eap::parse_double("12,5"), eap::Error);
    CHECK_THROWS_AS(eap::parse_double(""), eap::Error);
}

TEST_CASE("CSV writer and reader round-trip") {
    eap::CsvTable table;
    table.header = {"a", "b", "c"};
    table.rows.push_back({"1", "tense", eap::format_double(1.0 / 3.0)});
    table.rows.push_back({eap::format_double(-2.5e-12), "slack", "nan"});

    std::ostringstream out;
    eap::write_csv(out, table);

    std::istringstream in(out.str());
    const auto parsed = eap::read_csv(in);
    CHECK(parsed.header == table.header);
    REQUIRE(parsed.rows.size() == table.rows.size());
    CHECK(parsed.rows == table.rows);
    CHECK(eap::parse_double(parsed.rows[0][2]) == 1.0 / 3.0);

    std::ostringstream again;
    eap::write_csv(again, parsed);
    CHECK(again.str() == out.str());
}

TEST_CASE("boundary serialization carries samples, vertices and asymptote") {
    const auto m = eap::MaterialModel::mooney_rivlin(1.0, 1.0);
    const auto b = eap::boundary(m, 1.2, 0.8, 2.0, 16);

    const auto j = eap::boundary_to_json(b);
    CHECK(j["k_v"] == 1.2);
    CHECK(j["samples"].size() == b.samples.size());
    CHECK(j["vertices"].size() == b.vertices.size());
    CHECK(j["asymptote"].is_number());

    eap::CsvTable table;
    table.header = eap::boundary_csv_header();
    eap::append_boundary_rows(table, b);
    CHECK(table.rows.size() == b.samples.size() + b.vertices.size() + 1);
    size_t vertex_rows = 0;
    for (const auto& row : table.rows) {
        REQUIRE(row.size() == table.header.size());
        if (row[1] == "vertex") ++vertex_rows;
    }
    CHECK(vertex_rows == b.vertices.size());
}
