#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "errors.hpp"
#include "plot.hpp"
#include "sweep.hpp"

using namespace photonet;

namespace {

std::string csv_string(const SweepTable& table) {
  std::ostringstream out;
  write_csv(table, out);
  return out.str();
}

std::size_t count_occurrences(const std::string& text, const std::string& needle) {
  std::size_t count = 0;
  for (std::size_t pos = text.find(needle); pos != std::string::npos;
       pos = text.find(needle, pos + needle.size())) {
    ++count;
  }
  return count;
}

std::string read_file(const std::string& path) {
  std::ifstream file(path);
  REQUIRE(file.good());
  std::ostringstream out;
  out << file.rdbuf();
  return out.str();
}

const SweepRow& row_at_setting(const SweepTable& table, double setting_deg, RowConfig config) {
  for (const SweepRow& row : table.rows) {
    if (std::abs(row.setting_deg - setting_deg) < 1e-9 && row.config == config) return row;
  }
  REQUIRE(false);
  return table.rows.front();
}

}  // namespace

TEST_CASE("polarizer sweep matches the cosine-squared law at spot angles") {
  MalusSweepParams params;  // defaults: 24 points from 0 by 15 degrees
  const SweepTable table = malus_sweep(params);
  REQUIRE(table.rows.size() == 24);
  const SweepRow& at0 = row_at_setting(table, 0.0, RowConfig::NotApplicable);
  CHECK(std::abs(at0.f0 - 1.0) < 0.02);
  const SweepRow& at60 = row_at_setting(table, 60.0, RowConfig::NotApplicable);
  CHECK(std::abs(at60.f0 - 0.25) < 0.02);
  CHECK(std::abs(at60.oracle_p0 - 0.25) < 1e-12);
  const SweepRow& at90 = row_at_setting(table, 90.0, RowConfig::NotApplicable);
  CHECK(at90.f0 < 0.02);
  for (const SweepRow& row : table.rows) {
    REQUIRE(row.n0 + row.n1 + row.n_exceptional == row.n);
    REQUIRE(row.n == params.events_per_point);
    REQUIRE(row.n_exceptional == 0);
  }
}

TEST_CASE("interferometer sweep endpoints") {
  WheelerSweepParams params;
  params.n_points = 3;
  params.phi_step_deg = 90.0;
  SUBCASE("closed configuration peaks at zero phase") {
    params.config = EomMode::Closed;
    const SweepTable table = wheeler_sweep(params);
    REQUIRE(table.rows.size() == 3);
    CHECK(std::abs(table.rows[0].f0 - 1.0) < 0.02);
    CHECK(std::abs(table.rows[0].oracle_p0 - 1.0) < 1e-12);
    CHECK(std::abs(table.rows[1].f0 - 0.5) < 0.02);  // 90 degrees
  }
  SUBCASE("open configuration is flat") {
    params.config = EomMode::Open;
    const SweepTable table = wheeler_sweep(params);
    for (const SweepRow& row : table.rows) {
      CHECK(std::abs(row.f0 - 0.5) < 0.02);
      CHECK(std::abs(row.oracle_p0 - 0.5) <= 1e-12);
      CHECK(row.config == RowConfig::Open);
    }
  }
}

TEST_CASE("random mode splits events evenly and reproduces the pure modes") {
  WheelerSweepParams random_params;
  random_params.n_points = 3;
  random_params.phi_step_deg = 60.0;
  random_params.config = EomMode::Random;
  const SweepTable random_table = wheeler_sweep(random_params);
  REQUIRE(random_table.rows.size() == 6);  // two rows per point

  WheelerSweepParams open_params = random_params;
  open_params.config = EomMode::Open;
  WheelerSweepParams closed_params = random_params;
  closed_params.config = EomMode::Closed;
  const SweepTable open_table = wheeler_sweep(open_params);
  const SweepTable closed_table = wheeler_sweep(closed_params);

  for (int point = 0; point < 3; ++point) {
    const double phi_deg = point * 60.0;
    const SweepRow& open_row = row_at_setting(random_table, phi_deg, RowConfig::Open);
    const SweepRow& closed_row = row_at_setting(random_table, phi_deg, RowConfig::Closed);
    const std::uint64_t n = random_params.events_per_point;
    CHECK(open_row.n + closed_row.n == n);
    CHECK(open_row.n > 2 * n / 5);
    CHECK(open_row.n < 3 * n / 5);
    CHECK(std::abs(open_row.f0 - row_at_setting(open_table, phi_deg, RowConfig::Open).f0) < 0.03);
    CHECK(std::abs(closed_row.f0 -
                   row_at_setting(closed_table, phi_deg, RowConfig::Closed).f0) < 0.03);
  }
}

TEST_CASE("systematic draws reproduce the pseudo-random fractions") {
  MalusSweepParams pseudo;
  pseudo.n_points = 8;
  pseudo.theta_step_deg = 30.0;
  pseudo.events_per_point = 5000;
  MalusSweepParams systematic = pseudo;
  systematic.rng_mode = RngMode::Systematic;
  const SweepTable a = malus_sweep(pseudo);
  const SweepTable b = malus_sweep(systematic);
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    CHECK(std::abs(a.rows[i].f0 - b.rows[i].f0) < 0.02);
  }
}

TEST_CASE("cold start with warmup still converges per point") {
  MalusSweepParams params;
  params.n_points = 4;
  params.theta_step_deg = 30.0;
  params.events_per_point = 4000;
  params.cold_start = true;  // warmup defaults to 1000
  const SweepTable table = malus_sweep(params);
  for (const SweepRow& row : table.rows) {
    REQUIRE(row.n == params.events_per_point);
    CHECK(std::abs(row.f0 - row.oracle_p0) < 0.03);
  }
}

TEST_CASE("sweeps reject empty grids") {
  MalusSweepParams no_events;
  no_events.events_per_point = 0;
  CHECK_THROWS_AS(malus_sweep(no_events), ConfigError);
  WheelerSweepParams no_points;
  no_points.n_points = 0;
  CHECK_THROWS_AS(wheeler_sweep(no_points), ConfigError);
  MalusSweepParams bad_alpha;
  bad_alpha.alpha = 1.5;
  CHECK_THROWS_AS(malus_sweep(bad_alpha), ConfigError);
}

TEST_CASE("csv format is stable byte for byte") {
  SweepTable table;
  table.experiment = ExperimentKind::Malus;
  SweepRow row;
  row.setting_deg = 60.0;
  row.config = RowConfig::NotApplicable;
  row.n = 10000;
  row.n0 = 2497;
  row.n1 = 7503;
  row.n_exceptional = 0;
  row.f0 = 0.2497;
  row.f1 = 0.7503;
  row.oracle_p0 = 0.25;
  table.rows.push_back(row);
  CHECK(csv_string(table) ==
        "experiment,setting_deg,config,n,n0,n1,n_exceptional,f0,f1,oracle_p0\n"
        "malus,60.000000,n.a.,10000,2497,7503,0,0.249700,0.750300,0.250000\n");
}

TEST_CASE("empty table writes the header only") {
  SweepTable table;
  CHECK(csv_string(table) == "experiment,setting_deg,config,n,n0,n1,n_exceptional,f0,f1,oracle_p0\n");
}

TEST_CASE("identical sweeps serialize identically") {
  MalusSweepParams params;
  params.n_points = 5;
  params.events_per_point = 2000;
  params.seed = 777;
  const std::string first = csv_string(malus_sweep(params));
  const std::string second = csv_string(malus_sweep(params));
  CHECK(first == second);
  CHECK(count_occurrences(first, "\n") == 6);
}

TEST_CASE("csv to an unwritable path reports the path") {
  SweepTable table;
  CHECK_THROWS_AS(write_csv(table, "/nonexistent-dir/out.csv"), IoError);
}

TEST_CASE("plot renders markers and model curves") {
  MalusSweepParams params;
  params.n_points = 6;
  params.events_per_point = 1000;
  const SweepTable table = malus_sweep(params);
  const std::string path = "plot_test_malus.svg";
  emit_plot(table, path);
  const std::string svg = read_file(path);
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(svg.find("</svg>") != std::string::npos);
  // one square and one circle per row, plus two dashed curves
  CHECK(count_occurrences(svg, "<rect x=") == table.rows.size());
  CHECK(count_occurrences(svg, "<circle") == table.rows.size());
  CHECK(count_occurrences(svg, "stroke-dasharray") == 2);
  std::remove(path.c_str());
}

TEST_CASE("plot of a random-mode sweep draws both configurations") {
  WheelerSweepParams params;
  params.n_points = 4;
  params.phi_step_deg = 90.0;
  params.events_per_point = 1000;
  const SweepTable table = wheeler_sweep(params);
  const std::string path = "plot_test_wheeler.svg";
  emit_plot(table, path);
  const std::string svg = read_file(path);
  CHECK(count_occurrences(svg, "stroke-dasharray") == 4);
  std::size_t open_rows = 0;
  for (const SweepRow& row : table.rows) {
    if (row.config == RowConfig::Open) ++open_rows;
  }
  // two hollow markers per open-configuration row plus the background rect
  CHECK(count_occurrences(svg, "fill=\"white\"") == 2 * open_rows + 1);
  std::remove(path.c_str());
}

TEST_CASE("plot of an empty table is axes only") {
  SweepTable table;
  const std::string path = "plot_test_empty.svg";
  emit_plot(table, path);
  const std::string svg = read_file(path);
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(count_occurrences(svg, "<rect x=") == 0);
  CHECK(count_occurrences(svg, "<circle") == 0);
  std::remove(path.c_str());
}

TEST_CASE("plot to an unwritable path reports the error") {
  SweepTable table;
  CHECK_THROWS_AS(emit_plot(table, "/nonexistent-dir/out.svg"), IoError);
}
