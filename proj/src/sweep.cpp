#include "sweep.hpp"

#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>

#include "errors.hpp"
#include "oracle.hpp"

namespace photonet {
namespace {

constexpr double kDegToRad = std::numbers::pi / 180.0;

struct Tally {
  std::uint64_t n0 = 0;
  std::uint64_t n1 = 0;
  std::uint64_t n_exceptional = 0;

  void add(const DetectionRecord& rec) {
    if (rec.exceptional()) {
      ++n_exceptional;
    } else if (rec.detector == 0) {
      ++n0;
    } else {
      ++n1;
    }
  }
};

SweepRow make_row(double setting_deg, RowConfig config, const Tally& tally, double oracle_p0) {
  SweepRow row;
  row.setting_deg = setting_deg;
  row.config = config;
  row.n0 = tally.n0;
  row.n1 = tally.n1;
  row.n_exceptional = tally.n_exceptional;
  row.n = tally.n0 + tally.n1 + tally.n_exceptional;
  const std::uint64_t detected = tally.n0 + tally.n1;
  row.f0 = detected > 0 ? static_cast<double>(tally.n0) / static_cast<double>(detected) : 0.0;
  row.f1 = detected > 0 ? 1.0 - row.f0 : 0.0;
  row.oracle_p0 = oracle_p0;
  return row;
}

std::uint64_t resolved_warmup(const std::optional<std::uint64_t>& warmup, bool cold_start) {
  return warmup.value_or(cold_start ? 1000 : 0);
}

void check_grid(std::uint64_t events_per_point, std::uint32_t n_points) {
  if (events_per_point < 1) throw ConfigError("events per point must be at least 1");
  if (n_points < 1) throw ConfigError("sweep needs at least one point");
}

}  // namespace

SweepTable malus_sweep(const MalusSweepParams& params) {
  check_grid(params.events_per_point, params.n_points);
  const std::uint64_t warmup = resolved_warmup(params.warmup, params.cold_start);
  const RandomStream master(params.seed, params.rng_mode);

  Network net;
  if (!params.cold_start) net = build_malus_network(params.alpha, master);

  SweepTable table{ExperimentKind::Malus, {}};
  for (std::uint32_t i = 0; i < params.n_points; ++i) {
    const double theta_deg = params.theta_start_deg + i * params.theta_step_deg;
    if (params.cold_start) {
      net = build_malus_network(params.alpha, master.split("point" + std::to_string(i)));
    }
    set_source_polarization(net, theta_deg * kDegToRad);
    const DataSet data = run_events(net, warmup + params.events_per_point, EomMode::Open);
    Tally tally;
    for (std::size_t k = warmup; k < data.records.size(); ++k) tally.add(data.records[k]);
    table.rows.push_back(make_row(theta_deg, RowConfig::NotApplicable, tally,
                                  oracle_malus(theta_deg * kDegToRad).first));
  }
  return table;
}

SweepTable wheeler_sweep(const WheelerSweepParams& params) {
  check_grid(params.events_per_point, params.n_points);
  const std::uint64_t warmup = resolved_warmup(params.warmup, params.cold_start);
  const RandomStream master(params.seed, params.rng_mode);

  Network net;
  if (!params.cold_start) net = build_wheeler_network(params.alpha, master);

  SweepTable table{ExperimentKind::Wheeler, {}};
  for (std::uint32_t i = 0; i < params.n_points; ++i) {
    const double phi_deg = params.phi_start_deg + i * params.phi_step_deg;
    const double phi = phi_deg * kDegToRad;
    if (params.cold_start) {
      net = build_wheeler_network(params.alpha, master.split("point" + std::to_string(i)));
    }
    set_phase_shift(net, phi);
    const DataSet data = run_events(net, warmup + params.events_per_point, params.config);

    if (params.config == EomMode::Random) {
      Tally open_tally;
      Tally closed_tally;
      for (std::size_t k = warmup; k < data.records.size(); ++k) {
        (data.records[k].eom_choice == 1 ? closed_tally : open_tally).add(data.records[k]);
      }
      table.rows.push_back(make_row(phi_deg, RowConfig::Open, open_tally,
                                    oracle_wheeler(phi, /*closed=*/false)));
      table.rows.push_back(make_row(phi_deg, RowConfig::Closed, closed_tally,
                                    oracle_wheeler(phi, /*closed=*/true)));
    } else {
      Tally tally;
      for (std::size_t k = warmup; k < data.records.size(); ++k) tally.add(data.records[k]);
      const bool closed = params.config == EomMode::Closed;
      table.rows.push_back(make_row(phi_deg, closed ? RowConfig::Closed : RowConfig::Open,
                                    tally, oracle_wheeler(phi, closed)));
    }
  }
  return table;
}

const char* experiment_name(ExperimentKind kind) {
  return kind == ExperimentKind::Malus ? "malus" : "wheeler";
}

const char* config_name(RowConfig config) {
  switch (config) {
    case RowConfig::Open:
      return "open";
    case RowConfig::Closed:
      return "closed";
    default:
      return "n.a.";
  }
}

void write_csv(const SweepTable& table, std::ostream& out) {
  out << "experiment,setting_deg,config,n,n0,n1,n_exceptional,f0,f1,oracle_p0\n";
  char line[256];
  for (const SweepRow& row : table.rows) {
    std::snprintf(line, sizeof line,
                  "%s,%.6f,%s,%" PRIu64 ",%" PRIu64 ",%" PRIu64 ",%" PRIu64 ",%.6f,%.6f,%.6f\n",
                  experiment_name(table.experiment), row.setting_deg, config_name(row.config),
                  row.n, row.n0, row.n1, row.n_exceptional, row.f0, row.f1, row.oracle_p0);
    out << line;
  }
}

void write_csv(const SweepTable& table, const std::string& path) {
  if (path == "-") {
    write_csv(table, std::cout);
    std::cout.flush();
    return;
  }
  std::ofstream file(path);
  if (!file) throw IoError("cannot open '" + path + "' for writing");
  write_csv(table, file);
  file.flush();
  if (!file) throw IoError("write failed for '" + path + "'");
}

}  // namespace photonet
