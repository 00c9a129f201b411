#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "network.hpp"
#include "rng.hpp"

namespace photonet {

inline constexpr std::uint64_t kDefaultSeed = 12345;

enum class ExperimentKind { Malus, Wheeler };
enum class RowConfig { Open, Closed, NotApplicable };

struct SweepRow {
  double setting_deg = 0.0;  // theta or phi of the sweep point
  RowConfig config = RowConfig::NotApplicable;
  std::uint64_t n = 0;  // tallied events: n0 + n1 + n_exceptional
  std::uint64_t n0 = 0;
  std::uint64_t n1 = 0;
  std::uint64_t n_exceptional = 0;
  double f0 = 0.0;  // n0 / (n0 + n1)
  double f1 = 0.0;
  double oracle_p0 = 0.0;  // amplitude-model prediction for f0
};

struct SweepTable {
  ExperimentKind experiment = ExperimentKind::Malus;
  std::vector<SweepRow> rows;
};

struct MalusSweepParams {
  double alpha = 0.99;
  std::uint64_t events_per_point = 10000;
  double theta_start_deg = 0.0;
  double theta_step_deg = 15.0;
  std::uint32_t n_points = 24;
  std::uint64_t seed = kDefaultSeed;
  RngMode rng_mode = RngMode::Pseudo;
  bool cold_start = false;  // reinitialize the learning machines per point
  // Untallied leading events per point; defaults to 0 warm-start, 1000 cold.
  std::optional<std::uint64_t> warmup;
};

struct WheelerSweepParams {
  double alpha = 0.99;
  std::uint64_t events_per_point = 10000;
  double phi_start_deg = 0.0;
  double phi_step_deg = 15.0;
  std::uint32_t n_points = 25;
  EomMode config = EomMode::Random;
  std::uint64_t seed = kDefaultSeed;
  RngMode rng_mode = RngMode::Pseudo;
  bool cold_start = false;
  std::optional<std::uint64_t> warmup;
};

// Polarizer-angle sweep over one beam splitter; one row per theta.
SweepTable malus_sweep(const MalusSweepParams& params);

// Phase sweep over the interferometer preset.  Fixed open/closed runs yield
// one row per phi; in random mode each event's modulator choice is drawn
// per event and every phi yields two rows, tallied separately per choice.
SweepTable wheeler_sweep(const WheelerSweepParams& params);

const char* experiment_name(ExperimentKind kind);
const char* config_name(RowConfig config);

void write_csv(const SweepTable& table, std::ostream& out);
void write_csv(const SweepTable& table, const std::string& path);  // "-" writes to stdout

}  // namespace photonet
