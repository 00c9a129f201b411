// Command-line front end; talks to the simulator exclusively through the
// public C API.

#include <photonet/photonet.h>

#include <cstdint>
#include <cstdio>
#include <map>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"

namespace {

struct CommonOptions {
  double alpha = 0.99;
  std::uint64_t events = 10000;
  std::string seed_text = std::to_string(PN_DEFAULT_SEED);
  int rng_mode = PN_RNG_PSEUDO;
  std::uint64_t warmup = PN_WARMUP_AUTO;
  std::string out_path = "-";
  std::string plot_path;
};

void add_common_options(CLI::App* cmd, CommonOptions* opts, CLI::Option** warm_flag,
                        CLI::Option** cold_flag) {
  cmd->add_option("--alpha", opts->alpha, "Learning parameter of the adaptive units")
      ->capture_default_str();
  cmd->add_option("--events", opts->events, "Events per sweep point")->capture_default_str();
  cmd->add_option("--seed", opts->seed_text, "Stream seed, decimal or hex (0x...)")
      ->capture_default_str();
  cmd->add_option("--rng-mode", opts->rng_mode, "Draw source for output selection")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, int>{{"pseudo", PN_RNG_PSEUDO}, {"systematic", PN_RNG_SYSTEMATIC}},
          CLI::ignore_case))
      ->default_str("pseudo");
  *warm_flag = cmd->add_flag("--warm-start", "Keep adaptive state across sweep points (default)");
  *cold_flag = cmd->add_flag("--cold-start", "Reinitialize adaptive state per sweep point");
  (*warm_flag)->excludes(*cold_flag);
  (*cold_flag)->excludes(*warm_flag);
  cmd->add_option("--warmup", opts->warmup,
                  "Untallied leading events per point (default 0 warm, 1000 cold)");
  cmd->add_option("--out", opts->out_path, "CSV output path; '-' writes to stdout")
      ->capture_default_str();
  cmd->add_option("--plot", opts->plot_path, "Also render an SVG plot to this path");
}

std::uint64_t parse_seed(const std::string& text) {
  std::size_t consumed = 0;
  const std::uint64_t value = std::stoull(text, &consumed, 0);  // base 0: decimal, hex, octal
  if (consumed != text.size()) throw std::invalid_argument("trailing characters");
  return value;
}

int write_outputs(pn_sweep* sweep, const CommonOptions& opts) {
  pn_status status = pn_sweep_write_csv(sweep, opts.out_path.c_str());
  if (status != PN_OK) {
    std::fprintf(stderr, "error: %s (%s)\n", pn_last_error(), pn_status_name(status));
    return 1;
  }
  if (!opts.plot_path.empty()) {
    status = pn_sweep_write_svg(sweep, opts.plot_path.c_str());
    if (status != PN_OK) {
      std::fprintf(stderr, "error: %s (%s)\n", pn_last_error(), pn_status_name(status));
      return 1;
    }
  }
  if (opts.out_path != "-") {
    std::fprintf(stderr, "wrote %zu rows to %s\n", pn_sweep_row_count(sweep),
                 opts.out_path.c_str());
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"photonet: event-by-event single-photon optics simulator"};
  app.require_subcommand(1);
  app.set_version_flag("--version", pn_version());
  app.set_config("--config-file", "",
                 "Read options from an ini-style file (sections [malus]/[wheeler]; "
                 "command-line flags take precedence)");

  CLI::App* malus = app.add_subcommand("malus", "Polarizer-angle sweep over one beam splitter");
  CommonOptions malus_opts;
  CLI::Option* malus_warm = nullptr;
  CLI::Option* malus_cold = nullptr;
  add_common_options(malus, &malus_opts, &malus_warm, &malus_cold);
  double theta_start = 0.0;
  double theta_step = 15.0;
  std::uint32_t malus_points = 24;
  malus->add_option("--theta-start", theta_start, "First polarizer angle, degrees")
      ->capture_default_str();
  malus->add_option("--theta-step", theta_step, "Angle increment, degrees")
      ->capture_default_str();
  malus->add_option("--points", malus_points, "Number of sweep points")->capture_default_str();

  CLI::App* wheeler =
      app.add_subcommand("wheeler", "Phase sweep over the delayed-choice interferometer");
  CommonOptions wheeler_opts;
  CLI::Option* wheeler_warm = nullptr;
  CLI::Option* wheeler_cold = nullptr;
  add_common_options(wheeler, &wheeler_opts, &wheeler_warm, &wheeler_cold);
  double phi_start = 0.0;
  double phi_step = 15.0;
  std::uint32_t wheeler_points = 25;
  int wheeler_config = PN_CONFIG_RANDOM;
  wheeler->add_option("--phi-start", phi_start, "First phase shift, degrees")
      ->capture_default_str();
  wheeler->add_option("--phi-step", phi_step, "Phase increment, degrees")->capture_default_str();
  wheeler->add_option("--points", wheeler_points, "Number of sweep points")
      ->capture_default_str();
  wheeler->add_option("--config", wheeler_config, "Interferometer configuration")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, int>{{"open", PN_CONFIG_OPEN},
                                     {"closed", PN_CONFIG_CLOSED},
                                     {"random", PN_CONFIG_RANDOM}},
          CLI::ignore_case))
      ->default_str("random");

  CLI::App* selftest =
      app.add_subcommand("selftest", "Run the built-in consistency checks and exit");

  CLI11_PARSE(app, argc, argv);

  if (selftest->parsed()) {
    const int failures = pn_selftest(/*verbose=*/1);
    return failures == 0 ? 0 : 1;
  }

  const CommonOptions& opts = malus->parsed() ? malus_opts : wheeler_opts;
  std::uint64_t seed = 0;
  try {
    seed = parse_seed(opts.seed_text);
  } catch (const std::exception&) {
    std::fprintf(stderr, "error: cannot parse seed '%s'\n", opts.seed_text.c_str());
    return 2;
  }

  pn_sweep* sweep = nullptr;
  pn_status status = PN_OK;
  if (malus->parsed()) {
    pn_malus_params params;
    pn_malus_params_init(&params);
    params.alpha = malus_opts.alpha;
    params.events_per_point = malus_opts.events;
    params.theta_start_deg = theta_start;
    params.theta_step_deg = theta_step;
    params.n_points = malus_points;
    params.seed = seed;
    params.rng_mode = malus_opts.rng_mode;
    params.cold_start = malus_cold->count() > 0 ? 1 : 0;
    params.warmup = malus_opts.warmup;
    status = pn_run_malus_sweep(&params, &sweep);
  } else {
    pn_wheeler_params params;
    pn_wheeler_params_init(&params);
    params.alpha = wheeler_opts.alpha;
    params.events_per_point = wheeler_opts.events;
    params.phi_start_deg = phi_start;
    params.phi_step_deg = phi_step;
    params.n_points = wheeler_points;
    params.config = wheeler_config;
    params.seed = seed;
    params.rng_mode = wheeler_opts.rng_mode;
    params.cold_start = wheeler_cold->count() > 0 ? 1 : 0;
    params.warmup = wheeler_opts.warmup;
    status = pn_run_wheeler_sweep(&params, &sweep);
  }

  if (status != PN_OK) {
    std::fprintf(stderr, "error: %s (%s)\n", pn_last_error(), pn_status_name(status));
    return 1;
  }
  const int rc = write_outputs(sweep, opts);
  pn_sweep_free(sweep);
  return rc;
}
