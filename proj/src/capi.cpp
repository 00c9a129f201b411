#include <photonet/photonet.h>

#include <exception>
#include <functional>
#include <iostream>
#include <new>
#include <optional>
#include <stdexcept>
#include <string>

#include "errors.hpp"
#include "plot.hpp"
#include "selftest.hpp"
#include "sweep.hpp"

struct pn_sweep {
  photonet::SweepTable table;
};

namespace {

thread_local std::string g_last_error;

pn_status fail(pn_status status, const std::string& message) {
  g_last_error = message;
  return status;
}

pn_status run_guarded(const std::function<void()>& body) {
  try {
    body();
    g_last_error.clear();
    return PN_OK;
  } catch (const photonet::ConfigError& e) {
    return fail(PN_ERR_CONFIG, e.what());
  } catch (const photonet::StructureError& e) {
    return fail(PN_ERR_STRUCTURE, e.what());
  } catch (const photonet::IoError& e) {
    return fail(PN_ERR_IO, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(PN_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(PN_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(PN_ERR_INTERNAL, e.what());
  }
}

std::optional<photonet::RngMode> to_rng_mode(int mode) {
  switch (mode) {
    case PN_RNG_PSEUDO:
      return photonet::RngMode::Pseudo;
    case PN_RNG_SYSTEMATIC:
      return photonet::RngMode::Systematic;
    default:
      return std::nullopt;
  }
}

std::optional<std::uint64_t> to_warmup(uint64_t warmup) {
  if (warmup == PN_WARMUP_AUTO) return std::nullopt;
  return warmup;
}

int to_c_config(photonet::RowConfig config) {
  switch (config) {
    case photonet::RowConfig::Open:
      return PN_CONFIG_OPEN;
    case photonet::RowConfig::Closed:
      return PN_CONFIG_CLOSED;
    default:
      return PN_CONFIG_NA;
  }
}

}  // namespace

extern "C" {

void pn_malus_params_init(pn_malus_params* params) {
  if (!params) return;
  *params = pn_malus_params{};
  params->alpha = 0.99;
  params->events_per_point = 10000;
  params->theta_start_deg = 0.0;
  params->theta_step_deg = 15.0;
  params->n_points = 24;
  params->seed = PN_DEFAULT_SEED;
  params->rng_mode = PN_RNG_PSEUDO;
  params->cold_start = 0;
  params->warmup = PN_WARMUP_AUTO;
}

void pn_wheeler_params_init(pn_wheeler_params* params) {
  if (!params) return;
  *params = pn_wheeler_params{};
  params->alpha = 0.99;
  params->events_per_point = 10000;
  params->phi_start_deg = 0.0;
  params->phi_step_deg = 15.0;
  params->n_points = 25;
  params->config = PN_CONFIG_RANDOM;
  params->seed = PN_DEFAULT_SEED;
  params->rng_mode = PN_RNG_PSEUDO;
  params->cold_start = 0;
  params->warmup = PN_WARMUP_AUTO;
}

pn_status pn_run_malus_sweep(const pn_malus_params* params, pn_sweep** out_sweep) {
  if (!params || !out_sweep) return fail(PN_ERR_INVALID_ARGUMENT, "null argument");
  *out_sweep = nullptr;
  return run_guarded([&] {
    const auto mode = to_rng_mode(params->rng_mode);
    if (!mode) throw photonet::ConfigError("unknown rng mode");
    photonet::MalusSweepParams p;
    p.alpha = params->alpha;
    p.events_per_point = params->events_per_point;
    p.theta_start_deg = params->theta_start_deg;
    p.theta_step_deg = params->theta_step_deg;
    p.n_points = params->n_points;
    p.seed = params->seed;
    p.rng_mode = *mode;
    p.cold_start = params->cold_start != 0;
    p.warmup = to_warmup(params->warmup);
    *out_sweep = new pn_sweep{photonet::malus_sweep(p)};
  });
}

pn_status pn_run_wheeler_sweep(const pn_wheeler_params* params, pn_sweep** out_sweep) {
  if (!params || !out_sweep) return fail(PN_ERR_INVALID_ARGUMENT, "null argument");
  *out_sweep = nullptr;
  return run_guarded([&] {
    const auto mode = to_rng_mode(params->rng_mode);
    if (!mode) throw photonet::ConfigError("unknown rng mode");
    photonet::EomMode config;
    switch (params->config) {
      case PN_CONFIG_OPEN:
        config = photonet::EomMode::Open;
        break;
      case PN_CONFIG_CLOSED:
        config = photonet::EomMode::Closed;
        break;
      case PN_CONFIG_RANDOM:
        config = photonet::EomMode::Random;
        break;
      default:
        throw photonet::ConfigError("config must be open, closed or random");
    }
    photonet::WheelerSweepParams p;
    p.alpha = params->alpha;
    p.events_per_point = params->events_per_point;
    p.phi_start_deg = params->phi_start_deg;
    p.phi_step_deg = params->phi_step_deg;
    p.n_points = params->n_points;
    p.config = config;
    p.seed = params->seed;
    p.rng_mode = *mode;
    p.cold_start = params->cold_start != 0;
    p.warmup = to_warmup(params->warmup);
    *out_sweep = new pn_sweep{photonet::wheeler_sweep(p)};
  });
}

void pn_sweep_free(pn_sweep* sweep) { delete sweep; }

size_t pn_sweep_row_count(const pn_sweep* sweep) { return sweep ? sweep->table.rows.size() : 0; }

pn_status pn_sweep_get_row(const pn_sweep* sweep, size_t index, pn_sweep_row* out_row) {
  if (!sweep || !out_row) return fail(PN_ERR_INVALID_ARGUMENT, "null argument");
  if (index >= sweep->table.rows.size()) {
    return fail(PN_ERR_INVALID_ARGUMENT, "row index out of range");
  }
  const photonet::SweepRow& row = sweep->table.rows[index];
  out_row->setting_deg = row.setting_deg;
  out_row->config = to_c_config(row.config);
  out_row->n = row.n;
  out_row->n0 = row.n0;
  out_row->n1 = row.n1;
  out_row->n_exceptional = row.n_exceptional;
  out_row->f0 = row.f0;
  out_row->f1 = row.f1;
  out_row->oracle_p0 = row.oracle_p0;
  g_last_error.clear();
  return PN_OK;
}

pn_status pn_sweep_write_csv(const pn_sweep* sweep, const char* path) {
  if (!sweep || !path) return fail(PN_ERR_INVALID_ARGUMENT, "null argument");
  return run_guarded([&] { photonet::write_csv(sweep->table, std::string(path)); });
}

pn_status pn_sweep_write_svg(const pn_sweep* sweep, const char* path) {
  if (!sweep || !path) return fail(PN_ERR_INVALID_ARGUMENT, "null argument");
  return run_guarded([&] { photonet::emit_plot(sweep->table, std::string(path)); });
}

int pn_selftest(int verbose) { return photonet::run_selftest(verbose != 0, std::cout); }

const char* pn_status_name(pn_status status) {
  switch (status) {
    case PN_OK:
      return "ok";
    case PN_ERR_INVALID_ARGUMENT:
      return "invalid argument";
    case PN_ERR_CONFIG:
      return "configuration error";
    case PN_ERR_STRUCTURE:
      return "structure error";
    case PN_ERR_IO:
      return "i/o error";
    default:
      return "internal error";
  }
}

const char* pn_last_error(void) { return g_last_error.c_str(); }

const char* pn_version(void) { return "0.1.0"; }

}  // extern "C"
