// Copyright 2026 The cheshire Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cheshire/duality.hpp"
#include "cheshire/fit.hpp"
#include "cheshire/ite.hpp"
#include "cheshire/rng.hpp"
#include "cheshire/shots.hpp"
#include "cheshire/tables.hpp"
#include "cheshire/textio.hpp"
#include "cheshire/tomography.hpp"
#include "json.hpp"

namespace {

using namespace cheshire;

// Exit codes: 0 success, 2 configuration error, 3 numerical/runtime failure.
constexpr int kConfigError = 2;
constexpr int kRuntimeError = 3;

struct RunConfig {
  std::vector<double> alpha_deg;
  std::string mode = "exact";
  double lambda = 1e6;
  std::uint64_t seed = 0;
  std::string out_dir = "out";
  std::vector<double> schedule;
  std::vector<std::string> observables;
  double phi1_deg = 0.0;
  double phi2_deg = 0.0;
  double noise_p = 0.0;
  int resamples = 200;
  bool weighted_fit = false;
};

/// Degrees to radians, dividing first so that 45 maps to fl(pi)/4 exactly.
double to_radians(double degrees) { return degrees / 180.0 * std::numbers::pi; }

bool is_shots(const RunConfig& cfg) { return cfg.mode == "shots"; }

/// Per-point variance of the incidence ratio n/n0 under independent Poisson
/// counts (delta method); the disturbed count is floored at 1 so zero-count
/// points keep a finite weight.
double incidence_variance(const CountRecord& r) {
  const double n = std::max<double>(1.0, double(r.disturbed_counts));
  const double n0 = double(r.reference_counts);
  return n / (n0 * n0) + n * n / (n0 * n0 * n0);
}

FitResult fit_curve(const std::vector<CountRecord>& records, bool weighted) {
  if (!weighted) {
    return fit_records(records);
  }
  std::vector<DataPoint> pts;
  std::vector<double> weights;
  for (const auto& r : records) {
    pts.push_back({r.interaction_time, r.incidence});
    weights.push_back(1.0 / incidence_variance(r));
  }
  return weighted_least_squares_line(pts, weights);
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
  if (!out.good()) {
    throw std::runtime_error("failed to write " + path.string());
  }
  std::cout << "wrote " << path.string() << "\n";
}

/// Stable per-(alpha, observable) seeds derived from the master seed, so a
/// run is reproducible regardless of which other combinations it includes.
struct SeedPlan {
  Rng master;
  explicit SeedPlan(std::uint64_t seed) : master(seed) {}
  std::uint64_t trial(std::size_t ai, std::size_t oi) const {
    return master.child(ai * 8 + oi * 2).seed();
  }
  std::uint64_t bootstrap(std::size_t ai, std::size_t oi) const {
    return master.child(ai * 8 + oi * 2 + 1).seed();
  }
};

std::vector<PathAttributeObservable> selected_observables(const RunConfig& cfg) {
  std::vector<PathAttributeObservable> out;
  for (const auto& obs : all_observables()) {
    if (cfg.observables.empty() ||
        std::find(cfg.observables.begin(), cfg.observables.end(), obs.id()) !=
            cfg.observables.end()) {
      out.push_back(obs);
    }
  }
  return out;
}

AttenuationSchedule make_schedule(const RunConfig& cfg) {
  return cfg.schedule.empty() ? AttenuationSchedule::default_schedule()
                              : AttenuationSchedule(cfg.schedule);
}

int cmd_weak_values(const RunConfig& cfg) {
  const auto schedule = make_schedule(cfg);
  const SeedPlan seeds(cfg.seed);
  const PureState psi_f = postselection();
  std::vector<WeakValueRow> rows;

  for (std::size_t ai = 0; ai < cfg.alpha_deg.size(); ++ai) {
    const double deg = cfg.alpha_deg[ai];
    const DualityParams params(to_radians(deg), to_radians(cfg.phi1_deg),
                               to_radians(cfg.phi2_deg));

    const ClosedFormWeakValues closed = closed_form_weak_values(params.alpha());
    rows.push_back({deg, closed.particle_left, closed.particle_right,
                    closed.wave_left, closed.wave_right, "closed_form", 0.0, 0.0,
                    0.0, 0.0});

    WeakValueRow row{deg, 0, 0, 0, 0, is_shots(cfg) ? "fitted" : "exact",
                     0,   0, 0, 0};
    double* values[4] = {&row.w_pl, &row.w_pr, &row.w_wl, &row.w_wr};
    double* errors[4] = {&row.err_pl, &row.err_pr, &row.err_wl, &row.err_wr};
    const PureState psi_i = preselection(params);
    const auto observables = all_observables();
    for (std::size_t oi = 0; oi < observables.size(); ++oi) {
      if (is_shots(cfg)) {
        const auto records =
            run_trial(params, observables[oi], schedule, cfg.lambda,
                      seeds.trial(ai, oi), SamplingMode::Poisson);
        const auto est = weak_value_estimate(fit_curve(records, cfg.weighted_fit));
        *values[oi] = est.value;
        *errors[oi] = monte_carlo_error(records, cfg.resamples,
                                        seeds.bootstrap(ai, oi));
      } else {
        *values[oi] =
            weak_value_exact(observables[oi].op, psi_i, psi_f).real();
      }
    }
    rows.push_back(row);
  }

  write_file(std::filesystem::path(cfg.out_dir) / "weak_values.csv",
             write_weak_values_csv(rows));
  return 0;
}

int cmd_ite_curve(const RunConfig& cfg) {
  const auto schedule = make_schedule(cfg);
  const SeedPlan seeds(cfg.seed);
  const auto observables = all_observables();

  for (std::size_t ai = 0; ai < cfg.alpha_deg.size(); ++ai) {
    const double deg = cfg.alpha_deg[ai];
    const DualityParams params(to_radians(deg), to_radians(cfg.phi1_deg),
                               to_radians(cfg.phi2_deg));
    for (std::size_t oi = 0; oi < observables.size(); ++oi) {
      const auto& obs = observables[oi];
      if (!cfg.observables.empty() &&
          std::find(cfg.observables.begin(), cfg.observables.end(), obs.id()) ==
              cfg.observables.end()) {
        continue;
      }
      const auto records = run_trial(
          params, obs, schedule, cfg.lambda, seeds.trial(ai, oi),
          is_shots(cfg) ? SamplingMode::Poisson : SamplingMode::Exact);

      IteCurveTable table;
      table.observable_id = obs.id();
      for (const auto& r : records) {
        const double err =
            is_shots(cfg) ? std::sqrt(incidence_variance(r)) : 0.0;
        table.rows.push_back({r.transmission, r.interaction_time, r.incidence, err});
      }
      const FitResult fit = fit_curve(records, is_shots(cfg) && cfg.weighted_fit);
      const WeakValueEstimate est = weak_value_estimate(fit);
      table.slope = fit.slope;
      table.intercept = fit.intercept;
      table.weak_value = est.value;
      table.weak_value_err =
          is_shots(cfg) ? monte_carlo_error(records, cfg.resamples,
                                            seeds.bootstrap(ai, oi))
                        : est.std_error;

      const std::string name =
          "ite_curve_alpha" + format_double(deg) + "_" + obs.id() + ".csv";
      write_file(std::filesystem::path(cfg.out_dir) / name,
                 write_ite_curve_csv(table));
    }
  }
  return 0;
}

int cmd_tomography(const RunConfig& cfg) {
  const SeedPlan seeds(cfg.seed);
  for (std::size_t ai = 0; ai < cfg.alpha_deg.size(); ++ai) {
    const double deg = cfg.alpha_deg[ai];
    const DualityParams params(to_radians(deg), to_radians(cfg.phi1_deg),
                               to_radians(cfg.phi2_deg));
    const PureState psi = bs2_output_state(params).normalized();
    const DensityMatrix rho = depolarize(DensityMatrix::from_pure(psi), cfg.noise_p);

    const DensityMatrix rec =
        is_shots(cfg)
            ? reconstruct_linear(
                  simulate_tomography(rho, cfg.lambda, seeds.trial(ai, 0)))
            : reconstruct_linear(tomography_probabilities(rho));

    const double f_raw = fidelity(rec, psi);
    const double min_eig = rec.min_eigenvalue();

    nlohmann::ordered_json doc;
    doc["alpha_deg"] = deg;
    doc["phi1_deg"] = cfg.phi1_deg;
    doc["phi2_deg"] = cfg.phi2_deg;
    doc["mode"] = cfg.mode;
    if (is_shots(cfg)) {
      doc["lambda"] = cfg.lambda;
      doc["seed"] = seeds.trial(ai, 0);
    }
    doc["noise_p"] = cfg.noise_p;
    doc["fidelity_raw"] = f_raw;
    doc["fidelity"] = std::clamp(f_raw, 0.0, 1.0);
    doc["min_eigenvalue"] = min_eig;
    doc["negative_eigenvalue"] = min_eig < -1e-8;
    doc["rho"] = nlohmann::ordered_json::parse(rec.to_json());

    const std::string name = "tomography_alpha" + format_double(deg) + ".json";
    write_file(std::filesystem::path(cfg.out_dir) / name, doc.dump(2) + "\n");
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  CLI::App app{
      "Wave-particle separation bench: exact weak values, filter-sweep "
      "readouts with Poisson counting noise, and two-qubit state "
      "reconstruction."};
  app.set_version_flag("--version", "0.1.0");
  app.require_subcommand(1);
  app.set_config("--config", "", "Read options from a key=value file");

  app.add_option("--alpha", cfg.alpha_deg,
                 "Input mixing angles in degrees, each in [0, 90] "
                 "(default: 45)")
      ->check(CLI::Range(0.0, 90.0));
  app.add_option("--mode", cfg.mode,
                 "exact: noise-free probabilities; shots: Poisson counts")
      ->check(CLI::IsMember({"exact", "shots"}))
      ->envname("CHESHIRE_MODE");
  app.add_option("--lambda", cfg.lambda,
                 "Expected photons per acquisition window (shots mode)")
      ->check(CLI::PositiveNumber)
      ->envname("CHESHIRE_LAMBDA");
  app.add_option("--seed", cfg.seed, "Master seed; fixed seed, fixed bytes out")
      ->envname("CHESHIRE_SEED");
  app.add_option("--out", cfg.out_dir, "Output directory (default: out)")
      ->envname("CHESHIRE_OUT");
  app.add_option("--schedule", cfg.schedule,
                 "Filter transmissions of one sweep, each in (0, 1] "
                 "(default: 0.984 0.988 0.992 0.996 1.0)");
  app.add_option("--observables", cfg.observables,
                 "Subset of PL, PR, WL, WR (default: all four)")
      ->check(CLI::IsMember({"PL", "PR", "WL", "WR"}));
  app.add_option("--phi1-deg", cfg.phi1_deg,
                 "Wave encoding phase in degrees, [0, 360)")
      ->check(CLI::Range(0.0, 360.0));
  app.add_option("--phi2-deg", cfg.phi2_deg,
                 "Particle encoding phase in degrees, [0, 360)")
      ->check(CLI::Range(0.0, 360.0));
  app.add_option("--noise-p", cfg.noise_p,
                 "Depolarizing strength applied before tomography, [0, 1]")
      ->check(CLI::Range(0.0, 1.0))
      ->envname("CHESHIRE_NOISE_P");
  app.add_option("--resamples", cfg.resamples,
                 "Bootstrap resamples behind each quoted error (>= 100)")
      ->check(CLI::Range(100, 10000000))
      ->envname("CHESHIRE_RESAMPLES");
  app.add_flag("--weighted-fit", cfg.weighted_fit,
               "Weight fit points by inverse Poisson variance (shots mode)");

  auto* wv = app.add_subcommand(
      "weak-values",
      "Write weak_values.csv: per angle, a closed_form row and an exact or "
      "fitted row. Columns: alpha_deg,wPL,wPR,wWL,wWR,source,errPL,errPR,"
      "errWL,errWR.");
  auto* ite = app.add_subcommand(
      "ite-curve",
      "Write ite_curve_alpha<A>_<OBS>.csv per angle and observable. Columns "
      "T,t,N,N_err plus a '# fit ...' footer with slope, intercept and the "
      "weak-value readout.");
  auto* tomo = app.add_subcommand(
      "tomography",
      "Write tomography_alpha<A>.json: reconstruction of the recombiner "
      "output state with fidelity and eigenvalue diagnostics.");
  for (auto* sub : {wv, ite, tomo}) {
    sub->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kConfigError;
  }

  if (cfg.alpha_deg.empty()) {
    cfg.alpha_deg = {45.0};
  }
  std::stable_sort(cfg.alpha_deg.begin(), cfg.alpha_deg.end());

  // Range checks beyond what the option validators express: the schedule's
  // joint shape and the phase domain boundary.
  try {
    (void)make_schedule(cfg);
    (void)DualityParams(to_radians(cfg.alpha_deg.front()),
                        to_radians(cfg.phi1_deg), to_radians(cfg.phi2_deg));
    std::filesystem::create_directories(cfg.out_dir);
  } catch (const std::exception& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return kConfigError;
  }

  try {
    if (wv->parsed()) {
      return cmd_weak_values(cfg);
    }
    if (ite->parsed()) {
      return cmd_ite_curve(cfg);
    }
    return cmd_tomography(cfg);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kRuntimeError;
  }
}
