// Command-line front end. One machine-readable JSON record per invocation on
// stdout; exit code 0 on success, 1 on usage or input errors, 2 when the
// requested parameters are mathematically improper.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "boojum/estimator.hpp"
#include "boojum/inference.hpp"
#include "boojum/params.hpp"

using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitImproper = 2;

std::vector<double> parse_csv_doubles(const std::string& text, const std::string& flag) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &pos);
    } catch (const std::exception&) {
      throw CLI::ValidationError(flag, "expected comma-separated decimal literals");
    }
    if (pos != item.size()) {
      throw CLI::ValidationError(flag, "expected comma-separated decimal literals");
    }
    out.push_back(v);
  }
  if (out.empty()) {
    throw CLI::ValidationError(flag, "expected at least one value");
  }
  return out;
}

std::vector<int> parse_csv_ints(const std::string& text, const std::string& flag) {
  std::vector<int> out;
  for (double v : parse_csv_doubles(text, flag)) {
    const int i = static_cast<int>(v);
    if (static_cast<double>(i) != v) {
      throw CLI::ValidationError(flag, "expected comma-separated integers");
    }
    out.push_back(i);
  }
  return out;
}

void emit(const json& record, bool pretty) {
  std::cout << (pretty ? record.dump(2) : record.dump()) << "\n";
}

json verdict_record(const boojum::PropernessVerdict& verdict) {
  json record;
  record["proper"] = verdict.proper;
  record["reason"] = boojum::to_string(verdict.reason);
  if (verdict.t_value) record["t_value"] = *verdict.t_value;
  return record;
}

json config_record(const boojum::EstimatorConfig& config) {
  json record;
  record["grid_n"] = config.grid_n;
  record["samples"] = config.samples_p;
  if (config.rho) record["rho"] = *config.rho;
  record["seed"] = config.seed;
  return record;
}

struct EstimatorFlags {
  int grid_n = 500;
  int samples = 2000;
  std::string rho = "auto";
  std::uint64_t seed = 0;

  void attach(CLI::App* cmd) {
    cmd->add_option("--grid-n", grid_n, "Lattice resolution N");
    cmd->add_option("--samples", samples, "Gamma sample count P");
    cmd->add_option("--rho", rho, "Pivot rho, a positive real or 'auto'");
    cmd->add_option("--seed", seed, "RNG seed");
  }

  boojum::EstimatorConfig config() const {
    boojum::EstimatorConfig out;
    out.grid_n = grid_n;
    out.samples_p = samples;
    out.seed = seed;
    if (rho != "auto") {
      std::size_t pos = 0;
      double v = 0.0;
      try {
        v = std::stod(rho, &pos);
      } catch (const std::exception&) {
        pos = std::string::npos;
      }
      if (pos != rho.size() || !(v > 0.0)) {
        throw CLI::ValidationError("--rho", "expected a positive real or 'auto'");
      }
      out.rho = v;
    }
    return out;
  }
};

int run_check(const boojum::BoojumParams& params, bool pretty) {
  const auto verdict = boojum::classify(params);
  emit(verdict_record(verdict), pretty);
  return verdict.proper ? kExitOk : kExitImproper;
}

int run_logz(const boojum::BoojumParams& params, const EstimatorFlags& flags, bool force,
             bool pretty) {
  const auto verdict = boojum::classify(params);
  if (!verdict.proper && !force) {
    std::cerr << "improper parameters: " << boojum::to_string(verdict.reason);
    if (verdict.t_value) std::cerr << " (T = " << *verdict.t_value << " >= 1)";
    std::cerr << "\n";
    return kExitImproper;
  }
  const auto estimate = boojum::estimate_log_z(params, flags.config(), force);
  json record;
  record["log_z"] = estimate.log_z;
  record["std_err"] = estimate.std_err;
  record["config"] = config_record(estimate.config);
  emit(record, pretty);
  return kExitOk;
}

int run_posterior(const boojum::BoojumParams& prior, const std::string& obs_path,
                  bool pretty) {
  std::ifstream in(obs_path);
  if (!in) {
    std::cerr << "cannot open observation file: " << obs_path << "\n";
    return kExitUsage;
  }
  std::vector<boojum::DirichletObservation> observations;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    json record;
    try {
      record = json::parse(line);
    } catch (const json::exception& e) {
      std::cerr << "malformed observation at line " << line_no << ": " << e.what() << "\n";
      return kExitUsage;
    }
    if (!record.contains("y") || !record["y"].is_array()) {
      std::cerr << "malformed observation at line " << line_no << ": missing \"y\" array\n";
      return kExitUsage;
    }
    boojum::DirichletObservation obs;
    obs.y = record["y"].get<std::vector<double>>();
    for (double v : obs.y) {
      if (!(v > 0.0)) {
        std::cerr << "zero component at line " << line_no << "\n";
        return kExitUsage;
      }
    }
    try {
      boojum::validate(obs);
    } catch (const std::exception& e) {
      std::cerr << "bad observation at line " << line_no << ": " << e.what() << "\n";
      return kExitUsage;
    }
    observations.push_back(std::move(obs));
  }
  const auto post = boojum::posterior(prior, observations);
  const auto verdict = boojum::classify(post);
  json record;
  record["m"] = post.m;
  record["r"] = post.r;
  record["proper"] = verdict.proper;
  record["reason"] = boojum::to_string(verdict.reason);
  if (verdict.t_value) record["t_value"] = *verdict.t_value;
  emit(record, pretty);
  return kExitOk;
}

int run_mean(const boojum::BoojumParams& params, const EstimatorFlags& flags, bool pretty) {
  auto config = flags.config();
  config.rho = boojum::resolve_rho(config, params);
  const auto values = boojum::mean(params, config);
  json record;
  record["mean"] = values;
  record["config"] = config_record(config);
  emit(record, pretty);
  return kExitOk;
}

int run_moment(const boojum::BoojumParams& params, const std::vector<int>& order,
               const EstimatorFlags& flags, bool pretty) {
  auto config = flags.config();
  config.rho = boojum::resolve_rho(config, params);
  const double value = boojum::moment(params, {order}, config);
  json record;
  record["order"] = order;
  record["moment"] = value;
  record["config"] = config_record(config);
  emit(record, pretty);
  return kExitOk;
}

int run_region(double m, const std::vector<double>& r1_range,
               const std::vector<double>& r2_range, int steps, const std::string& out_path,
               bool pretty) {
  if (r1_range.size() != 2 || r2_range.size() != 2 || r1_range[0] >= r1_range[1] ||
      r2_range[0] >= r2_range[1]) {
    std::cerr << "--r1/--r2 expect lo,hi with lo < hi\n";
    return kExitUsage;
  }
  if (steps < 2) {
    std::cerr << "--steps must be >= 2\n";
    return kExitUsage;
  }
  std::ofstream out(out_path);
  if (!out) {
    std::cerr << "cannot write region file: " << out_path << "\n";
    return kExitUsage;
  }
  auto grid = [&](const std::vector<double>& range, int i) {
    return range[0] + (range[1] - range[0]) * i / (steps - 1);
  };
  char buf[64];
  auto fmt = [&](double v) {
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return std::string(buf);
  };
  out << "r1,r2,proper,t_value\n";
  for (int i = 0; i < steps; ++i) {
    const double r1 = grid(r1_range, i);
    for (int j = 0; j < steps; ++j) {
      const double r2 = grid(r2_range, j);
      const auto verdict = boojum::classify({m, {r1, r2}});
      out << fmt(r1) << "," << fmt(r2) << "," << (verdict.proper ? 1 : 0) << ",";
      if (verdict.t_value) out << fmt(*verdict.t_value);
      out << "\n";
    }
  }
  json record;
  record["rows"] = steps * steps;
  record["out"] = out_path;
  emit(record, pretty);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Boojum distribution: properness checks, normalizing-constant "
               "estimation, conjugate updates and moments"};
  app.require_subcommand(1);

  bool pretty = false;
  app.add_flag("--pretty", pretty, "Indent the JSON output");

  std::string m_text, r_text;
  auto add_params = [&](CLI::App* cmd) {
    cmd->add_option("-m,--m", m_text, "Shape parameter m")->required();
    cmd->add_option("-r,--r", r_text, "Rate vector, comma-separated")->required();
  };
  auto params = [&]() {
    const auto r = parse_csv_doubles(r_text, "-r");
    const auto m = parse_csv_doubles(m_text, "-m");
    if (m.size() != 1) throw CLI::ValidationError("-m", "expected a single real");
    return boojum::BoojumParams{m[0], r};
  };

  auto* check = app.add_subcommand("check", "Classify properness of (m, r)");
  add_params(check);

  auto* logz = app.add_subcommand("logz", "Estimate log Z(m, r)");
  add_params(logz);
  EstimatorFlags logz_flags;
  logz_flags.attach(logz);
  bool force = false;
  logz->add_flag("--force", force, "Estimate even for improper parameters");

  auto* post = app.add_subcommand("posterior", "Conjugate update from Dirichlet observations");
  std::string prior_m_text, prior_r_text, obs_path;
  post->add_option("--prior-m", prior_m_text, "Prior shape m")->required();
  post->add_option("--prior-r", prior_r_text, "Prior rate vector, comma-separated")->required();
  post->add_option("--obs", obs_path, "Observation file, one {\"y\": [..]} per line")
      ->required();

  auto* mean_cmd = app.add_subcommand("mean", "Estimate the expectation vector");
  add_params(mean_cmd);
  EstimatorFlags mean_flags;
  mean_flags.attach(mean_cmd);

  auto* moment_cmd = app.add_subcommand("moment", "Estimate a moment of total order <= 2");
  add_params(moment_cmd);
  EstimatorFlags moment_flags;
  moment_flags.attach(moment_cmd);
  std::string order_text;
  moment_cmd->add_option("--order", order_text, "Moment multi-index, comma-separated")
      ->required();

  auto* region = app.add_subcommand("region", "Scan the K = 2 properness region to CSV");
  double region_m = 0.0;
  std::string r1_text, r2_text, out_path;
  int steps = 2;
  region->add_option("--m", region_m, "Shape parameter m")->required();
  region->add_option("--r1", r1_text, "r1 range as lo,hi")->required();
  region->add_option("--r2", r2_text, "r2 range as lo,hi")->required();
  region->add_option("--steps", steps, "Grid steps per axis")->required();
  region->add_option("--out", out_path, "Output CSV path")->required();

  // Let global flags like --pretty appear after the subcommand name.
  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (check->parsed()) return run_check(params(), pretty);
    if (logz->parsed()) return run_logz(params(), logz_flags, force, pretty);
    if (post->parsed()) {
      const auto pm = parse_csv_doubles(prior_m_text, "--prior-m");
      if (pm.size() != 1) throw CLI::ValidationError("--prior-m", "expected a single real");
      return run_posterior({pm[0], parse_csv_doubles(prior_r_text, "--prior-r")}, obs_path,
                           pretty);
    }
    if (mean_cmd->parsed()) return run_mean(params(), mean_flags, pretty);
    if (moment_cmd->parsed()) {
      return run_moment(params(), parse_csv_ints(order_text, "--order"), moment_flags,
                        pretty);
    }
    if (region->parsed()) {
      return run_region(region_m, parse_csv_doubles(r1_text, "--r1"),
                        parse_csv_doubles(r2_text, "--r2"), steps, out_path, pretty);
    }
  } catch (const boojum::ImproperParameterError& e) {
    std::cerr << e.what() << "\n";
    return kExitImproper;
  } catch (const boojum::UnsupportedOrderError&) {
    std::cerr << "order above 2 unsupported\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
