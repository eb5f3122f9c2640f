#include "cli.hpp"

#include <cmath>
#include <fstream>
#include <optional>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "landauer/bounds.hpp"
#include "landauer/envmodels.hpp"
#include "landauer/errors.hpp"
#include "landauer/format.hpp"
#include "landauer/harness.hpp"
#include "landauer/rabi.hpp"

namespace landauer::cli {

namespace {

using nlohmann::json;

struct BoundOptions {
  std::string model_file;
  std::string kind;
  std::optional<double> omega, length, speed, a, b, delta;
  std::string form;
  std::vector<double> levels;
  std::string csv;
  double T = 0.0;
  double dS = 0.0;
  std::string format = "csv";
};

struct RabiOptions {
  double g = 0.2;
  double T = 0.01;
  double p = 0.1;
  double omega = 1.0;
  double Omega = 1.0;
  double tmax = 20.0;
  std::size_t steps = 200;
  std::size_t fock = rabi::kDefaultFockDim;
  std::string format = "csv";
};

struct VerifyOptions {
  std::size_t trials = 1000;
  std::uint64_t seed = 1;
  std::vector<double> temperatures{0.0, 0.1, 1.0, 10.0};
  std::vector<std::size_t> dims{3, 6};
  std::string format = "json";
};

json load_model_config(const BoundOptions& o) {
  json config = json::object();
  if (!o.model_file.empty()) {
    std::ifstream in(o.model_file);
    if (!in) throw DomainError("cannot open model file: " + o.model_file);
    config = json::parse(in);
    if (!config.is_object()) throw DomainError("model file must hold a JSON object");
  }
  if (!o.kind.empty()) config["kind"] = o.kind;
  auto set = [&](const char* key, const std::optional<double>& v) {
    if (v) config[key] = *v;
  };
  set("omega", o.omega);
  set("L", o.length);
  set("c", o.speed);
  set("a", o.a);
  set("b", o.b);
  set("delta", o.delta);
  if (!o.form.empty()) config["form"] = o.form;
  if (!o.levels.empty()) config["levels"] = o.levels;
  if (!o.csv.empty()) config["csv"] = o.csv;
  if (!config.contains("kind")) throw DomainError("no model kind given (--model or --model-file)");
  return config;
}

int cmd_bound(const BoundOptions& o, std::ostream& out) {
  const auto model = env::model_from_json(load_model_config(o));
  const auto eval = bounds::modified_bound(*model, o.T, bounds::EntropyChangeTarget(o.dS));
  const std::string status(bounds::to_string(eval.status));
  if (o.format == "json") {
    const json doc = {
        {"model", model->describe()},
        {"T", json_number(o.T)},
        {"dS", json_number(o.dS)},
        {"reference_temperature", json_number(eval.reference_temperature)},
        {"modified_bound", json_number(eval.modified_bound)},
        {"original_bound", json_number(eval.original_bound)},
        {"status", status},
    };
    out << doc.dump(2) << '\n';
  } else {
    out << "reference_temperature,modified_bound,original_bound,status\n"
        << format_number(eval.reference_temperature) << ',' << format_number(eval.modified_bound)
        << ',' << format_number(eval.original_bound) << ',' << status << '\n';
  }
  return eval.status == bounds::BoundStatus::Infeasible ? kInfeasible : kSuccess;
}

int cmd_rabi(const RabiOptions& o, std::ostream& out) {
  rabi::RabiConfig cfg;
  cfg.coupling = o.g;
  cfg.temperature = o.T;
  cfg.excitation = o.p;
  cfg.omega = o.omega;
  cfg.qubit_splitting = o.Omega;
  cfg.fock_dim = o.fock;
  cfg.t_grid = rabi::uniform_time_grid(o.tmax, o.steps);
  const auto samples = rabi::sweep(cfg);
  if (o.format == "json") {
    json rows = json::array();
    for (const auto& s : samples) {
      const auto& r = s.record;
      rows.push_back({
          {"t", json_number(r.time)},
          {"dS_S", json_number(r.delta_s_system)},
          {"dQ_E", json_number(r.delta_q_env)},
          {"dS_E", json_number(r.delta_s_env)},
          {"mutual_info", json_number(r.mutual_info)},
          {"sigma", json_number(r.entropy_production)},
          {"T_prime", json_number(r.reference_temperature)},
          {"bound_modified", json_number(s.bound.modified_bound)},
          {"bound_original", json_number(s.bound.original_bound)},
      });
    }
    out << rows.dump(2) << '\n';
  } else {
    rabi::write_csv(out, samples);
  }
  return kSuccess;
}

int cmd_verify(const VerifyOptions& o, std::ostream& out) {
  if (o.dims.size() != 2) throw DomainError("--dims takes two values: max system, max env");
  harness::FuzzConfig cfg;
  cfg.trials = o.trials;
  cfg.first_seed = o.seed;
  cfg.temperatures = o.temperatures;
  cfg.max_dim_system = o.dims[0];
  cfg.max_dim_env = o.dims[1];
  const auto report = harness::run_fuzz(cfg);
  if (o.format == "csv") {
    out << "seed,inequality,slack\n";
    for (const auto& v : report.violations) {
      out << v.seed << ',' << v.inequality << ',' << format_number(v.slack) << '\n';
    }
  } else {
    out << harness::to_json(report).dump(2) << '\n';
  }
  return report.violations.empty() ? kSuccess : kViolationsFound;
}

int cmd_models(std::ostream& out) {
  for (const auto& info : env::model_kinds()) {
    out << info.kind << ": " << info.parameters << "\n    " << info.description << '\n';
  }
  return kSuccess;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Heat-dissipation bounds for thermal environments at any temperature"};
  app.name("landauer");
  app.require_subcommand(1);
  const auto formats = CLI::IsMember({"csv", "json"});

  BoundOptions bo;
  auto* bound = app.add_subcommand("bound", "Evaluate the modified and original bounds");
  bound->add_option("--model", bo.kind, "Model kind (see `landauer models`)");
  bound->add_option("--model-file", bo.model_file, "JSON model config; flags override its fields");
  bound->add_option("--omega", bo.omega, "bosonic: mode frequency");
  bound->add_option("--L", bo.length, "waveguide: length");
  bound->add_option("--c", bo.speed, "waveguide: speed of light");
  bound->add_option("--a", bo.a, "phonon: C = a T^3 prefactor");
  bound->add_option("--b", bo.b, "gapped: prefactor");
  bound->add_option("--delta", bo.delta, "gapped: gap");
  bound->add_option("--form", bo.form, "gapped: exact | low_temperature");
  bound->add_option("--levels", bo.levels, "spectrum: energy levels")->delimiter(',');
  bound->add_option("--csv", bo.csv, "tabulated: path to T,C samples");
  bound->add_option("--T", bo.T, "Environment temperature")->required();
  bound->add_option("--dS", bo.dS, "System entropy change")->required();
  bound->add_option("--format", bo.format)->check(formats);

  RabiOptions ro;
  auto* rabi_cmd = app.add_subcommand("rabi", "Qubit-cavity sweep over a uniform time grid");
  rabi_cmd->add_option("--g", ro.g, "Coupling")->capture_default_str();
  rabi_cmd->add_option("--T", ro.T, "Cavity temperature")->capture_default_str();
  rabi_cmd->add_option("--p", ro.p, "Initial qubit excitation")->capture_default_str();
  rabi_cmd->add_option("--omega", ro.omega, "Cavity frequency")->capture_default_str();
  rabi_cmd->add_option("--Omega", ro.Omega, "Qubit splitting")->capture_default_str();
  rabi_cmd->add_option("--tmax", ro.tmax, "Final time")->capture_default_str();
  rabi_cmd->add_option("--steps", ro.steps, "Number of time points")->capture_default_str();
  rabi_cmd->add_option("--fock", ro.fock, "Initial Fock truncation")->capture_default_str();
  rabi_cmd->add_option("--format", ro.format)->check(formats)->capture_default_str();

  VerifyOptions vo;
  auto* verify = app.add_subcommand("verify", "Randomized check of the inequality chain");
  verify->add_option("--trials", vo.trials)->check(CLI::PositiveNumber)->capture_default_str();
  verify->add_option("--seed", vo.seed, "First seed")->capture_default_str();
  verify->add_option("--Tlist", vo.temperatures, "Temperatures, cycled over trials")
      ->delimiter(',')
      ->capture_default_str();
  verify->add_option("--dims", vo.dims, "Max system and environment dimensions")
      ->delimiter(',')
      ->expected(2)
      ->capture_default_str();
  verify->add_option("--format", vo.format)->check(formats)->capture_default_str();

  auto* models = app.add_subcommand("models", "List environment model kinds");

  std::vector<const char*> argv{"landauer"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kSuccess;
    }
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    if (bound->parsed()) return cmd_bound(bo, out);
    if (rabi_cmd->parsed()) return cmd_rabi(ro, out);
    if (verify->parsed()) return cmd_verify(vo, out);
    if (models->parsed()) return cmd_models(out);
  } catch (const TruncationUnconverged& e) {
    err << "error: " << e.what() << '\n';
    return kTruncationFailure;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const json::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace landauer::cli
