/* Copyright 2026 The Warmstart Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <ctime>
#include <filesystem>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include "warmstart/critic.hpp"
#include "warmstart/env_sim.hpp"
#include "warmstart/evaluation.hpp"
#include "warmstart/io.hpp"
#include "warmstart/learner.hpp"
#include "warmstart/rng.hpp"

namespace warmstart::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

// A flag value outside its domain. The message starts with the flag name.
class FlagError : public std::invalid_argument {
 public:
  FlagError(const std::string& flag, const std::string& what) : std::invalid_argument(flag + ": " + what) {}
};

void require(bool ok, const std::string& flag, const std::string& what) {
  if (!ok) throw FlagError(flag, what);
}

// Flag values from a JSON object whose keys are long flag names without the
// leading dashes. A run manifest is accepted too; its "config" member is used.
std::vector<std::pair<std::string, std::vector<std::string>>> read_flag_file(const std::string& path) {
  const std::string text = io::read_text(fs::path(path));
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw io::FormatError(path + ": config: " + e.what());
  }
  if (doc.is_object() && doc.contains("manifest_version")) doc = doc.value("config", json::object());
  if (!doc.is_object()) throw io::FormatError(path + ": config: top level must be a JSON object");

  auto scalar_text = [&](const std::string& key, const json& v) -> std::string {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_integer()) return v.dump();
    if (v.is_number()) return io::format_real(v.get<double>());
    throw io::FormatError(path + ": config: key '" + key + "' must hold numbers or strings");
  };
  std::vector<std::pair<std::string, std::vector<std::string>>> items;
  for (const auto& [key, val] : doc.items()) {
    std::vector<std::string> inputs;
    if (val.is_array()) {
      for (const auto& v : val) inputs.push_back(scalar_text(key, v));
    } else {
      inputs.push_back(scalar_text(key, val));
    }
    items.emplace_back(key, std::move(inputs));
  }
  return items;
}

struct Common {
  std::uint64_t seed = 0;
  std::string config;
  std::string out;
  int jobs = 0;
  bool dry_run = false;
};

void add_common(CLI::App* sub, Common& c, const std::string& default_out, bool file_config = true) {
  c.out = default_out;
  c.jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  if (file_config) sub->add_option("--seed", c.seed, "Master seed")->capture_default_str();
  sub->add_option("--out", c.out, "Output directory")->capture_default_str()->configurable(false);
  sub->add_option("--jobs", c.jobs, "Worker threads")->capture_default_str()->configurable(false);
  sub->add_flag("--dry-run", c.dry_run, "Print the resolved manifest and exit")->configurable(false);
  if (file_config) sub->add_option("--config", c.config, "JSON file of flag values (or a run manifest)");
}

struct Model {
  int p = 3;
  NoiseScales noise;
};

void add_model(CLI::App* sub, Model& m) {
  sub->add_option("--p", m.p, "State dimension")->capture_default_str();
  sub->add_option("--sigma-s", m.noise.sigma_s, "State noise scale")->capture_default_str();
  sub->add_option("--sigma-r", m.noise.sigma_r, "Reward noise scale")->capture_default_str();
  sub->add_option("--sigma-b", m.noise.sigma_b, "Between-user coefficient spread")->capture_default_str();
}

void check_model(const Model& m) {
  require(m.p >= 3, "--p", "must be >= 3");
  require(m.noise.sigma_s >= 0.0, "--sigma-s", "must be >= 0");
  require(m.noise.sigma_r >= 0.0, "--sigma-r", "must be >= 0");
  require(m.noise.sigma_b >= 0.0, "--sigma-b", "must be >= 0");
}

json model_json(const Model& m) {
  return {{"p", m.p}, {"sigma-s", m.noise.sigma_s}, {"sigma-r", m.noise.sigma_r}, {"sigma-b", m.noise.sigma_b}};
}

void add_learner(CLI::App* sub, ActorCriticSettings& s) {
  sub->add_option("--gamma", s.gamma, "Discount factor in [0, 1)")->capture_default_str();
  sub->add_option("--zeta-c", s.zeta_c, "Critic ridge weight")->capture_default_str();
  sub->add_option("--zeta-a", s.actor.zeta_a, "Actor ridge weight")->capture_default_str();
  sub->add_option("--alt-tol", s.alt_tol, "Critic/actor alternation tolerance")->capture_default_str();
  sub->add_option("--alt-max-iters", s.alt_max_iters, "Critic/actor alternation rounds")->capture_default_str();
}

void check_learner(const ActorCriticSettings& s) {
  require(s.gamma >= 0.0 && s.gamma < 1.0, "--gamma", "must lie in [0, 1)");
  require(s.zeta_c > 0.0, "--zeta-c", "must be positive");
  require(s.actor.zeta_a > 0.0, "--zeta-a", "must be positive");
  require(s.alt_tol > 0.0, "--alt-tol", "must be positive");
  require(s.alt_max_iters >= 1, "--alt-max-iters", "must be >= 1");
}

json learner_json(const ActorCriticSettings& s) {
  return {{"gamma", s.gamma},
          {"zeta-c", s.zeta_c},
          {"zeta-a", s.actor.zeta_a},
          {"alt-tol", s.alt_tol},
          {"alt-max-iters", s.alt_max_iters}};
}

void check_jobs(const Common& c) { require(c.jobs >= 1, "--jobs", "must be >= 1"); }

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

json manifest(const std::string& command, std::uint64_t seed, const json& config) {
  return {{"manifest_version", 1}, {"tool", kToolName},     {"version", kToolVersion},
          {"command", command},    {"seed", seed},          {"timestamp", utc_timestamp()},
          {"config", config}};
}

// Dry runs print the manifest and stop; real runs write it next to the outputs.
bool emit_manifest(const Common& c, const json& m, std::ostream& out) {
  if (c.dry_run) {
    out << m.dump(2) << '\n';
    return false;
  }
  io::write_text(fs::path(c.out) / "manifest.json", m.dump(2) + "\n");
  return true;
}

std::string format_vector(const Eigen::VectorXd& v) {
  std::string s = "[";
  for (Eigen::Index i = 0; i < v.size(); ++i) s += fmt::format("{}{:.6g}", i == 0 ? "" : ", ", v[i]);
  return s + "]";
}

// ---------------------------------------------------------------- gen-prior

struct GenPrior {
  Common common;
  Model model;
  ActorCriticSettings ac;
  int users = 40;
  int T = 42;
};

void setup_gen_prior(CLI::App& app, GenPrior& g) {
  auto* sub = app.add_subcommand("gen-prior", "Simulate a prior study and learn its decision rule");
  add_common(sub, g.common, "prior");
  sub->add_option("--users", g.users, "Number of prior-study users")->capture_default_str();
  sub->add_option("--T", g.T, "Decision points per prior-study user")->capture_default_str();
  add_model(sub, g.model);
  add_learner(sub, g.ac);
}

int cmd_gen_prior(const GenPrior& g, std::ostream& out) {
  require(g.users >= 1, "--users", "must be >= 1");
  require(g.T >= 2, "--T", "must be >= 2");
  check_model(g.model);
  check_learner(g.ac);
  check_jobs(g.common);

  json cfg = {{"users", g.users}, {"T", g.T}, {"seed", g.common.seed}};
  cfg.update(model_json(g.model));
  cfg.update(learner_json(g.ac));
  if (!emit_manifest(g.common, manifest("gen-prior", g.common.seed, cfg), out)) return 0;

  PriorStudyConfig pc;
  pc.n_users = g.users;
  pc.T_bar = g.T;
  pc.noise = g.model.noise;
  pc.p = g.model.p;
  pc.ac = g.ac;
  const PriorStudy study = gen_prior_study(pc, g.common.seed);
  io::write_prior_study(g.common.out, study,
                        {study.theta_bar, g.ac.gamma, g.ac.zeta_c, g.ac.actor.zeta_a, g.common.seed});
  out << fmt::format("prior study: {} tuples, theta_bar = {}\n", study.data.size(), format_vector(study.theta_bar));
  return 0;
}

// -------------------------------------------------------------- learn-batch

struct LearnBatch {
  Common common;
  ActorCriticSettings ac;
  std::string data;
};

void setup_learn_batch(CLI::App& app, LearnBatch& l) {
  auto* sub = app.add_subcommand("learn-batch", "Fit the actor-critic to a dataset CSV");
  add_common(sub, l.common, "batch");
  sub->add_option("--data", l.data, "Dataset CSV (user_id,t,s..,a,r,sn..)");
  add_learner(sub, l.ac);
}

int cmd_learn_batch(const LearnBatch& l, std::ostream& out) {
  require(!l.data.empty(), "--data", "is required");
  check_learner(l.ac);
  check_jobs(l.common);

  json cfg = {{"data", l.data}, {"seed", l.common.seed}};
  cfg.update(learner_json(l.ac));
  if (!emit_manifest(l.common, manifest("learn-batch", l.common.seed, cfg), out)) return 0;

  const Dataset data = io::read_dataset_csv(fs::path(l.data));
  const AlternationResult res = batch_learn(data, l.ac);
  const json doc = {{"theta", io::vector_to_json(res.theta)},
                    {"w", io::vector_to_json(res.w)},
                    {"iterations", res.iterations},
                    {"converged", res.converged},
                    {"gamma", l.ac.gamma}};
  io::write_text(fs::path(l.common.out) / "theta.json", doc.dump(2) + "\n");
  out << fmt::format("theta = {} ({} rounds{})\n", format_vector(res.theta), res.iterations,
                     res.converged ? "" : ", not converged");
  return 0;
}

// --------------------------------------------------------------- run-online

struct RunOnline {
  Common common;
  Model model;
  ActorCriticSettings ac;
  std::string mode = "rws";
  int T0 = 5;
  int T = 30;
  std::string prior;
};

void setup_run_online(CLI::App& app, RunOnline& r) {
  auto* sub = app.add_subcommand("run-online", "Run one simulated user's online learning");
  add_common(sub, r.common, "online");
  sub->add_option("--mode", r.mode, "rws or nws")->capture_default_str();
  sub->add_option("--t0", r.T0, "Random decision points before learning (rws)")->capture_default_str();
  sub->add_option("--T", r.T, "Decision points")->capture_default_str();
  sub->add_option("--prior", r.prior, "Prior study directory (nws)");
  add_model(sub, r.model);
  add_learner(sub, r.ac);
}

int cmd_run_online(const RunOnline& r, std::ostream& out) {
  WarmStartMode mode;
  try {
    mode = parse_mode(r.mode);
  } catch (const std::invalid_argument& e) {
    throw FlagError("--mode", e.what());
  }
  require(r.T >= 1, "--T", "must be >= 1");
  if (mode == WarmStartMode::kRandom) require(r.T0 >= 1 && r.T0 <= r.T, "--t0", "must lie in [1, T]");
  require(mode == WarmStartMode::kRandom || !r.prior.empty(), "--prior", "is required with --mode nws");
  check_model(r.model);
  check_learner(r.ac);
  check_jobs(r.common);

  json cfg = {{"mode", to_string(mode)}, {"t0", r.T0}, {"T", r.T}, {"seed", r.common.seed}};
  if (!r.prior.empty()) cfg["prior"] = r.prior;
  cfg.update(model_json(r.model));
  cfg.update(learner_json(r.ac));
  if (!emit_manifest(r.common, manifest("run-online", r.common.seed, cfg), out)) return 0;

  std::optional<PriorStudy> prior;
  if (mode == WarmStartMode::kPrior) {
    prior = io::read_prior_study(fs::path(r.prior));
    require(prior->data.state_dim() == r.model.p, "--p",
            fmt::format("does not match the prior study's state dimension {}", prior->data.state_dim()));
  }
  const UserModel user =
      gen_user_models(1, r.model.noise, r.model.p, Rng::derive(r.common.seed, {1}).engine()()).front();
  LearnerConfig lc;
  lc.ac = r.ac;
  lc.T = r.T;
  lc.T0 = mode == WarmStartMode::kRandom ? r.T0 : 1;
  lc.mode = mode;
  lc.seed = r.common.seed;
  Rng rng = Rng::derive(r.common.seed, {2});
  const OnlineResult res = run_online(user, prior ? &*prior : nullptr, lc, rng);

  const fs::path dir(r.common.out);
  io::write_trace_csv(dir / "trace.csv", res.trace);
  io::write_dataset_csv(dir / "data.csv", res.data);
  const json doc = {{"theta", io::vector_to_json(res.theta)}, {"mode", to_string(mode)}, {"gamma", r.ac.gamma}};
  io::write_text(dir / "theta.json", doc.dump(2) + "\n");
  out << fmt::format("{} update events, final theta = {}\n", res.trace.size(), format_vector(res.theta));
  return 0;
}

// ----------------------------------------------------------------- evaluate

struct Evaluate {
  Common common;
  Model model;
  std::string theta_file;
  std::vector<double> theta_values;
  int users = 50;
  int H = 5000;
  int L = 4000;
};

void setup_evaluate(CLI::App& app, Evaluate& e) {
  auto* sub = app.add_subcommand("evaluate", "Long-run average reward of a fixed policy on simulated users");
  add_common(sub, e.common, "evaluation");
  sub->add_option("--theta", e.theta_file, "JSON file with a \"theta\" or \"theta_bar\" array");
  sub->add_option("--theta-values", e.theta_values, "Policy parameters given inline")->take_all()->delimiter(',');
  sub->add_option("--users", e.users, "Number of simulated users")->capture_default_str();
  sub->add_option("--H", e.H, "Rollout length")->capture_default_str();
  sub->add_option("--L", e.L, "Tail length averaged")->capture_default_str();
  add_model(sub, e.model);
}

Eigen::VectorXd load_theta(const std::string& path) {
  json doc;
  try {
    doc = json::parse(io::read_text(fs::path(path)));
  } catch (const json::parse_error& ex) {
    throw io::FormatError(path + ": " + ex.what());
  }
  if (doc.is_object() && doc.contains("theta")) return io::vector_from_json(doc["theta"], path + " theta");
  if (doc.is_object() && doc.contains("theta_bar")) return io::vector_from_json(doc["theta_bar"], path + " theta_bar");
  throw io::FormatError(path + ": no \"theta\" or \"theta_bar\" array");
}

int cmd_evaluate(const Evaluate& e, std::ostream& out) {
  require(e.theta_file.empty() != e.theta_values.empty(), "--theta", "give exactly one of --theta or --theta-values");
  require(e.users >= 1, "--users", "must be >= 1");
  require(e.H >= 2, "--H", "must be >= 2");
  require(e.L >= 1 && e.L < e.H, "--L", "must lie in [1, H)");
  check_model(e.model);
  check_jobs(e.common);

  Eigen::VectorXd theta;
  if (e.theta_file.empty()) {
    theta = Eigen::Map<const Eigen::VectorXd>(e.theta_values.data(), static_cast<Eigen::Index>(e.theta_values.size()));
  } else {
    theta = load_theta(e.theta_file);
  }
  require(theta.size() == e.model.p + 1, e.theta_file.empty() ? "--theta-values" : "--theta",
          fmt::format("needs {} entries (p + 1)", e.model.p + 1));

  json cfg = {{"theta-values", io::vector_to_json(theta)}, {"users", e.users}, {"H", e.H},
              {"L", e.L},                                   {"seed", e.common.seed}};
  cfg.update(model_json(e.model));
  if (!emit_manifest(e.common, manifest("evaluate", e.common.seed, cfg), out)) return 0;

  const auto models = gen_user_models(e.users, e.model.noise, e.model.p, Rng::derive(e.common.seed, {1}).engine()());
  const std::vector<Eigen::VectorXd> thetas(models.size(), theta);
  const ElrarResult res = elrar(thetas, models, e.H, e.L, Rng::derive(e.common.seed, {2}).engine()(), e.common.jobs);
  const json doc = {{"mean", res.summary.mean},
                    {"std", res.summary.std},
                    {"std_definition", "sample standard deviation across users"},
                    {"per_user", res.per_user}};
  io::write_text(fs::path(e.common.out) / "evaluation.json", doc.dump(2) + "\n");
  out << fmt::format("ElrAR = {:.3f} +/- {:.3f} over {} users\n", res.summary.mean, res.summary.std, e.users);
  return 0;
}

// --------------------------------------------------------------- experiment

struct Experiment {
  Common common;
  std::string config;
  std::optional<std::uint64_t> seed;
  std::optional<int> users;
  std::optional<int> T;
  std::vector<double> gammas;
};

void setup_experiment(CLI::App& app, Experiment& x) {
  auto* sub = app.add_subcommand("experiment", "Run the RWS / NWS comparison grid");
  add_common(sub, x.common, "results", false);
  // The experiment takes a full config document rather than flag defaults;
  // the flags below override its values.
  sub->add_option("--config", x.config, "Experiment config JSON (or a run manifest)");
  sub->add_option("--seed", x.seed, "Master seed (overrides the config)");
  sub->add_option("--users", x.users, "New users per arm (overrides n_new_users)");
  sub->add_option("--T", x.T, "Decision points per new user (overrides T)");
  sub->add_option("--gammas", x.gammas, "Discount factors (overrides gammas)")->take_all()->delimiter(',');
}

ExperimentConfig load_experiment_config(const std::string& path) {
  if (path.empty()) return {};
  const std::string text = io::read_text(fs::path(path));
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error&) {
    return io::read_experiment_config(fs::path(path));  // reports line and column
  }
  if (doc.is_object() && doc.contains("manifest_version")) {
    try {
      return io::parse_experiment_config(doc.value("config", json::object()).dump());
    } catch (const io::FormatError& ex) {
      throw io::FormatError(path + ": " + ex.what());
    }
  }
  return io::read_experiment_config(fs::path(path));
}

int cmd_experiment(const Experiment& x, std::ostream& out) {
  check_jobs(x.common);
  ExperimentConfig cfg = load_experiment_config(x.config);
  if (x.seed) cfg.seed = *x.seed;
  if (x.users) {
    require(*x.users >= 1, "--users", "must be >= 1");
    cfg.n_new_users = *x.users;
  }
  if (x.T) {
    require(*x.T >= 1, "--T", "must be >= 1");
    cfg.T = *x.T;
  }
  if (!x.gammas.empty()) {
    for (double g : x.gammas) require(g >= 0.0 && g < 1.0, "--gammas", "every value must lie in [0, 1)");
    cfg.gammas = x.gammas;
  }
  cfg.validate();
  if (!emit_manifest(x.common, manifest("experiment", cfg.seed, io::experiment_config_to_json(cfg)), out)) return 0;

  const ResultsTable table = run_experiment(cfg, x.common.jobs);
  const fs::path dir(x.common.out);
  std::ostringstream csv;
  io::write_results_csv(csv, table, cfg);
  io::write_text(dir / "results.csv", csv.str());
  io::write_text(dir / "results.json", io::results_to_json(table, cfg).dump(2) + "\n");
  out << io::format_results_table(table);
  return 0;
}

std::string one_line(std::string s) {
  std::replace(s.begin(), s.end(), '\n', ' ');
  while (!s.empty() && s.back() == ' ') s.pop_back();
  return s;
}

int fail(std::ostream& err, const std::string& kind, const std::string& what, int code) {
  err << "error: " << kind << ": " << one_line(what) << '\n';
  return code;
}

}  // namespace

namespace {

struct Commands {
  GenPrior gen_prior;
  LearnBatch learn_batch;
  RunOnline run_online;
  Evaluate evaluate;
  Experiment experiment;
};

std::unique_ptr<CLI::App> make_app(Commands& c) {
  auto app = std::make_unique<CLI::App>(
      "Warm-start actor-critic for mobile health: simulation, learning and evaluation", kToolName);
  app->option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  app->set_version_flag("--version", kToolVersion);
  app->require_subcommand(1);
  setup_gen_prior(*app, c.gen_prior);
  setup_learn_batch(*app, c.learn_batch);
  setup_run_online(*app, c.run_online);
  setup_evaluate(*app, c.evaluate);
  setup_experiment(*app, c.experiment);
  return app;
}

// Inserts the --config file's values as flags right after the subcommand name.
// Flags given on the command line win; keys that are not flags of the
// subcommand are rejected.
std::vector<std::string> expand_config(const CLI::App& sub, const std::vector<std::string>& args,
                                       const std::string& path) {
  std::vector<std::string> extra;
  for (const auto& [key, inputs] : read_flag_file(path)) {
    const CLI::Option* opt = sub.get_option_no_throw("--" + key);
    if (opt == nullptr || !opt->get_configurable() || key == "config") {
      throw io::FormatError(path + ": config: unknown key '" + key + "'");
    }
    if (opt->count() > 0) continue;
    std::string joined;
    for (const auto& v : inputs) joined += (joined.empty() ? "" : ",") + v;
    extra.push_back("--" + key + "=" + joined);
  }
  std::vector<std::string> expanded = args;
  const auto pos = std::find(expanded.begin(), expanded.end(), sub.get_name());
  expanded.insert(pos + 1, extra.begin(), extra.end());
  return expanded;
}

int dispatch(const CLI::App& app, const Commands& c, std::ostream& out) {
  if (app.got_subcommand("gen-prior")) return cmd_gen_prior(c.gen_prior, out);
  if (app.got_subcommand("learn-batch")) return cmd_learn_batch(c.learn_batch, out);
  if (app.got_subcommand("run-online")) return cmd_run_online(c.run_online, out);
  if (app.got_subcommand("evaluate")) return cmd_evaluate(c.evaluate, out);
  return cmd_experiment(c.experiment, out);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  auto commands = std::make_unique<Commands>();
  auto app = make_app(*commands);
  try {
    app->parse(std::vector<std::string>(args.rbegin(), args.rend()));
    const CLI::App* sub = app->get_subcommands().front();
    const CLI::Option* config = sub->get_option_no_throw("--config");
    if (sub->get_name() != "experiment" && config != nullptr && config->count() > 0) {
      const auto expanded = expand_config(*sub, args, config->as<std::string>());
      commands = std::make_unique<Commands>();
      app = make_app(*commands);
      app->parse(std::vector<std::string>(expanded.rbegin(), expanded.rend()));
    }
    return dispatch(*app, *commands, out);
  } catch (const CLI::CallForHelp& e) {
    return app->exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app->exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app->exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    return fail(err, "usage", e.what(), 2);
  } catch (const FlagError& e) {
    return fail(err, "invalid_flag", e.what(), 2);
  } catch (const io::FormatError& e) {
    return fail(err, "format", e.what(), 1);
  } catch (const SingularSystem& e) {
    return fail(err, "singular_system", e.what(), 1);
  } catch (const NonFiniteObjective& e) {
    return fail(err, "non_finite", e.what(), 1);
  } catch (const EmptyDataset& e) {
    return fail(err, "empty_dataset", e.what(), 1);
  } catch (const std::invalid_argument& e) {
    return fail(err, "invalid_argument", e.what(), 2);
  } catch (const fs::filesystem_error& e) {
    return fail(err, "io", e.what(), 1);
  } catch (const std::exception& e) {
    return fail(err, "runtime", e.what(), 1);
  }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace warmstart::cli
