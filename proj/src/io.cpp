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

#include "warmstart/io.hpp"

#include <cerrno>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include <fmt/format.h>

namespace warmstart::io {

using nlohmann::json;

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

double parse_real(const std::string& text, std::size_t line_no, const std::string& column) {
  const char* begin = text.c_str();
  char* end = nullptr;
  errno = 0;
  const double v = std::strtod(begin, &end);
  if (end == begin || *end != '\0' || errno == ERANGE) {
    throw FormatError(fmt::format("line {}: column '{}': cannot parse '{}' as a real", line_no, column, text));
  }
  return v;
}

int parse_int(const std::string& text, std::size_t line_no, const std::string& column) {
  const double v = parse_real(text, line_no, column);
  if (v != static_cast<double>(static_cast<int>(v))) {
    throw FormatError(fmt::format("line {}: column '{}': '{}' is not an integer", line_no, column, text));
  }
  return static_cast<int>(v);
}

std::ofstream open_out(const std::filesystem::path& path) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  return out;
}

std::ifstream open_in(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path.string() + "' for reading");
  return in;
}

// 1-based line and column of a byte offset.
std::pair<std::size_t, std::size_t> line_col(const std::string& text, std::size_t offset) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

template <typename T>
T get_as(const json& j, const std::string& key) {
  try {
    return j.get<T>();
  } catch (const json::exception&) {
    throw FormatError(fmt::format("config: key '{}' has the wrong type", key));
  }
}

}  // namespace

std::string format_real(double v) { return fmt::format("{:.17g}", v); }

void write_dataset_csv(std::ostream& out, const Dataset& data) {
  const int p = data.state_dim();
  out << "user_id,t";
  for (int j = 1; j <= p; ++j) out << ",s" << j;
  out << ",a,r";
  for (int j = 1; j <= p; ++j) out << ",sn" << j;
  out << '\n';
  for (const Tuple& tup : data.tuples) {
    out << tup.user_id << ',' << tup.t;
    for (int j = 0; j < p; ++j) out << ',' << format_real(tup.s[j]);
    out << ',' << tup.a << ',' << format_real(tup.r);
    for (int j = 0; j < p; ++j) out << ',' << format_real(tup.s_next[j]);
    out << '\n';
  }
}

void write_dataset_csv(const std::filesystem::path& path, const Dataset& data) {
  auto out = open_out(path);
  write_dataset_csv(out, data);
}

Dataset read_dataset_csv(std::istream& in, DatasetKind kind) {
  std::string line;
  if (!std::getline(in, line)) throw FormatError("dataset: missing header");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  const auto header = split_csv_line(line);
  if (header.size() < 4 || (header.size() - 4) % 2 != 0) throw FormatError("line 1: malformed dataset header");
  const int p = static_cast<int>((header.size() - 4) / 2);
  std::vector<std::string> expected{"user_id", "t"};
  for (int j = 1; j <= p; ++j) expected.push_back("s" + std::to_string(j));
  expected.insert(expected.end(), {"a", "r"});
  for (int j = 1; j <= p; ++j) expected.push_back("sn" + std::to_string(j));
  if (header != expected) throw FormatError("line 1: dataset header must be user_id,t,s1..sp,a,r,sn1..snp");

  Dataset data;
  data.kind = kind;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto fields = split_csv_line(line);
    if (fields.size() != header.size()) {
      throw FormatError(fmt::format("line {}: expected {} fields, got {}", line_no, header.size(), fields.size()));
    }
    Tuple tup;
    tup.user_id = parse_int(fields[0], line_no, header[0]);
    tup.t = parse_int(fields[1], line_no, header[1]);
    tup.s.resize(p);
    tup.s_next.resize(p);
    for (int j = 0; j < p; ++j) tup.s[j] = parse_real(fields[2 + j], line_no, header[2 + j]);
    tup.a = parse_int(fields[2 + p], line_no, "a");
    tup.r = parse_real(fields[3 + p], line_no, "r");
    for (int j = 0; j < p; ++j) tup.s_next[j] = parse_real(fields[4 + p + j], line_no, header[4 + p + j]);
    data.tuples.push_back(std::move(tup));
  }
  try {
    data.validate();
  } catch (const std::invalid_argument& e) {
    throw FormatError(std::string("dataset: ") + e.what());
  }
  return data;
}

Dataset read_dataset_csv(const std::filesystem::path& path, DatasetKind kind) {
  auto in = open_in(path);
  try {
    return read_dataset_csv(in, kind);
  } catch (const FormatError& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

json vector_to_json(const Eigen::VectorXd& v) { return json(std::vector<double>(v.data(), v.data() + v.size())); }

Eigen::VectorXd vector_from_json(const json& j, const std::string& what) {
  if (!j.is_array()) throw FormatError(what + ": expected an array of reals");
  Eigen::VectorXd v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number()) throw FormatError(what + ": expected an array of reals");
    v[static_cast<Eigen::Index>(i)] = j[i].get<double>();
  }
  return v;
}

void write_prior_study(const std::filesystem::path& dir, const PriorStudy& study, const PriorSidecar& meta) {
  std::filesystem::create_directories(dir);
  write_dataset_csv(dir / "prior.csv", study.data);
  json side;
  side["theta_bar"] = vector_to_json(study.theta_bar);
  side["gamma"] = meta.gamma;
  side["zeta_c"] = meta.zeta_c;
  side["zeta_a"] = meta.zeta_a;
  side["seed"] = meta.seed;
  write_text(dir / "prior.json", side.dump(2) + "\n");
}

PriorStudy read_prior_study(const std::filesystem::path& dir, PriorSidecar* meta) {
  PriorStudy study;
  study.data = read_dataset_csv(dir / "prior.csv", DatasetKind::kPrior);
  json side;
  try {
    side = json::parse(read_text(dir / "prior.json"));
  } catch (const json::parse_error& e) {
    throw FormatError((dir / "prior.json").string() + ": " + e.what());
  }
  if (!side.is_object() || !side.contains("theta_bar")) throw FormatError("prior.json: missing theta_bar");
  study.theta_bar = vector_from_json(side["theta_bar"], "prior.json theta_bar");
  if (study.theta_bar.size() != study.data.state_dim() + 1) {
    throw FormatError("prior.json: theta_bar length does not match the prior data");
  }
  if (meta != nullptr) {
    meta->theta_bar = study.theta_bar;
    meta->gamma = side.value("gamma", 0.0);
    meta->zeta_c = side.value("zeta_c", 0.0);
    meta->zeta_a = side.value("zeta_a", 0.0);
    meta->seed = side.value("seed", std::uint64_t{0});
  }
  return study;
}

void write_trace_csv(const std::filesystem::path& path, const std::vector<UpdateEvent>& trace) {
  auto out = open_out(path);
  const Eigen::Index q = trace.empty() ? 0 : trace.front().theta.size();
  const Eigen::Index d = trace.empty() ? 0 : trace.front().w.size();
  out << "t,reward,alt_iterations,converged";
  for (Eigen::Index k = 1; k <= q; ++k) out << ",theta" << k;
  for (Eigen::Index k = 1; k <= d; ++k) out << ",w" << k;
  out << '\n';
  for (const auto& ev : trace) {
    out << ev.t << ',' << format_real(ev.reward) << ',' << ev.alt_iterations << ',' << (ev.converged ? 1 : 0);
    for (Eigen::Index k = 0; k < q; ++k) out << ',' << format_real(ev.theta[k]);
    for (Eigen::Index k = 0; k < d; ++k) out << ',' << format_real(ev.w[k]);
    out << '\n';
  }
}

ExperimentConfig parse_experiment_config(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    const auto [line, col] = line_col(text, e.byte == 0 ? 0 : e.byte - 1);
    throw FormatError(fmt::format("config: syntax error at line {}, column {}: {}", line, col, e.what()));
  }
  if (!doc.is_object()) throw FormatError("config: top level must be a JSON object");

  ExperimentConfig cfg;
  for (const auto& [key, val] : doc.items()) {
    if (key == "gammas") {
      cfg.gammas = get_as<std::vector<double>>(val, key);
    } else if (key == "arms") {
      if (!val.is_array()) throw FormatError("config: key 'arms' must be an array");
      cfg.arms.clear();
      for (const auto& a : val) {
        if (!a.is_object()) throw FormatError("config: each arm must be an object {mode, T0}");
        Arm arm;
        for (const auto& [akey, aval] : a.items()) {
          if (akey == "mode") {
            try {
              arm.mode = parse_mode(get_as<std::string>(aval, "arms.mode"));
            } catch (const std::invalid_argument& e) {
              throw FormatError(std::string("config: arms.mode: ") + e.what());
            }
          } else if (akey == "T0") {
            arm.T0 = get_as<int>(aval, "arms.T0");
          } else {
            throw FormatError("config: unknown key 'arms." + akey + "'");
          }
        }
        cfg.arms.push_back(arm);
      }
    } else if (key == "T") {
      cfg.T = get_as<int>(val, key);
    } else if (key == "n_new_users") {
      cfg.n_new_users = get_as<int>(val, key);
    } else if (key == "prior_users") {
      cfg.prior_users = get_as<int>(val, key);
    } else if (key == "prior_T") {
      cfg.prior_T = get_as<int>(val, key);
    } else if (key == "sigma_s") {
      cfg.noise.sigma_s = get_as<double>(val, key);
    } else if (key == "sigma_r") {
      cfg.noise.sigma_r = get_as<double>(val, key);
    } else if (key == "sigma_b") {
      cfg.noise.sigma_b = get_as<double>(val, key);
    } else if (key == "p") {
      cfg.p = get_as<int>(val, key);
    } else if (key == "H") {
      cfg.H = get_as<int>(val, key);
    } else if (key == "L") {
      cfg.L = get_as<int>(val, key);
    } else if (key == "seed") {
      cfg.seed = get_as<std::uint64_t>(val, key);
    } else if (key == "zeta_c") {
      cfg.zeta_c = get_as<double>(val, key);
    } else if (key == "zeta_a") {
      cfg.actor.zeta_a = get_as<double>(val, key);
    } else if (key == "alt_tol") {
      cfg.alt_tol = get_as<double>(val, key);
    } else if (key == "alt_max_iters") {
      cfg.alt_max_iters = get_as<int>(val, key);
    } else if (key == "actor") {
      if (!val.is_object()) throw FormatError("config: key 'actor' must be an object");
      for (const auto& [akey, aval] : val.items()) {
        const std::string full = "actor." + akey;
        if (akey == "max_iters") {
          cfg.actor.max_iters = get_as<int>(aval, full);
        } else if (akey == "grad_tol") {
          cfg.actor.grad_tol = get_as<double>(aval, full);
        } else if (akey == "step_init") {
          cfg.actor.step_init = get_as<double>(aval, full);
        } else if (akey == "armijo_c") {
          cfg.actor.armijo_c = get_as<double>(aval, full);
        } else if (akey == "backtrack_factor") {
          cfg.actor.backtrack_factor = get_as<double>(aval, full);
        } else {
          throw FormatError("config: unknown key '" + full + "'");
        }
      }
    } else {
      throw FormatError("config: unknown key '" + key + "'");
    }
  }
  return cfg;
}

ExperimentConfig read_experiment_config(const std::filesystem::path& path) {
  try {
    return parse_experiment_config(read_text(path));
  } catch (const FormatError& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

json experiment_config_to_json(const ExperimentConfig& c) {
  json arms = json::array();
  for (const Arm& a : c.arms) arms.push_back({{"mode", to_string(a.mode)}, {"T0", a.T0}});
  return {
      {"gammas", c.gammas},
      {"arms", arms},
      {"T", c.T},
      {"n_new_users", c.n_new_users},
      {"prior_users", c.prior_users},
      {"prior_T", c.prior_T},
      {"sigma_s", c.noise.sigma_s},
      {"sigma_r", c.noise.sigma_r},
      {"sigma_b", c.noise.sigma_b},
      {"p", c.p},
      {"H", c.H},
      {"L", c.L},
      {"seed", c.seed},
      {"zeta_c", c.zeta_c},
      {"zeta_a", c.actor.zeta_a},
      {"alt_tol", c.alt_tol},
      {"alt_max_iters", c.alt_max_iters},
      {"actor",
       {{"max_iters", c.actor.max_iters},
        {"grad_tol", c.actor.grad_tol},
        {"step_init", c.actor.step_init},
        {"armijo_c", c.actor.armijo_c},
        {"backtrack_factor", c.actor.backtrack_factor}}},
  };
}

void write_results_csv(std::ostream& out, const ResultsTable& table, const ExperimentConfig& config) {
  out << "gamma,arm,mean,std,n_users,T,T0,seed\n";
  for (const auto& row : table.rows) {
    for (const auto& cell : row.cells) {
      out << format_real(row.gamma) << ',' << cell.arm.label() << ',' << format_real(cell.summary.mean) << ','
          << format_real(cell.summary.std) << ',' << cell.per_user.size() << ',' << config.T << ',' << cell.arm.T0
          << ',' << config.seed << '\n';
    }
  }
}

json results_to_json(const ResultsTable& table, const ExperimentConfig& config) {
  json rows = json::array();
  for (const auto& row : table.rows) {
    json cells = json::array();
    for (const auto& cell : row.cells) {
      cells.push_back({{"arm", cell.arm.label()},
                       {"mode", to_string(cell.arm.mode)},
                       {"T0", cell.arm.T0},
                       {"mean", cell.summary.mean},
                       {"std", cell.summary.std},
                       {"per_user", cell.per_user}});
    }
    rows.push_back({{"gamma", row.gamma}, {"arms", cells}});
  }
  return {{"config", experiment_config_to_json(config)},
          {"std_definition", "sample standard deviation across users"},
          {"rows", rows}};
}

std::string format_results_table(const ResultsTable& table) {
  if (table.rows.empty()) return "";
  std::string out = fmt::format("{:>6}", "gamma");
  for (const auto& cell : table.rows.front().cells) out += fmt::format("  {:>22}", cell.arm.label());
  out += '\n';
  for (const auto& row : table.rows) {
    out += fmt::format("{:>6}", fmt::format("{:g}", row.gamma));
    for (const auto& cell : row.cells) {
      out += fmt::format("  {:>22}", fmt::format("{:.1f} +/- {:.1f}", cell.summary.mean, cell.summary.std));
    }
    out += '\n';
  }
  return out;
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  auto out = open_out(path);
  out << text;
}

std::string read_text(const std::filesystem::path& path) {
  auto in = open_in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace warmstart::io
