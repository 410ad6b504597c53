/*
 * Copyright 2026 The pbnphi Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "commands.hpp"

#include "document.hpp"

#include "pbnphi/oracle.hpp"
#include "pbnphi/pbnphi.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

namespace pbnphi::cli {

using Json = nlohmann::ordered_json;

double report_number(double value) {
  if (!std::isfinite(value)) return value;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return std::strtod(buf, nullptr);
}

namespace {

struct Settings {
  std::string file;
  int time = 1;
  std::string prior = "uniform";
  std::string state;
  std::vector<std::string> subset;
  std::string partitions = "bi";
  std::string normalization = "marginal";
  bool oracle = false;
  double tol = 1e-12;
  long max_iter = 1'000'000;
  std::string format = "json";
  int threads = 1;
  int max_nodes = kDefaultMaxNodes;
  bool exclude_full = false;
  bool regime = false;
};

Json number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return report_number(v);
}

Json vector_json(const Distribution& p) {
  Json a = Json::array();
  for (Eigen::Index i = 0; i < p.size(); ++i) a.push_back(number(p(i)));
  return a;
}

Json mask_json(SubsetMask mask) {
  Json a = Json::array();
  for (int id : mask.nodes()) a.push_back(id);
  return a;
}

Json partition_json(const Partition& P) {
  Json a = Json::array();
  for (SubsetMask part : P.parts()) a.push_back(mask_json(part));
  return a;
}

std::vector<std::uint32_t> part_bits(const Partition& P) {
  std::vector<std::uint32_t> bits;
  for (SubsetMask part : P.parts()) bits.push_back(part.bits());
  return bits;
}

Json oracle_json(double oracle_value, double library_value) {
  return Json{{"value_bits", number(oracle_value)}, {"delta", number(std::abs(oracle_value - library_value))}};
}

class Session {
 public:
  Session(std::string command, const Settings& s) : command_(std::move(command)), s_(s) {
    net_ = validate_network(io::parse_network(io::read_file(s.file), s.max_nodes), s.max_nodes);
    report_ = Json{{"command", command_},
                   {"network_hash", io::network_hash(net_.network())},
                   {"time", nullptr},
                   {"prior", nullptr},
                   {"state", nullptr},
                   {"value_bits", nullptr},
                   {"mip", nullptr},
                   {"per_partition", nullptr},
                   {"normalization_mode", nullptr},
                   {"warnings", Json::array()}};
  }

  Json run() {
    if (command_ == "validate") return validate();
    if (command_ == "matrix") return matrix();
    if (command_ == "evolve") return evolve();
    if (command_ == "stationary") return stationary();
    if (command_ == "backward") return backward();
    if (command_ == "ei") return ei();
    if (command_ == "subset-ei") return subset_ei();
    if (command_ == "phi" || command_ == "mip") return phi(command_ == "mip");
    if (command_ == "complexes") return complexes();
    if (command_ == "avg-phi") return avg_phi();
    throw UsageError("unknown command '" + command_ + "'");
  }

 private:
  TransitionMatrix& S() {
    if (!S_) S_ = build_transition_matrix(net_, s_.threads);
    return *S_;
  }

  Distribution prior() {
    report_["prior"] = s_.prior;
    if (s_.prior == "uniform") return uniform_distribution(net_.state_count());
    return io::parse_distribution(io::read_file(s_.prior), net_.state_count());
  }

  StateIndex state() {
    if (s_.state.empty()) throw UsageError(command_ + " needs --state");
    report_["state"] = s_.state;
    return io::parse_state(s_.state, net_.size());
  }

  int instant(int minimum) {
    check_instant(s_.time, minimum);
    report_["time"] = s_.time;
    return s_.time;
  }

  SubsetMask subset(bool required) {
    if (s_.subset.empty()) {
      if (required) throw UsageError(command_ + " needs --subset");
      return net_.all_nodes();
    }
    std::vector<int> ids;
    for (const std::string& name : s_.subset) {
      int found = 0;
      for (int id = 1; id <= net_.size(); ++id) {
        if (net_.name(id) == name) found = id;
      }
      if (found == 0) throw UsageError("--subset names unknown node '" + name + "'");
      ids.push_back(found);
    }
    return SubsetMask::of(ids);
  }

  PhiOptions phi_options() const {
    PhiOptions options;
    if (s_.normalization == "maxent") options.normalization = NormalizationMode::MaxEnt;
    if (s_.partitions == "all") options.partitions = PartitionScope::All;
    options.include_full_set = !s_.exclude_full;
    options.threads = s_.threads;
    return options;
  }

  void warn(const std::string& message) { report_["warnings"].push_back(message); }

  oracle::JointTable oracle_table(const Distribution& p0, int t) {
    std::vector<double> p(p0.data(), p0.data() + p0.size());
    return oracle::joint(net_, p, t);
  }

  Json validate() {
    Json nodes = Json::array();
    for (const NodeLaw& law : net_.laws()) {
      Json table = Json::array();
      for (double r : law.table) table.push_back(number(r));
      nodes.push_back(Json{{"id", law.node_id}, {"name", net_.name(law.node_id)}, {"inputs", law.inputs}, {"table", table}});
    }
    Json edges = Json::array();
    for (const auto& [u, v] : net_.edges()) edges.push_back(Json::array({u, v}));
    report_["data"] = Json{{"nodes", nodes}, {"edges", edges}};
    return report_;
  }

  Json matrix() {
    Json rows = Json::array();
    for (Eigen::Index i = 0; i < S().rows(); ++i) rows.push_back(vector_json(S().row(i)));
    report_["data"] = Json{{"dim", S().rows()}, {"rows", rows}};
    return report_;
  }

  Json evolve() {
    const Distribution p0 = prior();
    const int t = instant(0);
    report_["data"] = Json{{"distribution", vector_json(distribution_at(S(), p0, t))}};
    return report_;
  }

  Json stationary() {
    const Distribution p = stationary_distribution(S(), {s_.tol, s_.max_iter});
    report_["data"] = Json{{"distribution", vector_json(p)},
                           {"residual", number((p - evolve_distribution(p, S())).lpNorm<1>())}};
    return report_;
  }

  Json backward() {
    const Distribution p0 = prior();
    const int t = instant(1);
    const Distribution p_prev = distribution_at(S(), p0, t - 1);
    const BackwardMatrix B = backward_matrix(S(), p_prev);
    Json rows = Json::array();
    for (Eigen::Index i = 0; i < B.dim(); ++i) {
      rows.push_back(B.is_defined(i) ? vector_json(B.values.row(i)) : Json(nullptr));
    }
    report_["data"] = Json{{"rows", rows}, {"previous_distribution", vector_json(p_prev)}};
    return report_;
  }

  Json ei() {
    const StateIndex x = state();
    if (s_.regime) {
      report_["prior"] = "stationary";
      const double value = effective_information_stationary(S(), x, {s_.tol, s_.max_iter});
      report_["value_bits"] = number(value);
      if (s_.oracle) warn("--oracle does not cover the regime-phase ei");
      return report_;
    }
    const Distribution p0 = prior();
    const int t = instant(1);
    const double value = effective_information(S(), p0, t, x);
    report_["value_bits"] = number(value);
    if (s_.oracle) report_["oracle"] = oracle_json(oracle::ei(oracle_table(p0, t), x), value);
    return report_;
  }

  Json subset_ei() {
    const StateIndex x = state();
    const SubsetMask A = subset(true);
    const Distribution p0 = prior();
    const int t = instant(1);
    const StateIndex a = project_state(x, A);
    const double value = subset_effective_information(S(), p0, t, A, a);
    report_["value_bits"] = number(value);
    report_["data"] = Json{{"subset", mask_json(A)}, {"sub_state", a}};
    if (s_.oracle) report_["oracle"] = oracle_json(oracle::subset_ei(oracle_table(p0, t), A.bits(), a), value);
    return report_;
  }

  Json phi(bool with_table) {
    const StateIndex x = state();
    const SubsetMask V = subset(false);
    const Distribution p0 = prior();
    const int t = instant(1);
    PhiOptions options = phi_options();
    options.keep_partition_table = with_table;
    const PhiContext ctx(net_, p0, t, options);
    const PhiReport r = subset_phi(ctx, V, x);
    report_["value_bits"] = number(r.phi_raw);
    report_["mip"] = partition_json(r.mip);
    report_["normalization_mode"] = to_string(r.normalization_mode);
    report_["data"] = Json{{"subset", mask_json(V)},
                           {"partitions", to_string(options.partitions)},
                           {"normalized_value", number(r.normalized_value)}};
    std::optional<oracle::JointTable> table;
    if (s_.oracle) {
      table = oracle_table(p0, t);
      report_["oracle"] = oracle_json(oracle::phi(*table, V.bits(), part_bits(r.mip), x), r.phi_raw);
    }
    if (with_table) {
      Json rows = Json::array();
      for (const PartitionScore& score : r.per_partition) {
        Json row{{"partition", partition_json(score.partition)},
                 {"phi", number(score.phi)},
                 {"normalization", number(score.normalization)},
                 {"ratio", score.ratio ? number(*score.ratio) : Json(nullptr)}};
        if (table) row["oracle"] = oracle_json(oracle::phi(*table, V.bits(), part_bits(score.partition), x), score.phi);
        rows.push_back(row);
      }
      report_["per_partition"] = rows;
    }
    return report_;
  }

  Json complexes() {
    const StateIndex x = state();
    const Distribution p0 = prior();
    const int t = instant(1);
    const PhiContext ctx(net_, p0, t, phi_options());
    const ComplexScan scan = find_complexes(ctx, x);
    std::optional<oracle::JointTable> table;
    if (s_.oracle) table = oracle_table(p0, t);
    double best = 0.0;
    Json list = Json::array();
    for (const Complex& c : scan.complexes) {
      best = std::max(best, c.phi);
      Json entry{{"subset", mask_json(c.subset)}, {"phi", number(c.phi)}, {"main", c.is_main}, {"mip", partition_json(c.mip)}};
      if (table) entry["oracle"] = oracle_json(oracle::phi(*table, c.subset.bits(), part_bits(c.mip), x), c.phi);
      list.push_back(entry);
    }
    for (SubsetMask V : scan.undefined) warn("no MIP defined for " + V.to_string() + ": every partition has N = 0 and phi > 0");
    report_["value_bits"] = number(best);
    report_["normalization_mode"] = to_string(ctx.options().normalization);
    report_["data"] = Json{{"complexes", list}, {"include_full_set", ctx.options().include_full_set}};
    return report_;
  }

  Json avg_phi() {
    const Distribution p0 = prior();
    const int t = instant(1);
    const PhiContext ctx(net_, p0, t, phi_options());
    report_["value_bits"] = number(average_phi(ctx));
    report_["normalization_mode"] = to_string(ctx.options().normalization);
    if (s_.oracle) warn("--oracle does not cover avg-phi");
    return report_;
  }

  std::string command_;
  const Settings& s_;
  ValidatedNetwork net_;
  std::optional<TransitionMatrix> S_;
  Json report_;
};

std::string scalar_text(const Json& v) {
  if (v.is_null()) return "null";
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

void flatten(const Json& v, const std::string& path, std::vector<std::pair<std::string, std::string>>& rows) {
  if (v.is_object()) {
    for (const auto& [key, child] : v.items()) flatten(child, path.empty() ? key : path + "." + key, rows);
    return;
  }
  if (v.is_array()) {
    const bool flat = std::all_of(v.begin(), v.end(), [](const Json& e) { return e.is_primitive(); });
    if (flat) {
      std::string joined;
      for (const Json& e : v) joined += (joined.empty() ? "" : " ") + scalar_text(e);
      rows.emplace_back(path, joined);
      return;
    }
    for (std::size_t i = 0; i < v.size(); ++i) flatten(v[i], path + "[" + std::to_string(i) + "]", rows);
    return;
  }
  rows.emplace_back(path, scalar_text(v));
}

void write_report(const Json& report, const std::string& format, std::ostream& out) {
  if (format == "json") {
    out << report.dump(2) << "\n";
    return;
  }
  std::vector<std::pair<std::string, std::string>> rows;
  flatten(report, "", rows);
  if (format == "csv") {
    out << "key,value\n";
    for (const auto& [key, value] : rows) {
      const bool quote = value.find_first_of(",\"") != std::string::npos;
      std::string escaped;
      for (char c : value) escaped += c == '"' ? std::string("\"\"") : std::string(1, c);
      out << key << "," << (quote ? "\"" + escaped + "\"" : value) << "\n";
    }
    return;
  }
  std::size_t width = 0;
  for (const auto& row : rows) width = std::max(width, row.first.size());
  for (const auto& [key, value] : rows) out << std::left << std::setw(static_cast<int>(width) + 2) << key << value << "\n";
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Usage: return 1;
    case ErrorKind::Validation: return 2;
    case ErrorKind::Computation: return 3;
    case ErrorKind::SizeCap: return 4;
  }
  return 3;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Settings s;
  CLI::App app{"Effective and integrated information of probabilistic boolean networks", "pbnphi"};
  app.require_subcommand(1);
  const std::vector<std::pair<std::string, std::string>> commands = {
      {"validate", "check a network document"},
      {"matrix", "print the state transition matrix"},
      {"evolve", "distribution after --time steps"},
      {"stationary", "a stationary distribution"},
      {"backward", "backward-transition matrix at --time"},
      {"ei", "effective information of --state"},
      {"subset-ei", "effective information of --subset in --state"},
      {"phi", "integrated information of --subset (default: all nodes)"},
      {"mip", "MIP search with the per-partition table"},
      {"complexes", "complexes, main complexes and system phi"},
      {"avg-phi", "system phi averaged over p_t"},
  };
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("network", s.file, "network document")->required();
    sub->add_option("--time", s.time, "instant t");
    sub->add_option("--prior", s.prior, "'uniform' or a distribution file");
    sub->add_option("--state", s.state, "state bit string sigma_n..sigma_1");
    sub->add_option("--subset", s.subset, "node names")->delimiter(',');
    sub->add_option("--partitions", s.partitions, "bi|all")->check(CLI::IsMember({"bi", "all"}));
    sub->add_option("--normalization", s.normalization, "marginal|maxent")->check(CLI::IsMember({"marginal", "maxent"}));
    sub->add_flag("--oracle", s.oracle, "cross-check against the trajectory-enumeration oracle");
    sub->add_option("--tol", s.tol, "stationary tolerance")->check(CLI::PositiveNumber);
    sub->add_option("--max-iter", s.max_iter, "stationary iteration cap")->check(CLI::PositiveNumber);
    sub->add_option("--format", s.format, "json|csv|table")->check(CLI::IsMember({"json", "csv", "table"}));
    sub->add_option("--threads", s.threads, "worker threads")->check(CLI::Range(1, 256));
    sub->add_option("--max-nodes", s.max_nodes, "node cap")->check(CLI::Range(1, 30));
    sub->add_flag("--exclude-full", s.exclude_full, "leave V = X out of complex scans");
    sub->add_flag("--regime", s.regime, "ei: use the stationary regime instead of --time/--prior");
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "pbnphi: " << e.what() << "\n";
    return 1;
  }

  try {
    const std::string command = app.get_subcommands().front()->get_name();
    Session session(command, s);
    write_report(session.run(), s.format, out);
    return 0;
  } catch (const Error& e) {
    err << "pbnphi: " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    err << "pbnphi: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace pbnphi::cli
