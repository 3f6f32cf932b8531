/*
   Copyright 2026 The rulelab Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
 */

#include "rulelab/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <thread>

#include "rulelab/cover.hpp"
#include "rulelab/dataset.hpp"
#include "rulelab/error.hpp"
#include "rulelab/measures.hpp"
#include "rulelab/miner.hpp"
#include "rulelab/pruning.hpp"
#include "rulelab/ranking.hpp"
#include "rulelab/report.hpp"
#include "rulelab/rule_io.hpp"

namespace rulelab::cli {

namespace {

struct IngestOptions {
  std::string input;
  std::string delimiter = ",";
  std::string missing = "?";
  bool no_header = false;

  IngestConfig config() const {
    if (delimiter.size() != 1) throw ConfigError("--delimiter must be a single character");
    return IngestConfig{delimiter.front(), missing, !no_header};
  }
};

struct Options {
  IngestOptions ingest;
  std::string output;
  std::string rules_path;
  double min_support = 0.3;
  double min_confidence = 0.8;
  std::string measures = "all";
  std::string top = "21%";
  std::string mode = "by_item";
  double threshold = 0.02;
  std::uint64_t seed = 42;
  SyntheticShape shape;
  bool synthetic = false;
  std::string output_dir;
  unsigned threads = 0;
  bool keep_intermediates = false;
};

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open '" + path + "' for reading");
  return in;
}

/// Writes through `body` into `path`, or into `out` when no path was given.
void write_output(const std::string& path, std::ostream& out,
                  const std::function<void(std::ostream&)>& body) {
  if (path.empty() || path == "-") {
    body(out);
    out.flush();
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw DataError("cannot open '" + path + "' for writing");
  body(file);
  file.flush();
  if (!file) throw DataError("failed writing '" + path + "'");
}

Dataset load_dataset(const IngestOptions& opts) {
  auto in = open_input(opts.input);
  return load_table(in, opts.config());
}

RuleSet load_rules(const std::string& path) {
  auto in = open_input(path);
  return read_rules(in);
}

std::vector<MeasureId> parse_measure_list(const std::string& text) {
  if (text == "all") return {all_measures().begin(), all_measures().end()};
  std::vector<MeasureId> out;
  std::stringstream ss(text);
  std::string name;
  while (std::getline(ss, name, ',')) {
    if (name.empty()) continue;
    const auto m = parse_measure(name);
    if (!m) throw ConfigError("unknown measure '" + name + "'");
    if (std::find(out.begin(), out.end(), *m) == out.end()) out.push_back(*m);
  }
  if (out.empty()) throw ConfigError("--measures selects no measure");
  return out;
}

ClusterMode parse_mode(const std::string& text) {
  const auto mode = parse_cluster_mode(text);
  if (!mode) throw ConfigError("unknown cluster mode '" + text + "'");
  return *mode;
}

MiningConfig mining_config(const Options& o) {
  MiningConfig cfg{o.min_support, o.min_confidence};
  cfg.validate();
  return cfg;
}

unsigned thread_count(unsigned requested) {
  if (requested != 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

void add_ingest_flags(CLI::App* sub, IngestOptions& opts, bool input_required) {
  auto* input = sub->add_option("-i,--input", opts.input, "Delimited table with nominal columns");
  if (input_required) input->required();
  sub->add_option("--delimiter", opts.delimiter, "Field delimiter")->capture_default_str();
  sub->add_option("--missing", opts.missing, "Token marking a missing value")
      ->capture_default_str();
  sub->add_flag("--no-header", opts.no_header, "First line is data, not column names");
}

void add_mining_flags(CLI::App* sub, Options& o) {
  sub->add_option("--min-support", o.min_support, "Minimum support fraction")
      ->capture_default_str();
  sub->add_option("--min-confidence", o.min_confidence, "Minimum confidence fraction")
      ->capture_default_str();
}

void add_cover_flags(CLI::App* sub, Options& o) {
  sub->add_option("--mode", o.mode, "Cluster key: by_item or by_exact_consequent")
      ->capture_default_str();
  sub->add_option("--threshold", o.threshold, "Uncovered fraction at which selection stops")
      ->capture_default_str();
}

void add_shape_flags(CLI::App* sub, Options& o) {
  sub->add_option("--records", o.shape.n_records, "Synthetic record count")->capture_default_str();
  sub->add_option("--attributes", o.shape.n_attributes, "Synthetic attribute count")
      ->capture_default_str();
  sub->add_option("--min-values", o.shape.min_values, "Fewest values per attribute")
      ->capture_default_str();
  sub->add_option("--max-values", o.shape.max_values, "Most values per attribute")
      ->capture_default_str();
  sub->add_option("--seed", o.seed, "Generator seed")->capture_default_str();
}

void run_gen(const Options& o, std::ostream& out, std::ostream& err) {
  const Dataset d = generate_synthetic(o.shape, o.seed);
  write_output(o.output, out, [&](std::ostream& s) { write_table(s, d); });
  err << d.n_records() << " records written\n";
}

void run_dump_items(const Options& o, std::ostream& out) {
  const Dataset d = load_dataset(o.ingest);
  write_output(o.output, out, [&](std::ostream& s) { dump_items(s, d); });
}

void run_mine(const Options& o, std::ostream& out, std::ostream& err) {
  const MiningConfig cfg = mining_config(o);
  const Dataset d = load_dataset(o.ingest);
  const RuleSet rules = mine(d, cfg, thread_count(o.threads));
  write_output(o.output, out, [&](std::ostream& s) { write_rules(s, rules); });
  err << rules.rules.size() << " rules written\n";
}

void run_measures(const Options& o, std::ostream& out) {
  const auto measures = parse_measure_list(o.measures);
  const RuleSet rules = load_rules(o.rules_path);
  write_output(o.output, out, [&](std::ostream& s) {
    write_measures_csv(s, rules.rules, rules.n_records, measures);
  });
}

void run_cover(const Options& o, std::ostream& out) {
  const ClusterMode mode = parse_mode(o.mode);
  const CoverThreshold threshold(o.threshold);
  const RuleSet rules = load_rules(o.rules_path);
  write_output(o.output, out, [&](std::ostream& s) {
    write_cover_report(s, rules.catalog, rules.rules, mode, threshold);
  });
}

void write_file(const std::filesystem::path& path,
                const std::function<void(std::ostream&)>& body) {
  std::ostringstream unused;
  write_output(path.string(), unused, body);
}

void run_experiment_command(const Options& o, std::ostream& err) {
  ExperimentConfig cfg;
  cfg.mining = mining_config(o);
  cfg.measures = parse_measure_list(o.measures);
  cfg.top = TopK::parse(o.top);
  cfg.mode = parse_mode(o.mode);
  cfg.threshold = CoverThreshold(o.threshold);
  cfg.threads = thread_count(o.threads);
  if (o.synthetic == !o.ingest.input.empty()) {
    throw ConfigError("experiment needs exactly one of --input or --synthetic");
  }

  std::filesystem::path dir = o.output_dir;
  if (dir.empty()) {
    const char* env = std::getenv(kOutputDirEnv);
    dir = (env && *env) ? env : "report";
  }

  const Dataset d = o.synthetic ? generate_synthetic(o.shape, o.seed) : load_dataset(o.ingest);
  if (o.synthetic) cfg.seed = o.seed;

  const RuleSet rules = mine(d, cfg.mining, cfg.threads);
  if (rules.rules.empty()) {
    std::ostringstream msg;
    msg << "mining produced no rules at min_support=" << cfg.mining.min_support
        << " min_confidence=" << cfg.mining.min_confidence;
    throw DataError(msg.str());
  }
  const ExperimentReport report = run_experiment(rules, cfg);
  const auto written = emit_report(report, dir);

  if (o.keep_intermediates) {
    write_file(dir / "rules.jsonl", [&](std::ostream& s) { write_rules(s, rules); });
    write_file(dir / "measures.csv", [&](std::ostream& s) {
      write_measures_csv(s, rules.rules, rules.n_records, cfg.measures);
    });
    write_file(dir / "cover.txt", [&](std::ostream& s) {
      write_cover_report(s, rules.catalog, rules.rules, cfg.mode, cfg.threshold);
    });
  }
  err << rules.rules.size() << " rules, " << report.baseline.clusters.size() << " clusters, "
      << report.rows.size() << " measures; report in " << dir.string() << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Association rule mining and measure-based pruning experiments", "rulelab"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "rulelab 0.1.0");

  auto* gen = app.add_subcommand("gen", "Write a seeded synthetic nominal table");
  add_shape_flags(gen, o);
  gen->add_option("-o,--output", o.output, "Output file (default: standard output)");

  auto* dump = app.add_subcommand("dump-items", "List item ids, labels and cover sizes");
  add_ingest_flags(dump, o.ingest, true);
  dump->add_option("-o,--output", o.output, "Output file (default: standard output)");

  auto* mine_cmd = app.add_subcommand("mine", "Mine association rules into a rule file");
  add_ingest_flags(mine_cmd, o.ingest, true);
  add_mining_flags(mine_cmd, o);
  mine_cmd->add_option("-o,--output", o.output, "Rule file (default: standard output)");
  mine_cmd->add_option("--threads", o.threads, "Worker threads, 0 for all cores")
      ->capture_default_str();

  auto* measures_cmd = app.add_subcommand("measures", "Evaluate measures over a rule file");
  measures_cmd->add_option("-r,--rules", o.rules_path, "Rule file from 'mine'")->required();
  measures_cmd->add_option("-m,--measures", o.measures, "'all' or comma-separated names")
      ->capture_default_str();
  measures_cmd->add_option("-o,--output", o.output, "CSV file (default: standard output)");

  auto* cover_cmd = app.add_subcommand("cover", "Cluster rules and select representatives");
  cover_cmd->add_option("-r,--rules", o.rules_path, "Rule file from 'mine'")->required();
  add_cover_flags(cover_cmd, o);
  cover_cmd->add_option("-o,--output", o.output, "Report file (default: standard output)");

  auto* exp = app.add_subcommand("experiment", "Run the measure pruning experiment");
  add_ingest_flags(exp, o.ingest, false);
  exp->add_flag("--synthetic", o.synthetic, "Generate the dataset instead of reading --input");
  add_shape_flags(exp, o);
  add_mining_flags(exp, o);
  exp->add_option("-m,--measures", o.measures, "'all' or comma-separated names")
      ->capture_default_str();
  exp->add_option("--top", o.top, "Rules kept per measure: count (500) or share (21%)")
      ->capture_default_str();
  add_cover_flags(exp, o);
  exp->add_option("-d,--output-dir", o.output_dir,
                  std::string("Report directory (default: $") + kOutputDirEnv +
                      " or ./report)");
  exp->add_option("--threads", o.threads, "Worker threads, 0 for all cores")
      ->capture_default_str();
  exp->add_flag("--keep-intermediates", o.keep_intermediates,
                "Also write rules.jsonl, measures.csv and cover.txt");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*gen) run_gen(o, out, err);
    else if (*dump) run_dump_items(o, out);
    else if (*mine_cmd) run_mine(o, out, err);
    else if (*measures_cmd) run_measures(o, out);
    else if (*cover_cmd) run_cover(o, out);
    else if (*exp) run_experiment_command(o, err);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DataError& e) {
    err << "error: " << e.what() << '\n';
    return kExitData;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitData;
  }
  return kExitOk;
}

}  // namespace rulelab::cli
