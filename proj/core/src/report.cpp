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

#include "rulelab/report.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "csv.hpp"
#include "rulelab/error.hpp"

namespace rulelab {

namespace {

struct SummaryRow {
  std::string measure;
  std::size_t total_cluster = 0;
  std::size_t total_common = 0;
};

std::string row_label(const ComparisonRow& row) {
  return row.measure ? std::string(measure_name(*row.measure)) : std::string(kAllRulesLabel);
}

std::vector<SummaryRow> summary_rows(const ExperimentReport& report) {
  std::vector<SummaryRow> out;
  out.push_back({kAllRulesLabel, report.all_rules.total_cluster, report.all_rules.total_common});
  for (const auto& row : report.rows) {
    out.push_back({row_label(row), row.total_cluster, row.total_common});
  }
  return out;
}

void write_summary_rows(std::ostream& out, const std::vector<SummaryRow>& rows) {
  out << "measure,total_cluster,total_common\n";
  for (const auto& r : rows) {
    out << csv_field(r.measure) << ',' << r.total_cluster << ',' << r.total_common << '\n';
  }
}

std::size_t parse_count(const std::string& text, std::size_t line_no) {
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
    throw DataError("appendix line " + std::to_string(line_no) + ": '" + text +
                    "' is not a count");
  }
  return value;
}

}  // namespace

std::string csv_field(const std::string& text) {
  std::ostringstream out;
  detail::write_csv_field(out, text, ',');
  return out.str();
}

AppendixTable appendix_table(const ExperimentReport& report) {
  const auto keys = report.column_keys();
  AppendixTable table;
  for (const auto& key : keys) table.columns.push_back(format_itemset(report.catalog, key));

  const auto add = [&](const ComparisonRow& row) {
    AppendixTable::Row cluster{row_label(row), "cluster", std::vector<std::size_t>(keys.size(), 0),
                               row.total_cluster};
    AppendixTable::Row common{row_label(row), "common", std::vector<std::size_t>(keys.size(), 0),
                              row.total_common};
    for (const auto& c : row.clusters) {
      const auto pos = static_cast<std::size_t>(
          std::find(keys.begin(), keys.end(), c.key) - keys.begin());
      cluster.counts[pos] = c.cluster_count;
      common.counts[pos] = c.common_count;
    }
    table.rows.push_back(std::move(cluster));
    table.rows.push_back(std::move(common));
  };
  add(report.all_rules);
  for (const auto& row : report.rows) add(row);
  return table;
}

void write_appendix_csv(std::ostream& out, const ExperimentReport& report) {
  const AppendixTable table = appendix_table(report);
  out << "measure,row";
  for (const auto& c : table.columns) out << ',' << csv_field(c);
  out << ",total\n";
  for (const auto& row : table.rows) {
    out << csv_field(row.measure) << ',' << row.kind;
    for (std::size_t v : row.counts) out << ',' << v;
    out << ',' << row.total << '\n';
  }
}

AppendixTable read_appendix_csv(std::istream& in) {
  AppendixTable table;
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  std::size_t width = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (detail::trim(line).empty()) continue;
    auto fields = detail::split_csv_line(line, ',', line_no);
    if (!have_header) {
      if (fields.size() < 3 || fields[0] != "measure" || fields[1] != "row" ||
          fields.back() != "total") {
        throw DataError("appendix header must read 'measure,row,...,total'");
      }
      table.columns.assign(fields.begin() + 2, fields.end() - 1);
      width = fields.size();
      have_header = true;
      continue;
    }
    if (fields.size() != width) {
      throw DataError("appendix line " + std::to_string(line_no) + ": expected " +
                      std::to_string(width) + " fields, got " + std::to_string(fields.size()));
    }
    if (fields[1] != "cluster" && fields[1] != "common") {
      throw DataError("appendix line " + std::to_string(line_no) + ": row kind '" + fields[1] +
                      "' is neither cluster nor common");
    }
    AppendixTable::Row row;
    row.measure = fields[0];
    row.kind = fields[1];
    for (std::size_t i = 2; i + 1 < fields.size(); ++i) {
      row.counts.push_back(parse_count(fields[i], line_no));
    }
    row.total = parse_count(fields.back(), line_no);
    table.rows.push_back(std::move(row));
  }
  if (!have_header) throw DataError("appendix is empty");
  return table;
}

void write_summary_csv(std::ostream& out, const ExperimentReport& report) {
  write_summary_rows(out, summary_rows(report));
}

void write_figure_by_cluster_csv(std::ostream& out, const ExperimentReport& report) {
  auto rows = summary_rows(report);
  std::stable_sort(rows.begin(), rows.end(), [](const SummaryRow& a, const SummaryRow& b) {
    return a.total_cluster > b.total_cluster;
  });
  write_summary_rows(out, rows);
}

void write_figure_by_common_csv(std::ostream& out, const ExperimentReport& report) {
  auto rows = summary_rows(report);
  std::stable_sort(rows.begin(), rows.end(), [](const SummaryRow& a, const SummaryRow& b) {
    return a.total_common > b.total_common;
  });
  write_summary_rows(out, rows);
}

void write_summary_markdown(std::ostream& out, const ExperimentReport& report) {
  const ExperimentConfig& cfg = report.config;
  out << "# Pruning experiment summary\n\n";
  out << "- records: " << report.n_records << '\n';
  out << "- rules: " << report.rule_count << '\n';
  out << "- min_support: " << cfg.mining.min_support << '\n';
  out << "- min_confidence: " << cfg.mining.min_confidence << '\n';
  out << "- top: " << cfg.top.to_string() << '\n';
  out << "- cluster mode: " << cluster_mode_name(cfg.mode) << '\n';
  out << "- cover threshold: " << cfg.threshold.fraction() << '\n';
  out << "- clusters: " << report.baseline.clusters.size() << '\n';
  if (cfg.seed) out << "- seed: " << *cfg.seed << '\n';
  out << "\n| measure | total_cluster | total_common |\n|---|---:|---:|\n";
  for (const auto& r : summary_rows(report)) {
    out << "| " << r.measure << " | " << r.total_cluster << " | " << r.total_common << " |\n";
  }
}

std::vector<std::filesystem::path> emit_report(const ExperimentReport& report,
                                               const std::filesystem::path& directory) {
  std::error_code ec;
  std::filesystem::create_directories(directory, ec);
  if (ec) {
    throw DataError("cannot create output directory '" + directory.string() + "': " +
                    ec.message());
  }

  using Writer = void (*)(std::ostream&, const ExperimentReport&);
  const std::pair<const char*, Writer> files[] = {
      {"appendix.csv", &write_appendix_csv},
      {"summary.csv", &write_summary_csv},
      {"figure_by_cluster.csv", &write_figure_by_cluster_csv},
      {"figure_by_common.csv", &write_figure_by_common_csv},
      {"summary.md", &write_summary_markdown},
  };

  std::vector<std::filesystem::path> written;
  for (const auto& [name, write] : files) {
    const auto path = directory / name;
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw DataError("cannot open '" + path.string() + "' for writing");
    write(out, report);
    out.flush();
    if (!out) throw DataError("failed writing '" + path.string() + "'");
    written.push_back(path);
  }
  return written;
}

}  // namespace rulelab
