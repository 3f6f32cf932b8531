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

#pragma once

#include <cstddef>
#include <filesystem>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "rulelab/pruning.hpp"

namespace rulelab {

/// Label used for the unpruned baseline row in every report file.
inline constexpr const char* kAllRulesLabel = "All-ARs";

/// The appendix table in memory: one Cluster row and one Common row per
/// measure, columns keyed by cluster label.
struct AppendixTable {
  struct Row {
    std::string measure;
    std::string kind;  // "cluster" or "common"
    std::vector<std::size_t> counts;
    std::size_t total = 0;

    friend bool operator==(const Row&, const Row&) = default;
  };

  std::vector<std::string> columns;
  std::vector<Row> rows;

  friend bool operator==(const AppendixTable&, const AppendixTable&) = default;
};

AppendixTable appendix_table(const ExperimentReport& report);

void write_appendix_csv(std::ostream& out, const ExperimentReport& report);
/// Throws DataError on malformed input.
AppendixTable read_appendix_csv(std::istream& in);

/// "measure,total_cluster,total_common", baseline first.
void write_summary_csv(std::ostream& out, const ExperimentReport& report);
/// Summary rows sorted by descending total_cluster (ties keep summary order).
void write_figure_by_cluster_csv(std::ostream& out, const ExperimentReport& report);
/// Summary rows sorted by descending total_common (ties keep summary order).
void write_figure_by_common_csv(std::ostream& out, const ExperimentReport& report);
void write_summary_markdown(std::ostream& out, const ExperimentReport& report);

/// Writes appendix.csv, summary.csv, figure_by_cluster.csv,
/// figure_by_common.csv and summary.md into `directory`, creating it if needed.
/// Returns the written paths. Throws DataError when a file cannot be written.
std::vector<std::filesystem::path> emit_report(const ExperimentReport& report,
                                               const std::filesystem::path& directory);

/// Quotes a CSV field when it contains a comma, quote, or line break.
std::string csv_field(const std::string& text);

}  // namespace rulelab
