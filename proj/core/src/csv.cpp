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

#include "csv.hpp"

#include "rulelab/error.hpp"

namespace rulelab::detail {

std::string_view trim(std::string_view s) {
  const auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

std::vector<std::string> split_csv_line(std::string_view line, char delim, std::size_t line_no) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (true) {
    std::string field;
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t') && line[i] != delim) ++i;
    if (i < line.size() && line[i] == '"') {
      ++i;
      bool closed = false;
      while (i < line.size()) {
        if (line[i] == '"') {
          if (i + 1 < line.size() && line[i + 1] == '"') {
            field.push_back('"');
            i += 2;
          } else {
            ++i;
            closed = true;
            break;
          }
        } else {
          field.push_back(line[i++]);
        }
      }
      if (!closed) throw DataError("line " + std::to_string(line_no) + ": unterminated quote");
      const std::size_t next = line.find(delim, i);
      const std::size_t len = next == std::string_view::npos ? line.size() - i : next - i;
      if (!trim(line.substr(i, len)).empty()) {
        throw DataError("line " + std::to_string(line_no) + ": text after closing quote");
      }
      i = next;
    } else {
      const std::size_t next = line.find(delim, i);
      const std::size_t len = next == std::string_view::npos ? line.size() - i : next - i;
      field = std::string(trim(line.substr(i, len)));
      i = next;
    }
    out.push_back(std::move(field));
    if (i == std::string_view::npos) break;
    ++i;
  }
  return out;
}

void write_csv_field(std::ostream& out, std::string_view s, char delim) {
  const bool quote = s.find(delim) != std::string_view::npos ||
                     s.find('"') != std::string_view::npos ||
                     s.find('\n') != std::string_view::npos ||
                     (!s.empty() && (s.front() == ' ' || s.back() == ' '));
  if (!quote) {
    out << s;
    return;
  }
  out << '"';
  for (char c : s) {
    if (c == '"') out << '"';
    out << c;
  }
  out << '"';
}

}  // namespace rulelab::detail
