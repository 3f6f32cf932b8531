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
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace rulelab::detail {

std::string_view trim(std::string_view s);

/// Splits one line on `delim`, honouring double-quoted fields with ""
/// escapes. Unquoted fields are trimmed. Throws DataError naming `line_no`.
std::vector<std::string> split_csv_line(std::string_view line, char delim, std::size_t line_no);

void write_csv_field(std::ostream& out, std::string_view s, char delim = ',');

}  // namespace rulelab::detail
