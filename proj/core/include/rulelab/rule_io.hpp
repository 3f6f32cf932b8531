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

#include <istream>
#include <ostream>

#include "rulelab/miner.hpp"

namespace rulelab {

// Rule files are JSON Lines: a header object carrying the item catalog and
// record count, then one object per rule:
//
//   {"index":1,"antecedent":["Outlook=overcast"],"consequent":["Play=yes"],
//    "cover_x":[3,7,12,13],"cover_y":[...],"cover_xy":[3,7,12,13],
//    "support":0.2857142857142857,"confidence":1.0}

void write_rules(std::ostream& out, const RuleSet& rules);

/// Throws DataError on malformed lines, unknown item labels, or covers that
/// contradict the stated support/confidence.
RuleSet read_rules(std::istream& in);

}  // namespace rulelab
