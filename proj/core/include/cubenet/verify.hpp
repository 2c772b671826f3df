// Copyright 2026 The cubenet Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>
#include <vector>

namespace cubenet {

/// One reference claim: an expected structural value of the model and the
/// value the library computes for it.
struct VerificationRow {
  std::string id;
  std::string description;
  std::string expected;
  std::string computed;
  bool pass = false;
};

struct VerificationReport {
  std::vector<VerificationRow> rows;

  bool all_pass() const;
  /// One "[PASS]" / "[FAIL]" line per row plus a summary line.
  std::string render() const;
  std::string to_json() const;
};

/// Runs every reference check: link totals and censuses of the canonical
/// networks, the congestion counts of the single cube and the two-cube
/// variants, shared-node full congestion, central-cube coverage on the
/// 3x3x3 lattice, and the two-node best response.
VerificationReport run_verification();

}  // namespace cubenet
