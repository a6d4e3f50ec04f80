// Copyright 2026 The Authors.
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

#include <chrono>
#include <string>
#include <vector>

#include <json.hpp>

namespace matflat {

enum class ClaimStatus { kPass, kFail, kSkipped };

const char* to_string(ClaimStatus s);

/// Outcome of one mechanically checked claim. `values` holds the computed and
/// expected quantities; big integers are stored as decimal strings.
struct ClaimReport {
  std::string claim_id;
  ClaimStatus status = ClaimStatus::kSkipped;
  std::string location;
  nlohmann::ordered_json values = nlohmann::ordered_json::object();
  std::string note;
  double runtime_ms = 0.0;

  bool passed() const { return status == ClaimStatus::kPass; }
  bool failed() const { return status == ClaimStatus::kFail; }
};

using Report = std::vector<ClaimReport>;

inline ClaimStatus status_of(bool ok) { return ok ? ClaimStatus::kPass : ClaimStatus::kFail; }

bool all_passed(const Report& report);
bool any_failed(const Report& report);

nlohmann::ordered_json to_json(const ClaimReport& r, bool include_runtime = true);
/// {"schema": 1, "claims": [...], "summary": {...}}
nlohmann::ordered_json report_to_json(const Report& report, bool include_runtime = true);
/// One line per claim: status, id, location, values.
std::string report_to_table(const Report& report);

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace matflat
