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

#include "matflat/report.hpp"

#include <sstream>

namespace matflat {

const char* to_string(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::kPass:
      return "pass";
    case ClaimStatus::kFail:
      return "fail";
    case ClaimStatus::kSkipped:
      return "skipped";
  }
  return "unknown";
}

bool all_passed(const Report& report) {
  for (const auto& r : report)
    if (!r.passed()) return false;
  return true;
}

bool any_failed(const Report& report) {
  for (const auto& r : report)
    if (r.failed()) return true;
  return false;
}

nlohmann::ordered_json to_json(const ClaimReport& r, bool include_runtime) {
  nlohmann::ordered_json j;
  j["claim_id"] = r.claim_id;
  j["status"] = to_string(r.status);
  j["location"] = r.location;
  j["values"] = r.values;
  if (!r.note.empty()) j["note"] = r.note;
  if (include_runtime) j["runtime_ms"] = r.runtime_ms;
  return j;
}

nlohmann::ordered_json report_to_json(const Report& report, bool include_runtime) {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["claims"] = nlohmann::ordered_json::array();
  std::size_t pass = 0, fail = 0, skipped = 0;
  for (const auto& r : report) {
    j["claims"].push_back(to_json(r, include_runtime));
    pass += r.status == ClaimStatus::kPass;
    fail += r.status == ClaimStatus::kFail;
    skipped += r.status == ClaimStatus::kSkipped;
  }
  j["summary"] = {{"total", report.size()}, {"pass", pass}, {"fail", fail}, {"skipped", skipped}};
  return j;
}

std::string report_to_table(const Report& report) {
  std::ostringstream out;
  for (const auto& r : report) {
    out << (r.status == ClaimStatus::kPass ? "PASS " : r.status == ClaimStatus::kFail ? "FAIL " : "SKIP ")
        << r.claim_id << "  [" << r.location << "]  " << r.values.dump();
    if (!r.note.empty()) out << "  (" << r.note << ")";
    out << "\n";
  }
  return out.str();
}

}  // namespace matflat
