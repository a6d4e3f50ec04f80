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

#include <string>
#include <vector>

#include "matflat/flats.hpp"
#include "matflat/matroid.hpp"
#include "matflat/report.hpp"

namespace matflat {

enum class Profile { kQuick, kFull };

struct CatalogEntry {
  std::string name;
  MatroidPtr matroid;
};

/// Small named instances used for randomized identity checks.
std::vector<CatalogEntry> construction_catalog(Profile profile);

/// Runs every checkable claim for the profile. Claims whose enumeration
/// would exceed opts.cap or the ground-set limit are reported as skipped.
/// Report order and values are independent of opts.threads.
Report verify_paper(Profile profile, const EnumOptions& opts = {});

/// Smallest ell >= 2 with the matroid in U(ell).
int tight_ell(const Matroid& m, const EnumOptions& opts = {});

}  // namespace matflat
