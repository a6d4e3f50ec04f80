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

#include "matflat/flats.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

#include "matflat/error.hpp"
#include "matflat/parallel.hpp"

namespace matflat {
namespace {

using FlatSet = std::unordered_set<ElementSet, ElementSetHash>;

void check_element(const Matroid& m, int e) {
  if (e < 0 || e >= m.size())
    throw Error(ErrorKind::kInvalidArgument,
                "element " + std::to_string(e) + " outside the ground set of size " + std::to_string(m.size()));
}

void check_rank(const Matroid& m, int k) {
  if (k < 0 || k > m.full_rank())
    throw Error(ErrorKind::kInvalidArgument,
                "rank " + std::to_string(k) + " outside 0.." + std::to_string(m.full_rank()));
}

[[noreturn]] void over_cap(int level, std::size_t cap) {
  throw Error(ErrorKind::kResourceLimit, "level " + std::to_string(level) + " has more than " +
                                             std::to_string(cap) + " flats");
}

}  // namespace

std::vector<ElementSet> covers_of(const Matroid& m, const ElementSet& f) {
  std::vector<ElementSet> out;
  ElementSet remaining = m.ground() - f;
  while (!remaining.empty()) {
    const ElementSet g = m.closure(f.with(remaining.first()));
    out.push_back(g);
    remaining -= g;
  }
  std::sort(out.begin(), out.end());
  return out;
}

FlatLevels enumerate_flats(const Matroid& m, int up_to_rank, const EnumOptions& opts) {
  check_rank(m, up_to_rank);
  FlatLevels out;
  out.levels.push_back({m.loops()});
  for (int k = 0; k < up_to_rank; ++k) {
    const auto& frontier = out.levels.back();
    const unsigned workers = std::max(1u, opts.threads);
    std::vector<FlatSet> found(workers);
    parallel_for(frontier.size(), workers, [&](std::size_t begin, std::size_t end, unsigned w) {
      FlatSet& mine = found[w];
      for (std::size_t i = begin; i < end; ++i) {
        ElementSet remaining = m.ground() - frontier[i];
        while (!remaining.empty()) {
          const ElementSet g = m.closure(frontier[i].with(remaining.first()));
          remaining -= g;
          mine.insert(g);
        }
        if (mine.size() > opts.cap) over_cap(k + 1, opts.cap);
      }
    });
    FlatSet merged = std::move(found[0]);
    for (unsigned w = 1; w < workers; ++w) {
      merged.insert(found[w].begin(), found[w].end());
      if (merged.size() > opts.cap) over_cap(k + 1, opts.cap);
    }
    std::vector<ElementSet> level(merged.begin(), merged.end());
    std::sort(level.begin(), level.end());
    out.levels.push_back(std::move(level));
  }
  return out;
}

std::size_t whitney(const Matroid& m, int k, const EnumOptions& opts) {
  return enumerate_flats(m, k, opts).count(k);
}

std::vector<Flat> flats_through(const Matroid& m, int k, int e, const EnumOptions& opts) {
  check_element(m, e);
  if (m.loops().contains(e))
    throw Error(ErrorKind::kLoopElement, "element " + std::to_string(e) + " is a loop");
  std::vector<Flat> out;
  const FlatLevels levels = enumerate_flats(m, k, opts);
  for (const ElementSet& f : levels.levels[k])
    if (f.contains(e)) out.push_back({f, k});
  return out;
}

std::size_t whitney_avoiding(const Matroid& m, int k, int e, const EnumOptions& opts) {
  check_element(m, e);
  if (m.loops().contains(e))
    throw Error(ErrorKind::kLoopElement, "element " + std::to_string(e) + " is a loop");
  const FlatLevels levels = enumerate_flats(m, k, opts);
  std::size_t avoiding = 0;
  for (const ElementSet& f : levels.levels[k]) avoiding += !f.contains(e);
  return avoiding;
}

BigInt predicted_level_bound(const Matroid& m, int k) {
  const int n = (m.ground() - m.loops()).count();
  if (k < 0 || k > n) return k == 0 ? 1 : 0;
  BigInt c = 1;
  for (int i = 0; i < k; ++i) c = c * (n - i) / (i + 1);
  return c;
}

Report check_sp_identities(const MatroidPtr& mp, int k, int e, std::optional<int> ell,
                           const EnumOptions& opts) {
  const Matroid& m = *mp;
  check_element(m, e);
  if (!m.loops().empty()) throw Error(ErrorKind::kInvalidArgument, "identity checks need a loopless matroid");
  if (k < 1 || k >= m.full_rank())
    throw Error(ErrorKind::kInvalidArgument, "identity checks need 1 <= k < rank");

  const int r = m.full_rank();
  const FlatLevels levels = enumerate_flats(m, k + 1, opts);
  const std::size_t wk = levels.count(k);
  const std::size_t w1 = levels.count(1);

  const MatroidPtr me = contract(mp, ElementSet{e});
  const std::size_t w_contract = whitney(*me, k - 1, opts);

  std::size_t through_k = 0;
  for (const auto& f : levels.levels[k]) through_k += f.contains(e);

  // Sum over rank-(k+1) flats through e of W_k^e(M|F), computed in the restriction.
  std::size_t restricted_sum = 0;
  for (const auto& f : levels.levels[k + 1]) {
    if (!f.contains(e)) continue;
    const MatroidPtr mf = restrict_to(mp, f);
    int local_e = 0;
    for (int x : f) {
      if (x == e) break;
      ++local_e;
    }
    restricted_sum += whitney_avoiding(*mf, k, local_e, opts);
  }

  Report report;
  auto make = [&](const char* id, const char* loc) {
    ClaimReport c{id, ClaimStatus::kPass, loc};
    c.values["n"] = m.size();
    c.values["rank"] = r;
    c.values["k"] = k;
    c.values["e"] = e;
    c.values["W_k"] = wk;
    return c;
  };
  {
    ClaimReport c = make("sp1", "Lemma 5 (sp1)");
    const BigInt bound = big_pow(BigInt(w1), static_cast<unsigned>(k));
    c.values["W_1^k"] = bound.str();
    c.status = status_of(BigInt(wk) <= bound);
    report.push_back(std::move(c));
  }
  {
    ClaimReport c = make("sp2", "Lemma 5 (sp2)");
    if (ell) {
      const BigInt bound = big_pow(BigInt(*ell), static_cast<unsigned>(k * r));
      c.values["ell"] = *ell;
      c.values["ell^(k r)"] = bound.str();
      c.status = status_of(BigInt(wk) < bound);
    } else {
      c.status = ClaimStatus::kSkipped;
      c.note = "no ell supplied";
    }
    report.push_back(std::move(c));
  }
  {
    ClaimReport c = make("sp3", "Lemma 5 (sp3)");
    c.values["flats_through_e"] = through_k;
    c.values["W_{k-1}(M/e)"] = w_contract;
    c.status = status_of(through_k == w_contract);
    report.push_back(std::move(c));
  }
  {
    ClaimReport c = make("sp4", "Lemma 5 (sp4)");
    c.values["W_{k-1}(M/e)"] = w_contract;
    c.values["restriction_sum"] = restricted_sum;
    c.status = status_of(wk == w_contract + restricted_sum);
    report.push_back(std::move(c));
  }
  return report;
}

}  // namespace matflat
