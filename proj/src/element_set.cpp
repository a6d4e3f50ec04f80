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

#include "matflat/element_set.hpp"

namespace matflat {

std::vector<int> ElementSet::to_vector() const {
  std::vector<int> out;
  out.reserve(count());
  for (int e : *this) out.push_back(e);
  return out;
}

std::string ElementSet::to_string() const {
  std::string out = "{";
  bool first_elem = true;
  for (int e : *this) {
    if (!first_elem) out += ", ";
    out += std::to_string(e);
    first_elem = false;
  }
  out += "}";
  return out;
}

}  // namespace matflat
