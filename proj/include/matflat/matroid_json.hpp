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

#include <json.hpp>

#include "matflat/matroid.hpp"

namespace matflat {

// Accepted documents:
//   {"type":"linear","q":4,"rank":3,"columns":[[1,0,0],...]}
//   {"type":"rank3","n":9,"long_lines":[[0,1,2],...]}
//   {"type":"uniform","r":2,"n":6}
// Malformed input raises Error(kParse) whose message starts with the JSON
// pointer of the offending value.

MatroidPtr matroid_from_json(const nlohmann::json& doc);
MatroidPtr parse_matroid(const std::string& text);
/// Throws Error(kIo) if the file cannot be read.
MatroidPtr load_matroid(const std::string& path);

/// Only linear, rank3 and uniform matroids have a file representation;
/// other kinds raise Error(kUnsupported).
nlohmann::ordered_json matroid_to_json(const Matroid& m);
void save_matroid(const Matroid& m, const std::string& path);

}  // namespace matflat
