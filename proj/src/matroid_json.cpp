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

#include "matflat/matroid_json.hpp"

#include <fstream>
#include <sstream>

#include "matflat/error.hpp"

namespace matflat {
namespace {

[[noreturn]] void fail(const std::string& pointer, const std::string& msg) {
  throw Error(ErrorKind::kParse, (pointer.empty() ? "/" : pointer) + ": " + msg);
}

const nlohmann::json& member(const nlohmann::json& doc, const char* key) {
  auto it = doc.find(key);
  if (it == doc.end()) fail("", std::string("missing field \"") + key + "\"");
  return *it;
}

long long integer(const nlohmann::json& v, const std::string& pointer, long long lo, long long hi) {
  if (!v.is_number_integer()) fail(pointer, "expected an integer, got " + v.dump());
  const long long x = v.get<long long>();
  if (x < lo || x > hi)
    fail(pointer, "value " + std::to_string(x) + " outside " + std::to_string(lo) + ".." + std::to_string(hi));
  return x;
}

const nlohmann::json& array(const nlohmann::json& v, const std::string& pointer) {
  if (!v.is_array()) fail(pointer, "expected an array");
  return v;
}

MatroidPtr linear_from_json(const nlohmann::json& doc) {
  const int q = static_cast<int>(integer(member(doc, "q"), "/q", 2, kMaxFieldOrder));
  if (!is_prime_power(static_cast<std::uint64_t>(q))) fail("/q", std::to_string(q) + " is not a prime power");
  const int rows = static_cast<int>(integer(member(doc, "rank"), "/rank", 0, kMaxElements));
  const auto& cols = array(member(doc, "columns"), "/columns");
  if (cols.size() > static_cast<std::size_t>(kMaxElements))
    fail("/columns", "more than " + std::to_string(kMaxElements) + " columns");
  std::vector<std::vector<FieldElement>> columns;
  for (std::size_t e = 0; e < cols.size(); ++e) {
    const std::string ptr = "/columns/" + std::to_string(e);
    const auto& col = array(cols[e], ptr);
    if (static_cast<int>(col.size()) != rows)
      fail(ptr, "column has " + std::to_string(col.size()) + " entries, expected " + std::to_string(rows));
    std::vector<FieldElement> v;
    for (std::size_t i = 0; i < col.size(); ++i)
      v.push_back(static_cast<FieldElement>(integer(col[i], ptr + "/" + std::to_string(i), 0, q - 1)));
    columns.push_back(std::move(v));
  }
  return std::make_shared<LinearMatroid>(shared_field(q), rows, std::move(columns));
}

MatroidPtr rank3_from_json(const nlohmann::json& doc) {
  const int n = static_cast<int>(integer(member(doc, "n"), "/n", 0, kMaxElements));
  const auto& lines = array(member(doc, "long_lines"), "/long_lines");
  std::vector<std::vector<int>> out;
  for (std::size_t li = 0; li < lines.size(); ++li) {
    const std::string ptr = "/long_lines/" + std::to_string(li);
    const auto& line = array(lines[li], ptr);
    if (line.size() < 3) fail(ptr, "a long line needs at least 3 points");
    std::vector<int> pts;
    for (std::size_t i = 0; i < line.size(); ++i)
      pts.push_back(static_cast<int>(integer(line[i], ptr + "/" + std::to_string(i), 0, n - 1)));
    out.push_back(std::move(pts));
  }
  try {
    return std::make_shared<Rank3PointLine>(n, std::move(out));
  } catch (const Error& e) {
    fail("/long_lines", e.what());
  }
}

MatroidPtr uniform_from_json(const nlohmann::json& doc) {
  const int n = static_cast<int>(integer(member(doc, "n"), "/n", 0, kMaxElements));
  const int r = static_cast<int>(integer(member(doc, "r"), "/r", 0, n));
  return std::make_shared<UniformMatroid>(r, n);
}

}  // namespace

MatroidPtr matroid_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) fail("", "expected a JSON object");
  const auto& type = member(doc, "type");
  if (!type.is_string()) fail("/type", "expected a string");
  const std::string t = type.get<std::string>();
  if (t == "linear") return linear_from_json(doc);
  if (t == "rank3") return rank3_from_json(doc);
  if (t == "uniform") return uniform_from_json(doc);
  fail("/type", "unknown matroid type \"" + t + "\"");
}

MatroidPtr parse_matroid(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::kParse, std::string("byte ") + std::to_string(e.byte) + ": " + e.what());
  }
  return matroid_from_json(doc);
}

MatroidPtr load_matroid(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kIo, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_matroid(buf.str());
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::kParse) throw Error(ErrorKind::kParse, path + ": " + e.what());
    throw;
  }
}

nlohmann::ordered_json matroid_to_json(const Matroid& m) {
  nlohmann::ordered_json j;
  if (const auto* lin = dynamic_cast<const LinearMatroid*>(&m)) {
    j["type"] = "linear";
    j["q"] = lin->field().q();
    j["rank"] = lin->rows();
    j["columns"] = nlohmann::ordered_json::array();
    for (const auto& col : lin->columns()) {
      auto arr = nlohmann::ordered_json::array();
      for (FieldElement x : col) arr.push_back(static_cast<int>(x));
      j["columns"].push_back(std::move(arr));
    }
    return j;
  }
  if (const auto* pl = dynamic_cast<const Rank3PointLine*>(&m)) {
    j["type"] = "rank3";
    j["n"] = pl->size();
    j["long_lines"] = pl->long_lines();
    return j;
  }
  if (m.kind() == MatroidKind::kUniform) {
    j["type"] = "uniform";
    j["r"] = m.full_rank();
    j["n"] = m.size();
    return j;
  }
  throw Error(ErrorKind::kUnsupported,
              std::string("no file representation for ") + to_string(m.kind()) + " matroids");
}

void save_matroid(const Matroid& m, const std::string& path) {
  const auto j = matroid_to_json(m);
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::kIo, "cannot write " + path);
  out << j.dump() << "\n";
  if (!out) throw Error(ErrorKind::kIo, "write failed for " + path);
}

}  // namespace matflat
