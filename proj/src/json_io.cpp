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

#include "approxsub/json_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace approxsub {

using nlohmann::json;

SetFunction parse_set_function(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::IoError, std::string("bad json: ") + e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j.contains("values") ||
      !j["n"].is_number_integer() || !j["values"].is_array()) {
    throw Error(ErrorCode::IoError, "expected {\"n\": int, \"values\": [..]}");
  }
  const int n = j["n"].get<int>();
  if (n < 1 || n > kMaxGroundSize) {
    throw Error(ErrorCode::InvalidTable, "n out of range");
  }
  std::vector<double> values;
  values.reserve(j["values"].size());
  for (const auto& v : j["values"]) {
    if (!v.is_number()) {
      throw Error(ErrorCode::InvalidTable, "non-numeric table entry");
    }
    values.push_back(v.get<double>());
  }
  return SetFunction(n, std::move(values));
}

SetFunction load_set_function(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_set_function(buf.str());
}

std::string set_function_to_json(const SetFunction& f) {
  json j;
  j["n"] = f.n();
  j["values"] = f.values();
  return j.dump();
}

std::string metric_report_to_json(const MetricReport& r) {
  json j;
  j["kind"] = r.kind;
  j["value"] = r.value;
  if (r.witness) {
    j["witness"] = {{"A", r.witness->a}, {"B", r.witness->b},
                    {"s", r.witness->s}};
  } else {
    j["witness"] = nullptr;
  }
  j["params"] = json::object();
  for (const auto& [k, v] : r.params) j["params"][k] = v;
  if (!r.components.empty()) j["components"] = r.components;
  return j.dump();
}

std::string cut_to_json(const LinearCut& cut) {
  json j;
  j["coeffs"] = std::vector<double>(cut.coeffs.data(),
                                    cut.coeffs.data() + cut.coeffs.size());
  j["rhs"] = cut.rhs;
  j["z_coeff"] = cut.z_coeff;
  j["provenance"] = cut.provenance;
  j["guarantee"] = cut.guarantee;
  j["certificate"] = {{"checked_points", cut.certificate.checked_points},
                      {"valid", cut.certificate.valid}};
  return j.dump();
}

}  // namespace approxsub
