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

#ifndef APPROXSUB_JSON_IO_HPP
#define APPROXSUB_JSON_IO_HPP

#include <string>

#include "approxsub/metrics.hpp"
#include "approxsub/polytopes.hpp"
#include "approxsub/set_function.hpp"

namespace approxsub {

// {"n": <int>, "values": [<2^n floats, index = bitmask>]}
SetFunction load_set_function(const std::string& path);
SetFunction parse_set_function(const std::string& json_text);
std::string set_function_to_json(const SetFunction& f);

// {"kind","value","witness":{"A","B","s"}|null,"params":{...}}
std::string metric_report_to_json(const MetricReport& r);

// {"coeffs","rhs","z_coeff","provenance","guarantee","certificate"}
std::string cut_to_json(const LinearCut& cut);

}  // namespace approxsub

#endif  // APPROXSUB_JSON_IO_HPP
