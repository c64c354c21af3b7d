// Copyright 2026 the semilab authors
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

#include "semilab/report.hpp"

#include <json.hpp>

namespace semilab {

namespace {

using Json = nlohmann::ordered_json;

Json fields_to_json(const FieldList& fields) {
  Json object = Json::object();
  for (const auto& [key, value] : fields) object[key] = value;
  return object;
}

Json report_to_json_value(const VerificationReport& report, bool include_timing) {
  Json j = Json::object();
  j["format"] = "semilab-report/1";
  j["result"] = report.result_id;
  j["parameters"] = fields_to_json(report.parameters);
  j["instances"] = report.instances;
  j["failures"] = Json::array();
  for (const FailureRecord& f : report.failures) {
    j["failures"].push_back(fields_to_json(f.fields));
  }
  j["witnesses"] = Json::array();
  for (const WitnessRecord& w : report.witnesses) {
    Json jw = Json::object();
    jw["description"] = w.description;
    if (!w.map.empty()) jw["map"] = w.map;
    for (const auto& [key, value] : w.fields) jw[key] = value;
    j["witnesses"].push_back(std::move(jw));
  }
  j["inconclusive"] = report.inconclusive;
  j["passed"] = report.passed();
  if (include_timing) j["elapsed_seconds"] = report.elapsed_seconds;
  return j;
}

}  // namespace

std::string report_to_json(const VerificationReport& report,
                           bool include_timing) {
  return report_to_json_value(report, include_timing).dump(2) + "\n";
}

std::string reports_to_json(const std::string& result_id,
                            const std::vector<VerificationReport>& reports,
                            bool include_timing) {
  Json j = Json::object();
  j["format"] = "semilab-report/1";
  j["result"] = result_id;
  bool passed = true;
  std::size_t inconclusive = 0;
  Json list = Json::array();
  for (const VerificationReport& r : reports) {
    passed = passed && r.passed();
    inconclusive += r.inconclusive;
    list.push_back(report_to_json_value(r, include_timing));
  }
  j["reports"] = std::move(list);
  j["inconclusive"] = inconclusive;
  j["passed"] = passed;
  return j.dump(2) + "\n";
}

}  // namespace semilab
