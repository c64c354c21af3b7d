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

#ifndef SEMILAB_REPORT_HPP
#define SEMILAB_REPORT_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace semilab {

/// Ordered key/value payload; keys keep insertion order when serialized.
using FieldList = std::vector<std::pair<std::string, std::string>>;

/// One counterexample. The fields carry the inputs and the observed vs
/// expected values, enough to replay the single-instance check on its own.
struct FailureRecord {
  FieldList fields;
};

/// A verified piece of evidence, typically an isomorphism as an index map.
struct WitnessRecord {
  std::string description;
  std::vector<std::size_t> map;
  FieldList fields;
};

/// Machine-checkable outcome of one verification routine.
struct VerificationReport {
  std::string result_id;
  FieldList parameters;
  std::size_t instances = 0;
  std::vector<FailureRecord> failures;
  std::vector<WitnessRecord> witnesses;
  std::size_t inconclusive = 0;  // exhausted search budgets, if any
  double elapsed_seconds = 0.0;

  bool passed() const noexcept { return failures.empty() && inconclusive == 0; }
};

/// JSON form with stable field order. Timing can be suppressed to make the
/// output reproducible byte-for-byte across runs.
std::string report_to_json(const VerificationReport& report,
                           bool include_timing = true);

/// JSON array document of several reports under one "result" header.
std::string reports_to_json(const std::string& result_id,
                            const std::vector<VerificationReport>& reports,
                            bool include_timing = true);

}  // namespace semilab

#endif  // SEMILAB_REPORT_HPP
