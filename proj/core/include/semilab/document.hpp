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

#ifndef SEMILAB_DOCUMENT_HPP
#define SEMILAB_DOCUMENT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "semilab/semigroup.hpp"

namespace semilab {

/// The on-disk form of a semigroup. Map kinds store elements as 1-based
/// one-line strings and may omit the table (it is recomputed from
/// composition and, when present, validated against it); abstract tables
/// must carry the full k x k matrix of 0-based element indices.
struct SemigroupDocument {
  std::string kind;  // "transformation" | "partial-permutation" | "abstract-table"
  int degree = 0;    // map kinds only
  std::vector<std::string> elements;
  std::optional<std::vector<std::vector<std::uint32_t>>> table;
  std::optional<Provenance> provenance;

  friend bool operator==(const SemigroupDocument&,
                         const SemigroupDocument&) = default;
};

/// Canonical document of a semigroup: map kinds are stored without a table,
/// abstract kinds with one.
SemigroupDocument semigroup_to_document(const FiniteSemigroup& S);

FiniteSemigroup document_to_semigroup(const SemigroupDocument& doc,
                                      const BuildOptions& options = {});

std::string document_to_json(const SemigroupDocument& doc);
SemigroupDocument document_from_json(std::string_view text);

/// Write with a temp-file-and-rename so readers never see partial output.
void write_file_atomically(const std::string& path, const std::string& contents);

std::string read_file(const std::string& path);

}  // namespace semilab

#endif  // SEMILAB_DOCUMENT_HPP
