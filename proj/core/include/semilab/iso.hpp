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

#ifndef SEMILAB_ISO_HPP
#define SEMILAB_ISO_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "semilab/green.hpp"
#include "semilab/semigroup.hpp"

namespace semilab {

/// Index and period of the monogenic subsemigroup of one element: the
/// powers x, x^2, ... first repeat as x^(index + period) = x^index.
std::pair<std::size_t, std::size_t> element_index_period(
    const FiniteSemigroup& S, std::size_t x);

/// Isomorphism-invariant summary; equality is necessary for isomorphism.
struct Fingerprint {
  std::size_t order = 0;
  std::size_t idempotent_count = 0;
  // sorted multiset of per-element (index, period)
  std::vector<std::pair<std::size_t, std::size_t>> element_orders;
  std::vector<std::size_t> d_class_sizes;  // sorted
  std::vector<DClassProfile> eggbox;       // sorted profile
  std::size_t l_class_count = 0;
  std::size_t r_class_count = 0;

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

Fingerprint fingerprint(const FiniteSemigroup& S);

/// Name of the first mismatching component, or nullopt when equal.
std::optional<std::string> fingerprint_mismatch(const Fingerprint& a,
                                                const Fingerprint& b);

enum class IsoVerdict { isomorphic, not_isomorphic, inconclusive };

struct IsoResult {
  IsoVerdict verdict = IsoVerdict::inconclusive;
  /// Index bijection S -> T, present iff isomorphic; always re-verified
  /// through verify_morphism before being returned.
  std::optional<std::vector<std::size_t>> witness;
  /// Present iff not_isomorphic: mismatched invariant name, or
  /// "exhausted-search" after a completed search.
  std::optional<std::string> refutation;
  std::uint64_t nodes = 0;
  double seconds = 0.0;
};

inline constexpr std::uint64_t kDefaultIsoBudget = 10'000'000;

/// Backtracking search for an isomorphism S -> T over images of a greedily
/// chosen generating set, propagating through both Cayley tables. A
/// fingerprint mismatch short-circuits to not_isomorphic; exceeding the node
/// budget yields inconclusive, never a wrong verdict.
IsoResult find_isomorphism(const FiniteSemigroup& S, const FiniteSemigroup& T,
                           std::uint64_t budget = kDefaultIsoBudget);

/// True iff map is a bijection with map[x*y] = map[x]*map[y] for all pairs.
bool verify_morphism(const FiniteSemigroup& S, const FiniteSemigroup& T,
                     const std::vector<std::size_t>& map);

/// Generating set found greedily: repeatedly adjoin the element whose
/// closure gain is largest (ties to the smallest index).
std::vector<std::size_t> greedy_generating_set(const FiniteSemigroup& S);

/// Inverse of an index bijection.
std::vector<std::size_t> inverse_map(const std::vector<std::size_t>& map);

/// Composition x -> second[first[x]].
std::vector<std::size_t> compose_maps(const std::vector<std::size_t>& first,
                                      const std::vector<std::size_t>& second);

}  // namespace semilab

#endif  // SEMILAB_ISO_HPP
