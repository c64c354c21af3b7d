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

#ifndef SEMILAB_GREEN_HPP
#define SEMILAB_GREEN_HPP

#include <compare>
#include <cstddef>
#include <vector>

#include "semilab/semigroup.hpp"

namespace semilab {

/// Green's relations of a finite semigroup, from principal ideals over the
/// Cayley table: x L y iff S^1 x = S^1 y, x R y iff x S^1 = y S^1,
/// H = L meet R, D = join of L and R. Class ids are assigned in order of
/// each class's smallest element; members are listed ascending.
struct GreenStructure {
  std::vector<std::size_t> l_class_of, r_class_of, h_class_of, d_class_of;
  std::vector<std::vector<std::size_t>> l_classes, r_classes, h_classes,
      d_classes;
  std::vector<bool> idempotent;  // per element
  std::vector<bool> h_is_group;  // per H-class: contains an idempotent
  bool d_equals_j = false;       // same-two-sided-ideal test agreed with D
};

GreenStructure green_classes(const FiniteSemigroup& S);

/// One D-class of an egg-box diagram: rows are R-classes, columns are
/// L-classes (both ordered by smallest element), cells are H-classes.
struct EggBoxDClass {
  std::vector<std::size_t> row_r_class;  // R-class id per row
  std::vector<std::size_t> col_l_class;  // L-class id per column
  // cells[row][col] = ascending element indices of that H-class
  std::vector<std::vector<std::vector<std::size_t>>> cells;
  std::size_t element_count = 0;
};

/// D-classes ordered by decreasing size, ties by smallest element index.
struct EggBox {
  std::vector<EggBoxDClass> d_classes;
};

EggBox eggbox(const FiniteSemigroup& S);
EggBox eggbox(const FiniteSemigroup& S, const GreenStructure& green);

/// Shape summary of one D-class, an isomorphism invariant.
struct DClassProfile {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::size_t cell_size = 0;
  std::size_t idempotents = 0;

  friend bool operator==(const DClassProfile&, const DClassProfile&) = default;
  friend auto operator<=>(const DClassProfile&, const DClassProfile&) = default;
};

/// Sorted multiset of per-D-class profiles; a structural fingerprint of the
/// egg-box diagram.
std::vector<DClassProfile> eggbox_profile(const FiniteSemigroup& S);
std::vector<DClassProfile> eggbox_profile(const FiniteSemigroup& S,
                                          const GreenStructure& green);

/// True iff every x has some y with xyx = x and yxy = y.
bool is_regular(const FiniteSemigroup& S);

/// Ascending indices of all x with x^2 = x.
std::vector<std::size_t> idempotents(const FiniteSemigroup& S);

}  // namespace semilab

#endif  // SEMILAB_GREEN_HPP
