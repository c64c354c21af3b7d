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

#ifndef SEMILAB_RENDER_HPP
#define SEMILAB_RENDER_HPP

#include <string>

#include "semilab/green.hpp"
#include "semilab/semigroup.hpp"

namespace semilab {

// Egg-box emitters. All three are deterministic: same semigroup, same
// bytes. One grid per D-class (largest first), rows are R-classes and
// columns L-classes by smallest element, cells list element labels with
// idempotents suffixed '*'.
std::string eggbox_to_ascii(const FiniteSemigroup& S);
std::string eggbox_to_dot(const FiniteSemigroup& S);
std::string eggbox_to_json(const FiniteSemigroup& S);

}  // namespace semilab

#endif  // SEMILAB_RENDER_HPP
