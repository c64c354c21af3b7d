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

#include "semilab/element.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace semilab {

namespace {

void check_point_range(int value, int degree, const char* what) {
  if (value < 1 || value > degree) {
    throw std::invalid_argument(std::string(what) + ": point " +
                                std::to_string(value) +
                                " outside {1.." + std::to_string(degree) + "}");
  }
}

std::vector<int> sorted_defined_values(const std::vector<int>& images) {
  std::vector<int> values;
  for (int v : images) {
    if (v != 0) values.push_back(v);
  }
  std::sort(values.begin(), values.end());
  return values;
}

// Splits a one-line string into per-point tokens: comma-separated when a
// comma is present, otherwise one character per point.
std::vector<std::string> tokenize_one_line(std::string_view text) {
  std::vector<std::string> tokens;
  if (text.find(',') != std::string_view::npos) {
    std::size_t start = 0;
    while (true) {
      std::size_t pos = text.find(',', start);
      tokens.emplace_back(text.substr(start, pos - start));
      if (pos == std::string_view::npos) break;
      start = pos + 1;
    }
  } else {
    for (char c : text) tokens.emplace_back(1, c);
  }
  return tokens;
}

std::vector<int> parse_entries(std::string_view text, int degree,
                               bool allow_undefined) {
  if (degree < 0) throw std::invalid_argument("one-line parse: negative degree");
  std::vector<std::string> tokens =
      text.empty() ? std::vector<std::string>{} : tokenize_one_line(text);
  if (static_cast<int>(tokens.size()) != degree) {
    throw std::invalid_argument("one-line parse: expected " +
                                std::to_string(degree) + " entries, got " +
                                std::to_string(tokens.size()));
  }
  std::vector<int> entries(tokens.size());
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const std::string& tok = tokens[i];
    if (tok == "-") {
      if (!allow_undefined) {
        throw std::invalid_argument(
            "one-line parse: '-' is only valid for partial permutations");
      }
      entries[i] = 0;
      continue;
    }
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) {
      throw std::invalid_argument("one-line parse: bad entry '" + tok + "'");
    }
    check_point_range(value, degree, "one-line parse");
    entries[i] = value;
  }
  return entries;
}

std::string format_entries(const std::vector<int>& images) {
  const int degree = static_cast<int>(images.size());
  std::string out;
  const bool compact = degree <= 9;
  for (int i = 0; i < degree; ++i) {
    if (!compact && i > 0) out += ',';
    if (images[i] == 0) {
      out += '-';
    } else {
      out += std::to_string(images[i]);
    }
  }
  return out;
}

template <typename Elem>
std::vector<int> image_set(const Elem& f) {
  std::vector<int> values;
  for (int v : f.images()) {
    if (v != 0) values.push_back(v);
  }
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return values;
}

template <typename Elem>
Elem power_impl(const Elem& f, int k) {
  if (k < 1) throw std::invalid_argument("power: exponent must be >= 1");
  // binary powering over compose
  Elem base = f;
  Elem result = f;
  --k;
  while (k > 0) {
    if (k & 1) result = compose(result, base);
    k >>= 1;
    if (k > 0) base = compose(base, base);
  }
  return result;
}

template <typename Elem>
int stabiliser_index_impl(const Elem& f) {
  Elem current = f;
  std::vector<int> im = image_set(current);
  for (int s = 1;; ++s) {
    Elem next = compose(current, f);
    std::vector<int> im_next = image_set(next);
    if (im_next == im) return s;
    current = std::move(next);
    im = std::move(im_next);
  }
}

}  // namespace

Transformation::Transformation(std::vector<int> images)
    : images_(std::move(images)) {
  if (images_.empty()) {
    throw std::invalid_argument("Transformation: degree must be >= 1");
  }
  for (int v : images_) check_point_range(v, degree(), "Transformation");
}

Transformation Transformation::identity(int degree) {
  std::vector<int> images(static_cast<std::size_t>(degree));
  for (int i = 0; i < degree; ++i) images[i] = i + 1;
  return Transformation(std::move(images));
}

Transformation Transformation::constant(int degree, int value) {
  check_point_range(value, degree, "Transformation::constant");
  return Transformation(std::vector<int>(static_cast<std::size_t>(degree), value));
}

PartialPerm::PartialPerm(std::vector<int> images) : images_(std::move(images)) {
  for (int v : images_) {
    if (v != 0) check_point_range(v, degree(), "PartialPerm");
  }
  std::vector<int> values = sorted_defined_values(images_);
  if (std::adjacent_find(values.begin(), values.end()) != values.end()) {
    throw std::invalid_argument("PartialPerm: defined images must be distinct");
  }
}

PartialPerm PartialPerm::identity(int degree) {
  std::vector<int> images(static_cast<std::size_t>(degree));
  for (int i = 0; i < degree; ++i) images[i] = i + 1;
  return PartialPerm(std::move(images));
}

PartialPerm PartialPerm::empty_map(int degree) {
  return PartialPerm(std::vector<int>(static_cast<std::size_t>(degree), 0));
}

PartialPerm PartialPerm::partial_identity(int degree,
                                          const std::vector<int>& subset) {
  std::vector<int> images(static_cast<std::size_t>(degree), 0);
  for (int p : subset) {
    check_point_range(p, degree, "PartialPerm::partial_identity");
    images[p - 1] = p;
  }
  return PartialPerm(std::move(images));
}

Transformation compose(const Transformation& f, const Transformation& g) {
  if (f.degree() != g.degree()) {
    throw std::invalid_argument("compose: degree mismatch");
  }
  std::vector<int> images(static_cast<std::size_t>(f.degree()));
  for (int x = 1; x <= f.degree(); ++x) images[x - 1] = g[f[x]];
  return Transformation(std::move(images));
}

PartialPerm compose(const PartialPerm& f, const PartialPerm& g) {
  if (f.degree() != g.degree()) {
    throw std::invalid_argument("compose: degree mismatch");
  }
  std::vector<int> images(static_cast<std::size_t>(f.degree()), 0);
  for (int x = 1; x <= f.degree(); ++x) {
    const int mid = f[x];
    if (mid != 0) images[x - 1] = g[mid];
  }
  return PartialPerm(std::move(images));
}

std::vector<int> image(const Transformation& f) { return image_set(f); }
std::vector<int> image(const PartialPerm& f) { return image_set(f); }

int rank(const Transformation& f) { return static_cast<int>(image(f).size()); }
int rank(const PartialPerm& f) { return static_cast<int>(image(f).size()); }

std::vector<int> domain(const PartialPerm& f) {
  std::vector<int> dom;
  for (int x = 1; x <= f.degree(); ++x) {
    if (f.defined(x)) dom.push_back(x);
  }
  return dom;
}

std::vector<std::vector<int>> kernel_partition(const Transformation& f) {
  std::vector<std::vector<int>> fibers(static_cast<std::size_t>(f.degree()));
  for (int x = 1; x <= f.degree(); ++x) fibers[f[x] - 1].push_back(x);
  std::vector<std::vector<int>> blocks;
  for (auto& fiber : fibers) {
    if (!fiber.empty()) blocks.push_back(std::move(fiber));
  }
  // order blocks by smallest member
  std::sort(blocks.begin(), blocks.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return blocks;
}

Transformation power(const Transformation& f, int k) { return power_impl(f, k); }
PartialPerm power(const PartialPerm& f, int k) { return power_impl(f, k); }

int stabiliser_index(const Transformation& f) { return stabiliser_index_impl(f); }
int stabiliser_index(const PartialPerm& f) { return stabiliser_index_impl(f); }

std::vector<int> stable_image(const Transformation& f) {
  return image(power(f, stabiliser_index(f)));
}

std::vector<int> stable_image(const PartialPerm& f) {
  return image(power(f, stabiliser_index(f)));
}

PartialPerm invert(const PartialPerm& p) {
  std::vector<int> images(static_cast<std::size_t>(p.degree()), 0);
  for (int x = 1; x <= p.degree(); ++x) {
    if (p.defined(x)) images[p[x] - 1] = x;
  }
  return PartialPerm(std::move(images));
}

bool is_idempotent(const Transformation& f) { return compose(f, f) == f; }
bool is_idempotent(const PartialPerm& f) { return compose(f, f) == f; }

Transformation parse_transformation(std::string_view text, int degree) {
  return Transformation(parse_entries(text, degree, false));
}

PartialPerm parse_partial_perm(std::string_view text, int degree) {
  return PartialPerm(parse_entries(text, degree, true));
}

std::string one_line(const Transformation& f) { return format_entries(f.images()); }
std::string one_line(const PartialPerm& f) { return format_entries(f.images()); }

}  // namespace semilab
