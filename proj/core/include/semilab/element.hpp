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

#ifndef SEMILAB_ELEMENT_HPP
#define SEMILAB_ELEMENT_HPP

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace semilab {

/// A total map of {1..n} into itself, stored as its image sequence.
///
/// Points are 1-based throughout; one-line notation such as "2432" lists
/// the images of 1, 2, ..., n in order. Products are taken left to right
/// (right action): in compose(f, g) the point x goes to g(f(x)).
class Transformation {
 public:
  /// images[i] is the image of point i+1; every entry must lie in {1..n}.
  explicit Transformation(std::vector<int> images);

  static Transformation identity(int degree);
  static Transformation constant(int degree, int value);

  int degree() const noexcept { return static_cast<int>(images_.size()); }

  /// Image of a 1-based point.
  int operator[](int point) const { return images_[point - 1]; }

  const std::vector<int>& images() const noexcept { return images_; }

  friend bool operator==(const Transformation&,
                         const Transformation&) = default;
  friend auto operator<=>(const Transformation&,
                          const Transformation&) = default;

 private:
  std::vector<int> images_;
};

/// An injective partial map of {1..n} into itself.
///
/// Stored as an image sequence where the entry 0 marks an undefined point.
/// Defined entries are pairwise distinct. The empty map (all entries
/// undefined) is legal at every degree, including degree 0, and has rank 0.
class PartialPerm {
 public:
  /// images[i] is the image of point i+1, or 0 when i+1 is outside the
  /// domain. Defined entries must be distinct and lie in {1..n}.
  explicit PartialPerm(std::vector<int> images);

  static PartialPerm identity(int degree);
  static PartialPerm empty_map(int degree);
  /// The partial identity 1_A on a subset A of {1..degree}.
  static PartialPerm partial_identity(int degree, const std::vector<int>& subset);

  int degree() const noexcept { return static_cast<int>(images_.size()); }

  /// Image of a 1-based point; 0 when undefined.
  int operator[](int point) const { return images_[point - 1]; }

  bool defined(int point) const { return images_[point - 1] != 0; }

  const std::vector<int>& images() const noexcept { return images_; }

  friend bool operator==(const PartialPerm&, const PartialPerm&) = default;
  friend auto operator<=>(const PartialPerm&, const PartialPerm&) = default;

 private:
  std::vector<int> images_;
};

// Left-to-right composition: x -> g(f(x)). Degrees must agree; for partial
// maps the product is defined exactly where the whole chain is.
Transformation compose(const Transformation& f, const Transformation& g);
PartialPerm compose(const PartialPerm& f, const PartialPerm& g);

/// Sorted image set {f(x)}.
std::vector<int> image(const Transformation& f);
std::vector<int> image(const PartialPerm& f);

int rank(const Transformation& f);
int rank(const PartialPerm& f);

/// Sorted domain of a partial permutation.
std::vector<int> domain(const PartialPerm& f);

/// Fibers {x : f(x) = v}, ordered by smallest member; block count = rank.
std::vector<std::vector<int>> kernel_partition(const Transformation& f);

// k-fold self-composition, k >= 1.
Transformation power(const Transformation& f, int k);
PartialPerm power(const PartialPerm& f, int k);

/// Least s >= 1 with im(f^s) = im(f^{s+1}); at most degree(f) for degree >= 1.
int stabiliser_index(const Transformation& f);
int stabiliser_index(const PartialPerm& f);

/// im(f^s) for s = stabiliser_index(f), sorted.
std::vector<int> stable_image(const Transformation& f);
std::vector<int> stable_image(const PartialPerm& f);

/// The unique inverse: dom(invert(p)) = ran(p) and invert(p)(p(x)) = x.
PartialPerm invert(const PartialPerm& p);

bool is_idempotent(const Transformation& f);
bool is_idempotent(const PartialPerm& f);

// One-line notation. Degrees up to 9 use one character per point with '-'
// for an undefined entry ("2432", "-1-"); larger degrees are
// comma-separated ("2,4,3,2", "-,1,-"). parse accepts both forms.
Transformation parse_transformation(std::string_view text, int degree);
PartialPerm parse_partial_perm(std::string_view text, int degree);
std::string one_line(const Transformation& f);
std::string one_line(const PartialPerm& f);

}  // namespace semilab

#endif  // SEMILAB_ELEMENT_HPP
