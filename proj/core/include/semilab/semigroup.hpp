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

#ifndef SEMILAB_SEMIGROUP_HPP
#define SEMILAB_SEMIGROUP_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "semilab/element.hpp"

namespace semilab {

/// Raised when a size guard or search budget is exceeded. The CLI maps this
/// to its own exit code, distinct from usage errors.
class GuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class ElementKind { transformation, partial_perm, abstract_table };

/// How a semigroup was obtained; carried along so that derived structures
/// can be traced back to (parent, construction, sandwich element).
struct Provenance {
  std::string parent;        // e.g. "tn4", a file path, or empty
  std::string construction;  // full | inverse-monoid | closure | local | variant
  std::string element;       // one-line form of the pivot element, if any
  std::string assoc_check;   // "full" or "sampled"

  friend bool operator==(const Provenance&, const Provenance&) = default;
};

struct BuildOptions {
  // Hard cap on the element count of any constructed table
  // (the CLI lets SEMILAB_MAX_TABLE override it).
  std::size_t max_table_size = 5000;
  // Tables up to this size get the exhaustive k^3 associativity check;
  // larger ones are spot-checked on one million seeded random triples.
  std::size_t assoc_exhaustive_bound = 300;
};

/// A finite semigroup as an indexed element list plus a complete Cayley
/// table. Elements are concrete maps (transformations or partial
/// permutations) or opaque labels for abstract tables; for map kinds the
/// table always agrees with compose(). Immutable once built.
class FiniteSemigroup {
 public:
  std::size_t size() const noexcept { return labels_.size(); }

  std::size_t product(std::size_t i, std::size_t j) const {
    return table_[i * size() + j];
  }

  ElementKind kind() const noexcept { return kind_; }

  /// Degree of the underlying maps; 0 for abstract tables.
  int degree() const noexcept { return degree_; }

  const std::string& label(std::size_t i) const { return labels_[i]; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  const Transformation& transformation(std::size_t i) const;
  const PartialPerm& partial_perm(std::size_t i) const;

  std::optional<std::size_t> find(const Transformation& f) const;
  std::optional<std::size_t> find(const PartialPerm& f) const;
  std::optional<std::size_t> find_label(const std::string& label) const;

  const std::optional<Provenance>& provenance() const noexcept {
    return provenance_;
  }

  /// Identity element, if the semigroup is a monoid.
  std::optional<std::size_t> identity_index() const;
  /// Elements with a two-sided inverse relative to the identity.
  std::vector<std::size_t> units() const;

  // Raw construction from parts; validates index ranges and associativity.
  static FiniteSemigroup from_table(std::vector<std::string> labels,
                                    std::vector<std::uint32_t> table,
                                    std::optional<Provenance> provenance = {},
                                    const BuildOptions& options = {});
  static FiniteSemigroup from_elements(std::vector<Transformation> elements,
                                       std::optional<Provenance> provenance = {},
                                       const BuildOptions& options = {});
  static FiniteSemigroup from_elements(std::vector<PartialPerm> elements,
                                       std::optional<Provenance> provenance = {},
                                       const BuildOptions& options = {});

 private:
  FiniteSemigroup() = default;

  ElementKind kind_ = ElementKind::abstract_table;
  int degree_ = 0;
  std::vector<Transformation> trans_;
  std::vector<PartialPerm> pperms_;
  std::vector<std::string> labels_;
  std::vector<std::uint32_t> table_;  // row-major, k*k
  std::optional<Provenance> provenance_;

  friend FiniteSemigroup make_semigroup_from_parts(
      ElementKind kind, int degree, std::vector<Transformation> trans,
      std::vector<PartialPerm> pperms, std::vector<std::string> labels,
      std::vector<std::uint32_t> table, std::optional<Provenance> provenance,
      const BuildOptions& options);
};

/// All n^n transformations of {1..n} under composition, in lexicographic
/// image-sequence order. Guarded to 1 <= n <= 5.
FiniteSemigroup full_transformation_monoid(int n, const BuildOptions& options = {});

/// All partial permutations of {1..n}, lexicographically ordered with the
/// undefined mark sorting first. Guarded to 0 <= n <= 5;
/// order is sum_{k=0..n} C(n,k)^2 k!.
FiniteSemigroup symmetric_inverse_monoid(int n, const BuildOptions& options = {});

// Smallest composition-closed superset of the generators, breadth-first,
// generators first, products in discovery order.
FiniteSemigroup closure_from_generators(const std::vector<Transformation>& gens,
                                        const BuildOptions& options = {});
FiniteSemigroup closure_from_generators(const std::vector<PartialPerm>& gens,
                                        const BuildOptions& options = {});

/// The local subsemigroup a S a = {a x a : x in S} with the induced product,
/// elements in discovery order.
FiniteSemigroup local_subsemigroup(const FiniteSemigroup& S, std::size_t a,
                                   const BuildOptions& options = {});

/// The variant (S, *_a) with x *_a y = x a y: same element list, sandwich
/// table. Emitted as an abstract table since the product is no longer plain
/// composition.
FiniteSemigroup variant(const FiniteSemigroup& S, std::size_t a,
                        const BuildOptions& options = {});

/// The set {left x right : x in S} under the sandwich product
/// u * v = u pivot v. Throws if that set is not closed under the product.
FiniteSemigroup sandwich_subsemigroup(const FiniteSemigroup& S, std::size_t left,
                                      std::size_t right, std::size_t pivot,
                                      const BuildOptions& options = {});

enum class MonoidFamily { full_transformation, symmetric_inverse };

/// |T_m| = m^m, or |IS_m| = sum_{k=0..m} C(m,k)^2 k!.
std::uint64_t predicted_local_order(MonoidFamily family, int m);

/// Elements of a partial-permutation semigroup whose domain and range both
/// lie inside A, with the induced product.
FiniteSemigroup restrict_to_subset(const FiniteSemigroup& S,
                                   const std::vector<int>& points,
                                   const BuildOptions& options = {});

/// Relabelled copy: element i of the result is element sigma[i] of S.
/// The index map i -> sigma[i] is an isomorphism from the copy onto S.
FiniteSemigroup permuted_copy(const FiniteSemigroup& S,
                              const std::vector<std::size_t>& sigma,
                              const BuildOptions& options = {});

/// Deterministic Fisher-Yates permutation of {0..k-1} for a given seed.
std::vector<std::size_t> seeded_permutation(std::size_t k, std::uint64_t seed);

}  // namespace semilab

#endif  // SEMILAB_SEMIGROUP_HPP
