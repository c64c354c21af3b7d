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

#include "semilab/semigroup.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>

namespace semilab {

namespace {

constexpr std::uint64_t kAssocSampleSeed = 0x5e111ab0a550cULL;

void check_associativity(const std::vector<std::uint32_t>& table, std::size_t k,
                         const BuildOptions& options, Provenance* provenance) {
  auto at = [&](std::size_t i, std::size_t j) { return table[i * k + j]; };
  if (k <= options.assoc_exhaustive_bound) {
    for (std::size_t x = 0; x < k; ++x) {
      for (std::size_t y = 0; y < k; ++y) {
        const std::size_t xy = at(x, y);
        for (std::size_t z = 0; z < k; ++z) {
          if (at(xy, z) != at(x, at(y, z))) {
            throw std::logic_error("associativity check failed");
          }
        }
      }
    }
    if (provenance) provenance->assoc_check = "full";
  } else {
    std::mt19937_64 rng(kAssocSampleSeed);
    for (int t = 0; t < 1'000'000; ++t) {
      const std::size_t x = rng() % k, y = rng() % k, z = rng() % k;
      if (at(at(x, y), z) != at(x, at(y, z))) {
        throw std::logic_error("associativity check failed (sampled)");
      }
    }
    if (provenance) provenance->assoc_check = "sampled";
  }
}

void check_table_size(std::size_t k, const BuildOptions& options) {
  if (k > options.max_table_size) {
    throw GuardError("table size " + std::to_string(k) +
                     " exceeds the guard of " +
                     std::to_string(options.max_table_size) +
                     " (set SEMILAB_MAX_TABLE to raise it)");
  }
}

template <typename Elem>
std::vector<std::string> labels_of(const std::vector<Elem>& elements) {
  std::vector<std::string> labels;
  labels.reserve(elements.size());
  for (const Elem& e : elements) labels.push_back(one_line(e));
  return labels;
}

// Fills the Cayley table of a composition-closed element list.
template <typename Elem>
std::vector<std::uint32_t> table_by_composition(const std::vector<Elem>& elements) {
  const std::size_t k = elements.size();
  std::map<Elem, std::uint32_t> index;
  for (std::size_t i = 0; i < k; ++i) index.emplace(elements[i], i);
  std::vector<std::uint32_t> table(k * k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      auto it = index.find(compose(elements[i], elements[j]));
      if (it == index.end()) {
        throw std::logic_error("element list is not closed under composition");
      }
      table[i * k + j] = it->second;
    }
  }
  return table;
}

template <typename Elem>
std::vector<Elem> close_under_products(const std::vector<Elem>& gens,
                                       const BuildOptions& options) {
  if (gens.empty()) {
    throw std::invalid_argument("closure: no generators");
  }
  const int degree = gens.front().degree();
  for (const Elem& g : gens) {
    if (g.degree() != degree) {
      throw std::invalid_argument("closure: generators of mixed degree");
    }
  }
  std::vector<Elem> elements;
  std::map<Elem, std::uint32_t> index;
  for (const Elem& g : gens) {
    if (index.emplace(g, elements.size()).second) elements.push_back(g);
  }
  // breadth-first product saturation; discovery order is deterministic
  auto discover = [&](Elem p) {
    if (index.emplace(p, elements.size()).second) {
      check_table_size(elements.size() + 1, options);
      elements.push_back(std::move(p));
    }
  };
  for (std::size_t next = 0; next < elements.size(); ++next) {
    const Elem current = elements[next];
    for (std::size_t i = 0; i < elements.size(); ++i) {
      const Elem other = elements[i];
      discover(compose(current, other));
      discover(compose(other, current));
    }
  }
  return elements;
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t result = 1;
  for (int i = 1; i <= k; ++i) {
    result = result * static_cast<std::uint64_t>(n - k + i) /
             static_cast<std::uint64_t>(i);
  }
  return result;
}

std::uint64_t factorial(int n) {
  std::uint64_t result = 1;
  for (int i = 2; i <= n; ++i) result *= static_cast<std::uint64_t>(i);
  return result;
}

}  // namespace

FiniteSemigroup make_semigroup_from_parts(
    ElementKind kind, int degree, std::vector<Transformation> trans,
    std::vector<PartialPerm> pperms, std::vector<std::string> labels,
    std::vector<std::uint32_t> table, std::optional<Provenance> provenance,
    const BuildOptions& options) {
  const std::size_t k = labels.size();
  if (k == 0) throw std::invalid_argument("semigroup must be nonempty");
  check_table_size(k, options);
  if (table.size() != k * k) {
    throw std::invalid_argument("table must be k x k");
  }
  for (std::uint32_t entry : table) {
    if (entry >= k) throw std::invalid_argument("table entry out of range");
  }
  if (!provenance) provenance = Provenance{};
  check_associativity(table, k, options, &*provenance);

  FiniteSemigroup S;
  S.kind_ = kind;
  S.degree_ = degree;
  S.trans_ = std::move(trans);
  S.pperms_ = std::move(pperms);
  S.labels_ = std::move(labels);
  S.table_ = std::move(table);
  S.provenance_ = std::move(provenance);
  return S;
}

const Transformation& FiniteSemigroup::transformation(std::size_t i) const {
  if (kind_ != ElementKind::transformation) {
    throw std::logic_error("not a transformation semigroup");
  }
  return trans_[i];
}

const PartialPerm& FiniteSemigroup::partial_perm(std::size_t i) const {
  if (kind_ != ElementKind::partial_perm) {
    throw std::logic_error("not a partial-permutation semigroup");
  }
  return pperms_[i];
}

std::optional<std::size_t> FiniteSemigroup::find(const Transformation& f) const {
  if (kind_ != ElementKind::transformation) return std::nullopt;
  for (std::size_t i = 0; i < trans_.size(); ++i) {
    if (trans_[i] == f) return i;
  }
  return std::nullopt;
}

std::optional<std::size_t> FiniteSemigroup::find(const PartialPerm& f) const {
  if (kind_ != ElementKind::partial_perm) return std::nullopt;
  for (std::size_t i = 0; i < pperms_.size(); ++i) {
    if (pperms_[i] == f) return i;
  }
  return std::nullopt;
}

std::optional<std::size_t> FiniteSemigroup::find_label(
    const std::string& label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return i;
  }
  return std::nullopt;
}

std::optional<std::size_t> FiniteSemigroup::identity_index() const {
  const std::size_t k = size();
  for (std::size_t e = 0; e < k; ++e) {
    bool ok = true;
    for (std::size_t x = 0; x < k && ok; ++x) {
      ok = product(e, x) == x && product(x, e) == x;
    }
    if (ok) return e;
  }
  return std::nullopt;
}

std::vector<std::size_t> FiniteSemigroup::units() const {
  std::vector<std::size_t> result;
  auto e = identity_index();
  if (!e) return result;
  const std::size_t k = size();
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) {
      if (product(a, b) == *e && product(b, a) == *e) {
        result.push_back(a);
        break;
      }
    }
  }
  return result;
}

FiniteSemigroup FiniteSemigroup::from_table(std::vector<std::string> labels,
                                            std::vector<std::uint32_t> table,
                                            std::optional<Provenance> provenance,
                                            const BuildOptions& options) {
  return make_semigroup_from_parts(ElementKind::abstract_table, 0, {}, {},
                                   std::move(labels), std::move(table),
                                   std::move(provenance), options);
}

FiniteSemigroup FiniteSemigroup::from_elements(
    std::vector<Transformation> elements, std::optional<Provenance> provenance,
    const BuildOptions& options) {
  auto labels = labels_of(elements);
  auto table = table_by_composition(elements);
  const int degree = elements.front().degree();
  return make_semigroup_from_parts(ElementKind::transformation, degree,
                                   std::move(elements), {}, std::move(labels),
                                   std::move(table), std::move(provenance),
                                   options);
}

FiniteSemigroup FiniteSemigroup::from_elements(
    std::vector<PartialPerm> elements, std::optional<Provenance> provenance,
    const BuildOptions& options) {
  auto labels = labels_of(elements);
  auto table = table_by_composition(elements);
  const int degree = elements.front().degree();
  return make_semigroup_from_parts(ElementKind::partial_perm, degree, {},
                                   std::move(elements), std::move(labels),
                                   std::move(table), std::move(provenance),
                                   options);
}

FiniteSemigroup full_transformation_monoid(int n, const BuildOptions& options) {
  if (n < 1 || n > 5) {
    throw GuardError("full_transformation_monoid: n must be in 1..5 (n^n guard)");
  }
  std::vector<Transformation> elements;
  elements.reserve(static_cast<std::size_t>(predicted_local_order(
      MonoidFamily::full_transformation, n)));
  std::vector<int> images(static_cast<std::size_t>(n), 1);
  while (true) {
    elements.emplace_back(images);
    int pos = n - 1;
    while (pos >= 0 && images[pos] == n) images[pos--] = 1;
    if (pos < 0) break;
    ++images[pos];
  }
  return FiniteSemigroup::from_elements(
      std::move(elements), Provenance{"tn" + std::to_string(n), "full", "", ""},
      options);
}

FiniteSemigroup symmetric_inverse_monoid(int n, const BuildOptions& options) {
  if (n < 0 || n > 5) {
    throw GuardError("symmetric_inverse_monoid: n must be in 0..5");
  }
  std::vector<PartialPerm> elements;
  std::vector<int> images(static_cast<std::size_t>(n), 0);
  // odometer over {0..n}^n, 0 = undefined; keep the injective sequences
  while (true) {
    bool injective = true;
    for (int i = 0; i < n && injective; ++i) {
      for (int j = i + 1; j < n && injective; ++j) {
        injective = images[i] == 0 || images[i] != images[j];
      }
    }
    if (injective) elements.emplace_back(images);
    int pos = n - 1;
    while (pos >= 0 && images[pos] == n) images[pos--] = 0;
    if (pos < 0) break;
    ++images[pos];
  }
  return FiniteSemigroup::from_elements(
      std::move(elements),
      Provenance{"isn" + std::to_string(n), "inverse-monoid", "", ""}, options);
}

FiniteSemigroup closure_from_generators(const std::vector<Transformation>& gens,
                                        const BuildOptions& options) {
  return FiniteSemigroup::from_elements(close_under_products(gens, options),
                                        Provenance{"", "closure", "", ""},
                                        options);
}

FiniteSemigroup closure_from_generators(const std::vector<PartialPerm>& gens,
                                        const BuildOptions& options) {
  return FiniteSemigroup::from_elements(close_under_products(gens, options),
                                        Provenance{"", "closure", "", ""},
                                        options);
}

namespace {

// Shared scaffolding for the sub-table constructions: given member indices
// of the parent (in discovery order) and a product rule on parent indices,
// builds the induced semigroup, inheriting kind and concrete elements.
FiniteSemigroup induced_on_subset(
    const FiniteSemigroup& S, const std::vector<std::size_t>& members,
    const std::vector<std::uint32_t>& sub_table, ElementKind kind,
    Provenance provenance, const BuildOptions& options) {
  std::vector<Transformation> trans;
  std::vector<PartialPerm> pperms;
  std::vector<std::string> labels;
  labels.reserve(members.size());
  for (std::size_t m : members) labels.push_back(S.label(m));
  if (kind == ElementKind::transformation) {
    for (std::size_t m : members) trans.push_back(S.transformation(m));
  } else if (kind == ElementKind::partial_perm) {
    for (std::size_t m : members) pperms.push_back(S.partial_perm(m));
  }
  return make_semigroup_from_parts(kind, kind == ElementKind::abstract_table
                                             ? 0
                                             : S.degree(),
                                   std::move(trans), std::move(pperms),
                                   std::move(labels), sub_table,
                                   std::move(provenance), options);
}

std::string parent_name(const FiniteSemigroup& S) {
  if (S.provenance() && !S.provenance()->parent.empty()) {
    return S.provenance()->parent;
  }
  return "semigroup";
}

}  // namespace

FiniteSemigroup local_subsemigroup(const FiniteSemigroup& S, std::size_t a,
                                   const BuildOptions& options) {
  const std::size_t k = S.size();
  if (a >= k) throw std::invalid_argument("local_subsemigroup: index out of range");
  std::vector<std::size_t> members;
  std::vector<std::size_t> position(k, SIZE_MAX);
  for (std::size_t x = 0; x < k; ++x) {
    const std::size_t axa = S.product(S.product(a, x), a);
    if (position[axa] == SIZE_MAX) {
      position[axa] = members.size();
      members.push_back(axa);
    }
  }
  const std::size_t m = members.size();
  std::vector<std::uint32_t> table(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const std::size_t p = S.product(members[i], members[j]);
      if (position[p] == SIZE_MAX) {
        throw std::logic_error("local subsemigroup is not closed");
      }
      table[i * m + j] = static_cast<std::uint32_t>(position[p]);
    }
  }
  return induced_on_subset(
      S, members, table, S.kind(),
      Provenance{parent_name(S), "local", S.label(a), ""}, options);
}

FiniteSemigroup variant(const FiniteSemigroup& S, std::size_t a,
                        const BuildOptions& options) {
  const std::size_t k = S.size();
  if (a >= k) throw std::invalid_argument("variant: index out of range");
  std::vector<std::uint32_t> table(k * k);
  for (std::size_t x = 0; x < k; ++x) {
    const std::size_t xa = S.product(x, a);
    for (std::size_t y = 0; y < k; ++y) {
      table[x * k + y] = static_cast<std::uint32_t>(S.product(xa, y));
    }
  }
  // the sandwich product is not composition, so the result is an abstract
  // table even when the parent has concrete map elements
  return FiniteSemigroup::from_table(
      S.labels(), std::move(table),
      Provenance{parent_name(S), "variant", S.label(a), ""}, options);
}

FiniteSemigroup sandwich_subsemigroup(const FiniteSemigroup& S, std::size_t left,
                                      std::size_t right, std::size_t pivot,
                                      const BuildOptions& options) {
  const std::size_t k = S.size();
  if (left >= k || right >= k || pivot >= k) {
    throw std::invalid_argument("sandwich_subsemigroup: index out of range");
  }
  std::vector<std::size_t> members;
  std::vector<std::size_t> position(k, SIZE_MAX);
  for (std::size_t x = 0; x < k; ++x) {
    const std::size_t axb = S.product(S.product(left, x), right);
    if (position[axb] == SIZE_MAX) {
      position[axb] = members.size();
      members.push_back(axb);
    }
  }
  const std::size_t m = members.size();
  std::vector<std::uint32_t> table(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t ip = S.product(members[i], pivot);
    for (std::size_t j = 0; j < m; ++j) {
      const std::size_t p = S.product(ip, members[j]);
      if (position[p] == SIZE_MAX) {
        throw std::logic_error("sandwich set is not closed under the product");
      }
      table[i * m + j] = static_cast<std::uint32_t>(position[p]);
    }
  }
  std::vector<std::string> labels;
  for (std::size_t mem : members) labels.push_back(S.label(mem));
  return FiniteSemigroup::from_table(
      std::move(labels), std::move(table),
      Provenance{parent_name(S), "variant", S.label(pivot), ""}, options);
}

std::uint64_t predicted_local_order(MonoidFamily family, int m) {
  if (m < 0) throw std::invalid_argument("predicted_local_order: negative rank");
  switch (family) {
    case MonoidFamily::full_transformation: {
      if (m == 0) {
        throw std::invalid_argument(
            "predicted_local_order: T-family needs m >= 1");
      }
      std::uint64_t result = 1;
      for (int i = 0; i < m; ++i) result *= static_cast<std::uint64_t>(m);
      return result;
    }
    case MonoidFamily::symmetric_inverse: {
      std::uint64_t total = 0;
      for (int k = 0; k <= m; ++k) {
        const std::uint64_t c = binomial(m, k);
        total += c * c * factorial(k);
      }
      return total;
    }
  }
  throw std::invalid_argument("predicted_local_order: unknown family");
}

FiniteSemigroup restrict_to_subset(const FiniteSemigroup& S,
                                   const std::vector<int>& points,
                                   const BuildOptions& options) {
  if (S.kind() != ElementKind::partial_perm) {
    throw std::invalid_argument(
        "restrict_to_subset: needs a partial-permutation semigroup");
  }
  std::vector<bool> in_subset(static_cast<std::size_t>(S.degree()) + 1, false);
  for (int p : points) {
    if (p < 1 || p > S.degree()) {
      throw std::invalid_argument("restrict_to_subset: point out of range");
    }
    in_subset[static_cast<std::size_t>(p)] = true;
  }
  std::vector<std::size_t> members;
  std::vector<std::size_t> position(S.size(), SIZE_MAX);
  for (std::size_t i = 0; i < S.size(); ++i) {
    const PartialPerm& p = S.partial_perm(i);
    bool inside = true;
    for (int x = 1; x <= p.degree() && inside; ++x) {
      if (p.defined(x)) {
        inside = in_subset[static_cast<std::size_t>(x)] &&
                 in_subset[static_cast<std::size_t>(p[x])];
      }
    }
    if (inside) {
      position[i] = members.size();
      members.push_back(i);
    }
  }
  const std::size_t m = members.size();
  std::vector<std::uint32_t> table(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const std::size_t p = S.product(members[i], members[j]);
      table[i * m + j] = static_cast<std::uint32_t>(position[p]);
    }
  }
  return induced_on_subset(
      S, members, table, ElementKind::partial_perm,
      Provenance{parent_name(S), "closure", "", ""}, options);
}

FiniteSemigroup permuted_copy(const FiniteSemigroup& S,
                              const std::vector<std::size_t>& sigma,
                              const BuildOptions& options) {
  const std::size_t k = S.size();
  if (sigma.size() != k) {
    throw std::invalid_argument("permuted_copy: permutation length mismatch");
  }
  std::vector<std::size_t> inverse(k, SIZE_MAX);
  for (std::size_t i = 0; i < k; ++i) {
    if (sigma[i] >= k || inverse[sigma[i]] != SIZE_MAX) {
      throw std::invalid_argument("permuted_copy: not a permutation");
    }
    inverse[sigma[i]] = i;
  }
  std::vector<std::uint32_t> table(k * k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      table[i * k + j] =
          static_cast<std::uint32_t>(inverse[S.product(sigma[i], sigma[j])]);
    }
  }
  std::vector<std::size_t> members = sigma;
  return induced_on_subset(S, members, table, S.kind(),
                           Provenance{parent_name(S), "closure", "", ""},
                           options);
}

std::vector<std::size_t> seeded_permutation(std::size_t k, std::uint64_t seed) {
  std::vector<std::size_t> sigma(k);
  for (std::size_t i = 0; i < k; ++i) sigma[i] = i;
  std::mt19937_64 rng(seed);
  for (std::size_t i = k; i > 1; --i) {
    std::swap(sigma[i - 1], sigma[rng() % i]);
  }
  return sigma;
}

}  // namespace semilab
