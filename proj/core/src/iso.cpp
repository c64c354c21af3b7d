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

#include "semilab/iso.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <numeric>
#include <stdexcept>

namespace semilab {

namespace {

// Per-element invariant used to prune candidate images: monogenic shape,
// idempotency, and the position profile inside the egg-box.
struct ElementKey {
  std::size_t index = 0;
  std::size_t period = 0;
  bool idempotent = false;
  std::size_t h_size = 0;
  std::size_t l_size = 0;
  std::size_t r_size = 0;
  std::size_t d_size = 0;
  std::size_t d_rows = 0;
  std::size_t d_cols = 0;
  std::size_t d_idempotents = 0;

  friend auto operator<=>(const ElementKey&, const ElementKey&) = default;
  friend bool operator==(const ElementKey&, const ElementKey&) = default;
};

std::vector<ElementKey> element_keys(const FiniteSemigroup& S,
                                     const GreenStructure& green) {
  const std::size_t k = S.size();

  std::vector<std::size_t> d_rows(green.d_classes.size(), 0);
  std::vector<std::size_t> d_cols(green.d_classes.size(), 0);
  std::vector<std::size_t> d_idem(green.d_classes.size(), 0);
  {
    std::vector<std::vector<bool>> seen_r(green.d_classes.size());
    std::vector<std::vector<bool>> seen_l(green.d_classes.size());
    for (std::size_t d = 0; d < green.d_classes.size(); ++d) {
      seen_r[d].assign(green.r_classes.size(), false);
      seen_l[d].assign(green.l_classes.size(), false);
    }
    for (std::size_t x = 0; x < k; ++x) {
      const std::size_t d = green.d_class_of[x];
      if (!seen_r[d][green.r_class_of[x]]) {
        seen_r[d][green.r_class_of[x]] = true;
        ++d_rows[d];
      }
      if (!seen_l[d][green.l_class_of[x]]) {
        seen_l[d][green.l_class_of[x]] = true;
        ++d_cols[d];
      }
      if (green.idempotent[x]) ++d_idem[d];
    }
  }

  std::vector<ElementKey> keys(k);
  for (std::size_t x = 0; x < k; ++x) {
    ElementKey key;
    std::tie(key.index, key.period) = element_index_period(S, x);
    key.idempotent = green.idempotent[x];
    key.h_size = green.h_classes[green.h_class_of[x]].size();
    key.l_size = green.l_classes[green.l_class_of[x]].size();
    key.r_size = green.r_classes[green.r_class_of[x]].size();
    const std::size_t d = green.d_class_of[x];
    key.d_size = green.d_classes[d].size();
    key.d_rows = d_rows[d];
    key.d_cols = d_cols[d];
    key.d_idempotents = d_idem[d];
    keys[x] = key;
  }
  return keys;
}

// Depth-first assignment of generator images with forward propagation of
// all products through both tables. The trail records determined S-indices
// for backtracking.
class SearchState {
 public:
  SearchState(const FiniteSemigroup& S, const FiniteSemigroup& T)
      : S_(S), T_(T), img_(S.size(), SIZE_MAX), pre_(T.size(), SIZE_MAX) {}

  bool assign_and_propagate(std::size_t s, std::size_t t) {
    const std::size_t before = trail_.size();
    if (!set_image(s, t)) return false;
    std::size_t cursor = before;
    while (cursor < trail_.size()) {
      const std::size_t x = trail_[cursor++];
      // products of x with every already-determined element, both ways
      for (std::size_t i = 0; i < trail_.size(); ++i) {
        const std::size_t y = trail_[i];
        if (!set_image(S_.product(x, y), T_.product(img_[x], img_[y])) ||
            !set_image(S_.product(y, x), T_.product(img_[y], img_[x]))) {
          rollback(before);
          return false;
        }
      }
    }
    checkpoints_.push_back(before);
    return true;
  }

  void undo_last() {
    rollback(checkpoints_.back());
    checkpoints_.pop_back();
  }

  bool complete() const { return trail_.size() == S_.size(); }

  const std::vector<std::size_t>& images() const { return img_; }

 private:
  bool set_image(std::size_t s, std::size_t t) {
    if (img_[s] != SIZE_MAX) return img_[s] == t;
    if (pre_[t] != SIZE_MAX) return false;  // injectivity
    img_[s] = t;
    pre_[t] = s;
    trail_.push_back(s);
    return true;
  }

  void rollback(std::size_t mark) {
    while (trail_.size() > mark) {
      const std::size_t s = trail_.back();
      trail_.pop_back();
      pre_[img_[s]] = SIZE_MAX;
      img_[s] = SIZE_MAX;
    }
  }

  const FiniteSemigroup& S_;
  const FiniteSemigroup& T_;
  std::vector<std::size_t> img_, pre_;
  std::vector<std::size_t> trail_;
  std::vector<std::size_t> checkpoints_;
};

std::vector<std::size_t> closure_of(const FiniteSemigroup& S,
                                    std::vector<std::size_t> seed) {
  std::vector<bool> in(S.size(), false);
  for (std::size_t x : seed) {
    if (!in[x]) in[x] = true;
  }
  std::vector<std::size_t> members;
  for (std::size_t x = 0; x < S.size(); ++x) {
    if (in[x]) members.push_back(x);
  }
  for (std::size_t next = 0; next < members.size(); ++next) {
    const std::size_t x = members[next];
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t p : {S.product(x, members[i]), S.product(members[i], x)}) {
        if (!in[p]) {
          in[p] = true;
          members.push_back(p);
        }
      }
    }
  }
  return members;
}

}  // namespace

std::pair<std::size_t, std::size_t> element_index_period(
    const FiniteSemigroup& S, std::size_t x) {
  std::map<std::size_t, std::size_t> seen;  // power value -> exponent
  std::size_t current = x;
  std::size_t exponent = 1;
  while (true) {
    auto [it, inserted] = seen.emplace(current, exponent);
    if (!inserted) return {it->second, exponent - it->second};
    current = S.product(current, x);
    ++exponent;
  }
}

Fingerprint fingerprint(const FiniteSemigroup& S) {
  GreenStructure green = green_classes(S);
  Fingerprint fp;
  fp.order = S.size();
  for (bool flag : green.idempotent) {
    if (flag) ++fp.idempotent_count;
  }
  fp.element_orders.reserve(S.size());
  for (std::size_t x = 0; x < S.size(); ++x) {
    fp.element_orders.push_back(element_index_period(S, x));
  }
  std::sort(fp.element_orders.begin(), fp.element_orders.end());
  for (const auto& cls : green.d_classes) fp.d_class_sizes.push_back(cls.size());
  std::sort(fp.d_class_sizes.begin(), fp.d_class_sizes.end());
  fp.eggbox = eggbox_profile(S, green);
  fp.l_class_count = green.l_classes.size();
  fp.r_class_count = green.r_classes.size();
  return fp;
}

std::optional<std::string> fingerprint_mismatch(const Fingerprint& a,
                                                const Fingerprint& b) {
  if (a.order != b.order) return "order";
  if (a.idempotent_count != b.idempotent_count) return "idempotent_count";
  if (a.element_orders != b.element_orders) return "element_orders";
  if (a.d_class_sizes != b.d_class_sizes) return "d_class_sizes";
  if (a.eggbox != b.eggbox) return "eggbox_profile";
  if (a.l_class_count != b.l_class_count) return "l_class_count";
  if (a.r_class_count != b.r_class_count) return "r_class_count";
  return std::nullopt;
}

std::vector<std::size_t> greedy_generating_set(const FiniteSemigroup& S) {
  const std::size_t k = S.size();
  std::vector<std::size_t> gens;
  std::vector<bool> generated(k, false);
  std::size_t generated_count = 0;
  std::vector<std::size_t> current;  // closure of gens
  while (generated_count < k) {
    std::size_t best = SIZE_MAX;
    std::size_t best_size = 0;
    for (std::size_t x = 0; x < k; ++x) {
      if (generated[x]) continue;
      std::vector<std::size_t> seed = current;
      seed.push_back(x);
      const std::size_t size = closure_of(S, std::move(seed)).size();
      if (size > best_size) {
        best_size = size;
        best = x;
      }
    }
    gens.push_back(best);
    current = closure_of(S, gens);
    generated_count = current.size();
    generated.assign(k, false);
    for (std::size_t x : current) generated[x] = true;
  }
  return gens;
}

bool verify_morphism(const FiniteSemigroup& S, const FiniteSemigroup& T,
                     const std::vector<std::size_t>& map) {
  const std::size_t k = S.size();
  if (map.size() != k || T.size() != k) return false;
  std::vector<bool> hit(k, false);
  for (std::size_t t : map) {
    if (t >= k || hit[t]) return false;
    hit[t] = true;
  }
  for (std::size_t x = 0; x < k; ++x) {
    for (std::size_t y = 0; y < k; ++y) {
      if (map[S.product(x, y)] != T.product(map[x], map[y])) return false;
    }
  }
  return true;
}

IsoResult find_isomorphism(const FiniteSemigroup& S, const FiniteSemigroup& T,
                           std::uint64_t budget) {
  const auto start = std::chrono::steady_clock::now();
  IsoResult result;
  auto finish = [&](IsoResult r) {
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                              start)
                    .count();
    return r;
  };

  if (S.size() != T.size()) {
    result.verdict = IsoVerdict::not_isomorphic;
    result.refutation = "order";
    return finish(std::move(result));
  }
  if (auto mismatch = fingerprint_mismatch(fingerprint(S), fingerprint(T))) {
    result.verdict = IsoVerdict::not_isomorphic;
    result.refutation = *mismatch;
    return finish(std::move(result));
  }
  if (S.size() == 1) {
    result.verdict = IsoVerdict::isomorphic;
    result.witness = std::vector<std::size_t>{0};
    return finish(std::move(result));
  }

  const GreenStructure green_s = green_classes(S);
  const GreenStructure green_t = green_classes(T);
  const std::vector<ElementKey> keys_s = element_keys(S, green_s);
  const std::vector<ElementKey> keys_t = element_keys(T, green_t);

  const std::vector<std::size_t> gens = greedy_generating_set(S);
  std::vector<std::vector<std::size_t>> candidates(gens.size());
  for (std::size_t g = 0; g < gens.size(); ++g) {
    for (std::size_t t = 0; t < T.size(); ++t) {
      if (keys_t[t] == keys_s[gens[g]]) candidates[g].push_back(t);
    }
    if (candidates[g].empty()) {
      // no target shares this generator's per-element invariants, which any
      // isomorphism would have to preserve
      result.verdict = IsoVerdict::not_isomorphic;
      result.refutation = "element-invariants";
      return finish(std::move(result));
    }
  }

  SearchState state(S, T);
  std::vector<std::size_t> choice(gens.size(), 0);
  std::size_t depth = 0;
  bool exhausted = false;
  while (!exhausted) {
    if (result.nodes >= budget) {
      result.verdict = IsoVerdict::inconclusive;
      return finish(std::move(result));
    }
    if (choice[depth] >= candidates[depth].size()) {
      // backtrack
      if (depth == 0) {
        exhausted = true;
        break;
      }
      choice[depth] = 0;
      --depth;
      state.undo_last();
      ++choice[depth];
      continue;
    }
    ++result.nodes;
    if (state.assign_and_propagate(gens[depth], candidates[depth][choice[depth]])) {
      if (depth + 1 == gens.size()) {
        if (state.complete() && verify_morphism(S, T, state.images())) {
          result.verdict = IsoVerdict::isomorphic;
          result.witness = state.images();
          return finish(std::move(result));
        }
        state.undo_last();
        ++choice[depth];
      } else {
        ++depth;
      }
    } else {
      ++choice[depth];
    }
  }

  result.verdict = IsoVerdict::not_isomorphic;
  result.refutation = "exhausted-search";
  return finish(std::move(result));
}

std::vector<std::size_t> inverse_map(const std::vector<std::size_t>& map) {
  std::vector<std::size_t> inv(map.size(), SIZE_MAX);
  for (std::size_t i = 0; i < map.size(); ++i) {
    if (map[i] >= map.size() || inv[map[i]] != SIZE_MAX) {
      throw std::invalid_argument("inverse_map: not a bijection");
    }
    inv[map[i]] = i;
  }
  return inv;
}

std::vector<std::size_t> compose_maps(const std::vector<std::size_t>& first,
                                      const std::vector<std::size_t>& second) {
  std::vector<std::size_t> out(first.size());
  for (std::size_t i = 0; i < first.size(); ++i) out[i] = second[first[i]];
  return out;
}

}  // namespace semilab
