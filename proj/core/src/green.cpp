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

#include "semilab/green.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace semilab {

namespace {

using Bitset = std::vector<std::uint64_t>;

Bitset make_bitset(std::size_t k) { return Bitset((k + 63) / 64, 0); }

void set_bit(Bitset& b, std::size_t i) { b[i / 64] |= std::uint64_t{1} << (i % 64); }

bool test_bit(const Bitset& b, std::size_t i) {
  return (b[i / 64] >> (i % 64)) & 1;
}

// Groups elements by a per-element key, assigning class ids in order of each
// class's smallest element.
std::pair<std::vector<std::size_t>, std::vector<std::vector<std::size_t>>>
partition_by_key(const std::vector<Bitset>& keys) {
  const std::size_t k = keys.size();
  std::map<Bitset, std::size_t> first_seen;
  std::vector<std::size_t> class_of(k);
  std::vector<std::vector<std::size_t>> classes;
  for (std::size_t i = 0; i < k; ++i) {
    auto [it, inserted] = first_seen.emplace(keys[i], classes.size());
    if (inserted) classes.emplace_back();
    class_of[i] = it->second;
    classes[it->second].push_back(i);
  }
  return {std::move(class_of), std::move(classes)};
}

// Two-sided principal ideal S^1 x S^1 by saturation over the table.
Bitset two_sided_ideal(const FiniteSemigroup& S, std::size_t x) {
  const std::size_t k = S.size();
  Bitset seen = make_bitset(k);
  std::vector<std::size_t> queue{x};
  set_bit(seen, x);
  while (!queue.empty()) {
    const std::size_t y = queue.back();
    queue.pop_back();
    for (std::size_t s = 0; s < k; ++s) {
      for (std::size_t p : {S.product(s, y), S.product(y, s)}) {
        if (!test_bit(seen, p)) {
          set_bit(seen, p);
          queue.push_back(p);
        }
      }
    }
  }
  return seen;
}

struct UnionFind {
  explicit UnionFind(std::size_t k) : parent(k) {
    std::iota(parent.begin(), parent.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
  std::vector<std::size_t> parent;
};

}  // namespace

GreenStructure green_classes(const FiniteSemigroup& S) {
  const std::size_t k = S.size();
  GreenStructure g;

  // principal left/right ideals as bitsets
  std::vector<Bitset> left_keys(k), right_keys(k);
  for (std::size_t x = 0; x < k; ++x) {
    Bitset lk = make_bitset(k), rk = make_bitset(k);
    set_bit(lk, x);
    set_bit(rk, x);
    for (std::size_t s = 0; s < k; ++s) {
      set_bit(lk, S.product(s, x));
      set_bit(rk, S.product(x, s));
    }
    left_keys[x] = std::move(lk);
    right_keys[x] = std::move(rk);
  }
  std::tie(g.l_class_of, g.l_classes) = partition_by_key(left_keys);
  std::tie(g.r_class_of, g.r_classes) = partition_by_key(right_keys);

  // H = L meet R
  {
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> first_seen;
    g.h_class_of.resize(k);
    for (std::size_t i = 0; i < k; ++i) {
      auto key = std::make_pair(g.l_class_of[i], g.r_class_of[i]);
      auto [it, inserted] = first_seen.emplace(key, g.h_classes.size());
      if (inserted) g.h_classes.emplace_back();
      g.h_class_of[i] = it->second;
      g.h_classes[it->second].push_back(i);
    }
  }

  // D = join of L and R, via union-find over both partitions
  {
    UnionFind uf(k);
    for (const auto& cls : g.l_classes) {
      for (std::size_t i = 1; i < cls.size(); ++i) uf.unite(cls[i], cls[0]);
    }
    for (const auto& cls : g.r_classes) {
      for (std::size_t i = 1; i < cls.size(); ++i) uf.unite(cls[i], cls[0]);
    }
    std::map<std::size_t, std::size_t> first_seen;
    g.d_class_of.resize(k);
    for (std::size_t i = 0; i < k; ++i) {
      auto [it, inserted] = first_seen.emplace(uf.find(i), g.d_classes.size());
      if (inserted) g.d_classes.emplace_back();
      g.d_class_of[i] = it->second;
      g.d_classes[it->second].push_back(i);
    }
  }

  g.idempotent.resize(k);
  for (std::size_t x = 0; x < k; ++x) g.idempotent[x] = S.product(x, x) == x;

  g.h_is_group.assign(g.h_classes.size(), false);
  for (std::size_t h = 0; h < g.h_classes.size(); ++h) {
    for (std::size_t x : g.h_classes[h]) {
      if (g.idempotent[x]) {
        g.h_is_group[h] = true;
        break;
      }
    }
  }

  // D = J in a finite semigroup; verify rather than assume. The two-sided
  // ideal is constant on L-classes, so one representative per L-class
  // suffices.
  {
    std::map<Bitset, std::size_t> ideal_group;
    std::vector<std::size_t> j_of_l(g.l_classes.size());
    std::size_t next = 0;
    for (std::size_t l = 0; l < g.l_classes.size(); ++l) {
      Bitset ideal = two_sided_ideal(S, g.l_classes[l].front());
      auto [it, inserted] = ideal_group.emplace(std::move(ideal), next);
      if (inserted) ++next;
      j_of_l[l] = it->second;
    }
    // the partitions agree iff d-class -> j-class is a well-defined bijection
    std::vector<std::size_t> j_of_d(g.d_classes.size(), SIZE_MAX);
    std::vector<bool> j_taken(next, false);
    g.d_equals_j = true;
    for (std::size_t x = 0; x < k && g.d_equals_j; ++x) {
      const std::size_t d = g.d_class_of[x];
      const std::size_t j = j_of_l[g.l_class_of[x]];
      if (j_of_d[d] == SIZE_MAX) {
        if (j_taken[j]) {
          g.d_equals_j = false;
        } else {
          j_of_d[d] = j;
          j_taken[j] = true;
        }
      } else {
        g.d_equals_j = j_of_d[d] == j;
      }
    }
    if (!g.d_equals_j) {
      throw std::logic_error("computed D differs from the two-sided-ideal J");
    }
  }

  return g;
}

EggBox eggbox(const FiniteSemigroup& S) { return eggbox(S, green_classes(S)); }

EggBox eggbox(const FiniteSemigroup& S, const GreenStructure& green) {
  (void)S;
  EggBox box;
  const std::size_t d_count = green.d_classes.size();
  std::vector<std::size_t> order(d_count);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (green.d_classes[a].size() != green.d_classes[b].size()) {
      return green.d_classes[a].size() > green.d_classes[b].size();
    }
    return green.d_classes[a].front() < green.d_classes[b].front();
  });

  for (std::size_t d : order) {
    const auto& members = green.d_classes[d];
    // rows/cols by smallest element of each R-/L-class within the D-class
    std::map<std::size_t, std::size_t> r_min, l_min;
    for (std::size_t x : members) {
      auto [rit, rnew] = r_min.emplace(green.r_class_of[x], x);
      if (!rnew) rit->second = std::min(rit->second, x);
      auto [lit, lnew] = l_min.emplace(green.l_class_of[x], x);
      if (!lnew) lit->second = std::min(lit->second, x);
    }
    auto by_min = [](const std::map<std::size_t, std::size_t>& mins) {
      std::vector<std::pair<std::size_t, std::size_t>> items(mins.begin(),
                                                             mins.end());
      std::sort(items.begin(), items.end(),
                [](const auto& a, const auto& b) { return a.second < b.second; });
      std::vector<std::size_t> ids;
      ids.reserve(items.size());
      for (const auto& [id, min_elem] : items) ids.push_back(id);
      return ids;
    };

    EggBoxDClass grid;
    grid.row_r_class = by_min(r_min);
    grid.col_l_class = by_min(l_min);
    grid.element_count = members.size();
    grid.cells.assign(grid.row_r_class.size(),
                      std::vector<std::vector<std::size_t>>(
                          grid.col_l_class.size()));
    std::map<std::size_t, std::size_t> row_of, col_of;
    for (std::size_t r = 0; r < grid.row_r_class.size(); ++r) {
      row_of[grid.row_r_class[r]] = r;
    }
    for (std::size_t c = 0; c < grid.col_l_class.size(); ++c) {
      col_of[grid.col_l_class[c]] = c;
    }
    for (std::size_t x : members) {
      grid.cells[row_of[green.r_class_of[x]]][col_of[green.l_class_of[x]]]
          .push_back(x);
    }
    std::size_t cell_size = 0;
    for (auto& row : grid.cells) {
      for (auto& cell : row) {
        if (cell.empty()) {
          throw std::logic_error("egg-box cell is empty");
        }
        std::sort(cell.begin(), cell.end());
        if (cell_size == 0) cell_size = cell.size();
        if (cell.size() != cell_size) {
          throw std::logic_error("egg-box cells of one D-class differ in size");
        }
      }
    }
    box.d_classes.push_back(std::move(grid));
  }
  return box;
}

std::vector<DClassProfile> eggbox_profile(const FiniteSemigroup& S) {
  return eggbox_profile(S, green_classes(S));
}

std::vector<DClassProfile> eggbox_profile(const FiniteSemigroup& S,
                                          const GreenStructure& green) {
  EggBox box = eggbox(S, green);
  std::vector<DClassProfile> profile;
  profile.reserve(box.d_classes.size());
  for (const auto& grid : box.d_classes) {
    DClassProfile p;
    p.rows = grid.cells.size();
    p.cols = grid.cells.empty() ? 0 : grid.cells.front().size();
    p.cell_size = grid.cells.front().front().size();
    for (const auto& row : grid.cells) {
      for (const auto& cell : row) {
        for (std::size_t x : cell) {
          if (S.product(x, x) == x) ++p.idempotents;
        }
      }
    }
    profile.push_back(p);
  }
  std::sort(profile.begin(), profile.end());
  return profile;
}

bool is_regular(const FiniteSemigroup& S) {
  const std::size_t k = S.size();
  for (std::size_t x = 0; x < k; ++x) {
    bool regular = false;
    for (std::size_t y = 0; y < k && !regular; ++y) {
      regular = S.product(S.product(x, y), x) == x &&
                S.product(S.product(y, x), y) == y;
    }
    if (!regular) return false;
  }
  return true;
}

std::vector<std::size_t> idempotents(const FiniteSemigroup& S) {
  std::vector<std::size_t> result;
  for (std::size_t x = 0; x < S.size(); ++x) {
    if (S.product(x, x) == x) result.push_back(x);
  }
  return result;
}

}  // namespace semilab
