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

#include <doctest.h>

#include <algorithm>
#include <vector>

#include "semilab/element.hpp"

using namespace semilab;

namespace {

// every transformation of degree n, for the exhaustive small-degree sweeps
std::vector<Transformation> all_transformations(int n) {
  std::vector<Transformation> out;
  std::vector<int> images(static_cast<std::size_t>(n), 1);
  while (true) {
    out.emplace_back(images);
    int pos = n - 1;
    while (pos >= 0 && images[pos] == n) images[pos--] = 1;
    if (pos < 0) break;
    ++images[pos];
  }
  return out;
}

std::vector<PartialPerm> all_partial_perms(int n) {
  std::vector<PartialPerm> out;
  std::vector<int> images(static_cast<std::size_t>(n), 0);
  while (true) {
    bool injective = true;
    for (int i = 0; i < n && injective; ++i) {
      for (int j = i + 1; j < n && injective; ++j) {
        injective = images[i] == 0 || images[i] != images[j];
      }
    }
    if (injective) out.emplace_back(images);
    int pos = n - 1;
    while (pos >= 0 && images[pos] == n) images[pos--] = 0;
    if (pos < 0) break;
    ++images[pos];
  }
  return out;
}

}  // namespace

TEST_CASE("one-line parsing") {
  const Transformation a = parse_transformation("2432", 4);
  CHECK(a[1] == 2);
  CHECK(a[2] == 4);
  CHECK(a[3] == 3);
  CHECK(a[4] == 2);

  CHECK(parse_transformation("123", 3) == Transformation::identity(3));

  const PartialPerm p = parse_partial_perm("-1-", 3);
  CHECK(domain(p) == std::vector<int>{2});
  CHECK(p[2] == 1);

  // comma-separated form round-trips through the same parser
  CHECK(parse_transformation("2,4,3,2", 4) == a);
  CHECK(one_line(a) == "2432");
  CHECK(one_line(p) == "-1-");

  CHECK_THROWS_AS(parse_transformation("243", 4), std::invalid_argument);
  CHECK_THROWS_AS(parse_transformation("2435", 4), std::invalid_argument);
  CHECK_THROWS_AS(parse_transformation("24-2", 4), std::invalid_argument);
  CHECK_THROWS_AS(parse_partial_perm("11-", 3), std::invalid_argument);
  CHECK_THROWS_AS(parse_partial_perm("x1-", 3), std::invalid_argument);
}

TEST_CASE("composition is left to right") {
  const Transformation a = parse_transformation("2432", 4);
  const Transformation b = parse_transformation("2343", 4);
  CHECK(one_line(compose(a, b)) == "3343");

  for (const Transformation& f : all_transformations(3)) {
    CHECK(compose(Transformation::identity(3), f) == f);
    CHECK(compose(f, Transformation::identity(3)) == f);
  }

  const PartialPerm p = parse_partial_perm("-12", 3);  // 2->1, 3->2
  const PartialPerm q = parse_partial_perm("23-", 3);  // 1->2, 2->3
  CHECK(compose(p, q) == PartialPerm::partial_identity(3, {2, 3}));
  CHECK(q == invert(p));

  CHECK_THROWS_AS(compose(a, parse_transformation("123", 3)),
                  std::invalid_argument);
}

TEST_CASE("image, rank, domain, kernel") {
  const Transformation a = parse_transformation("2432", 4);
  CHECK(rank(a) == 3);
  CHECK(image(parse_transformation("1123", 4)) == std::vector<int>{1, 2, 3});
  CHECK(rank(PartialPerm::empty_map(4)) == 0);

  CHECK(kernel_partition(a) ==
        std::vector<std::vector<int>>{{1, 4}, {2}, {3}});
  CHECK(kernel_partition(Transformation::identity(3)) ==
        std::vector<std::vector<int>>{{1}, {2}, {3}});
  CHECK(kernel_partition(Transformation::constant(3, 2)) ==
        std::vector<std::vector<int>>{{1, 2, 3}});

  for (const Transformation& f : all_transformations(3)) {
    CHECK(kernel_partition(f).size() == static_cast<std::size_t>(rank(f)));
  }
}

TEST_CASE("powers") {
  const Transformation b = parse_transformation("2343", 4);
  CHECK(one_line(power(b, 2)) == "3434");
  CHECK(power(b, 1) == b);

  const PartialPerm p = parse_partial_perm("-12", 3);
  CHECK(one_line(power(p, 2)) == "--1");  // only 3 -> 1 survives

  CHECK_THROWS_AS(power(b, 0), std::invalid_argument);

  // binary powering agrees with the naive ladder
  Transformation naive = b;
  for (int k = 2; k <= 7; ++k) {
    naive = compose(naive, b);
    CHECK(power(b, k) == naive);
  }
}

TEST_CASE("stabiliser index and stable image") {
  CHECK(stabiliser_index(parse_transformation("2432", 4)) == 1);
  CHECK(stabiliser_index(parse_transformation("2343", 4)) == 2);
  CHECK(stabiliser_index(parse_transformation("1123", 4)) == 3);
  CHECK(stabiliser_index(parse_transformation("2341", 4)) == 1);

  for (const Transformation& f : all_transformations(3)) {
    const int s = stabiliser_index(f);
    CHECK(s >= 1);
    CHECK(s <= f.degree());
    CHECK(stable_image(f) == image(power(f, s)));
    // the image chain strictly shrinks until s, then stays put
    for (int i = 1; i < s; ++i) {
      const auto im_i = image(power(f, i));
      const auto im_next = image(power(f, i + 1));
      CHECK(im_i != im_next);
      CHECK(std::includes(im_i.begin(), im_i.end(), im_next.begin(),
                          im_next.end()));
    }
    CHECK(image(power(f, s)) == image(power(f, s + 1)));
  }
}

TEST_CASE("inversion of partial permutations") {
  const PartialPerm p = parse_partial_perm("-12", 3);
  CHECK(one_line(invert(p)) == "23-");
  const PartialPerm e = PartialPerm::partial_identity(4, {1, 3});
  CHECK(invert(e) == e);
  CHECK(invert(PartialPerm::empty_map(3)) == PartialPerm::empty_map(3));

  for (const PartialPerm& q : all_partial_perms(3)) {
    CHECK(invert(invert(q)) == q);
    CHECK(rank(invert(q)) == rank(q));
    CHECK(compose(q, invert(q)) ==
          PartialPerm::partial_identity(3, domain(q)));
    CHECK(compose(invert(q), q) == PartialPerm::partial_identity(3, image(q)));
  }
}

TEST_CASE("idempotents") {
  CHECK(is_idempotent(PartialPerm::partial_identity(3, {1, 3})));
  CHECK_FALSE(is_idempotent(parse_transformation("2432", 4)));
  CHECK(one_line(power(parse_transformation("2432", 4), 2)) == "4234");
  CHECK(is_idempotent(Transformation::identity(4)));
}

TEST_CASE("associativity on exhaustive small sweeps") {
  const auto ts = all_transformations(3);
  for (const auto& f : ts) {
    for (const auto& g : ts) {
      const Transformation fg = compose(f, g);
      for (const auto& h : ts) {
        CHECK(compose(fg, h) == compose(f, compose(g, h)));
      }
    }
  }
  const auto ps = all_partial_perms(3);
  for (const auto& f : ps) {
    for (const auto& g : ps) {
      const PartialPerm fg = compose(f, g);
      for (const auto& h : ps) {
        CHECK(compose(fg, h) == compose(f, compose(g, h)));
      }
    }
  }
}

TEST_CASE("rank never grows under composition") {
  const auto ts = all_transformations(3);
  for (const auto& f : ts) {
    for (const auto& g : ts) {
      CHECK(rank(compose(f, g)) <= std::min(rank(f), rank(g)));
    }
  }
  const auto ps = all_partial_perms(2);
  for (const auto& f : ps) {
    for (const auto& g : ps) {
      CHECK(rank(compose(f, g)) <= std::min(rank(f), rank(g)));
    }
  }
}

TEST_CASE("element invariants reject bad input") {
  CHECK_THROWS_AS(Transformation({1, 5, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Transformation(std::vector<int>{}), std::invalid_argument);
  CHECK_THROWS_AS(PartialPerm({1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(PartialPerm({3, 0}), std::invalid_argument);
  CHECK_NOTHROW(PartialPerm(std::vector<int>{}));  // degree 0 empty map
}
