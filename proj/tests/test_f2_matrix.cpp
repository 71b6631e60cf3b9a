#include "doctest.h"

#include <set>
#include <string>

#include "f2hopf/f2_matrix.hpp"
#include "support.hpp"

using namespace f2hopf;

TEST_CASE("bit vectors") {
  BitVec v(130);
  CHECK_FALSE(v.any());
  CHECK(v.first_set() == 130);
  v.set(3);
  v.set(129);
  CHECK(v.count() == 2);
  CHECK(v.set_bits() == std::vector<std::size_t>{3, 129});
  v.flip(3);
  CHECK(v.first_set() == 129);
  BitVec w(130);
  w.set(129);
  v ^= w;
  CHECK_FALSE(v.any());
}

TEST_CASE("rank and composition") {
  CHECK(BitMatrix::identity(5).rank() == 5);
  BitMatrix m(3, 3);
  m.set(0, 0);
  m.set(0, 1);
  m.set(1, 1);
  m.set(2, 0);  // row 2 = row 0 + row 1
  CHECK(m.rank() == 2);
  m.set(2, 2);
  CHECK(m.rank() == 3);
  CHECK(m.then(BitMatrix::identity(3)) == m);
  CHECK(BitMatrix::identity(3).then(m) == m);
  CHECK(BitMatrix(2, 4).is_zero());
  CHECK(m.to_string() == "110\n010\n101\n");
}

TEST_CASE("apply is row vector times matrix") {
  BitMatrix m(2, 3);
  m.set(0, 0);
  m.set(1, 1);
  m.set(1, 2);
  BitVec v(2);
  v.set(0);
  v.set(1);
  CHECK(m.apply(v).set_bits() == std::vector<std::size_t>{0, 1, 2});
}

TEST_CASE("general linear groups") {
  CHECK(general_linear_order(1) == 1);
  CHECK(general_linear_order(2) == 6);
  CHECK(general_linear_order(3) == 168);
  CHECK(general_linear_order(4) == 20160);
  CHECK(general_linear_order(40) == UINT64_MAX);
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto all = general_linear_group(n);
    CHECK(all.size() == general_linear_order(n));
    CHECK(all.front() == BitMatrix::identity(n));
    std::set<std::string> distinct;
    for (const auto& m : all) {
      CHECK(m.rank() == n);
      distinct.insert(m.to_string());
    }
    CHECK(distinct.size() == all.size());
  }
}

TEST_CASE("span solver on random systems") {
  testing::Rng rng(7);
  for (int c = 0; c < testing::kCases; ++c) {
    const auto n = rng.uniform(1, 8);
    std::vector<std::vector<int>> gens;
    for (std::int64_t i = 0; i < n; ++i) {
      std::set<int> keys;
      for (int k = 0; k < 12; ++k) {
        if (rng.coin()) keys.insert(k);
      }
      gens.emplace_back(keys.begin(), keys.end());
    }
    SpanSolver<int> solver(gens);
    // A random combination of the generators is always in the span.
    std::set<int> target;
    std::vector<bool> chosen;
    for (std::int64_t i = 0; i < n; ++i) {
      chosen.push_back(rng.coin());
      if (!chosen.back()) continue;
      for (int k : gens[static_cast<std::size_t>(i)]) {
        if (!target.insert(k).second) target.erase(k);
      }
    }
    const auto coords = solver.coordinates({target.begin(), target.end()});
    REQUIRE(coords.has_value());
    std::set<int> rebuilt;
    for (auto i : coords->set_bits()) {
      for (int k : gens[i]) {
        if (!rebuilt.insert(k).second) rebuilt.erase(k);
      }
    }
    CHECK(rebuilt == target);
    if (solver.independent()) {
      for (std::int64_t i = 0; i < n; ++i) CHECK(coords->get(static_cast<std::size_t>(i)) == chosen[static_cast<std::size_t>(i)]);
    }
    CHECK_FALSE(solver.coordinates({99}).has_value());
  }
}
