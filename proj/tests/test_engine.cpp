#include "davlab/engine.hpp"

#include <climits>
#include <random>
#include <set>
#include <vector>

#include "davlab/group.hpp"
#include "doctest.h"
#include "oracle.hpp"

using namespace davlab;

namespace {

std::set<int> mask_to_set(uint64_t mask, int order) {
  std::set<int> out;
  for (int e = 0; e < order; ++e)
    if ((mask >> e) & 1) out.insert(e);
  return out;
}

// run fn on every non-decreasing element list of length in [1, max_len]
template <typename F>
void for_each_multiset(int order, int max_len, F fn) {
  std::vector<int> elems;
  auto rec = [&](auto&& self, int lo) -> void {
    if (!elems.empty()) fn(elems);
    if (static_cast<int>(elems.size()) == max_len) return;
    for (int e = lo; e < order; ++e) {
      elems.push_back(e);
      self(self, e);
      elems.pop_back();
    }
  };
  rec(rec, 0);
}

}  // namespace

TEST_CASE("product_set matches permutation enumeration on D_6 and Q_8") {
  for (const char* spec : {"dihedral:3", "dicyclic:2"}) {
    Group g = Group::build(GroupSpec::parse(spec));
    for_each_multiset(g.order(), 4, [&](const std::vector<int>& elems) {
      SeqMultiset s;
      for (int e : elems) s.add(e);
      ProductSet ps = product_set(g, s);
      REQUIRE(mask_to_set(ps.bits, g.order()) ==
              oracle::permutation_products(g, elems));
    });
  }
}

TEST_CASE("product_set of the empty multiset throws") {
  Group g = Group::build(GroupSpec::cyclic(4));
  CHECK_THROWS_AS(product_set(g, SeqMultiset()), EmptySequenceError);
}

TEST_CASE("min_product_one_length matches the brute oracle") {
  for (const char* spec : {"dihedral:3", "cyclic:5", "dicyclic:2"}) {
    Group g = Group::build(GroupSpec::parse(spec));
    for_each_multiset(g.order(), 4, [&](const std::vector<int>& elems) {
      SeqMultiset s;
      for (int e : elems) s.add(e);
      int want = oracle::min_po_length(g, s);
      auto got = min_product_one_length(g, s);
      if (want == INT_MAX) {
        REQUIRE(!got.has_value());
        REQUIRE(is_product_one_free(g, s));
      } else {
        REQUIRE(got.has_value());
        REQUIRE(*got == want);
        REQUIRE(!is_product_one_free(g, s));
      }
      REQUIRE(is_minimal_product_one(g, s) ==
              oracle::minimal_product_one(g, s));
    });
  }
}

TEST_CASE("trial_min_po agrees with a real push") {
  Group g = Group::build(GroupSpec::dihedral(4));
  std::mt19937 rng(7);
  for (int iter = 0; iter < 200; ++iter) {
    ProductEngine eng(g);
    int len = 1 + static_cast<int>(rng() % 5);
    for (int i = 0; i < len; ++i) eng.push(static_cast<int>(rng() % g.order()));
    for (int e = 0; e < g.order(); ++e) {
      int predicted = eng.trial_min_po(e);
      eng.push(e);
      REQUIRE(eng.min_po_length() == predicted);
      eng.pop();
    }
  }
}

TEST_CASE("push/pop restores engine state exactly") {
  Group g = Group::build(GroupSpec::dicyclic(2));
  ProductEngine eng(g);
  eng.push(1);
  eng.push(4);
  uint64_t full = eng.full_mask();
  uint64_t reach = eng.reach_mask();
  std::vector<int> mins;
  for (int v = 0; v < g.order(); ++v) mins.push_back(eng.min_size_reaching(v));
  eng.push(3);
  eng.push(3);
  eng.pop();
  eng.pop();
  CHECK(eng.depth() == 2);
  CHECK(eng.full_mask() == full);
  CHECK(eng.reach_mask() == reach);
  for (int v = 0; v < g.order(); ++v)
    CHECK(eng.min_size_reaching(v) == mins[v]);
  eng.pop();
  eng.pop();
  CHECK(eng.depth() == 0);
  CHECK(eng.full_mask() == 1);  // identity only
  CHECK(eng.current_free());
}

TEST_CASE("reach mask is the union of all subset product sets") {
  Group g = Group::build(GroupSpec::dihedral(3));
  ProductEngine eng(g);
  for (int e : {1, 4, 4, 2}) eng.push(e);
  uint64_t want = 0;
  for (const auto& sp : eng.all_subset_products()) want |= sp.mask;
  CHECK(eng.reach_mask() == want);
}

TEST_CASE("po_sub_multisets lists exactly the product-one subsets") {
  Group g = Group::build(GroupSpec::dihedral(3));
  SeqMultiset s = SeqMultiset::of({1, 2, 3, 3});
  auto all = product_one_sub_multisets(g, s, false);
  auto minimal = product_one_sub_multisets(g, s, true);
  for (const auto& t : all) {
    CHECK(t.is_sub_multiset_of(s));
    CHECK(oracle::permutation_products(g, t.expand()).count(0) == 1);
  }
  for (const auto& t : minimal) CHECK(oracle::minimal_product_one(g, t));
  // every minimal one appears in the full list
  for (const auto& t : minimal)
    CHECK(std::find(all.begin(), all.end(), t) != all.end());
  CHECK(!minimal.empty());  // {y, y} multiplies to 1, for a start
}

TEST_CASE("engine enforces its slot and count limits") {
  Group g = Group::build(GroupSpec::cyclic(20));
  ProductEngine eng(g);
  for (int i = 0; i < ProductEngine::kMaxCount; ++i) eng.push(1);
  CHECK(!eng.can_push(1));
  CHECK_THROWS_AS(eng.push(1), EngineLimitError);
  CHECK(eng.can_push(2));
}
