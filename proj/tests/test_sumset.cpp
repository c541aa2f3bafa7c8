#include "davlab/sumset.hpp"

#include <algorithm>
#include <set>

#include "doctest.h"

using namespace davlab;

TEST_CASE("sumset basics") {
  ModSet a(5, {1, 2});
  ModSet b(5, {1, 3});
  ModSet s = sumset(a, b);
  CHECK(s == ModSet(5, {2, 3, 4, 0}));
  CHECK_THROWS_AS(sumset(a, ModSet(7, {1})), ModulusMismatchError);
  CHECK(sumset(ModSet::empty_set(5), a).empty());
  CHECK(sumset(ModSet::full_set(5), a) == ModSet::full_set(5));
}

TEST_CASE("modset helpers") {
  ModSet a(6, {0, 2, 4});
  CHECK(a.size() == 3);
  CHECK(a.contains(2));
  CHECK(a.contains(-4));  // reduced mod 6
  CHECK(!a.contains(1));
  CHECK(a.members() == std::vector<long long>{0, 2, 4});
  CHECK(ModSet::singleton(6, 5).members() == std::vector<long long>{5});
}

TEST_CASE("stabilizer") {
  CHECK(stabilizer(ModSet(6, {0, 2, 4})) == ModSet(6, {0, 2, 4}));
  CHECK(stabilizer(ModSet(6, {1, 3, 5})) == ModSet(6, {0, 2, 4}));
  CHECK(stabilizer(ModSet(5, {1, 2})) == ModSet(5, {0}));
  CHECK(stabilizer(ModSet::full_set(8)) == ModSet::full_set(8));
}

TEST_CASE("pi_m_products") {
  SubsetSequence aa(5, {ModSet(5, {1, 2}), ModSet(5, {2, 3})});
  CHECK(pi_m_products(aa, 2) == ModSet(5, {3, 4, 0}));
  CHECK(pi_m_products(aa, 1) == ModSet(5, {1, 2, 3}));
  CHECK_THROWS_AS(pi_m_products(aa, 0), BadMError);
  CHECK_THROWS_AS(pi_m_products(aa, 3), BadMError);
}

TEST_CASE("dgm bound on hand-picked sequences") {
  SubsetSequence aa(6, {ModSet(6, {0, 1}), ModSet(6, {2, 4}), ModSet(6, {1})});
  for (int m = 1; m <= 3; ++m) {
    DgmResult r = dgm_check(aa, m);
    CHECK(r.holds);
    CHECK(r.lhs >= r.rhs);
  }
}

TEST_CASE("triple orbit set") {
  // q = 7, u = 2: orbit of (0, 1, 3)
  ModSet s = triple_orbit_set(0, 1, 3, 2, 7);
  auto mem = s.members();
  std::set<long long> got(mem.begin(), mem.end());
  // 6 permutations of a + 2b + 4c over {0,1,3}
  std::set<long long> want;
  long long v[3] = {0, 1, 3};
  int idx[3] = {0, 1, 2};
  do {
    want.insert((v[idx[0]] + 2 * v[idx[1]] + 4 * v[idx[2]]) % 7);
  } while (std::next_permutation(idx, idx + 3));
  CHECK(got == want);
  CHECK_THROWS_AS(triple_orbit_set(1, 1, 3, 2, 7), NotDistinctError);
  CHECK_THROWS_AS(triple_orbit_set(0, 1, 3, 2, 6), BadModulusError);
}

TEST_CASE("shifted union hand case") {
  // q = 7, A = {1, 2}, a = 0, u = 3, c = 1:
  // A_1 = {0 + 3b} = {3, 6}, A_2 = {b + 3*0} = {1, 2}; union has 4 elements
  ShiftedUnionResult r = shifted_union_check(ModSet(7, {1, 2}), 0, 3, 1, 7);
  CHECK(r.size_union == 4);
  CHECK(r.holds);
  // |A| must be strictly between 1 and ord_q(u)
  CHECK_THROWS_AS(shifted_union_check(ModSet(7, {1}), 0, 3, 1, 7),
                  PreconditionViolatedError);
}

TEST_CASE("cauchy-davenport small primes") {
  CHECK(cd_exhaustive_check(3, 3));
  CHECK(cd_exhaustive_check(5, 2));
  CHECK_THROWS_AS(cd_exhaustive_check(17, 2), TooLargeError);
  CHECK_THROWS_AS(cd_exhaustive_check(5, 4), TooLargeError);
}

TEST_CASE("lemma suites pass") {
  LemmaCheckResult cd = run_cd_suite(5, 3);
  CHECK(cd.passed);
  CHECK(cd.violations == 0);
  CHECK(cd.cases > 0);

  LemmaCheckResult orbit = run_triple_orbit_suite({7}, {7});
  CHECK(orbit.passed);
  CHECK(orbit.violations == 0);

  LemmaCheckResult su = run_shifted_union_suite({7}, 3);
  CHECK(su.passed);

  LemmaCheckResult dgm = run_dgm_suite(200);
  CHECK(dgm.passed);
  CHECK(dgm.sampled);
}
