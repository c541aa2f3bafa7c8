#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "davlab/errors.hpp"

namespace davlab {

/// A subset of Z_n for n <= 64, stored as a bitmask.
struct ModSet {
  long long modulus = 0;
  uint64_t mask = 0;

  ModSet() = default;
  ModSet(long long n, std::initializer_list<long long> elems);
  static ModSet empty_set(long long n);
  static ModSet full_set(long long n);
  static ModSet singleton(long long n, long long v);

  bool contains(long long v) const { return (mask >> (((v % modulus) + modulus) % modulus)) & 1; }
  void insert(long long v) { mask |= 1ull << (((v % modulus) + modulus) % modulus); }
  int size() const { return __builtin_popcountll(mask); }
  bool empty() const { return mask == 0; }
  std::vector<long long> members() const;
  std::string str() const;

  bool operator==(const ModSet& o) const = default;
};

struct SubsetSequence {
  long long modulus = 0;
  std::vector<ModSet> sets;

  SubsetSequence(long long n, std::vector<ModSet> ss);
  size_t length() const { return sets.size(); }
};

ModSet sumset(const ModSet& a, const ModSet& b);  // throws ModulusMismatchError
/// Stab(A) = {c : c + A = A}; a subgroup of Z_n.  A must be nonempty.
ModSet stabilizer(const ModSet& a);
/// Pi^m(AA): sums picking one element from each of m distinct subsets
/// (increasing indices).  Throws BadMError unless 1 <= m <= length.
ModSet pi_m_products(const SubsetSequence& aa, int m);

struct DgmResult {
  int lhs = 0;
  int rhs = 0;
  bool holds = false;
};
/// DeVos-Goddyn-Mohar lower bound for Pi^m over Z_n:
/// |Pi^m| >= |H| (1 - m + sum over cosets Q of H of min{m, #{i: A_i meets Q}})
/// with H = Stab(Pi^m).  Throws BadMError; requires Pi^m nonempty.
DgmResult dgm_check(const SubsetSequence& aa, int m);

/// {a_{s(1)} + u a_{s(2)} + u^2 a_{s(3)} : s in S_3} in Z_q.
/// q prime, a1,a2,a3 distinct mod q, u != 0 mod q.
ModSet triple_orbit_set(long long a1, long long a2, long long a3, long long u,
                        long long q);

struct ShiftedUnionResult {
  int size_union = 0;
  bool holds = false;
};
/// With A_1 = {a + u b : b in A}, A_2 = {b + u^c a : b in A}, checks
/// |A_1 union A_2| >= |A| + 1.  Requires q prime and 1 < |A| < ord_q(u);
/// throws PreconditionViolatedError otherwise.
ShiftedUnionResult shifted_union_check(const ModSet& a_set, long long a,
                                       long long u, long long c, long long q);

/// Cauchy-Davenport over Z_p for every tuple of l nonempty subsets, l up to
/// l_max: |A_1+...+A_l| >= min{p, sum|A_i| - l + 1}.  When a level has more
/// than 10^6 tuples it is sampled (10^6 draws, fixed seed).  p prime <= 13,
/// l_max <= 3; throws TooLargeError beyond that.
bool cd_exhaustive_check(long long p, int l_max);

// --- lemma-suite drivers (used by check-lemmas and the tests) --------------

struct LemmaCheckResult {
  std::string name;
  long long cases = 0;
  long long violations = 0;
  bool sampled = false;
  bool passed = false;
  std::string detail;
};

LemmaCheckResult run_cd_suite(long long p_max = 13, int l_max = 3);
/// claim (a) for qs_a, claim (b) for qs_b
LemmaCheckResult run_triple_orbit_suite(std::vector<long long> qs_a = {7, 11, 13},
                                        std::vector<long long> qs_b = {7, 13});
LemmaCheckResult run_shifted_union_suite(std::vector<long long> qs = {7, 11},
                                         int max_a_size = 4);
LemmaCheckResult run_dgm_suite(long long samples = 1000, uint64_t seed = 20240815);

}  // namespace davlab
