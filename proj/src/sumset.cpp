#include "davlab/sumset.hpp"

#include <algorithm>
#include <random>

#include "davlab/group.hpp"  // number-theory helpers

namespace davlab {

namespace {
void check_modulus(long long n) {
  if (n < 2 || n > 64)
    throw BadModulusError("modulus must be in [2, 64], got " +
                          std::to_string(n));
}
}  // namespace

ModSet::ModSet(long long n, std::initializer_list<long long> elems) {
  check_modulus(n);
  modulus = n;
  for (long long v : elems) insert(v);
}

ModSet ModSet::empty_set(long long n) {
  check_modulus(n);
  ModSet s;
  s.modulus = n;
  return s;
}

ModSet ModSet::full_set(long long n) {
  ModSet s = empty_set(n);
  s.mask = (n == 64) ? ~0ull : ((1ull << n) - 1);
  return s;
}

ModSet ModSet::singleton(long long n, long long v) {
  ModSet s = empty_set(n);
  s.insert(v);
  return s;
}

std::vector<long long> ModSet::members() const {
  std::vector<long long> out;
  for (long long v = 0; v < modulus; ++v)
    if (contains(v)) out.push_back(v);
  return out;
}

std::string ModSet::str() const {
  std::string out = "{";
  bool first = true;
  for (long long v : members()) {
    if (!first) out += ",";
    out += std::to_string(v);
    first = false;
  }
  return out + "} mod " + std::to_string(modulus);
}

SubsetSequence::SubsetSequence(long long n, std::vector<ModSet> ss)
    : modulus(n), sets(std::move(ss)) {
  check_modulus(n);
  if (sets.empty()) throw BadMError("SubsetSequence needs at least one set");
  for (const auto& s : sets)
    if (s.modulus != n)
      throw ModulusMismatchError("subset sequence moduli differ");
}

ModSet sumset(const ModSet& a, const ModSet& b) {
  if (a.modulus != b.modulus)
    throw ModulusMismatchError("sumset moduli differ: " +
                               std::to_string(a.modulus) + " vs " +
                               std::to_string(b.modulus));
  ModSet out = ModSet::empty_set(a.modulus);
  uint64_t bm = b.mask;
  while (bm) {
    int v = __builtin_ctzll(bm);
    bm &= bm - 1;
    // (a.mask rotated by v) within the low `modulus` bits
    uint64_t lo = a.mask << v;
    uint64_t hi = (v == 0) ? 0 : (a.mask >> (a.modulus - v));
    out.mask |= lo | hi;
  }
  uint64_t full = ModSet::full_set(a.modulus).mask;
  out.mask &= full;
  return out;
}

ModSet stabilizer(const ModSet& a) {
  if (a.empty()) throw Error("stabilizer of empty set");
  ModSet out = ModSet::empty_set(a.modulus);
  uint64_t full = ModSet::full_set(a.modulus).mask;
  for (long long c = 0; c < a.modulus; ++c) {
    uint64_t lo = a.mask << c;
    uint64_t hi = (c == 0) ? 0 : (a.mask >> (a.modulus - c));
    if (((lo | hi) & full) == a.mask) out.insert(c);
  }
  return out;
}

ModSet pi_m_products(const SubsetSequence& aa, int m) {
  int l = static_cast<int>(aa.length());
  if (m < 1 || m > l)
    throw BadMError("m must be in [1, " + std::to_string(l) + "], got " +
                    std::to_string(m));
  // dp[j] = attainable sums using exactly j picks from the sets seen so far
  std::vector<uint64_t> dp(m + 1, 0);
  ModSet zero = ModSet::singleton(aa.modulus, 0);
  dp[0] = zero.mask;
  for (int i = 0; i < l; ++i) {
    for (int j = std::min(m, i + 1); j >= 1; --j) {
      if (dp[j - 1] == 0 || aa.sets[i].empty()) continue;
      ModSet prev = ModSet::empty_set(aa.modulus);
      prev.mask = dp[j - 1];
      dp[j] |= sumset(prev, aa.sets[i]).mask;
    }
  }
  ModSet out = ModSet::empty_set(aa.modulus);
  out.mask = dp[m];
  return out;
}

DgmResult dgm_check(const SubsetSequence& aa, int m) {
  ModSet pim = pi_m_products(aa, m);
  if (pim.empty()) throw BadMError("Pi^m is empty");
  ModSet h = stabilizer(pim);
  int hsize = h.size();
  long long n = aa.modulus;
  // cosets of H in Z_n are r + H for r in [0, n/|H|) since H = <n/|H|>
  long long coset_count = n / hsize;
  long long sum = 0;
  for (long long r = 0; r < coset_count; ++r) {
    // coset mask: r + H
    ModSet coset = sumset(h, ModSet::singleton(n, r));
    int meets = 0;
    for (const auto& s : aa.sets)
      if (s.mask & coset.mask) ++meets;
    sum += std::min<long long>(m, meets);
  }
  DgmResult res;
  res.lhs = pim.size();
  res.rhs = static_cast<int>(hsize * (1 - m + sum));
  res.holds = res.lhs >= res.rhs;
  return res;
}

ModSet triple_orbit_set(long long a1, long long a2, long long a3, long long u,
                        long long q) {
  if (!is_prime_ll(q) || q > 64)
    throw BadModulusError("q must be a prime <= 64");
  auto r = [&](long long v) { return ((v % q) + q) % q; };
  a1 = r(a1);
  a2 = r(a2);
  a3 = r(a3);
  u = r(u);
  if (a1 == a2 || a1 == a3 || a2 == a3)
    throw NotDistinctError("a1, a2, a3 must be distinct mod q");
  if (u == 0) throw NotDistinctError("u must be nonzero mod q");
  long long u2 = (u * u) % q;
  long long v[3] = {a1, a2, a3};
  int perm[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                    {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  ModSet out = ModSet::empty_set(q);
  for (auto& p : perm)
    out.insert((v[p[0]] + u * v[p[1]] + u2 * v[p[2]]) % q);
  return out;
}

ShiftedUnionResult shifted_union_check(const ModSet& a_set, long long a,
                                       long long u, long long c, long long q) {
  if (!is_prime_ll(q) || q > 64)
    throw BadModulusError("q must be a prime <= 64");
  if (a_set.modulus != q)
    throw ModulusMismatchError("A must live in Z_q");
  long long ord = mult_order(((u % q) + q) % q, q);
  if (ord == 0 || a_set.size() <= 1 ||
      static_cast<long long>(a_set.size()) >= ord)
    throw PreconditionViolatedError("need 1 < |A| < ord_q(u)");
  long long uc = mod_pow(u, c, q);
  ModSet a1 = ModSet::empty_set(q);
  ModSet a2 = ModSet::empty_set(q);
  for (long long b : a_set.members()) {
    a1.insert((a + u * b) % q);
    a2.insert((b + uc * (a % q)) % q);
  }
  ShiftedUnionResult res;
  res.size_union = __builtin_popcountll(a1.mask | a2.mask);
  res.holds = res.size_union >= a_set.size() + 1;
  return res;
}

namespace {
bool cd_holds(long long p, const std::vector<uint64_t>& masks) {
  ModSet acc = ModSet::empty_set(p);
  acc.mask = masks[0];
  long long total = __builtin_popcountll(masks[0]);
  for (size_t i = 1; i < masks.size(); ++i) {
    ModSet b = ModSet::empty_set(p);
    b.mask = masks[i];
    acc = sumset(acc, b);
    total += __builtin_popcountll(masks[i]);
  }
  long long bound =
      std::min<long long>(p, total - static_cast<long long>(masks.size()) + 1);
  return acc.size() >= bound;
}
}  // namespace

bool cd_exhaustive_check(long long p, int l_max) {
  if (!is_prime_ll(p) || p > 13 || l_max > 3 || l_max < 1)
    throw TooLargeError("cd_exhaustive_check supports prime p <= 13, l <= 3");
  uint64_t nsub = (1ull << p) - 1;  // nonempty subsets
  std::mt19937_64 rng(12345);
  for (int l = 1; l <= l_max; ++l) {
    double tuples = 1;
    for (int i = 0; i < l; ++i) tuples *= static_cast<double>(nsub);
    std::vector<uint64_t> masks(l);
    if (tuples <= 1e6) {
      std::vector<uint64_t> idx(l, 1);
      while (true) {
        for (int i = 0; i < l; ++i) masks[i] = idx[i];
        if (!cd_holds(p, masks)) return false;
        int i = 0;
        while (i < l && idx[i] == nsub) idx[i++] = 1;
        if (i == l) break;
        ++idx[i];
      }
    } else {
      std::uniform_int_distribution<uint64_t> dist(1, nsub);
      for (int t = 0; t < 1000000; ++t) {
        for (int i = 0; i < l; ++i) masks[i] = dist(rng);
        if (!cd_holds(p, masks)) return false;
      }
    }
  }
  return true;
}

// --- lemma-suite drivers ---------------------------------------------------

LemmaCheckResult run_cd_suite(long long p_max, int l_max) {
  LemmaCheckResult r;
  r.name = "cauchy-davenport";
  for (long long p = 2; p <= p_max; ++p) {
    if (!is_prime_ll(p)) continue;
    ++r.cases;
    if (!cd_exhaustive_check(p, l_max)) ++r.violations;
  }
  r.sampled = true;  // l=3 levels above 10^6 tuples are sampled
  r.passed = r.violations == 0;
  r.detail = "primes up to " + std::to_string(p_max) + ", up to " +
             std::to_string(l_max) + " summands";
  return r;
}

LemmaCheckResult run_triple_orbit_suite(std::vector<long long> qs_a,
                                        std::vector<long long> qs_b) {
  LemmaCheckResult r;
  r.name = "triple-orbit";
  auto scan = [&](long long q, bool want_ord3) {
    for (long long u = 1; u < q; ++u) {
      long long ord = mult_order(u, q);
      if (want_ord3 ? (ord != 3) : (ord <= 3)) continue;
      for (long long a1 = 0; a1 < q; ++a1)
        for (long long a2 = 0; a2 < q; ++a2)
          for (long long a3 = 0; a3 < q; ++a3) {
            if (a1 == a2 || a1 == a3 || a2 == a3) continue;
            ModSet s = triple_orbit_set(a1, a2, a3, u, q);
            ++r.cases;
            bool ok = want_ord3 ? (s.contains(0) || s.size() == 6)
                                : (s.size() >= 4);
            if (!ok) ++r.violations;
          }
    }
  };
  for (long long q : qs_a) scan(q, false);
  for (long long q : qs_b) scan(q, true);
  r.passed = r.violations == 0;
  r.detail = "claim (a) ord > 3, claim (b) ord = 3, all distinct triples";
  return r;
}

LemmaCheckResult run_shifted_union_suite(std::vector<long long> qs,
                                         int max_a_size) {
  LemmaCheckResult r;
  r.name = "shifted-union";
  for (long long q : qs) {
    uint64_t full = (1ull << q) - 1;
    for (uint64_t mask = 1; mask <= full; ++mask) {
      int sz = __builtin_popcountll(mask);
      if (sz < 2 || sz > max_a_size) continue;
      ModSet a_set = ModSet::empty_set(q);
      a_set.mask = mask;
      for (long long u = 1; u < q; ++u) {
        if (mult_order(u, q) <= sz) continue;
        for (long long a = 0; a < q; ++a)
          for (long long c = 1; c <= 3; ++c) {
            ++r.cases;
            if (!shifted_union_check(a_set, a, u, c, q).holds) ++r.violations;
          }
      }
    }
  }
  r.passed = r.violations == 0;
  r.detail = "all |A| in [2," + std::to_string(max_a_size) +
             "], all a, u with ord > |A|, c in [1,3]";
  return r;
}

LemmaCheckResult run_dgm_suite(long long samples, uint64_t seed) {
  LemmaCheckResult r;
  r.name = "dgm-bound";
  r.sampled = true;
  if (samples == 0) {
    r.passed = true;
    r.detail = "0 samples requested (vacuous)";
    return r;
  }
  std::mt19937_64 rng(seed);
  long long moduli[] = {6, 8, 9, 12};
  std::uniform_int_distribution<int> mod_pick(0, 3);
  for (long long t = 0; t < samples; ++t) {
    long long n = moduli[mod_pick(rng)];
    std::uniform_int_distribution<int> len_pick(1, 6);
    int l = len_pick(rng);
    std::uniform_int_distribution<uint64_t> set_pick(1, (1ull << n) - 1);
    std::vector<ModSet> sets;
    for (int i = 0; i < l; ++i) {
      ModSet s = ModSet::empty_set(n);
      s.mask = set_pick(rng);
      sets.push_back(s);
    }
    std::uniform_int_distribution<int> m_pick(1, l);
    int m = m_pick(rng);
    ++r.cases;
    if (!dgm_check(SubsetSequence(n, std::move(sets)), m).holds)
      ++r.violations;
  }
  r.passed = r.violations == 0;
  r.detail = std::to_string(samples) + " random cyclic instances, seed " +
             std::to_string(seed);
  return r;
}

}  // namespace davlab
