#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "davlab/errors.hpp"

namespace davlab {

enum class Family {
  Cyclic,         // Z_n
  DirectProduct,  // Z_{n1} x ... x Z_{nk}
  Dihedral,       // <x,y | x^n = y^2 = 1, yx = x^-1 y>, n >= 3
  Dicyclic,       // <x,y | x^2n = 1, x^n = y^2, yx = x^-1 y>, n >= 2
  Metacyclic,     // <x,y | x^b = y^a = 1, x^g y = yx>, ord_b(g) = a
  HolomorphPrime, // Hol(Z_p) for odd prime p = Metacyclic(p-1, p, primitive root)
};

/// A small-group presentation.  `params` meaning depends on family:
/// Cyclic {n}, DirectProduct {n1..nk}, Dihedral {n}, Dicyclic {n},
/// Metacyclic {a, b, g}, HolomorphPrime {p}.
struct GroupSpec {
  Family family = Family::Cyclic;
  std::vector<long long> params;

  static GroupSpec cyclic(long long n);
  static GroupSpec direct_product(std::vector<long long> ns);
  static GroupSpec dihedral(long long n);
  static GroupSpec dicyclic(long long n);
  static GroupSpec metacyclic(long long a, long long b, long long g);
  static GroupSpec holomorph_prime(long long p);

  /// Grammar: cyclic:n, product:n1,n2,..., dihedral:n, dicyclic:n,
  /// metacyclic:a,b,g, holomorph:p
  static GroupSpec parse(const std::string& text);

  void validate() const;  // throws InvalidSpecError
  long long order() const;
  std::string str() const;  // canonical spec string, parse(str()) round-trips

  bool operator==(const GroupSpec& o) const = default;
};

// number-theory helpers shared with the sumset module
long long mod_pow(long long base, long long exp, long long mod);
long long gcd_ll(long long a, long long b);
bool is_prime_ll(long long n);
/// multiplicative order of g mod n; 0 if gcd(g, n) != 1
long long mult_order(long long g, long long n);
/// smallest primitive root mod odd prime p
long long smallest_primitive_root(long long p);

struct QuotientResult;

/// A concrete finite group over canonical element indices [0, order).
/// Identity is always index 0.  Orders <= 64 carry a full multiplication
/// table; larger groups multiply from the family formula.
class Group {
 public:
  static constexpr int kTableLimit = 64;

  static Group build(const GroupSpec& spec);
  /// Wrap an explicit Cayley table (used for quotients and subgroups).
  /// `iso` optionally names a spec the group is isomorphic to.
  static Group from_table(int order, std::vector<int> table, std::string name,
                          std::optional<GroupSpec> iso = std::nullopt);

  int order() const { return order_; }
  int identity() const { return 0; }
  int mul(int u, int v) const;
  int inv(int u) const;
  int element_order(int u) const;
  int max_element_order() const;
  bool is_abelian() const;
  bool has_table() const { return !table_.empty(); }
  /// built from a family presentation (false for wrapped Cayley tables)
  bool native() const { return arith_ != Arith::Table; }
  const int* table_data() const {
    return table_.empty() ? nullptr : table_.data();
  }

  /// Two-generator decode: element = x^i y^j.  Throws Unsupported for
  /// families without the (x, y) presentation.
  std::pair<int, int> decode(int e) const;
  int encode(int i, int j) const;
  bool two_generator() const;
  int gen_x() const;  // index of x (two-generator families)
  int gen_y() const;  // index of y

  std::string element_name(int e) const;
  int parse_element(const std::string& token) const;  // throws ParseError

  std::vector<int> subgroup_generated(const std::vector<int>& gens) const;
  bool is_subgroup(const std::vector<int>& h) const;  // h sorted
  bool is_normal(const std::vector<int>& h) const;

  QuotientResult quotient(const std::vector<int>& h) const;  // throws NotNormal

  /// The subgroup as a standalone group on indices [0, |h|); h must be sorted.
  /// embedding[i] gives the parent-group index of element i.
  Group subgroup_as_group(const std::vector<int>& h,
                          std::vector<int>* embedding = nullptr) const;

  std::vector<int> center() const;
  std::vector<int> centralizer(int h) const;

  const std::optional<GroupSpec>& spec() const { return spec_; }
  const std::string& name() const { return name_; }

  /// For abelian groups, the invariant-factor decomposition n_1 | n_2 | ...
  /// Empty result for non-abelian groups.
  std::vector<long long> abelian_invariant_factors() const;

 private:
  Group() = default;
  void finish_construction();
  int mul_formula(int u, int v) const;

  enum class Arith { Table, Cyclic, Product, MetacyclicLike, Dicyclic };

  std::optional<GroupSpec> spec_;
  std::string name_;
  int order_ = 1;
  Arith arith_ = Arith::Table;
  std::vector<int> table_;   // order*order when order <= kTableLimit
  std::vector<int> inv_;     // cached when table present
  std::vector<int> eorder_;  // cached when table present

  // MetacyclicLike: x^i y^j with index j*b + i
  long long mc_a_ = 0, mc_b_ = 0;
  std::vector<long long> mc_gpow_;  // g^j mod b for j in [0, a)
  // Dicyclic: x^i y^j, i in [0, 2n), j in {0,1}, index j*2n + i
  long long dc_n_ = 0;
  // DirectProduct moduli (mixed radix, first factor least significant)
  std::vector<long long> dp_mod_;
};

struct QuotientResult {
  Group group;                  // cosets labeled by ascending minimum element
  std::vector<int> projection;  // element index -> coset index
};

/// Try to identify a table group as one of the GroupSpec families (abelian
/// invariant factors, or cyclic).  Used so solvers can apply family
/// formulas to quotients/subgroups.
std::optional<GroupSpec> recognize_spec(const Group& g);

}  // namespace davlab
