#pragma once

#include <optional>
#include <string>
#include <vector>

#include "davlab/engine.hpp"
#include "davlab/group.hpp"
#include "davlab/sequence.hpp"

namespace davlab {

enum class ConstantKind { D, E, F, Dk };

std::string kind_name(ConstantKind k);                // "d", "e", "f", "d_k"
ConstantKind kind_parse(const std::string& s);        // throws ParseError

struct SolverBudget {
  long long max_nodes = 100'000'000;
  double max_seconds = 300.0;
  int parallel_width = 1;

  static SolverBudget fast() { return {1'000'000, 10.0, 1}; }
};

/// Result of one constant computation.  `exact` iff lo == hi; when the
/// search finished inside budget the value is search-certified, otherwise
/// the interval combines the best verified witness (lo) with a family
/// formula or |G| (hi).
struct SolverResult {
  ConstantKind kind = ConstantKind::D;
  int k = 1;
  long long lo = 0;
  long long hi = 0;
  bool exact = false;
  std::vector<SeqMultiset> witnesses;
  long long nodes = 0;
  double seconds = 0.0;
  std::string note;

  long long value() const {
    if (!exact) throw Error("value() on inexact result [" +
                            std::to_string(lo) + "," + std::to_string(hi) +
                            "]");
    return lo;
  }
};

SolverResult davenport_constant(const Group& g, const SolverBudget& b = {});
SolverResult e_constant(const Group& g, const SolverBudget& b = {});
SolverResult f_constant(const Group& g, const SolverBudget& b = {});
SolverResult dk_constant(const Group& g, int k, const SolverBudget& b = {});
SolverResult solve(const Group& g, ConstantKind kind, int k,
                   const SolverBudget& b = {});

/// The standard lower-bound sequence for the group's family, in the given
/// group's element indexing.  Throws UnsupportedError for family/kind pairs
/// without a stock construction.
SeqMultiset witness_construct(const Group& g, ConstantKind kind, int k = 1);

/// Closed-form value when the family theorem applies, else nullopt.
std::optional<long long> formula_exact(const GroupSpec& spec, ConstantKind kind,
                                       int k = 1);
/// Always-valid upper bound (formula when available, |G|-based otherwise).
long long formula_upper(const Group& g, ConstantKind kind, int k = 1);

/// Check d(G) <= (d(H)-1) f(K) + d(K) for normal H with K = G/H, and when
/// equality holds additionally f(G) <= f(H) f(K).
struct ExtensionBoundResult {
  long long d_G = 0, d_H = 0, d_K = 0, f_K = 0, rhs = 0;
  bool holds = false;
  bool equality = false;
  long long f_G = -1, f_H = -1;
  bool f_bound_checked = false;
  bool f_bound_holds = true;
};
ExtensionBoundResult extension_bound_check(const Group& g,
                                           const std::vector<int>& h,
                                           const SolverBudget& b = {});

struct DkBoundResult {
  long long d_k = 0, rhs = 0;
  bool holds = false;
};
/// Check d_k(G) <= (k-1) f(G) + d(G).
DkBoundResult dk_bound_check(const Group& g, int k, const SolverBudget& b = {});

/// All product-one-free multisets of length d(G)-1, canonical order.
std::vector<SeqMultiset> enumerate_extremal_free(const Group& g,
                                                 const SolverBudget& b = {});

/// True when s admits k pairwise-disjoint product-one sub-multisets
/// (disjointness is index-disjointness: multiplicity bookkeeping).
bool has_k_disjoint_product_one(const Group& g, const SeqMultiset& s, int k);

}  // namespace davlab
