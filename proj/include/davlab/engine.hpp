#pragma once

#include <climits>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "davlab/group.hpp"
#include "davlab/sequence.hpp"

namespace davlab {

/// Pi(T) or a partial-products set: a subset of group elements as a bitset.
struct ProductSet {
  uint64_t bits = 0;
  int order = 0;

  bool contains(int e) const { return (bits >> e) & 1; }
  int size() const { return __builtin_popcountll(bits); }
  std::vector<int> members() const {
    std::vector<int> out;
    for (int e = 0; e < order; ++e)
      if (contains(e)) out.push_back(e);
    return out;
  }
};

/// Incremental product-set calculator for one group (order <= 64).
///
/// Maintains, for every sub-multiset T of the current multiset S, the set
/// Pi(T) of all ordered products, via the last-element recurrence
/// Pi(T) = union over g in supp(T) of Pi(T - g) * g.  Elements are pushed
/// and popped stack-wise, so a depth-first solver pays only for the new
/// sub-multisets created by each push.
///
/// The key extension test is O(1): some ordering of T+g multiplies to 1
/// iff some ordering with that copy of g last does (rotating a product-one
/// word keeps it product-one), i.e. iff g^-1 in Pi(T).
///
/// One engine instance per worker; instances are not safe for concurrent
/// mutation.
class ProductEngine {
 public:
  static constexpr int kMaxOrder = 64;
  static constexpr int kMaxSlots = 12;
  static constexpr int kCountBits = 5;
  static constexpr int kMaxCount = (1 << kCountBits) - 1;

  explicit ProductEngine(const Group& g);  // throws GroupTooLargeError

  const Group& group() const { return *group_; }
  int depth() const { return static_cast<int>(frames_.size()); }

  bool can_push(int elem) const;
  void push(int elem);  // throws EngineLimitError when can_push is false
  void pop();
  void reset();

  /// minimum length of a product-one sub-multiset of the current state;
  /// INT_MAX when the state is product-one free
  int min_po_length() const { return min_size_[0]; }
  bool current_free() const { return min_size_[0] == INT_MAX; }

  /// exact min product-one length of (current state + g), without pushing
  int trial_min_po(int g) const;

  /// Pi(current state); the identity-only set for the empty state
  uint64_t full_mask() const;
  /// union of Pi(T) over all nonempty sub-multisets T
  uint64_t reach_mask() const { return reach_; }
  /// min |T| over nonempty T with v in Pi(T); INT_MAX if unreachable
  int min_size_reaching(int v) const { return min_size_[v]; }

  SeqMultiset current() const;
  std::vector<SeqMultiset> po_sub_multisets(bool only_minimal) const;

  /// all (sub-multiset, Pi mask) pairs of the current state, nonempty only
  struct SubsetProducts {
    SeqMultiset subset;
    uint64_t mask;
  };
  std::vector<SubsetProducts> all_subset_products() const;

 private:
  struct Entry {
    uint64_t key;
    uint64_t mask;
    int size;
  };
  struct Frame {
    int elem;
    int slot;
    size_t entries_prev;
    size_t undo_prev;
    bool slot_allocated;
  };

  uint64_t shift_mask(uint64_t mask, int elem) const;
  SeqMultiset decode_key(uint64_t key) const;

  const Group* group_;
  const int* table_ = nullptr;
  int order_ = 0;

  std::vector<Entry> entries_;
  int slot_elem_[kMaxSlots];
  int slot_count_[kMaxSlots];
  std::vector<int> elem_slot_;
  std::vector<int> free_slots_;
  uint64_t current_key_ = 0;
  uint64_t reach_ = 0;
  int min_size_[kMaxOrder];
  std::vector<std::pair<int, int>> undo_;  // (value, previous min_size)
  std::vector<uint64_t> reach_stack_;
  std::vector<Frame> frames_;
  std::vector<uint32_t> scratch_;
  std::unordered_map<uint64_t, uint32_t> index_;
};

// --- one-shot queries (each builds a scratch engine) -----------------------

ProductSet product_set(const Group& g, const SeqMultiset& s);
bool has_product_one_subsequence(const Group& g, const SeqMultiset& s);
std::optional<int> min_product_one_length(const Group& g, const SeqMultiset& s);
bool is_product_one_free(const Group& g, const SeqMultiset& s);
bool is_minimal_product_one(const Group& g, const SeqMultiset& s);
std::vector<SeqMultiset> product_one_sub_multisets(const Group& g,
                                                   const SeqMultiset& s,
                                                   bool only_minimal);

}  // namespace davlab
