#include "davlab/engine.hpp"

#include <algorithm>
#include <cassert>

namespace davlab {

ProductEngine::ProductEngine(const Group& g) : group_(&g), order_(g.order()) {
  if (order_ > kMaxOrder)
    throw GroupTooLargeError("engine supports order <= 64, got " +
                             std::to_string(order_));
  table_ = g.table_data();
  if (!table_)
    throw GroupTooLargeError("engine requires a tabulated group");
  elem_slot_.assign(order_, -1);
  for (int s = kMaxSlots - 1; s >= 0; --s) free_slots_.push_back(s);
  for (int s = 0; s < kMaxSlots; ++s) {
    slot_elem_[s] = -1;
    slot_count_[s] = 0;
  }
  reset();
}

void ProductEngine::reset() {
  while (!frames_.empty()) pop();
  entries_.clear();
  index_.clear();
  entries_.push_back({0, 1ull, 0});  // Pi(empty) = {identity}
  index_[0] = 0;
  std::fill(min_size_, min_size_ + kMaxOrder, INT_MAX);
  reach_ = 0;
  current_key_ = 0;
  undo_.clear();
  reach_stack_.clear();
}

uint64_t ProductEngine::shift_mask(uint64_t mask, int elem) const {
  uint64_t out = 0;
  while (mask) {
    int b = __builtin_ctzll(mask);
    mask &= mask - 1;
    out |= 1ull << table_[static_cast<size_t>(b) * order_ + elem];
  }
  return out;
}

bool ProductEngine::can_push(int elem) const {
  if (elem < 0 || elem >= order_) return false;
  int s = elem_slot_[elem];
  if (s < 0) return !free_slots_.empty();
  return slot_count_[s] < kMaxCount;
}

int ProductEngine::trial_min_po(int g) const {
  int m = min_size_[0];
  if (g == 0) return 1;
  int r = min_size_[group_->inv(g)];
  if (r != INT_MAX) m = std::min(m, r + 1);
  return m;
}

void ProductEngine::push(int elem) {
  if (!can_push(elem))
    throw EngineLimitError("engine state limit (12 distinct / 31 copies)");
  int s = elem_slot_[elem];
  bool allocated = false;
  if (s < 0) {
    s = free_slots_.back();
    free_slots_.pop_back();
    elem_slot_[elem] = s;
    slot_elem_[s] = elem;
    allocated = true;
  }
  ++slot_count_[s];
  int c = slot_count_[s];
  frames_.push_back({elem, s, entries_.size(), undo_.size(), allocated});
  reach_stack_.push_back(reach_);

  const uint64_t unit = 1ull << (s * kCountBits);
  // new sub-multisets are T + elem for every existing T whose count of
  // elem is exactly c - 1; build them in increasing size order
  scratch_.clear();
  size_t old_count = frames_.back().entries_prev;
  for (uint32_t i = 0; i < old_count; ++i)
    if (static_cast<int>((entries_[i].key >> (s * kCountBits)) &
                         kMaxCount) == c - 1)
      scratch_.push_back(i);
  std::sort(scratch_.begin(), scratch_.end(), [&](uint32_t a, uint32_t b) {
    return entries_[a].size < entries_[b].size;
  });
  for (uint32_t i : scratch_) {
    uint64_t newkey = entries_[i].key + unit;
    int newsize = entries_[i].size + 1;
    uint64_t mask = 0;
    for (int h = 0; h < kMaxSlots; ++h) {
      if (((newkey >> (h * kCountBits)) & kMaxCount) == 0) continue;
      uint64_t subkey = newkey - (1ull << (h * kCountBits));
      mask |= shift_mask(entries_[index_.at(subkey)].mask, slot_elem_[h]);
    }
    uint32_t idx = static_cast<uint32_t>(entries_.size());
    entries_.push_back({newkey, mask, newsize});
    index_[newkey] = idx;
    reach_ |= mask;
    uint64_t m = mask;
    while (m) {
      int v = __builtin_ctzll(m);
      m &= m - 1;
      if (newsize < min_size_[v]) {
        undo_.push_back({v, min_size_[v]});
        min_size_[v] = newsize;
      }
    }
  }
  current_key_ += unit;
}

void ProductEngine::pop() {
  assert(!frames_.empty());
  Frame f = frames_.back();
  frames_.pop_back();
  for (size_t i = undo_.size(); i > f.undo_prev; --i)
    min_size_[undo_[i - 1].first] = undo_[i - 1].second;
  undo_.resize(f.undo_prev);
  for (size_t i = f.entries_prev; i < entries_.size(); ++i)
    index_.erase(entries_[i].key);
  entries_.resize(f.entries_prev);
  reach_ = reach_stack_.back();
  reach_stack_.pop_back();
  current_key_ -= 1ull << (f.slot * kCountBits);
  --slot_count_[f.slot];
  if (slot_count_[f.slot] == 0) {
    elem_slot_[f.elem] = -1;
    slot_elem_[f.slot] = -1;
    free_slots_.push_back(f.slot);
  }
}

uint64_t ProductEngine::full_mask() const {
  return entries_[index_.at(current_key_)].mask;
}

SeqMultiset ProductEngine::decode_key(uint64_t key) const {
  SeqMultiset s;
  for (int h = 0; h < kMaxSlots; ++h) {
    int c = static_cast<int>((key >> (h * kCountBits)) & kMaxCount);
    if (c > 0) s.add(slot_elem_[h], c);
  }
  return s;
}

SeqMultiset ProductEngine::current() const { return decode_key(current_key_); }

std::vector<SeqMultiset> ProductEngine::po_sub_multisets(
    bool only_minimal) const {
  std::vector<uint64_t> po_keys;
  for (size_t i = 1; i < entries_.size(); ++i)
    if (entries_[i].mask & 1ull) po_keys.push_back(entries_[i].key);
  auto dominates = [&](uint64_t big, uint64_t small) {
    // componentwise small <= big, small != big
    if (big == small) return false;
    for (int h = 0; h < kMaxSlots; ++h)
      if (((small >> (h * kCountBits)) & kMaxCount) >
          ((big >> (h * kCountBits)) & kMaxCount))
        return false;
    return true;
  };
  std::vector<SeqMultiset> out;
  for (uint64_t k : po_keys) {
    if (only_minimal) {
      bool minimal = true;
      for (uint64_t k2 : po_keys)
        if (dominates(k, k2)) {
          minimal = false;
          break;
        }
      if (!minimal) continue;
    }
    out.push_back(decode_key(k));
  }
  std::sort(out.begin(), out.end(), [](const SeqMultiset& a,
                                       const SeqMultiset& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    return a < b;
  });
  return out;
}

std::vector<ProductEngine::SubsetProducts> ProductEngine::all_subset_products()
    const {
  std::vector<SubsetProducts> out;
  for (size_t i = 1; i < entries_.size(); ++i)
    out.push_back({decode_key(entries_[i].key), entries_[i].mask});
  return out;
}

// ---------------------------------------------------------------------------
// one-shot queries

namespace {
void push_all(ProductEngine& e, const SeqMultiset& s) {
  for (auto [elem, c] : s.items())
    for (int i = 0; i < c; ++i) e.push(elem);
}
}  // namespace

ProductSet product_set(const Group& g, const SeqMultiset& s) {
  if (s.empty()) throw EmptySequenceError("product_set of empty sequence");
  ProductEngine e(g);
  push_all(e, s);
  return {e.full_mask(), g.order()};
}

bool has_product_one_subsequence(const Group& g, const SeqMultiset& s) {
  if (s.empty()) return false;
  ProductEngine e(g);
  for (auto [elem, c] : s.items())
    for (int i = 0; i < c; ++i) {
      if (e.trial_min_po(elem) != INT_MAX) return true;  // short-circuit
      e.push(elem);
    }
  return false;
}

std::optional<int> min_product_one_length(const Group& g,
                                          const SeqMultiset& s) {
  if (s.empty()) return std::nullopt;
  ProductEngine e(g);
  push_all(e, s);
  int m = e.min_po_length();
  if (m == INT_MAX) return std::nullopt;
  return m;
}

bool is_product_one_free(const Group& g, const SeqMultiset& s) {
  return !has_product_one_subsequence(g, s);
}

bool is_minimal_product_one(const Group& g, const SeqMultiset& s) {
  if (s.empty()) throw EmptySequenceError("empty sequence");
  ProductEngine e(g);
  push_all(e, s);
  return (e.full_mask() & 1ull) && e.min_po_length() == s.length();
}

std::vector<SeqMultiset> product_one_sub_multisets(const Group& g,
                                                   const SeqMultiset& s,
                                                   bool only_minimal) {
  ProductEngine e(g);
  push_all(e, s);
  return e.po_sub_multisets(only_minimal);
}

}  // namespace davlab
