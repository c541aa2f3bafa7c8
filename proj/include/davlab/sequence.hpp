#pragma once

#include <string>
#include <utility>
#include <vector>

#include "davlab/group.hpp"

namespace davlab {

/// An unordered sequence over a group: a multiset of element indices.
/// All product queries depend only on counts, since Pi ranges over every
/// permutation.
class SeqMultiset {
 public:
  SeqMultiset() = default;

  static SeqMultiset of(std::initializer_list<int> elems);
  static SeqMultiset from_counts(std::vector<std::pair<int, int>> counts);

  void add(int elem, int count = 1);
  void remove(int elem, int count = 1);  // throws if not present
  int count(int elem) const;
  int length() const { return length_; }
  bool empty() const { return length_ == 0; }
  size_t support_size() const { return items_.size(); }

  /// sorted (element, count) pairs, count >= 1
  const std::vector<std::pair<int, int>>& items() const { return items_; }

  /// elements in sorted order with repetition
  std::vector<int> expand() const;

  bool is_sub_multiset_of(const SeqMultiset& other) const;

  /// Literal syntax: comma-separated tokens, each an element name with an
  /// optional "*count" suffix, e.g. "x*4, y" or "x^2*y, 3*2".
  static SeqMultiset parse(const Group& g, const std::string& text);
  std::string format(const Group& g) const;

  bool operator==(const SeqMultiset& o) const { return items_ == o.items_; }
  /// lexicographic order of the sorted element lists (canonical order)
  bool operator<(const SeqMultiset& o) const;

 private:
  std::vector<std::pair<int, int>> items_;
  int length_ = 0;
};

}  // namespace davlab
