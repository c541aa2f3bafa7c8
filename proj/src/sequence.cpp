#include "davlab/sequence.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace davlab {

SeqMultiset SeqMultiset::of(std::initializer_list<int> elems) {
  SeqMultiset s;
  for (int e : elems) s.add(e);
  return s;
}

SeqMultiset SeqMultiset::from_counts(std::vector<std::pair<int, int>> counts) {
  SeqMultiset s;
  for (auto [e, c] : counts) s.add(e, c);
  return s;
}

void SeqMultiset::add(int elem, int count) {
  if (count <= 0) throw Error("add: count must be positive");
  auto it = std::lower_bound(items_.begin(), items_.end(),
                             std::make_pair(elem, 0));
  if (it != items_.end() && it->first == elem) it->second += count;
  else items_.insert(it, {elem, count});
  length_ += count;
}

void SeqMultiset::remove(int elem, int count) {
  auto it = std::lower_bound(items_.begin(), items_.end(),
                             std::make_pair(elem, 0));
  if (it == items_.end() || it->first != elem || it->second < count)
    throw Error("remove: element not present with that multiplicity");
  it->second -= count;
  if (it->second == 0) items_.erase(it);
  length_ -= count;
}

int SeqMultiset::count(int elem) const {
  auto it = std::lower_bound(items_.begin(), items_.end(),
                             std::make_pair(elem, 0));
  return it != items_.end() && it->first == elem ? it->second : 0;
}

std::vector<int> SeqMultiset::expand() const {
  std::vector<int> out;
  out.reserve(length_);
  for (auto [e, c] : items_)
    for (int i = 0; i < c; ++i) out.push_back(e);
  return out;
}

bool SeqMultiset::is_sub_multiset_of(const SeqMultiset& other) const {
  for (auto [e, c] : items_)
    if (other.count(e) < c) return false;
  return true;
}

bool SeqMultiset::operator<(const SeqMultiset& o) const {
  return expand() < o.expand();
}

namespace {
std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}
bool plain_int(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isdigit(c);
  });
}
}  // namespace

SeqMultiset SeqMultiset::parse(const Group& g, const std::string& text) {
  SeqMultiset s;
  std::stringstream ss(text);
  std::string token;
  while (std::getline(ss, token, ',')) {
    token = trim(token);
    if (token.empty()) continue;
    // split on '*': a trailing pure-integer part is a multiplicity
    std::vector<std::string> parts;
    std::stringstream ts(token);
    std::string part;
    while (std::getline(ts, part, '*')) parts.push_back(part);
    int mult = 1;
    if (parts.size() >= 2 && plain_int(parts.back())) {
      mult = std::stoi(parts.back());
      parts.pop_back();
      if (mult <= 0) throw ParseError("multiplicity must be positive in '" +
                                      token + "'");
    }
    std::string elem_text = parts[0];
    for (size_t i = 1; i < parts.size(); ++i) elem_text += "*" + parts[i];
    s.add(g.parse_element(elem_text), mult);
  }
  return s;
}

std::string SeqMultiset::format(const Group& g) const {
  std::string out;
  for (auto [e, c] : items_) {
    if (!out.empty()) out += ", ";
    out += g.element_name(e);
    if (c > 1) out += "*" + std::to_string(c);
  }
  return out;
}

}  // namespace davlab
