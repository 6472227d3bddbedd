#pragma once

#include <algorithm>
#include <initializer_list>
#include <string>
#include <vector>

namespace odet {

/// Sorted set of small non-negative integers. Used for state sets,
/// acceptance sets and index sets alike; the canonical (sorted, duplicate
/// free) representation makes equality, ordering and hashing cheap.
class StateSet {
public:
  StateSet() = default;
  StateSet(std::initializer_list<int> xs) : items_(xs) { normalize(); }
  explicit StateSet(std::vector<int> xs) : items_(std::move(xs)) { normalize(); }

  bool empty() const { return items_.empty(); }
  int size() const { return static_cast<int>(items_.size()); }

  bool contains(int x) const {
    return std::binary_search(items_.begin(), items_.end(), x);
  }

  void insert(int x) {
    auto it = std::lower_bound(items_.begin(), items_.end(), x);
    if (it == items_.end() || *it != x) items_.insert(it, x);
  }

  void erase(int x) {
    auto it = std::lower_bound(items_.begin(), items_.end(), x);
    if (it != items_.end() && *it == x) items_.erase(it);
  }

  void clear() { items_.clear(); }

  auto begin() const { return items_.begin(); }
  auto end() const { return items_.end(); }

  const std::vector<int>& values() const { return items_; }

  int min() const { return items_.front(); }
  int max() const { return items_.back(); }

  bool subset_of(const StateSet& other) const {
    return std::includes(other.items_.begin(), other.items_.end(),
                         items_.begin(), items_.end());
  }

  bool intersects(const StateSet& other) const {
    auto a = items_.begin();
    auto b = other.items_.begin();
    while (a != items_.end() && b != other.items_.end()) {
      if (*a < *b)
        ++a;
      else if (*b < *a)
        ++b;
      else
        return true;
    }
    return false;
  }

  friend StateSet set_union(const StateSet& a, const StateSet& b) {
    StateSet r;
    std::set_union(a.items_.begin(), a.items_.end(), b.items_.begin(),
                   b.items_.end(), std::back_inserter(r.items_));
    return r;
  }

  friend StateSet set_intersection(const StateSet& a, const StateSet& b) {
    StateSet r;
    std::set_intersection(a.items_.begin(), a.items_.end(), b.items_.begin(),
                          b.items_.end(), std::back_inserter(r.items_));
    return r;
  }

  friend StateSet set_difference(const StateSet& a, const StateSet& b) {
    StateSet r;
    std::set_difference(a.items_.begin(), a.items_.end(), b.items_.begin(),
                        b.items_.end(), std::back_inserter(r.items_));
    return r;
  }

  void unite_with(const StateSet& other) { *this = set_union(*this, other); }
  void subtract(const StateSet& other) { *this = set_difference(*this, other); }

  /// {0..n-1}
  static StateSet full(int n) {
    StateSet r;
    r.items_.resize(static_cast<std::size_t>(n < 0 ? 0 : n));
    for (int i = 0; i < n; ++i) r.items_[static_cast<std::size_t>(i)] = i;
    return r;
  }

  bool operator==(const StateSet& other) const = default;
  bool operator<(const StateSet& other) const { return items_ < other.items_; }

  /// "{0,2,5}"; "{}" when empty.
  std::string to_string() const {
    std::string s = "{";
    for (std::size_t i = 0; i < items_.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(items_[i]);
    }
    s += '}';
    return s;
  }

private:
  void normalize() {
    std::sort(items_.begin(), items_.end());
    items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
  }

  std::vector<int> items_;
};

}  // namespace odet
