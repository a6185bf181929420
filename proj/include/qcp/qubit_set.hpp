#pragma once

#include <algorithm>
#include <compare>
#include <initializer_list>
#include <vector>

namespace qcp {

/// Small ordered set of qubit indices. Backed by a sorted vector; the sets
/// handled here are bounded by the partition parameter k, so linear merges
/// beat hashing.
class QubitSet {
 public:
  QubitSet() = default;
  QubitSet(std::initializer_list<int> qubits)
      : values_(qubits) {
    std::sort(values_.begin(), values_.end());
    values_.erase(std::unique(values_.begin(), values_.end()), values_.end());
  }

  static QubitSet from_vector(std::vector<int> qubits) {
    QubitSet s;
    std::sort(qubits.begin(), qubits.end());
    qubits.erase(std::unique(qubits.begin(), qubits.end()), qubits.end());
    s.values_ = std::move(qubits);
    return s;
  }

  bool contains(int q) const {
    return std::binary_search(values_.begin(), values_.end(), q);
  }

  void insert(int q) {
    auto it = std::lower_bound(values_.begin(), values_.end(), q);
    if (it == values_.end() || *it != q) values_.insert(it, q);
  }

  /// In-place set union.
  void merge(const QubitSet& other) {
    if (other.values_.empty()) return;
    std::vector<int> merged;
    merged.reserve(values_.size() + other.values_.size());
    std::set_union(values_.begin(), values_.end(), other.values_.begin(),
                   other.values_.end(), std::back_inserter(merged));
    values_ = std::move(merged);
  }

  /// |this ∪ other| without materializing the union.
  int union_size(const QubitSet& other) const {
    std::size_t i = 0, j = 0;
    int count = 0;
    while (i < values_.size() && j < other.values_.size()) {
      if (values_[i] < other.values_[j]) {
        ++i;
      } else if (values_[i] > other.values_[j]) {
        ++j;
      } else {
        ++i;
        ++j;
      }
      ++count;
    }
    count += static_cast<int>((values_.size() - i) + (other.values_.size() - j));
    return count;
  }

  bool is_subset_of(const QubitSet& other) const {
    return std::includes(other.values_.begin(), other.values_.end(),
                         values_.begin(), values_.end());
  }

  bool intersects(const QubitSet& other) const {
    std::size_t i = 0, j = 0;
    while (i < values_.size() && j < other.values_.size()) {
      if (values_[i] < other.values_[j]) {
        ++i;
      } else if (values_[i] > other.values_[j]) {
        ++j;
      } else {
        return true;
      }
    }
    return false;
  }

  int size() const { return static_cast<int>(values_.size()); }
  bool empty() const { return values_.empty(); }

  /// Ascending qubit indices.
  const std::vector<int>& values() const { return values_; }

  auto begin() const { return values_.begin(); }
  auto end() const { return values_.end(); }

  friend auto operator<=>(const QubitSet&, const QubitSet&) = default;

 private:
  std::vector<int> values_;
};

}  // namespace qcp
