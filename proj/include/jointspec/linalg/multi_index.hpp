#pragma once

#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <string>
#include <vector>

namespace jointspec {

/// Exponent vector (k_1, ..., k_N) of a generalized moment.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::vector<unsigned> k) : k_(std::move(k)) {}
  MultiIndex(std::initializer_list<unsigned> k) : k_(k) {}

  static MultiIndex zeros(std::size_t n) { return MultiIndex(std::vector<unsigned>(n, 0)); }

  /// Exponent `power` at position i, zero elsewhere.
  static MultiIndex unit(std::size_t n, std::size_t i, unsigned power = 1) {
    MultiIndex m = zeros(n);
    m.k_[i] = power;
    return m;
  }

  std::size_t size() const { return k_.size(); }
  unsigned operator[](std::size_t i) const { return k_[i]; }
  unsigned& operator[](std::size_t i) { return k_[i]; }
  const std::vector<unsigned>& values() const { return k_; }

  unsigned total() const { return std::accumulate(k_.begin(), k_.end(), 0u); }
  unsigned max() const {
    unsigned m = 0;
    for (unsigned v : k_) m = v > m ? v : m;
    return m;
  }
  bool all_even() const {
    for (unsigned v : k_)
      if (v % 2 != 0) return false;
    return true;
  }

  std::string str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < k_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(k_[i]);
    }
    return s + "]";
  }

  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;

 private:
  std::vector<unsigned> k_;
};

}  // namespace jointspec
