#pragma once

#include <bit>
#include <cstdint>
#include <unordered_set>
#include <vector>

namespace hofseq::analysis::detail {

// Set of integers in [0, max_value]. Dense bitmap when the range fits the
// configured limit, hash set otherwise.
class ValueSet {
 public:
  ValueSet(std::uint64_t max_value, std::uint64_t dense_limit_bits)
      : dense_(max_value < dense_limit_bits) {
    if (dense_) bits_.assign(max_value / 64 + 1, 0);
  }

  bool dense() const noexcept { return dense_; }

  /// Returns true if the value was not present before.
  bool insert(std::uint64_t v) {
    if (!dense_) return sparse_.insert(v).second;
    std::uint64_t& word = bits_[v >> 6];
    const std::uint64_t mask = std::uint64_t{1} << (v & 63);
    if (word & mask) return false;
    word |= mask;
    ++count_;
    return true;
  }

  void insert(const std::uint64_t* v, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) insert(v[i]);
  }

  bool contains(std::uint64_t v) const {
    if (!dense_) return sparse_.count(v) != 0;
    if ((v >> 6) >= bits_.size()) return false;
    return (bits_[v >> 6] >> (v & 63)) & 1;
  }

  std::uint64_t size() const noexcept { return dense_ ? count_ : sparse_.size(); }

 private:
  bool dense_;
  std::vector<std::uint64_t> bits_;
  std::uint64_t count_ = 0;
  std::unordered_set<std::uint64_t> sparse_;
};

}  // namespace hofseq::analysis::detail
