#include "hofseq/kernels.hpp"

namespace hofseq::kernels {
namespace {

std::size_t first_not_increasing(const std::uint64_t* x, std::size_t n) {
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (x[i + 1] <= x[i]) return i;
  }
  return npos;
}

std::size_t first_decrease(const std::int64_t* x, std::size_t n) {
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (x[i + 1] < x[i]) return i;
  }
  return npos;
}

std::size_t first_not_convex(const std::uint64_t* s, std::size_t n) {
  for (std::size_t i = 1; i + 1 < n; ++i) {
    if (s[i + 1] - s[i] <= s[i] - s[i - 1]) return i;
  }
  return npos;
}

std::size_t first_prefix_mismatch(const std::uint64_t* prefix, const std::uint64_t* terms,
                                  std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    if (prefix[i + 1] - prefix[i] != terms[i]) return i;
  }
  return npos;
}

void subtract_base(const std::uint64_t* in, std::size_t n, std::uint64_t base,
                   std::uint64_t* out) {
  for (std::size_t j = 0; j < n; ++j) out[j] = in[j] - base;
}

void base_minus(const std::uint64_t* in, std::size_t n, std::uint64_t base, std::uint64_t* out) {
  for (std::size_t j = 0; j < n; ++j) out[j] = base - in[j];
}

void defects(const std::uint64_t* terms, std::size_t n, std::int64_t* out) {
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = static_cast<std::int64_t>(terms[i]) - static_cast<std::int64_t>(i + 1);
  }
}

std::size_t count_distinct_sorted(const std::uint64_t* x, std::size_t n) {
  if (n == 0) return 0;
  std::size_t count = 1;
  for (std::size_t i = 0; i + 1 < n; ++i) count += x[i + 1] != x[i];
  return count;
}

constexpr KernelTable kScalar{
    "scalar",      &first_not_increasing, &first_decrease, &first_not_convex,
    &first_prefix_mismatch, &subtract_base, &base_minus, &defects, &count_distinct_sorted,
};

}  // namespace

const KernelTable& scalar_table() noexcept { return kScalar; }

}  // namespace hofseq::kernels
