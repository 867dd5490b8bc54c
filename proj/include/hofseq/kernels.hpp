#pragma once

// Data-parallel inner loops used by the generators and the analysis passes.
//
// Each kernel has a portable scalar reference implementation and, where the
// build target supports it, an AVX2 (x86-64) or NEON (AArch64) variant. The
// variant is chosen once at runtime from the CPU feature flags. Setting the
// environment variable HOFSEQ_KERNELS=scalar forces the reference path.

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <string_view>
#include <vector>

namespace hofseq::kernels {

inline constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

struct KernelTable {
  std::string_view name;

  /// First i with x[i+1] <= x[i] (unsigned), or npos.
  std::size_t (*first_not_increasing)(const std::uint64_t* x, std::size_t n);

  /// First i with x[i+1] < x[i] (signed), or npos.
  std::size_t (*first_decrease)(const std::int64_t* x, std::size_t n);

  /// First i >= 1 with s[i+1] - s[i] <= s[i] - s[i-1], or npos. `s` must be
  /// strictly increasing.
  std::size_t (*first_not_convex)(const std::uint64_t* s, std::size_t n);

  /// First i with prefix[i+1] - prefix[i] != terms[i], or npos. `prefix`
  /// holds n+1 entries.
  std::size_t (*first_prefix_mismatch)(const std::uint64_t* prefix, const std::uint64_t* terms,
                                       std::size_t n);

  /// out[j] = in[j] - base, modulo 2^64.
  void (*subtract_base)(const std::uint64_t* in, std::size_t n, std::uint64_t base,
                        std::uint64_t* out);

  /// out[j] = base - in[j], modulo 2^64.
  void (*base_minus)(const std::uint64_t* in, std::size_t n, std::uint64_t base,
                     std::uint64_t* out);

  /// out[i] = terms[i] - (i + 1). Caller guarantees terms[i] <= INT64_MAX.
  void (*defects)(const std::uint64_t* terms, std::size_t n, std::int64_t* out);

  /// Number of distinct values in a sorted array.
  std::size_t (*count_distinct_sorted)(const std::uint64_t* x, std::size_t n);
};

const KernelTable& scalar_table() noexcept;

/// Variants compiled into this build that the running CPU supports, scalar first.
std::vector<const KernelTable*> available_tables();

/// The table used by the span wrappers below.
const KernelTable& active() noexcept;

inline std::size_t first_not_increasing(std::span<const std::uint64_t> x) {
  return active().first_not_increasing(x.data(), x.size());
}
inline std::size_t first_decrease(std::span<const std::int64_t> x) {
  return active().first_decrease(x.data(), x.size());
}
inline std::size_t first_not_convex(std::span<const std::uint64_t> s) {
  return active().first_not_convex(s.data(), s.size());
}
/// `prefix` must have exactly terms.size() + 1 entries.
inline std::size_t first_prefix_mismatch(std::span<const std::uint64_t> prefix,
                                         std::span<const std::uint64_t> terms) {
  return active().first_prefix_mismatch(prefix.data(), terms.data(), terms.size());
}
inline void subtract_base(std::span<const std::uint64_t> in, std::uint64_t base,
                          std::span<std::uint64_t> out) {
  active().subtract_base(in.data(), in.size(), base, out.data());
}
inline void base_minus(std::span<const std::uint64_t> in, std::uint64_t base,
                       std::span<std::uint64_t> out) {
  active().base_minus(in.data(), in.size(), base, out.data());
}
inline void defects(std::span<const std::uint64_t> terms, std::span<std::int64_t> out) {
  active().defects(terms.data(), terms.size(), out.data());
}
inline std::size_t count_distinct_sorted(std::span<const std::uint64_t> x) {
  return active().count_distinct_sorted(x.data(), x.size());
}

}  // namespace hofseq::kernels
