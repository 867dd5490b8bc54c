// NEON kernel variants for AArch64, two 64-bit lanes per vector. Advanced
// SIMD is mandatory on AArch64, so no runtime feature probe is needed.

#include <arm_neon.h>

#include "tables.hpp"

namespace hofseq::kernels::detail {
namespace {

// All-ones in both lanes.
inline bool all_set(uint64x2_t m) { return (vgetq_lane_u64(m, 0) & vgetq_lane_u64(m, 1)) == ~0ULL; }

std::size_t first_not_increasing(const std::uint64_t* x, std::size_t n) {
  std::size_t i = 0;
  for (; i + 2 < n; i += 2) {
    const uint64x2_t ok = vcgtq_u64(vld1q_u64(x + i + 1), vld1q_u64(x + i));
    if (!all_set(ok)) return vgetq_lane_u64(ok, 0) ? i + 1 : i;
  }
  for (; i + 1 < n; ++i) {
    if (x[i + 1] <= x[i]) return i;
  }
  return npos;
}

std::size_t first_decrease(const std::int64_t* x, std::size_t n) {
  std::size_t i = 0;
  for (; i + 2 < n; i += 2) {
    const uint64x2_t ok = vcgeq_s64(vld1q_s64(x + i + 1), vld1q_s64(x + i));
    if (!all_set(ok)) return vgetq_lane_u64(ok, 0) ? i + 1 : i;
  }
  for (; i + 1 < n; ++i) {
    if (x[i + 1] < x[i]) return i;
  }
  return npos;
}

std::size_t first_not_convex(const std::uint64_t* s, std::size_t n) {
  std::size_t i = 1;
  for (; i + 2 < n; i += 2) {
    const uint64x2_t lo = vld1q_u64(s + i - 1);
    const uint64x2_t mid = vld1q_u64(s + i);
    const uint64x2_t hi = vld1q_u64(s + i + 1);
    const uint64x2_t ok = vcgtq_u64(vsubq_u64(hi, mid), vsubq_u64(mid, lo));
    if (!all_set(ok)) return vgetq_lane_u64(ok, 0) ? i + 1 : i;
  }
  for (; i + 1 < n; ++i) {
    if (s[i + 1] - s[i] <= s[i] - s[i - 1]) return i;
  }
  return npos;
}

std::size_t first_prefix_mismatch(const std::uint64_t* prefix, const std::uint64_t* terms,
                                  std::size_t n) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const uint64x2_t diff = vsubq_u64(vld1q_u64(prefix + i + 1), vld1q_u64(prefix + i));
    const uint64x2_t eq = vceqq_u64(diff, vld1q_u64(terms + i));
    if (!all_set(eq)) return vgetq_lane_u64(eq, 0) ? i + 1 : i;
  }
  for (; i < n; ++i) {
    if (prefix[i + 1] - prefix[i] != terms[i]) return i;
  }
  return npos;
}

void subtract_base(const std::uint64_t* in, std::size_t n, std::uint64_t base,
                   std::uint64_t* out) {
  const uint64x2_t b = vdupq_n_u64(base);
  std::size_t j = 0;
  for (; j + 2 <= n; j += 2) vst1q_u64(out + j, vsubq_u64(vld1q_u64(in + j), b));
  for (; j < n; ++j) out[j] = in[j] - base;
}

void base_minus(const std::uint64_t* in, std::size_t n, std::uint64_t base, std::uint64_t* out) {
  const uint64x2_t b = vdupq_n_u64(base);
  std::size_t j = 0;
  for (; j + 2 <= n; j += 2) vst1q_u64(out + j, vsubq_u64(b, vld1q_u64(in + j)));
  for (; j < n; ++j) out[j] = base - in[j];
}

void defects(const std::uint64_t* terms, std::size_t n, std::int64_t* out) {
  const std::uint64_t start[2] = {1, 2};
  uint64x2_t idx = vld1q_u64(start);
  const uint64x2_t step = vdupq_n_u64(2);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    vst1q_s64(out + i, vreinterpretq_s64_u64(vsubq_u64(vld1q_u64(terms + i), idx)));
    idx = vaddq_u64(idx, step);
  }
  for (; i < n; ++i) {
    out[i] = static_cast<std::int64_t>(terms[i]) - static_cast<std::int64_t>(i + 1);
  }
}

std::size_t count_distinct_sorted(const std::uint64_t* x, std::size_t n) {
  if (n == 0) return 0;
  std::size_t count = 1;
  std::size_t i = 0;
  for (; i + 2 < n; i += 2) {
    const uint64x2_t eq = vceqq_u64(vld1q_u64(x + i + 1), vld1q_u64(x + i));
    count += 2 - static_cast<std::size_t>((vgetq_lane_u64(eq, 0) & 1) + (vgetq_lane_u64(eq, 1) & 1));
  }
  for (; i + 1 < n; ++i) count += x[i + 1] != x[i];
  return count;
}

constexpr KernelTable kNeon{
    "neon",        &first_not_increasing, &first_decrease, &first_not_convex,
    &first_prefix_mismatch, &subtract_base, &base_minus, &defects, &count_distinct_sorted,
};

}  // namespace

const KernelTable& neon_table() noexcept { return kNeon; }

}  // namespace hofseq::kernels::detail
