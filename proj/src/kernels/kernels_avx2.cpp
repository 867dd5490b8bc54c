// AVX2 kernel variants. This translation unit is compiled with -mavx2 and is
// only entered after the dispatcher has confirmed CPU support.

#include <immintrin.h>

#include <bit>

#include "tables.hpp"

namespace hofseq::kernels::detail {
namespace {

inline __m256i load(const void* p) { return _mm256_loadu_si256(static_cast<const __m256i*>(p)); }

inline int lane_mask(__m256i v) { return _mm256_movemask_pd(_mm256_castsi256_pd(v)); }

// Unsigned 64-bit a > b via the sign-flip trick.
inline __m256i cmpgt_u64(__m256i a, __m256i b) {
  const __m256i sign = _mm256_set1_epi64x(static_cast<long long>(0x8000000000000000ULL));
  return _mm256_cmpgt_epi64(_mm256_xor_si256(a, sign), _mm256_xor_si256(b, sign));
}

std::size_t first_not_increasing(const std::uint64_t* x, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 < n; i += 4) {
    const int ok = lane_mask(cmpgt_u64(load(x + i + 1), load(x + i)));
    if (ok != 0xF) return i + static_cast<std::size_t>(std::countr_zero(static_cast<unsigned>(~ok & 0xF)));
  }
  for (; i + 1 < n; ++i) {
    if (x[i + 1] <= x[i]) return i;
  }
  return npos;
}

std::size_t first_decrease(const std::int64_t* x, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 < n; i += 4) {
    const int bad = lane_mask(_mm256_cmpgt_epi64(load(x + i), load(x + i + 1)));
    if (bad != 0) return i + static_cast<std::size_t>(std::countr_zero(static_cast<unsigned>(bad)));
  }
  for (; i + 1 < n; ++i) {
    if (x[i + 1] < x[i]) return i;
  }
  return npos;
}

std::size_t first_not_convex(const std::uint64_t* s, std::size_t n) {
  std::size_t i = 1;
  for (; i + 4 < n; i += 4) {
    const __m256i lo = load(s + i - 1);
    const __m256i mid = load(s + i);
    const __m256i hi = load(s + i + 1);
    const __m256i prev_gap = _mm256_sub_epi64(mid, lo);
    const __m256i next_gap = _mm256_sub_epi64(hi, mid);
    const int ok = lane_mask(cmpgt_u64(next_gap, prev_gap));
    if (ok != 0xF) return i + static_cast<std::size_t>(std::countr_zero(static_cast<unsigned>(~ok & 0xF)));
  }
  for (; i + 1 < n; ++i) {
    if (s[i + 1] - s[i] <= s[i] - s[i - 1]) return i;
  }
  return npos;
}

std::size_t first_prefix_mismatch(const std::uint64_t* prefix, const std::uint64_t* terms,
                                  std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256i diff = _mm256_sub_epi64(load(prefix + i + 1), load(prefix + i));
    const int eq = lane_mask(_mm256_cmpeq_epi64(diff, load(terms + i)));
    if (eq != 0xF) return i + static_cast<std::size_t>(std::countr_zero(static_cast<unsigned>(~eq & 0xF)));
  }
  for (; i < n; ++i) {
    if (prefix[i + 1] - prefix[i] != terms[i]) return i;
  }
  return npos;
}

void subtract_base(const std::uint64_t* in, std::size_t n, std::uint64_t base,
                   std::uint64_t* out) {
  const __m256i b = _mm256_set1_epi64x(static_cast<long long>(base));
  std::size_t j = 0;
  for (; j + 4 <= n; j += 4) {
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + j), _mm256_sub_epi64(load(in + j), b));
  }
  for (; j < n; ++j) out[j] = in[j] - base;
}

void base_minus(const std::uint64_t* in, std::size_t n, std::uint64_t base, std::uint64_t* out) {
  const __m256i b = _mm256_set1_epi64x(static_cast<long long>(base));
  std::size_t j = 0;
  for (; j + 4 <= n; j += 4) {
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + j), _mm256_sub_epi64(b, load(in + j)));
  }
  for (; j < n; ++j) out[j] = base - in[j];
}

void defects(const std::uint64_t* terms, std::size_t n, std::int64_t* out) {
  __m256i idx = _mm256_setr_epi64x(1, 2, 3, 4);
  const __m256i step = _mm256_set1_epi64x(4);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), _mm256_sub_epi64(load(terms + i), idx));
    idx = _mm256_add_epi64(idx, step);
  }
  for (; i < n; ++i) {
    out[i] = static_cast<std::int64_t>(terms[i]) - static_cast<std::int64_t>(i + 1);
  }
}

std::size_t count_distinct_sorted(const std::uint64_t* x, std::size_t n) {
  if (n == 0) return 0;
  std::size_t count = 1;
  std::size_t i = 0;
  for (; i + 4 < n; i += 4) {
    const int eq = lane_mask(_mm256_cmpeq_epi64(load(x + i + 1), load(x + i)));
    count += 4 - static_cast<std::size_t>(std::popcount(static_cast<unsigned>(eq)));
  }
  for (; i + 1 < n; ++i) count += x[i + 1] != x[i];
  return count;
}

constexpr KernelTable kAvx2{
    "avx2",        &first_not_increasing, &first_decrease, &first_not_convex,
    &first_prefix_mismatch, &subtract_base, &base_minus, &defects, &count_distinct_sorted,
};

}  // namespace

const KernelTable& avx2_table() noexcept { return kAvx2; }

}  // namespace hofseq::kernels::detail
