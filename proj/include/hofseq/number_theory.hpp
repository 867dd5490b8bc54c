#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace hofseq::nt {

/// Fixed 256-bit signed integer with overflow checking. Wide enough for
/// 2^m with m up to kMaxExponent and for squares of the matching roots.
using Wide = boost::multiprecision::checked_int256_t;

inline constexpr int kMaxExponent = 250;

/// N = start + (start+1) + ... + (start+length-1).
struct Decomposition {
  std::uint64_t start = 0;
  std::uint64_t length = 0;

  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

[[nodiscard]] constexpr bool is_power_of_two(std::uint64_t n) noexcept {
  return n != 0 && (n & (n - 1)) == 0;
}

/// Smallest odd prime factor of n by trial division; nothing if n is a
/// power of two.
std::optional<std::uint64_t> smallest_odd_prime_factor(std::uint64_t n);

/// Writes N as a sum of at least two consecutive positive integers using
/// its smallest odd prime divisor d and cofactor m = N/d:
///   m >= (d+1)/2  ->  d terms centred on m
///   otherwise     ->  2m terms starting at (d+1)/2 - m
/// Returns nothing exactly when N is a power of two. Requires N >= 1.
std::optional<Decomposition> consecutive_decomposition(std::uint64_t n);

/// Sum of the decomposition's terms, computed under checked arithmetic.
std::uint64_t decomposition_sum(const Decomposition& d);

struct SearchBounds {
  int max_exponent = 64;
  Wide max_root_abs = Wide(1) << 126;

  /// Throws InvalidArgument unless both bounds are positive and within the
  /// 256-bit working width.
  void validate() const;
};

enum class EquationKind { quadratic_pow2, square_plus_d };

std::string_view to_string(EquationKind kind) noexcept;

/// A solution of v^2 + v + E = 2^k (quadratic_pow2) or x^2 + D = 2^m
/// (square_plus_d). `parameter` is E or D, `root` is v or x, `exponent`
/// is k or m.
struct DiophantineSolution {
  EquationKind kind = EquationKind::quadratic_pow2;
  std::int64_t parameter = 0;
  Wide root = 0;
  int exponent = 0;
  /// exponent satisfies the explicit Beukers-type bound m < 435 + 10 log2|D|.
  /// Quadratic solutions are mapped to (2v+1)^2 + (4E-1) = 2^(k+2) first.
  bool beukers_ok = false;

  /// Re-evaluates the defining equation exactly.
  bool holds() const;

  friend bool operator==(const DiophantineSolution&, const DiophantineSolution&) = default;
};

/// Whether m < 435 + 10 * log2|d|. Requires d != 0.
bool beukers_bound_holds(int m, const Wide& d);

/// Floor square root of a non-negative value.
Wide isqrt(const Wide& n);

/// All integer solutions of v^2 + v + E = 2^k with 1 <= k <= max_exponent
/// and |v| <= max_root_abs, sorted by (k, v). Each k is resolved by the
/// discriminant (2v+1)^2 = 2^(k+2) - 4E + 1.
std::vector<DiophantineSolution> solve_quadratic_pow2(std::int64_t e, const SearchBounds& bounds);

/// All solutions of x^2 + D = 2^m with 0 <= m <= max_exponent and
/// 0 <= x <= max_root_abs (x and -x are reported once), sorted by m.
/// Throws InvalidArgument if D == 0.
std::vector<DiophantineSolution> solve_square_plus_d(std::int64_t d, const SearchBounds& bounds);

}  // namespace hofseq::nt
