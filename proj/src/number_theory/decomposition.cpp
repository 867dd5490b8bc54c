#include <bit>

#include "hofseq/checked.hpp"
#include "hofseq/number_theory.hpp"

namespace hofseq::nt {

std::optional<std::uint64_t> smallest_odd_prime_factor(std::uint64_t n) {
  if (n == 0) throw InvalidArgument("smallest_odd_prime_factor requires n >= 1");
  const std::uint64_t odd = n >> std::countr_zero(n);
  if (odd == 1) return std::nullopt;
  for (std::uint64_t f = 3; f <= odd / f; f += 2) {
    if (odd % f == 0) return f;
  }
  return odd;
}

std::optional<Decomposition> consecutive_decomposition(std::uint64_t n) {
  if (n == 0) throw InvalidArgument("consecutive_decomposition requires N >= 1");
  const auto d = smallest_odd_prime_factor(n);
  if (!d) return std::nullopt;
  const std::uint64_t m = n / *d;
  const std::uint64_t half_up = (*d + 1) / 2;
  if (m >= half_up) return Decomposition{m - (*d - 1) / 2, *d};
  return Decomposition{half_up - m, 2 * m};
}

std::uint64_t decomposition_sum(const Decomposition& d) {
  // length * (2 start + length - 1) / 2, one factor of which is even.
  const std::uint64_t twice_mid =
      checked_sub(checked_add(checked_mul(std::uint64_t{2}, d.start), d.length), std::uint64_t{1});
  if (d.length % 2 == 0) return checked_mul(d.length / 2, twice_mid, "decomposition sum");
  return checked_mul(d.length, twice_mid / 2, "decomposition sum");
}

}  // namespace hofseq::nt
