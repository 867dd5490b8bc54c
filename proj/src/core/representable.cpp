#include <string>

#include "hofseq/error.hpp"
#include "hofseq/sequence.hpp"

namespace hofseq {

std::optional<Witness> find_block(std::span<const Term> prefix, Term x) {
  // For each right end j, advance i until prefix[j] - prefix[i] <= x. Since
  // prefix is strictly increasing at most one i matches a given j.
  std::size_t i = 0;
  for (std::size_t j = 2; j < prefix.size(); ++j) {
    while (i + 2 <= j && prefix[j] - prefix[i] > x) ++i;
    if (i + 2 > j) continue;
    if (prefix[j] - prefix[i] == x) {
      return Witness{static_cast<std::uint32_t>(i + 1), static_cast<std::uint32_t>(j), x};
    }
  }
  return std::nullopt;
}

std::optional<Witness> is_representable(Term x, const SequenceState& state, std::size_t k_limit) {
  if (k_limit > state.size()) {
    throw InvalidArgument("k_limit " + std::to_string(k_limit) + " exceeds term count " +
                          std::to_string(state.size()));
  }
  return find_block(state.prefix_sums().first(k_limit + 1), x);
}

}  // namespace hofseq
