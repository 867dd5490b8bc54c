#include <algorithm>
#include <string>

#include "hofseq/analysis.hpp"
#include "hofseq/checked.hpp"
#include "hofseq/kernels.hpp"

namespace hofseq::analysis {
namespace {

std::optional<std::size_t> found(std::size_t idx) {
  if (idx == kernels::npos) return std::nullopt;
  return idx;
}

}  // namespace

bool representable_prefix_equality(const SequenceState& state, std::size_t k) {
  if (k < 3 || k > state.size() || k > 2000) {
    throw InvalidArgument("K must lie in [3, min(term count, 2000)], got " + std::to_string(k));
  }
  const Term limit = state.term(k);
  std::vector<Term> sums;
  for (std::size_t q = 2; q <= k; ++q) {
    Term running = state.term(q);
    for (std::size_t p = q - 1; p >= 1; --p) {
      running = checked_add(running, state.term(p), "block sum");
      if (running > limit) break;
      sums.push_back(running);
    }
  }
  std::sort(sums.begin(), sums.end());
  if (kernels::count_distinct_sorted(sums) != k - 2) return false;
  sums.erase(std::unique(sums.begin(), sums.end()), sums.end());
  const auto expected = state.terms().subspan(2, k - 2);
  return std::equal(sums.begin(), sums.end(), expected.begin(), expected.end());
}

std::optional<Term> first_gap_counterexample(const SequenceState& state, std::size_t k_max) {
  if (k_max > state.size()) throw InvalidArgument("k_max exceeds the term count");
  const auto prefix = state.prefix_sums();
  const std::size_t k_first = std::max<std::size_t>(3, state.seed().size() + 1);
  for (std::size_t k = k_first; k <= k_max; ++k) {
    for (Term x = state.term(k - 1) + 1; x < state.term(k); ++x) {
      if (find_block(prefix, x)) return x;
    }
  }
  return std::nullopt;
}

std::optional<std::size_t> first_defect_decrease(const SequenceState& state) {
  const auto idx = found(kernels::first_decrease(state.defects()));
  if (!idx) return std::nullopt;
  return *idx + 1;
}

std::optional<std::size_t> first_convexity_failure(const SequenceState& state) {
  return found(kernels::first_not_convex(state.prefix_sums()));
}

std::optional<std::size_t> first_prefix_inconsistency(const SequenceState& state) {
  const auto idx = found(kernels::first_prefix_mismatch(state.prefix_sums(), state.terms()));
  if (!idx) return std::nullopt;
  return *idx + 1;
}

}  // namespace hofseq::analysis
