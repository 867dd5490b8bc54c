#include <algorithm>
#include <limits>
#include <string>

#include "hofseq/checked.hpp"
#include "hofseq/kernels.hpp"
#include "hofseq/sequence.hpp"

namespace hofseq {

SequenceState::SequenceState(Seed seed, std::vector<Term> terms, std::vector<Witness> witnesses)
    : seed_(std::move(seed)), terms_(std::move(terms)), witnesses_(std::move(witnesses)) {
  const std::size_t s = seed_.size();
  if (terms_.size() < s) throw InvalidArgument("fewer terms than seed entries");
  if (!std::equal(seed_.terms().begin(), seed_.terms().end(), terms_.begin())) {
    throw InvalidArgument("leading terms do not match the seed");
  }
  if (!witnesses_.empty() && witnesses_.size() != terms_.size() - s) {
    throw InvalidArgument("witness count does not match generated term count");
  }

  prefix_.resize(terms_.size() + 1);
  prefix_[0] = 0;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i] == 0) throw InvalidArgument("term " + std::to_string(i + 1) + " is zero");
    if (terms_[i] > static_cast<Term>(std::numeric_limits<Defect>::max())) {
      throw OverflowError("term " + std::to_string(i + 1) + " exceeds the signed 64-bit range");
    }
    if (i >= s && terms_[i] <= terms_[i - 1]) {
      throw InvalidArgument("term " + std::to_string(i + 1) + " does not exceed its predecessor");
    }
    prefix_[i + 1] = checked_add(prefix_[i], terms_[i], "prefix sum");
  }
  defects_.resize(terms_.size());
  kernels::defects(terms_, defects_);
}

std::optional<Witness> SequenceState::witness(std::size_t n) const {
  const std::size_t s = seed_.size();
  if (witnesses_.empty() || n <= s || n > terms_.size()) return std::nullopt;
  return witnesses_[n - s - 1];
}

std::vector<Term> omitted_integers(const SequenceState& state, Term limit) {
  const auto terms = state.terms();
  const Term largest = *std::max_element(terms.begin(), terms.end());
  if (limit > largest) {
    throw InvalidArgument("limit " + std::to_string(limit) + " exceeds the generated range (" +
                          std::to_string(largest) + ")");
  }
  std::vector<Term> present;
  present.reserve(terms.size());
  for (Term t : terms) {
    if (t <= limit) present.push_back(t);
  }
  std::sort(present.begin(), present.end());
  present.erase(std::unique(present.begin(), present.end()), present.end());

  std::vector<Term> out;
  Term next = 1;
  for (Term t : present) {
    for (; next < t; ++next) out.push_back(next);
    next = t + 1;
  }
  for (; next <= limit && next != 0; ++next) out.push_back(next);
  return out;
}

}  // namespace hofseq
