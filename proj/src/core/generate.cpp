#include <queue>
#include <string>
#include <vector>

#include "hofseq/checked.hpp"
#include "hofseq/sequence.hpp"

namespace hofseq {
namespace {

// Min-heap order on (sum, p); the start index breaks ties so the recorded
// witness is deterministic.
struct LaterWindow {
  bool operator()(const Window& a, const Window& b) const noexcept {
    return a.sum != b.sum ? a.sum > b.sum : a.p > b.p;
  }
};

void check_length(const Seed& seed, std::size_t n_max) {
  if (n_max < seed.size()) {
    throw InvalidArgument("n_max " + std::to_string(n_max) + " is below the seed length " +
                          std::to_string(seed.size()));
  }
  if (n_max > kMaxTerms) throw InvalidArgument("n_max " + std::to_string(n_max) + " is too large");
}

}  // namespace

SequenceState generate(const Seed& seed, std::size_t n_max) {
  check_length(seed, n_max);

  std::vector<Term> terms(seed.terms());
  terms.reserve(n_max);
  std::vector<Witness> witnesses;
  witnesses.reserve(n_max - seed.size());

  std::vector<Window> storage;
  storage.reserve(n_max);
  std::priority_queue<Window, std::vector<Window>, LaterWindow> frontier(LaterWindow{},
                                                                         std::move(storage));
  // Windows whose extension needs the term currently being decided.
  std::vector<Window> parked;

  // Extends [p, q] to [p, q+1]; 1-based q, so a_{q+1} is terms[q].
  auto extend = [&](const Window& w) {
    if (w.q < terms.size()) {
      frontier.push(Window{checked_add(w.sum, terms[w.q], "window sum"), w.p, w.q + 1});
    } else {
      parked.push_back(w);
    }
  };

  for (std::uint32_t p = 1; p < seed.size(); ++p) {
    frontier.push(Window{checked_add(terms[p - 1], terms[p], "window sum"), p, p + 1});
  }

  while (terms.size() < n_max) {
    const Window best = frontier.top();
    while (!frontier.empty() && frontier.top().sum == best.sum) {
      const Window w = frontier.top();
      frontier.pop();
      extend(w);
    }
    if (best.sum <= terms.back()) continue;  // only possible for non-monotone seeds

    if (best.sum > static_cast<Term>(std::numeric_limits<Defect>::max())) {
      throw OverflowError("term " + std::to_string(terms.size() + 1) +
                          " exceeds the signed 64-bit range");
    }
    terms.push_back(best.sum);
    witnesses.push_back(Witness{best.p, best.q, best.sum});

    std::vector<Window> rearm;
    rearm.swap(parked);
    for (const Window& w : rearm) extend(w);
    const auto k = static_cast<std::uint32_t>(terms.size());
    frontier.push(Window{checked_add(terms[k - 2], terms[k - 1], "window sum"), k - 1, k});
  }

  return SequenceState(seed, std::move(terms), std::move(witnesses));
}

SequenceState brute_force_generate(const Seed& seed, std::size_t n_max) {
  check_length(seed, n_max);

  std::vector<Term> terms(seed.terms());
  std::vector<Term> prefix{0};
  for (Term t : terms) prefix.push_back(checked_add(prefix.back(), t, "prefix sum"));
  std::vector<Witness> witnesses;

  while (terms.size() < n_max) {
    Term candidate = terms.back();
    for (;;) {
      candidate = checked_add(candidate, Term{1}, "candidate");
      if (candidate > static_cast<Term>(std::numeric_limits<Defect>::max())) {
        throw OverflowError("term " + std::to_string(terms.size() + 1) +
                            " exceeds the signed 64-bit range");
      }
      if (auto w = find_block(prefix, candidate)) {
        witnesses.push_back(*w);
        break;
      }
    }
    terms.push_back(candidate);
    prefix.push_back(checked_add(prefix.back(), candidate, "prefix sum"));
  }

  return SequenceState(seed, std::move(terms), std::move(witnesses));
}

}  // namespace hofseq
