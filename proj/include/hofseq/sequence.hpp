#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace hofseq {

using Term = std::uint64_t;
using Defect = std::int64_t;

/// Largest term count accepted by the generators. Window indices are stored
/// as 32-bit values.
inline constexpr std::size_t kMaxTerms = std::size_t{1} << 31;

/// Initial terms u_1..u_s of a greedy consecutive-sum sequence.
///
/// Entries must be positive and small enough that a_n - n stays
/// representable as a signed 64-bit defect. Monotonicity is not required.
class Seed {
 public:
  explicit Seed(std::vector<Term> terms);

  /// The classical seed (1, 2).
  static Seed classic();

  /// Parses a comma separated list such as "1,2" or "2, 5, 7".
  static Seed parse(const std::string& text);

  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_classic() const noexcept;
  std::string to_string() const;

  friend bool operator==(const Seed&, const Seed&) = default;

 private:
  std::vector<Term> terms_;
};

/// Consecutive block a_p + ... + a_q (1-indexed, q > p) and its value.
struct Witness {
  std::uint32_t p = 0;
  std::uint32_t q = 0;
  Term value = 0;

  friend bool operator==(const Witness&, const Witness&) = default;
};

/// Heap frontier entry: the block [p, q] with its running sum.
struct Window {
  Term sum = 0;
  std::uint32_t p = 0;
  std::uint32_t q = 0;
};

/// Generated terms of one seed together with prefix sums and defects.
///
/// Indexing follows the usual 1-based conventions: term(n) is a_n for
/// 1 <= n <= size(), prefix(m) is s_m for 0 <= m <= size() with s_0 = 0,
/// and defect(n) is b_n = a_n - n. The span accessors expose the raw
/// 0-based storage (prefix_sums() has size()+1 entries).
///
/// A state is immutable once built and may be shared across threads.
class SequenceState {
 public:
  /// Builds a state from explicit terms, recomputing prefix sums and
  /// defects under checked arithmetic. The leading terms must equal the
  /// seed. `witnesses` is either empty or has one entry per generated
  /// (non-seed) term.
  SequenceState(Seed seed, std::vector<Term> terms, std::vector<Witness> witnesses = {});

  const Seed& seed() const noexcept { return seed_; }
  std::size_t size() const noexcept { return terms_.size(); }

  Term term(std::size_t n) const { return terms_.at(n - 1); }
  Term prefix(std::size_t m) const { return prefix_.at(m); }
  Defect defect(std::size_t n) const { return defects_.at(n - 1); }
  Term last() const { return terms_.back(); }

  std::span<const Term> terms() const noexcept { return terms_; }
  std::span<const Term> prefix_sums() const noexcept { return prefix_; }
  std::span<const Defect> defects() const noexcept { return defects_; }

  bool has_witnesses() const noexcept { return !witnesses_.empty(); }
  /// Witness recorded for a_n, or nothing for seed terms and imported states.
  std::optional<Witness> witness(std::size_t n) const;

 private:
  Seed seed_;
  std::vector<Term> terms_;
  std::vector<Term> prefix_;
  std::vector<Defect> defects_;
  std::vector<Witness> witnesses_;
};

/// Heap-frontier generator. Enumerates all block sums in increasing order
/// with one active window per start index and emits every value that
/// exceeds the current last term.
///
/// Throws InvalidArgument when n_max is below the seed length or above
/// kMaxTerms, and OverflowError if any sum leaves the 64-bit range.
SequenceState generate(const Seed& seed, std::size_t n_max);

/// Definitional generator: tries a_{k-1}+1, a_{k-1}+2, ... until one is a
/// block sum of earlier terms. Quadratic; intended as an oracle for
/// n_max up to roughly 10^4.
SequenceState brute_force_generate(const Seed& seed, std::size_t n_max);

/// Finds i < j with j - i >= 2 and prefix[j] - prefix[i] == x by a
/// two-pointer sweep. `prefix` must be strictly increasing.
std::optional<Witness> find_block(std::span<const Term> prefix, Term x);

/// Whether x is a sum of at least two consecutive terms among
/// a_1..a_{k_limit}; returns one such block.
std::optional<Witness> is_representable(Term x, const SequenceState& state, std::size_t k_limit);

/// Sorted positive integers <= limit that are not terms of the sequence.
/// Throws InvalidArgument if limit exceeds the largest generated term.
std::vector<Term> omitted_integers(const SequenceState& state, Term limit);

}  // namespace hofseq
