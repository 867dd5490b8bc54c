#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "hofseq/sequence.hpp"

namespace hofseq::analysis {

// ---------------------------------------------------------------------------
// Plateaus of b_n
// ---------------------------------------------------------------------------

/// Maximal run n1..n2 on which b_n equals b_hat.
struct PlateauRecord {
  Defect b_hat = 0;
  std::size_t n1 = 0;
  std::size_t n2 = 0;
  std::int64_t t_hat = 0;  ///< n1 + b_hat
  Term s_hat = 0;          ///< a_1 + ... + a_{n1-1}
  /// E_C = 2C - (t_hat-1) t_hat for every suffix sum C of a_1..a_{n1-1}
  /// (including the empty one). Filled for the classic seed only.
  std::vector<std::int64_t> e_values;
  /// Set when the seed is not classic; b_n need not be monotone there.
  bool flagged = false;
};

/// Splits 1..size() into maximal constant runs of b_n. Requires at least
/// three terms. E values are skipped when `with_e_values` is false (they
/// cost O(n1) per record).
std::vector<PlateauRecord> plateaus(const SequenceState& state, bool with_e_values = true);

/// E_C = 2C - (t_hat-1) t_hat over C = a_p + ... + a_{n1-1}, p = n1 down to 1,
/// so the first entry corresponds to the empty block C = 0.
std::vector<std::int64_t> e_values_for_plateau(const PlateauRecord& record,
                                               const SequenceState& state);

/// N(B) = max{n : b_n <= B}. Nothing when B is below b_1 or when the
/// computed range cannot determine it (B >= b_last).
std::optional<std::size_t> plateau_n(std::span<const PlateauRecord> records, Defect b);

/// M(B) = N(B) + B + 2.
std::optional<std::size_t> plateau_m(std::span<const PlateauRecord> records, Defect b);

/// How a power-of-two term a_n = 2^r inside a plateau is represented by its
/// recorded witness [p, q].
struct PowerTermCheck {
  std::size_t n = 0;
  int r = 0;
  std::size_t plateau = 0;  ///< index into the plateau list
  Witness witness;
  bool above_prefix = false;  ///< 2^r > s_hat of the plateau
  /// p < n1 <= q: the witness straddles the plateau start.
  bool straddles = false;
  /// p >= n1: the block would be consecutive integers, which is impossible
  /// for a power of two.
  bool inside = false;
  std::int64_t c = 0;        ///< a_p + ... + a_{n1-1} when straddling
  std::int64_t v = 0;        ///< q + b_hat when straddling
  std::int64_t e_value = 0;  ///< 2c - (t_hat-1) t_hat
  /// 2^(r+1) == v^2 + v + e_value, checked exactly (straddling only).
  bool equation_holds = false;
};

/// Inspects every power-of-two term in a plateau with b_hat >= 1, n1 >= 2
/// and n >= 3. Requires recorded witnesses.
std::vector<PowerTermCheck> power_term_checks(const SequenceState& state,
                                              std::span<const PlateauRecord> records);

// ---------------------------------------------------------------------------
// Difference sets of the prefix-sum set
// ---------------------------------------------------------------------------

struct DiffSetOptions {
  /// Largest stage accepted (the single-stage report is quadratic in m).
  std::size_t m_ceiling = 5000;
  /// Value ranges up to this many bits use a dense bitmap; larger ranges
  /// fall back to a hash set.
  std::uint64_t dense_limit_bits = std::uint64_t{1} << 30;
};

struct DiffSetReport {
  std::size_t m = 0;
  std::uint64_t d_size = 0;  ///< |D_m|, D_m = S_m - S_m with S_m = {s_0..s_m}
  std::uint64_t r_size = 0;  ///< |R_m|, sums of >= 2 consecutive terms among a_1..a_m
  double exponent = 0.0;     ///< log(d_size) / log(m + 1)
  bool symmetric = true;     ///< d in D_m  <=>  -d in D_m

  /// r_size >= (d_size - 1)/2 - m.
  bool inequality_holds() const noexcept;
};

/// Exact single-stage report over all (m+1)^2 prefix differences. Requires
/// 2 <= m <= min(size(), m_ceiling).
DiffSetReport diffset_report(const SequenceState& state, std::size_t m,
                             const DiffSetOptions& options = {});

struct DiffSetSweep {
  std::vector<DiffSetReport> rows;  ///< m = 2..m_max
  /// D_m^+ is contained in {a_1..a_m} u R_m for every m.
  bool subset_holds = true;
  std::optional<std::size_t> first_subset_failure;
  bool inequality_holds = true;
};

/// Incremental report for every stage 2..m_max. D_m^+ is built from prefix
/// differences and R_m from running block sums of the terms, so the subset
/// check compares two independent constructions.
DiffSetSweep diffset_sweep(const SequenceState& state, std::size_t m_max,
                           const DiffSetOptions& options = {});

// ---------------------------------------------------------------------------
// Representable set vs. the terms
// ---------------------------------------------------------------------------

/// The distinct block sums of a_1..a_K that are <= a_K equal {a_3, ..., a_K}.
/// Requires 3 <= K <= min(size(), 2000) and a strictly increasing prefix.
bool representable_prefix_equality(const SequenceState& state, std::size_t k);

/// First integer strictly between a_{k-1} and a_k (3 <= k <= k_max) that is a
/// block sum of the computed terms, if any.
std::optional<Term> first_gap_counterexample(const SequenceState& state, std::size_t k_max);

struct CountImplicationCheck {
  std::size_t checked = 0;      ///< stages whose a_{|R_m|+2} lies in range
  std::size_t unverifiable = 0; ///< stages needing terms beyond the range
  std::optional<std::size_t> first_failure;
  /// Block sums of a_1..a_{m_max} that are not terms even though they lie
  /// inside the computed range. Must stay empty.
  std::vector<Term> non_terms;
};

/// For m = 2..m_max: every element of R_m within the computed range is a
/// term, and |R_m| >= n implies a_{n+2} <= s_m (checked at n = |R_m|).
CountImplicationCheck count_implication(const SequenceState& state, std::size_t m_max,
                                        const DiffSetOptions& options = {});

// ---------------------------------------------------------------------------
// Growth statistics and bound checks
// ---------------------------------------------------------------------------

struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;
  double value() const noexcept { return static_cast<double>(num) / static_cast<double>(den); }
};

struct RatioRow {
  std::size_t n = 0;
  Defect b = 0;
  std::array<double, 4> r{};  ///< b_n / n^(1/k) for k = 2, 3, 4, 5
};

struct GrowthStats {
  std::size_t n_first = 0;
  std::size_t n_last = 0;
  double alpha_fit = 0.0;
  std::size_t fit_points = 0;
  std::vector<RatioRow> ratios;
};

/// Unweighted least-squares slope of log b against log n over the points
/// with b >= 1. `b[i]` belongs to index `first_n + i`. Throws
/// InvalidArgument with fewer than two usable points.
double fit_loglog_slope(std::span<const Defect> b, std::size_t first_n);

/// Ratio tables for every n and the log-log slope fitted over the upper half
/// of the index range. Requires at least 100 terms with b_n >= 1.
GrowthStats growth_stats(const SequenceState& state);

struct BoundCheckConfig {
  /// The lower bound is (log log n) / log(lower_log_base) - O(1).
  int lower_log_base = 20;
  Rational upper_exponent{4175, 2506};
  /// Difference-set exponent for convex sets and the improved upper
  /// exponent, kept for comparison.
  std::array<Rational, 2> comparison_exponents{Rational{6681, 4175}, Rational{688, 413}};
  /// The lower metric is only evaluated where log log n > 0 is comfortably
  /// defined.
  std::size_t lower_min_n = 16;
};

struct BoundReport {
  double lower_slack_max = 0.0;  ///< max over n of (log log n)/log 20 - b_n
  std::size_t lower_argmax = 0;
  double upper_ratio_max = 0.0;  ///< max over n of a_n / n^upper_exponent
  std::size_t upper_argmax = 0;
  std::array<double, 2> comparison_ratio_max{};  ///< max a_n / n^c per comparison exponent
};

/// (log log n) / log(base) - b.
double lower_slack(double n, Defect b, int base = 20);

/// Requires at least 1000 terms.
BoundReport bound_checks(const SequenceState& state, const BoundCheckConfig& cfg = {});

// ---------------------------------------------------------------------------
// Linear-time structural checks
// ---------------------------------------------------------------------------

/// First n with b_{n+1} < b_n, if any.
std::optional<std::size_t> first_defect_decrease(const SequenceState& state);

/// First i with s_{i+1} - s_i <= s_i - s_{i-1}, if any.
std::optional<std::size_t> first_convexity_failure(const SequenceState& state);

/// First m with s_m - s_{m-1} != a_m, if any.
std::optional<std::size_t> first_prefix_inconsistency(const SequenceState& state);

}  // namespace hofseq::analysis
