#include <algorithm>
#include <cmath>
#include <string>

#include "hofseq/analysis.hpp"
#include "hofseq/checked.hpp"
#include "hofseq/kernels.hpp"
#include "value_set.hpp"

namespace hofseq::analysis {
namespace {

void check_stage(const SequenceState& state, std::size_t m, const DiffSetOptions& options) {
  if (m < 2) throw InvalidArgument("stage m must be at least 2 (R_m needs a block of length 2)");
  if (m > state.size()) {
    throw InvalidArgument("stage m = " + std::to_string(m) + " exceeds term count " +
                          std::to_string(state.size()));
  }
  if (m > options.m_ceiling) {
    throw InvalidArgument("stage m = " + std::to_string(m) + " exceeds the ceiling " +
                          std::to_string(options.m_ceiling));
  }
}

double stage_exponent(std::uint64_t d_size, std::size_t m) {
  return std::log(static_cast<double>(d_size)) / std::log(static_cast<double>(m + 1));
}

}  // namespace

bool DiffSetReport::inequality_holds() const noexcept {
  const auto lhs = static_cast<std::int64_t>(r_size);
  const auto rhs = static_cast<std::int64_t>((d_size - 1) / 2) - static_cast<std::int64_t>(m);
  return lhs >= rhs;
}

DiffSetReport diffset_report(const SequenceState& state, std::size_t m,
                             const DiffSetOptions& options) {
  check_stage(state, m, options);
  const auto prefix = state.prefix_sums().first(m + 1);
  const Term top = prefix[m];
  const Term span = checked_mul(Term{2}, top, "difference range");

  // Differences d = s_j - s_i are stored shifted by s_m, i.e. in [0, 2 s_m].
  detail::ValueSet diffs(span, options.dense_limit_bits);
  detail::ValueSet blocks(top, options.dense_limit_bits);
  std::vector<Term> row(m + 1);

  for (std::size_t i = 0; i <= m; ++i) {
    kernels::subtract_base(prefix, prefix[i] - top, row);
    diffs.insert(row.data(), row.size());
    if (i + 2 <= m) {
      const auto tail = prefix.subspan(i + 2);
      kernels::subtract_base(tail, prefix[i], std::span(row).first(tail.size()));
      blocks.insert(row.data(), tail.size());
    }
  }

  DiffSetReport rep;
  rep.m = m;
  rep.d_size = diffs.size();
  rep.r_size = blocks.size();
  rep.exponent = stage_exponent(rep.d_size, m);

  for (std::size_t i = 0; i <= m && rep.symmetric; ++i) {
    kernels::subtract_base(prefix, prefix[i] - top, row);
    for (Term shifted : row) {
      if (!diffs.contains(span - shifted)) {
        rep.symmetric = false;
        break;
      }
    }
  }
  return rep;
}

DiffSetSweep diffset_sweep(const SequenceState& state, std::size_t m_max,
                           const DiffSetOptions& options) {
  check_stage(state, m_max, options);
  const auto prefix = state.prefix_sums();
  const Term top = prefix[m_max];

  detail::ValueSet positive(top, options.dense_limit_bits);
  detail::ValueSet blocks(top, options.dense_limit_bits);
  detail::ValueSet singles(top, options.dense_limit_bits);
  std::vector<Term> row(m_max);

  DiffSetSweep out;
  out.rows.reserve(m_max - 1);
  for (std::size_t m = 1; m <= m_max; ++m) {
    singles.insert(state.term(m));

    // New blocks ending at m, accumulated term by term.
    Term running = state.term(m);
    for (std::size_t p = m - 1; p >= 1; --p) {
      running = checked_add(running, state.term(p), "block sum");
      blocks.insert(running);
    }

    // New positive differences s_m - s_i, 0 <= i < m.
    const auto head = prefix.first(m);
    const auto diffs = std::span(row).first(m);
    kernels::base_minus(head, prefix[m], diffs);
    for (Term d : diffs) {
      positive.insert(d);
      if (!out.first_subset_failure && !singles.contains(d) && !blocks.contains(d)) {
        out.first_subset_failure = m;
        out.subset_holds = false;
      }
    }

    if (m < 2) continue;
    DiffSetReport rep;
    rep.m = m;
    rep.d_size = 2 * positive.size() + 1;
    rep.r_size = blocks.size();
    rep.exponent = stage_exponent(rep.d_size, m);
    out.inequality_holds = out.inequality_holds && rep.inequality_holds();
    out.rows.push_back(rep);
  }
  return out;
}

CountImplicationCheck count_implication(const SequenceState& state, std::size_t m_max,
                                        const DiffSetOptions& options) {
  check_stage(state, m_max, options);
  const auto terms = state.terms();
  const Term largest = *std::max_element(terms.begin(), terms.end());

  detail::ValueSet term_values(largest, options.dense_limit_bits);
  term_values.insert(terms.data(), terms.size());
  detail::ValueSet blocks(state.prefix(m_max), options.dense_limit_bits);

  CountImplicationCheck out;
  for (std::size_t m = 2; m <= m_max; ++m) {
    Term running = state.term(m);
    for (std::size_t p = m - 1; p >= 1; --p) {
      running = checked_add(running, state.term(p), "block sum");
      if (!blocks.insert(running)) continue;
      if (running <= largest && !term_values.contains(running)) out.non_terms.push_back(running);
    }
    const std::uint64_t idx = blocks.size() + 2;
    if (idx > state.size()) {
      ++out.unverifiable;
      continue;
    }
    ++out.checked;
    if (state.term(idx) > state.prefix(m) && !out.first_failure) out.first_failure = m;
  }
  return out;
}

}  // namespace hofseq::analysis
