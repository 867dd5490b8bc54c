#include <bit>
#include <string>

#include "hofseq/analysis.hpp"
#include "hofseq/checked.hpp"
#include "hofseq/number_theory.hpp"

namespace hofseq::analysis {

std::vector<PlateauRecord> plateaus(const SequenceState& state, bool with_e_values) {
  if (state.size() < 3) throw InvalidArgument("plateaus need at least three terms");
  const bool classic = state.seed().is_classic();
  const auto b = state.defects();

  std::vector<PlateauRecord> out;
  std::size_t start = 0;
  for (std::size_t i = 1; i <= b.size(); ++i) {
    if (i < b.size() && b[i] == b[start]) continue;
    PlateauRecord rec;
    rec.b_hat = b[start];
    rec.n1 = start + 1;
    rec.n2 = i;
    rec.t_hat = checked_add(checked_cast<std::int64_t>(rec.n1), rec.b_hat, "t_hat");
    rec.s_hat = state.prefix(rec.n1 - 1);
    rec.flagged = !classic;
    if (classic && with_e_values) rec.e_values = e_values_for_plateau(rec, state);
    out.push_back(std::move(rec));
    start = i;
  }
  return out;
}

std::vector<std::int64_t> e_values_for_plateau(const PlateauRecord& record,
                                               const SequenceState& state) {
  const std::int64_t t = record.t_hat;
  const std::int64_t offset = checked_mul(t - 1, t, "(T-1)T");
  std::vector<std::int64_t> out;
  out.reserve(record.n1);
  std::int64_t c = 0;
  out.push_back(-offset);
  for (std::size_t p = record.n1 - 1; p >= 1; --p) {
    c = checked_add(c, checked_cast<std::int64_t>(state.term(p)), "block sum");
    out.push_back(checked_sub(checked_mul(std::int64_t{2}, c, "2C"), offset, "E_C"));
  }
  return out;
}

std::optional<std::size_t> plateau_n(std::span<const PlateauRecord> records, Defect b) {
  if (records.empty() || records.back().b_hat <= b) return std::nullopt;
  std::optional<std::size_t> best;
  for (const auto& r : records) {
    if (r.b_hat <= b && (!best || r.n2 > *best)) best = r.n2;
  }
  return best;
}

std::optional<std::size_t> plateau_m(std::span<const PlateauRecord> records, Defect b) {
  const auto n = plateau_n(records, b);
  if (!n) return std::nullopt;
  return *n + static_cast<std::size_t>(b) + 2;
}

std::vector<PowerTermCheck> power_term_checks(const SequenceState& state,
                                              std::span<const PlateauRecord> records) {
  if (!state.has_witnesses()) throw InvalidArgument("power-term checks need recorded witnesses");
  std::vector<PowerTermCheck> out;
  for (std::size_t i = 0; i < records.size(); ++i) {
    const auto& rec = records[i];
    if (rec.b_hat < 1 || rec.n1 < 2) continue;
    for (std::size_t n = std::max<std::size_t>(rec.n1, 3); n <= rec.n2; ++n) {
      const Term value = state.term(n);
      if (!nt::is_power_of_two(value)) continue;
      const auto w = state.witness(n);
      if (!w) continue;

      PowerTermCheck chk;
      chk.n = n;
      chk.r = std::countr_zero(value);
      chk.plateau = i;
      chk.witness = *w;
      chk.above_prefix = value > rec.s_hat;
      chk.straddles = w->p < rec.n1 && rec.n1 <= w->q;
      chk.inside = w->p >= rec.n1;
      if (chk.straddles) {
        chk.c = checked_cast<std::int64_t>(state.prefix(rec.n1 - 1) - state.prefix(w->p - 1));
        chk.v = checked_add(static_cast<std::int64_t>(w->q), rec.b_hat, "v");
        chk.e_value = checked_sub(checked_mul(std::int64_t{2}, chk.c, "2C"),
                                  checked_mul(rec.t_hat - 1, rec.t_hat, "(T-1)T"), "E_C");
        const __int128 lhs = static_cast<__int128>(1) << (chk.r + 1);
        const __int128 rhs = static_cast<__int128>(chk.v) * chk.v + chk.v + chk.e_value;
        chk.equation_holds = lhs == rhs;
      }
      out.push_back(chk);
    }
  }
  return out;
}

}  // namespace hofseq::analysis
