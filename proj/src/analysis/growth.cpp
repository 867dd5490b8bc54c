#include <cmath>
#include <limits>

#include "hofseq/analysis.hpp"
#include "hofseq/error.hpp"

namespace hofseq::analysis {

double fit_loglog_slope(std::span<const Defect> b, std::size_t first_n) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  std::size_t count = 0;
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (b[i] < 1) continue;
    const double x = std::log(static_cast<double>(first_n + i));
    const double y = std::log(static_cast<double>(b[i]));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++count;
  }
  if (count < 2) throw InvalidArgument("slope fit needs at least two points with b >= 1");
  const double n = static_cast<double>(count);
  const double denom = n * sxx - sx * sx;
  if (denom <= 0) throw InvalidArgument("slope fit needs two distinct indices");
  return (n * sxy - sx * sy) / denom;
}

GrowthStats growth_stats(const SequenceState& state) {
  const auto b = state.defects();
  std::size_t positive = 0;
  for (Defect v : b) positive += v >= 1;
  if (positive < 100) throw InvalidArgument("growth statistics need at least 100 terms with b_n >= 1");

  GrowthStats out;
  out.n_first = 1;
  out.n_last = b.size();
  out.ratios.reserve(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) {
    RatioRow row;
    row.n = i + 1;
    row.b = b[i];
    const double n = static_cast<double>(row.n);
    for (int k = 2; k <= 5; ++k) {
      row.r[k - 2] = static_cast<double>(row.b) / std::pow(n, 1.0 / k);
    }
    out.ratios.push_back(row);
  }

  // Upper half of the index range: n = floor(N/2)+1 .. N.
  const std::size_t half = b.size() / 2;
  const auto upper = b.subspan(half);
  for (Defect v : upper) out.fit_points += v >= 1;
  out.alpha_fit = fit_loglog_slope(upper, half + 1);
  return out;
}

double lower_slack(double n, Defect b, int base) {
  return std::log(std::log(n)) / std::log(static_cast<double>(base)) - static_cast<double>(b);
}

BoundReport bound_checks(const SequenceState& state, const BoundCheckConfig& cfg) {
  if (state.size() < 1000) throw InvalidArgument("bound checks need at least 1000 terms");
  BoundReport rep;
  rep.lower_slack_max = -std::numeric_limits<double>::infinity();
  const double upper = cfg.upper_exponent.value();
  for (std::size_t n = 1; n <= state.size(); ++n) {
    const double x = static_cast<double>(n);
    const double a = static_cast<double>(state.term(n));
    if (n >= cfg.lower_min_n) {
      const double slack = lower_slack(x, state.defect(n), cfg.lower_log_base);
      if (slack > rep.lower_slack_max) {
        rep.lower_slack_max = slack;
        rep.lower_argmax = n;
      }
    }
    const double ratio = a / std::pow(x, upper);
    if (ratio > rep.upper_ratio_max) {
      rep.upper_ratio_max = ratio;
      rep.upper_argmax = n;
    }
    for (std::size_t c = 0; c < cfg.comparison_exponents.size(); ++c) {
      rep.comparison_ratio_max[c] =
          std::max(rep.comparison_ratio_max[c], a / std::pow(x, cfg.comparison_exponents[c].value()));
    }
  }
  return rep;
}

}  // namespace hofseq::analysis
