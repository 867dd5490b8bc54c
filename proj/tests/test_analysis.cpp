#include <doctest.h>

#include <cmath>
#include <set>
#include <tuple>

#include "hofseq/analysis.hpp"
#include "hofseq/error.hpp"
#include "hofseq/sequence.hpp"

using namespace hofseq;
using namespace hofseq::analysis;

namespace {

const SequenceState& classic(std::size_t n) {
  static const SequenceState s = generate(Seed::classic(), 30000);
  REQUIRE(n <= s.size());
  return s;
}

// Direct set constructions used as the oracle for the sweep and report.
std::size_t naive_d_size(const SequenceState& s, std::size_t m) {
  std::set<long long> d;
  for (std::size_t i = 0; i <= m; ++i) {
    for (std::size_t j = 0; j <= m; ++j) {
      d.insert(static_cast<long long>(s.prefix(i)) - static_cast<long long>(s.prefix(j)));
    }
  }
  return d.size();
}

std::size_t naive_r_size(const SequenceState& s, std::size_t m) {
  std::set<Term> r;
  for (std::size_t p = 1; p <= m; ++p) {
    Term sum = s.term(p);
    for (std::size_t q = p + 1; q <= m; ++q) r.insert(sum += s.term(q));
  }
  return r.size();
}

}  // namespace

TEST_CASE("plateaus of the classic sequence") {
  const auto s = generate(Seed::classic(), 100);
  CHECK(s.defect(1) == 0);
  CHECK(s.defect(2) == 0);
  CHECK(s.defect(100) == 46);
  CHECK(s.term(100) == 146);

  const auto recs = plateaus(s);
  REQUIRE(recs.size() >= 6);
  const std::vector<std::tuple<Defect, std::size_t, std::size_t>> head{
      {0, 1, 3}, {1, 4, 5}, {2, 6, 6}, {3, 7, 8}, {5, 9, 9}, {6, 10, 13}};
  for (std::size_t i = 0; i < head.size(); ++i) {
    CAPTURE(i);
    CHECK(recs[i].b_hat == std::get<0>(head[i]));
    CHECK(recs[i].n1 == std::get<1>(head[i]));
    CHECK(recs[i].n2 == std::get<2>(head[i]));
    CHECK(recs[i].t_hat == static_cast<std::int64_t>(recs[i].n1) + recs[i].b_hat);
    CHECK_FALSE(recs[i].flagged);
  }

  // Records tile 1..n with strictly increasing levels.
  std::size_t next = 1;
  for (std::size_t i = 0; i < recs.size(); ++i) {
    REQUIRE(recs[i].n1 == next);
    REQUIRE(recs[i].n2 >= recs[i].n1);
    if (i > 0) REQUIRE(recs[i].b_hat > recs[i - 1].b_hat);
    for (std::size_t n = recs[i].n1; n <= recs[i].n2; ++n) REQUIRE(s.defect(n) == recs[i].b_hat);
    REQUIRE(recs[i].s_hat == s.prefix(recs[i].n1 - 1));
    next = recs[i].n2 + 1;
  }
  CHECK(next == 101);
}

TEST_CASE("E values of a plateau") {
  const auto s = generate(Seed::classic(), 100);
  const auto recs = plateaus(s);
  // Plateau (1, 4, 5): T = 5, suffix sums of 1,2,3 are 0,3,5,6.
  const auto& r = recs[1];
  CHECK(r.e_values == std::vector<std::int64_t>{-20, -14, -10, -8});
  CHECK(r.e_values.size() == r.n1);
  CHECK(recs[0].e_values == std::vector<std::int64_t>{0});  // n1 = 1, T = 1

  // An n1 = 2 plateau yields two values.
  PlateauRecord two;
  two.n1 = 2;
  two.b_hat = 3;
  two.t_hat = 5;
  CHECK(e_values_for_plateau(two, s) == std::vector<std::int64_t>{-20, -18});

  CHECK(plateaus(s, false)[1].e_values.empty());
  CHECK_THROWS_AS(plateaus(SequenceState(Seed::classic(), {1, 2})), InvalidArgument);
}

TEST_CASE("N(B) and M(B)") {
  const auto recs = plateaus(generate(Seed::classic(), 100));
  CHECK(plateau_n(recs, 0) == 3u);
  CHECK(plateau_n(recs, 1) == 5u);
  CHECK(plateau_n(recs, 4) == 8u);
  CHECK(plateau_n(recs, 5) == 9u);
  CHECK(plateau_m(recs, 0) == 5u);
  CHECK_FALSE(plateau_n(recs, -1).has_value());
  CHECK_FALSE(plateau_n(recs, 46).has_value());
}

TEST_CASE("non-classic seeds are flagged, not rejected") {
  const auto recs = plateaus(generate(Seed({5, 1}), 200));
  REQUIRE(!recs.empty());
  for (const auto& r : recs) {
    CHECK(r.flagged);
    CHECK(r.e_values.empty());
  }
}

TEST_CASE("power-of-two terms inside plateaus") {
  const auto& s = classic(30000);
  const auto checks = power_term_checks(s, plateaus(s, false));
  for (const auto& c : checks) {
    CAPTURE(c.n);
    CHECK(s.term(c.n) == (Term{1} << c.r));
    CHECK_FALSE(c.inside);
    if (c.straddles) CHECK(c.equation_holds);
  }
  CHECK_THROWS_AS(power_term_checks(SequenceState(Seed::classic(), {1, 2, 3}),
                                    plateaus(generate(Seed::classic(), 3))),
                  InvalidArgument);
}

TEST_CASE("diffset report: small stages") {
  const auto& s = classic(2000);
  const auto r2 = diffset_report(s, 2);
  CHECK(r2.d_size == 7);
  CHECK(r2.r_size == 1);
  CHECK(r2.symmetric);
  CHECK(r2.inequality_holds());
  CHECK(diffset_report(s, 10).d_size == 77);
  CHECK(diffset_report(s, 100).d_size == 6861);
  CHECK_THROWS_AS(diffset_report(s, 1), InvalidArgument);
  DiffSetOptions tight;
  tight.m_ceiling = 50;
  CHECK_THROWS_AS(diffset_report(s, 51, tight), InvalidArgument);
}

TEST_CASE("diffset report matches set construction") {
  const auto& s = classic(300);
  for (std::size_t m : {2, 3, 7, 31, 120, 257}) {
    CAPTURE(m);
    const auto r = diffset_report(s, m);
    CHECK(r.d_size == naive_d_size(s, m));
    CHECK(r.r_size == naive_r_size(s, m));
    CHECK(r.exponent == doctest::Approx(std::log(double(r.d_size)) / std::log(double(m + 1))));
  }
}

TEST_CASE("diffset sweep agrees with single-stage reports") {
  const auto& s = classic(1000);
  const auto sweep = diffset_sweep(s, 400);
  REQUIRE(sweep.rows.size() == 399);
  CHECK(sweep.subset_holds);
  CHECK(sweep.inequality_holds);
  CHECK_FALSE(sweep.first_subset_failure.has_value());
  for (std::size_t m : {2, 3, 50, 199, 400}) {
    CAPTURE(m);
    const auto one = diffset_report(s, m);
    const auto& row = sweep.rows[m - 2];
    CHECK(row.m == m);
    CHECK(row.d_size == one.d_size);
    CHECK(row.r_size == one.r_size);
  }

  // Hash-set fallback gives the same numbers.
  DiffSetOptions hashed;
  hashed.dense_limit_bits = 64;
  const auto sweep_h = diffset_sweep(s, 120, hashed);
  for (std::size_t m = 2; m <= 120; ++m) {
    REQUIRE(sweep_h.rows[m - 2].d_size == sweep.rows[m - 2].d_size);
    REQUIRE(sweep_h.rows[m - 2].r_size == sweep.rows[m - 2].r_size);
  }
  CHECK(diffset_report(s, 150, hashed).d_size == sweep.rows[148].d_size);
}

TEST_CASE("diffset exponent grows towards two") {
  const auto r = diffset_report(classic(1000), 1000);
  CHECK(r.d_size == 623739);
  CHECK(r.exponent >= 1.5);
  CHECK(r.exponent < 2.0);
}

TEST_CASE("representable set equals the later terms") {
  const auto& s = classic(2000);
  CHECK(representable_prefix_equality(s, 3));
  CHECK(representable_prefix_equality(s, 4));
  CHECK(representable_prefix_equality(s, 500));
  CHECK(representable_prefix_equality(s, 2000));
  CHECK_THROWS_AS(representable_prefix_equality(s, 2), InvalidArgument);
  CHECK_THROWS_AS(representable_prefix_equality(s, 2001), InvalidArgument);
  CHECK_FALSE(first_gap_counterexample(s, 2000).has_value());
}

TEST_CASE("count implication") {
  const auto& s = classic(2000);
  const auto c = count_implication(s, 2000);
  CHECK(c.checked > 0);
  CHECK_FALSE(c.first_failure.has_value());
  CHECK(c.non_terms.empty());
  CHECK(c.checked + c.unverifiable == 1999);
}

TEST_CASE("ratio table and slope fit") {
  const auto& s = classic(30000);
  const auto g = growth_stats(s);
  REQUIRE(g.ratios.size() == 30000);
  CHECK(g.n_first == 1);
  CHECK(g.n_last == 30000);
  const auto& row20 = g.ratios[19];
  CHECK(row20.n == 20);
  CHECK(row20.b == 12);
  CHECK(row20.r[0] == doctest::Approx(12.0 / std::sqrt(20.0)));
  CHECK(row20.r[0] == doctest::Approx(2.683).epsilon(1e-3));
  CHECK(row20.r[3] == doctest::Approx(12.0 / std::pow(20.0, 0.2)));
  CHECK(g.alpha_fit > 0.2);
  CHECK(g.alpha_fit < 0.5);
  CHECK(g.fit_points == 15000);

  const std::vector<Defect> flat(500, 7);
  CHECK(fit_loglog_slope(flat, 10) == doctest::Approx(0.0).epsilon(1e-12));
  std::vector<Defect> linear;
  for (int n = 1; n <= 200; ++n) linear.push_back(n * 3);
  CHECK(fit_loglog_slope(linear, 1) == doctest::Approx(1.0));
  CHECK_THROWS_AS(fit_loglog_slope(std::vector<Defect>{0, 0, 5}, 1), InvalidArgument);
  CHECK_THROWS_AS(growth_stats(generate(Seed::classic(), 50)), InvalidArgument);
}

TEST_CASE("bound checks") {
  CHECK(lower_slack(std::exp(1.0), 3) == doctest::Approx(-3.0));
  CHECK(lower_slack(std::exp(std::exp(1.0)), 0) == doctest::Approx(1.0 / std::log(20.0)));

  const auto five = generate(Seed::classic(), 5000);
  const auto r = bound_checks(five);
  // Oracle: the same maxima by direct loop.
  double upper = 0;
  std::size_t upper_at = 0;
  double lower = -1e300;
  std::size_t lower_at = 0;
  const double e = 4175.0 / 2506.0;
  for (std::size_t n = 1; n <= 5000; ++n) {
    const double u = double(five.term(n)) / std::pow(double(n), e);
    if (u > upper) upper = u, upper_at = n;
    if (n >= 16) {
      const double l = std::log(std::log(double(n))) / std::log(20.0) - double(five.defect(n));
      if (l > lower) lower = l, lower_at = n;
    }
  }
  CHECK(r.upper_ratio_max == doctest::Approx(upper));
  CHECK(r.upper_argmax == upper_at);
  CHECK(r.upper_argmax == 1);
  CHECK(r.lower_slack_max == doctest::Approx(lower));
  CHECK(r.lower_argmax == lower_at);
  CHECK(r.lower_slack_max < 0);
  CHECK(r.comparison_ratio_max[0] >= 1.0);
  CHECK_THROWS_AS(bound_checks(generate(Seed::classic(), 999)), InvalidArgument);
}

TEST_CASE("linear-time structural checks") {
  const auto& s = classic(30000);
  CHECK_FALSE(first_defect_decrease(s).has_value());
  CHECK_FALSE(first_convexity_failure(s).has_value());
  CHECK_FALSE(first_prefix_inconsistency(s).has_value());

  // (5,1) descends: b_1 = 4, b_2 = -1.
  const auto odd = generate(Seed({5, 1}), 50);
  CHECK(first_defect_decrease(odd) == 1u);
  CHECK(first_convexity_failure(odd) == 1u);
}
