#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <tuple>

#include "hofseq/error.hpp"
#include "hofseq/number_theory.hpp"
#include "hofseq/sequence.hpp"

using namespace hofseq;
using namespace hofseq::nt;

namespace {

std::uint64_t sum_by_loop(const Decomposition& d) {
  std::uint64_t total = 0;
  for (std::uint64_t i = 0; i < d.length; ++i) total += d.start + i;
  return total;
}

SearchBounds bounds(int max_exp, Wide max_root = Wide(1) << 100) {
  SearchBounds b;
  b.max_exponent = max_exp;
  b.max_root_abs = max_root;
  return b;
}

std::vector<std::pair<long long, int>> pairs(const std::vector<DiophantineSolution>& sols) {
  std::vector<std::pair<long long, int>> out;
  for (const auto& s : sols) out.emplace_back(s.root.convert_to<long long>(), s.exponent);
  return out;
}

}  // namespace

TEST_CASE("is_power_of_two") {
  CHECK(is_power_of_two(1));
  CHECK(is_power_of_two(1024));
  CHECK_FALSE(is_power_of_two(9));
  CHECK_FALSE(is_power_of_two(0));
  CHECK(is_power_of_two(std::uint64_t{1} << 63));
}

TEST_CASE("consecutive_decomposition examples") {
  CHECK_FALSE(consecutive_decomposition(8).has_value());
  CHECK_FALSE(consecutive_decomposition(1).has_value());
  CHECK(consecutive_decomposition(3) == Decomposition{1, 2});
  CHECK(consecutive_decomposition(9) == Decomposition{2, 3});
  // 10 = 2 * 5, d = 5, m = 2 < 3: four terms from 1.
  CHECK(consecutive_decomposition(10) == Decomposition{1, 4});
  CHECK_THROWS_AS(consecutive_decomposition(0), InvalidArgument);
}

TEST_CASE("consecutive_decomposition sweep") {
  for (std::uint64_t n = 1; n <= 200000; ++n) {
    const auto d = consecutive_decomposition(n);
    REQUIRE(d.has_value() == !is_power_of_two(n));
    if (d) {
      REQUIRE(d->start >= 1);
      REQUIRE(d->length >= 2);
      REQUIRE(sum_by_loop(*d) == n);
      REQUIRE(decomposition_sum(*d) == n);
    }
  }
  // Large inputs near the top of the range.
  for (std::uint64_t n : {std::uint64_t{18446744073709551557ULL}, std::uint64_t{3} << 62,
                          (std::uint64_t{1} << 63) + 1}) {
    const auto d = consecutive_decomposition(n);
    REQUIRE(d.has_value());
    CHECK(decomposition_sum(*d) == n);
  }
}

TEST_CASE("decomposition agrees on generated terms") {
  const auto s = generate(Seed::classic(), 5000);
  for (std::size_t k = 3; k <= s.size(); ++k) {
    const Term a = s.term(k);
    const auto d = consecutive_decomposition(a);
    REQUIRE(d.has_value() == !is_power_of_two(a));
    if (d) REQUIRE(decomposition_sum(*d) == a);
  }
}

TEST_CASE("solve_quadratic_pow2 examples") {
  // v(v+1) = 2^k only for k = 1.
  const auto e0 = solve_quadratic_pow2(0, bounds(64));
  CHECK(pairs(e0) == std::vector<std::pair<long long, int>>{{-2, 1}, {1, 1}});

  const auto e2 = pairs(solve_quadratic_pow2(2, bounds(64)));
  for (auto expected : {std::pair<long long, int>{1, 2}, {2, 3}, {5, 5}, {90, 13}}) {
    CHECK(std::find(e2.begin(), e2.end(), expected) != e2.end());
  }
  CHECK(90 * 91 + 2 == 8192);

  CHECK(solve_quadratic_pow2(1, bounds(0)).empty());
}

TEST_CASE("solve_quadratic_pow2 matches a per-(v,k) double loop") {
  for (std::int64_t e = -20; e <= 20; ++e) {
    CAPTURE(e);
    std::set<std::pair<long long, int>> oracle;
    for (long long v = -10000; v <= 10000; ++v) {
      const long long lhs = v * v + v + e;
      for (int k = 1; k <= 20; ++k) {
        if (lhs == (1LL << k)) oracle.emplace(v, k);
      }
    }
    const auto found = solve_quadratic_pow2(e, bounds(20, 10000));
    std::set<std::pair<long long, int>> got;
    for (const auto& s : found) {
      REQUIRE(s.holds());
      REQUIRE(s.kind == EquationKind::quadratic_pow2);
      got.emplace(s.root.convert_to<long long>(), s.exponent);
    }
    CHECK(got == oracle);
    // Sorted by (k, v).
    CHECK(std::is_sorted(found.begin(), found.end(), [](const auto& a, const auto& b) {
      return std::tie(a.exponent, a.root) < std::tie(b.exponent, b.root);
    }));
  }
}

TEST_CASE("solve_square_plus_d: Ramanujan-Nagell instance") {
  const auto sols = solve_square_plus_d(7, bounds(64));
  std::vector<int> exps;
  std::vector<long long> roots;
  for (const auto& s : sols) {
    CHECK(s.holds());
    CHECK(s.beukers_ok);
    exps.push_back(s.exponent);
    roots.push_back(s.root.convert_to<long long>());
  }
  CHECK(exps == std::vector<int>{3, 4, 5, 7, 15});
  CHECK(roots == std::vector<long long>{1, 3, 5, 11, 181});

  const auto neg = pairs(solve_square_plus_d(-1, bounds(10)));
  CHECK(std::find(neg.begin(), neg.end(), std::pair<long long, int>{3, 3}) != neg.end());
  CHECK_THROWS_AS(solve_square_plus_d(0, bounds(10)), InvalidArgument);
}

TEST_CASE("solve_square_plus_d matches a scan over roots") {
  for (std::int64_t d = -60; d <= 60; ++d) {
    if (d == 0) continue;
    CAPTURE(d);
    std::set<std::pair<long long, int>> oracle;
    for (long long x = 0; x <= (1LL << 20); ++x) {
      const long long value = x * x + d;
      if (value <= 0 || (value & (value - 1)) != 0) continue;
      const int m = std::countr_zero(static_cast<unsigned long long>(value));
      if (m <= 40) oracle.emplace(x, m);
    }
    std::set<std::pair<long long, int>> got;
    for (const auto& s : solve_square_plus_d(d, bounds(40))) got.emplace(s.root.convert_to<long long>(), s.exponent);
    CHECK(got == oracle);
  }
}

TEST_CASE("solution lists only grow as bounds grow") {
  for (std::int64_t e : {-7, 2, 13}) {
    const auto small = solve_quadratic_pow2(e, bounds(30));
    const auto large = solve_quadratic_pow2(e, bounds(90));
    REQUIRE(large.size() >= small.size());
    CHECK(std::equal(small.begin(), small.end(), large.begin()));
  }
  const auto small = solve_square_plus_d(-17, bounds(40));
  const auto large = solve_square_plus_d(-17, bounds(200));
  CHECK(std::equal(small.begin(), small.end(), large.begin()));
}

TEST_CASE("Beukers bound annotation") {
  CHECK(beukers_bound_holds(434, Wide(1)));
  CHECK_FALSE(beukers_bound_holds(435, Wide(1)));
  CHECK(beukers_bound_holds(444, Wide(2)));   // 444 < 445
  CHECK_FALSE(beukers_bound_holds(445, Wide(-2)));
  CHECK_THROWS_AS(beukers_bound_holds(3, Wide(0)), InvalidArgument);
  for (const auto& s : solve_square_plus_d(-1, bounds(250))) CHECK(s.beukers_ok);
}

TEST_CASE("search bounds validation") {
  CHECK_THROWS_AS(solve_quadratic_pow2(1, bounds(kMaxExponent + 1)), InvalidArgument);
  CHECK_THROWS_AS(solve_quadratic_pow2(1, bounds(-1)), InvalidArgument);
  CHECK_THROWS_AS(solve_quadratic_pow2(1, bounds(10, 0)), InvalidArgument);
  CHECK_THROWS_AS(solve_quadratic_pow2(1, bounds(10, Wide(1) << 127)), InvalidArgument);
  CHECK_NOTHROW(solve_square_plus_d(3, bounds(kMaxExponent)));
}

TEST_CASE("isqrt is the floor square root") {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 2000; ++i) {
    Wide n = Wide(rng());
    n = (n << static_cast<int>(rng() % 180)) + Wide(rng() % 1000);
    const Wide r = isqrt(n);
    REQUIRE(r * r <= n);
    REQUIRE((r + 1) * (r + 1) > n);
  }
  CHECK(isqrt(Wide(0)) == 0);
  CHECK(isqrt(Wide(1)) == 1);
  CHECK(isqrt(Wide(15)) == 3);
  CHECK(isqrt(Wide(16)) == 4);
}

TEST_CASE("smallest odd prime factor") {
  CHECK_FALSE(smallest_odd_prime_factor(64).has_value());
  CHECK(smallest_odd_prime_factor(45) == 3u);
  CHECK(smallest_odd_prime_factor(2 * 49) == 7u);
  CHECK(smallest_odd_prime_factor(2 * 1000003ULL) == 1000003u);
}
