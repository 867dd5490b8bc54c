#include <string>

#include "hofseq/error.hpp"
#include "hofseq/number_theory.hpp"

namespace hofseq::nt {
namespace {

Wide pow2(int k) { return Wide(1) << k; }

Wide abs_wide(const Wide& x) { return x < 0 ? Wide(-x) : x; }

}  // namespace

std::string_view to_string(EquationKind kind) noexcept {
  switch (kind) {
    case EquationKind::quadratic_pow2:
      return "quadratic_pow2";
    case EquationKind::square_plus_d:
      return "square_plus_D";
  }
  return "unknown";
}

void SearchBounds::validate() const {
  if (max_exponent < 0 || max_exponent > kMaxExponent) {
    throw InvalidArgument("max exponent must lie in [0, " + std::to_string(kMaxExponent) + "]");
  }
  if (max_root_abs < 1 || max_root_abs > pow2(126)) {
    throw InvalidArgument("max root must lie in [1, 2^126]");
  }
}

Wide isqrt(const Wide& n) {
  if (n < 0) throw InvalidArgument("isqrt of a negative value");
  if (n < 2) return n;
  // Newton iteration from an upper bound, monotonically decreasing.
  Wide x = Wide(1) << ((boost::multiprecision::msb(n) / 2) + 1);
  for (;;) {
    Wide y = (x + n / x) / 2;
    if (y >= x) return x;
    x = y;
  }
}

bool beukers_bound_holds(int m, const Wide& d) {
  if (d == 0) throw InvalidArgument("Beukers bound needs D != 0");
  if (m < 435) return true;
  // m - 435 < 10 log2|D|  <=>  2^(m-435) < |D|^10
  using boost::multiprecision::cpp_int;
  const cpp_int lhs = cpp_int(1) << (m - 435);
  const cpp_int rhs = boost::multiprecision::pow(cpp_int(abs_wide(d)), 10);
  return lhs < rhs;
}

bool DiophantineSolution::holds() const {
  const Wide rhs = pow2(exponent);
  if (kind == EquationKind::quadratic_pow2) return root * root + root + parameter == rhs;
  return root * root + parameter == rhs;
}

std::vector<DiophantineSolution> solve_quadratic_pow2(std::int64_t e, const SearchBounds& bounds) {
  bounds.validate();
  std::vector<DiophantineSolution> out;
  const Wide shifted_d = Wide(4) * e - 1;
  for (int k = 1; k <= bounds.max_exponent; ++k) {
    const Wide disc = pow2(k + 2) - Wide(4) * e + 1;
    if (disc < 0) continue;
    const Wide r = isqrt(disc);
    if (r * r != disc) continue;
    // disc is odd, so r is odd and both roots are integers.
    const bool beukers = beukers_bound_holds(k + 2, shifted_d);
    for (const Wide& v : {Wide((-r - 1) / 2), Wide((r - 1) / 2)}) {
      if (abs_wide(v) > bounds.max_root_abs) continue;
      out.push_back({EquationKind::quadratic_pow2, e, v, k, beukers});
    }
  }
  return out;
}

std::vector<DiophantineSolution> solve_square_plus_d(std::int64_t d, const SearchBounds& bounds) {
  if (d == 0) throw InvalidArgument("square_plus_D requires D != 0");
  bounds.validate();
  std::vector<DiophantineSolution> out;
  for (int m = 0; m <= bounds.max_exponent; ++m) {
    const Wide target = pow2(m) - d;
    if (target < 0) continue;
    const Wide x = isqrt(target);
    if (x * x != target || x > bounds.max_root_abs) continue;
    out.push_back({EquationKind::square_plus_d, d, x, m, beukers_bound_holds(m, Wide(d))});
  }
  return out;
}

}  // namespace hofseq::nt
