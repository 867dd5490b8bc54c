#pragma once

#include <cstdint>
#include <limits>
#include <string_view>

#include "hofseq/error.hpp"

namespace hofseq {

// Thin wrappers over the compiler overflow builtins. Every arithmetic step
// that can grow with the sequence goes through one of these.

template <typename T>
[[nodiscard]] inline T checked_add(T a, T b, std::string_view what = "addition") {
  T out;
  if (__builtin_add_overflow(a, b, &out)) {
    throw OverflowError(std::string("overflow in ") + std::string(what));
  }
  return out;
}

template <typename T>
[[nodiscard]] inline T checked_sub(T a, T b, std::string_view what = "subtraction") {
  T out;
  if (__builtin_sub_overflow(a, b, &out)) {
    throw OverflowError(std::string("overflow in ") + std::string(what));
  }
  return out;
}

template <typename T>
[[nodiscard]] inline T checked_mul(T a, T b, std::string_view what = "multiplication") {
  T out;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw OverflowError(std::string("overflow in ") + std::string(what));
  }
  return out;
}

/// Converts with a range check; throws OverflowError when `value` does not fit.
template <typename To, typename From>
[[nodiscard]] inline To checked_cast(From value, std::string_view what = "conversion") {
  To out;
  if (__builtin_add_overflow(value, From{0}, &out)) {
    throw OverflowError(std::string("overflow in ") + std::string(what));
  }
  return out;
}

}  // namespace hofseq
