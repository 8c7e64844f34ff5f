#pragma once

#include <cstdint>
#include <stdexcept>

namespace sgraph {

/// Edge sign. Products follow the usual rule: two negatives make a positive.
enum class Sign : std::int8_t { Plus = 1, Minus = -1 };

constexpr Sign operator*(Sign a, Sign b) {
  return a == b ? Sign::Plus : Sign::Minus;
}

constexpr Sign& operator*=(Sign& a, Sign b) {
  a = a * b;
  return a;
}

constexpr int to_int(Sign s) { return static_cast<int>(s); }

constexpr char to_char(Sign s) { return s == Sign::Plus ? '+' : '-'; }

inline Sign sign_from_char(char c) {
  if (c == '+') return Sign::Plus;
  if (c == '-') return Sign::Minus;
  throw std::invalid_argument("sign must be '+' or '-'");
}

}  // namespace sgraph
