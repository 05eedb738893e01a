#include "etaphi/checked.hpp"

#include <algorithm>
#include <limits>

namespace etaphi {

std::string to_string(Int v) {
  if (v == 0) return "0";
  const bool neg = v < 0;
  // Work with negative magnitudes so INT128_MIN prints correctly.
  std::string s;
  Int x = neg ? v : -v;
  while (x != 0) {
    const int digit = static_cast<int>(-(x % 10));
    s.push_back(static_cast<char>('0' + digit));
    x /= 10;
  }
  if (neg) s.push_back('-');
  std::reverse(s.begin(), s.end());
  return s;
}

Int parse_int(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty integer literal");
  std::size_t i = 0;
  bool neg = false;
  if (s[0] == '-' || s[0] == '+') {
    neg = s[0] == '-';
    i = 1;
  }
  if (i == s.size()) throw std::invalid_argument("malformed integer literal: " + s);
  Int v = 0;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("malformed integer literal: " + s);
    v = checked::mul(v, 10);
    v = neg ? checked::sub(v, s[i] - '0') : checked::add(v, s[i] - '0');
  }
  return v;
}

std::int64_t narrow64(Int v, std::int64_t where) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
    throw OverflowError("value does not fit in 64 bits", where);
  return static_cast<std::int64_t>(v);
}

}  // namespace etaphi
