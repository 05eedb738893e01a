#pragma once

// Published q-expansion of eta(7t)^7/eta(t) through degree 50, as printed,
// and the entries where the printed value disagrees with the computation.

#include <array>
#include <cstdint>
#include <vector>

namespace etaphi::reference {

inline constexpr std::int64_t kFirstDegree = 2;
inline constexpr std::int64_t kLastDegree = 50;

// degrees 2..50
inline constexpr std::array<std::int64_t, 49> kPublishedPhi7 = {
    1,   1,   2,   3,   5,   7,   11,  8,   15,  16,  21,  21,  28,  24,  44,  36,  49,
    45,  63,  49,  74,  64,  85,  72,  105, 82,  133, 112, 120, 120, 165, 122, 180, 147,
    186, 176, 225, 168, 255, 21,  245, 224, 324, 219, 338, 276, 341, 294, 385};

inline std::int64_t published_phi7(std::int64_t n) { return kPublishedPhi7.at(static_cast<std::size_t>(n - kFirstDegree)); }

struct Discrepancy {
  std::int64_t n;
  std::int64_t published;
  std::int64_t computed;
};

// The printed 21 at q^41 drops a digit; both pipelines give 210.
inline const std::vector<Discrepancy>& known_discrepancies() {
  static const std::vector<Discrepancy> d = {{41, 21, 210}};
  return d;
}

}  // namespace etaphi::reference
