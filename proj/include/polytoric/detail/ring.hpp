#pragma once

#include <numeric>

namespace polytoric {

template <typename Fn>
void for_each_primitive_on_ring(std::int64_t r, Fn&& fn) {
  if (r == 1) {
    // (0,1) is the only ring-1 vector with a == 0.
    fn(DualVector{0, 1});
  }
  for (std::int64_t a = 1; a <= r; ++a) {
    const bool edge = (a == r);
    for (std::int64_t b = -r; b <= r; ++b) {
      if (!edge && b != -r && b != r) continue;
      if (std::gcd(a, b) != 1) continue;
      fn(DualVector{a, b});
    }
  }
}

}  // namespace polytoric
