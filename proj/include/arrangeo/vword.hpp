#pragma once

#include <stdexcept>
#include <vector>

#include "arrangeo/word.hpp"

namespace arrangeo {

// Second route for transporting the fiber generators, independent of the
// automorphism composition: track the gap coordinates
//   V_g = (G_1 G_2 ... G_g)^-1,  V_0 = e,
// as words in the base-fiber generators. A positive half-twist on the block
// [a, b] rewrites only the interior gaps from the pre-twist values:
//   V'_g = V_{a-1} * V_{a+b-1-g}^-1 * V_b,   a <= g <= b-1.
// Each generator is recovered as G_p = V_{p-1} * V_p^-1.
struct GapCoordinates {
  int n = 0;
  std::vector<FreeWord> v;  // size n+1, v[0] = e

  static GapCoordinates initial(int n) {
    GapCoordinates s;
    s.n = n;
    s.v.resize(n + 1);
    for (int g = 1; g <= n; ++g) {
      FreeWord w;
      for (int i = g; i >= 1; --i) w.push_back(-i);
      s.v[g] = w;
    }
    return s;
  }

  void twist(int a, int b) {
    if (a < 1 || b > n || a >= b) throw std::out_of_range("twist block");
    std::vector<FreeWord> old(v.begin() + (a - 1), v.begin() + (b + 1));
    auto oldv = [&](int g) -> const FreeWord& { return old[g - (a - 1)]; };
    for (int g = a; g <= b - 1; ++g)
      v[g] = word_mul(oldv(a - 1), word_mul(word_inv(oldv(a + b - 1 - g)), oldv(b)));
  }

  FreeWord generator(int p) const {
    if (p < 1 || p > n) throw std::out_of_range("generator index");
    return word_mul(v[p - 1], word_inv(v[p]));
  }

  std::vector<FreeWord> all_generators() const {
    std::vector<FreeWord> out;
    for (int p = 1; p <= n; ++p) out.push_back(generator(p));
    return out;
  }
};

}  // namespace arrangeo
