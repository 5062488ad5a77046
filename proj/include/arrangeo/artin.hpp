#pragma once

#include <cstdio>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "arrangeo/word.hpp"

namespace arrangeo {

// Automorphism of the free group on n generators, kept as reduced images
// together with its factorization into elementary half-twists, so exact
// inverses stay available.
//
// Elementary s_i:  G_i -> G_i G_{i+1} G_i^-1,  G_{i+1} -> G_i.
struct ArtinAutomorphism {
  int n = 0;
  std::vector<FreeWord> img;                  // img[i-1] = image of G_i
  std::vector<std::pair<int, int>> factors;   // (i, +1/-1), first applied first

  static ArtinAutomorphism identity(int n) {
    ArtinAutomorphism a;
    a.n = n;
    a.img.resize(n);
    for (int i = 1; i <= n; ++i) a.img[i - 1] = {i};
    return a;
  }

  static ArtinAutomorphism elementary(int n, int i, int sign = +1) {
    if (i < 1 || i + 1 > n) throw std::out_of_range("elementary index");
    ArtinAutomorphism a = identity(n);
    if (sign > 0) {
      a.img[i - 1] = {i, i + 1, -i};
      a.img[i] = {i};
    } else {
      a.img[i - 1] = {i + 1};
      a.img[i] = {-(i + 1), i, i + 1};
    }
    a.factors = {{i, sign > 0 ? +1 : -1}};
    return a;
  }

  FreeWord apply(const FreeWord& w) const {
    FreeWord out;
    for (int g : w) {
      int idx = g > 0 ? g : -g;
      if (idx < 1 || idx > n) throw std::out_of_range("letter outside rank");
      const FreeWord& im = img[idx - 1];
      if (g > 0) out.insert(out.end(), im.begin(), im.end());
      else {
        FreeWord inv = word_inv(im);
        out.insert(out.end(), inv.begin(), inv.end());
      }
    }
    return free_reduce(out);
  }

  // this . other (other acts first).
  ArtinAutomorphism compose_after(const ArtinAutomorphism& other) const {
    if (n != other.n) throw std::invalid_argument("rank mismatch");
    ArtinAutomorphism r;
    r.n = n;
    r.img.reserve(n);
    for (const auto& w : other.img) r.img.push_back(apply(w));
    r.factors = other.factors;
    r.factors.insert(r.factors.end(), factors.begin(), factors.end());
    return r;
  }

  ArtinAutomorphism inverse() const {
    ArtinAutomorphism r = identity(n);
    for (auto it = factors.rbegin(); it != factors.rend(); ++it)
      r = elementary(n, it->first, -it->second).compose_after(r);
    r.factors.clear();
    r.factors.reserve(factors.size());
    for (auto it = factors.rbegin(); it != factors.rend(); ++it)
      r.factors.emplace_back(it->first, -it->second);
    return r;
  }

  // Image of each generator must be a conjugate w G_p w^-1; returns the
  // permutation i -> p. Holds for every braid-induced automorphism.
  std::vector<int> permutation() const {
    std::vector<int> perm(n);
    std::vector<char> seen(n + 1, 0);
    for (int i = 0; i < n; ++i) {
      const FreeWord& w = img[i];
      if (w.size() % 2 == 0) throw std::logic_error("even-length image");
      size_t t = w.size() / 2;
      for (size_t j = 0; j < t; ++j)
        if (w[j] != -w[w.size() - 1 - j])
          throw std::logic_error("image is not a conjugated generator");
      if (w[t] < 0) throw std::logic_error("image core is inverted");
      perm[i] = w[t];
      if (seen[w[t]]) throw std::logic_error("image cores collide");
      seen[w[t]] = 1;
    }
    return perm;
  }

  // The ordered product G_1 G_2 ... G_n is fixed by every automorphism
  // induced by a braid of the fiber; kept as a cheap integrity check.
  bool preserves_product() const {
    FreeWord prod;
    for (int i = 1; i <= n; ++i) prod.push_back(i);
    return apply(prod) == prod;
  }

  bool same_images(const ArtinAutomorphism& o) const {
    return n == o.n && img == o.img;
  }
  bool is_identity_map() const { return same_images(identity(n)); }

  std::uint64_t fingerprint() const {
    std::uint64_t h = 14695981039346656037ull;
    h = fnv1a64(h, static_cast<std::uint64_t>(n));
    for (const auto& w : img) {
      h = fnv1a64(h, static_cast<std::uint64_t>(w.size()));
      for (int g : w) h = fnv1a64(h, static_cast<std::uint64_t>(static_cast<std::int64_t>(g)));
    }
    return h;
  }
  std::string fingerprint_hex() const {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx",
                  static_cast<unsigned long long>(fingerprint()));
    return std::string(buf);
  }
};

// Positive half-twist on the contiguous block [a, b]: the factor sequence
// s_a; s_{a+1}, s_a; ...; s_{b-1}, ..., s_a, first listed applied first.
inline ArtinAutomorphism half_twist_block(int n, int a, int b) {
  if (a < 1 || b > n || a > b) throw std::out_of_range("block range");
  ArtinAutomorphism r = ArtinAutomorphism::identity(n);
  for (int top = a; top < b; ++top)
    for (int i = top; i >= a; --i)
      r = ArtinAutomorphism::elementary(n, i).compose_after(r);
  return r;
}

}  // namespace arrangeo
