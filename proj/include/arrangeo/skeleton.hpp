#pragma once

#include <stdexcept>
#include <vector>

#include "arrangeo/word.hpp"

namespace arrangeo {

struct MalformedSkeleton : std::runtime_error {
  explicit MalformedSkeleton(const std::string& what) : std::runtime_error(what) {}
};

// Path skeleton in a fiber with n strands: endpoints on the listed strands,
// consecutive endpoints joined by a segment that passes the strands strictly
// between them either above or below.
struct Passage {
  int p;
  bool above;
};

struct Skeleton {
  int n = 0;
  std::vector<int> endpoints;               // strictly increasing strand indices
  std::vector<std::vector<Passage>> passages;  // one list per segment, increasing p
};

inline void check_skeleton(const Skeleton& sk) {
  if (sk.endpoints.size() < 2) throw MalformedSkeleton("fewer than two endpoints");
  for (size_t i = 0; i < sk.endpoints.size(); ++i) {
    if (sk.endpoints[i] < 1 || sk.endpoints[i] > sk.n)
      throw MalformedSkeleton("endpoint outside strand range");
    if (i && sk.endpoints[i] <= sk.endpoints[i - 1])
      throw MalformedSkeleton("endpoints not strictly increasing");
  }
  if (sk.passages.size() != sk.endpoints.size() - 1)
    throw MalformedSkeleton("segment count mismatch");
  for (size_t s = 0; s < sk.passages.size(); ++s) {
    int lo = sk.endpoints[s], hi = sk.endpoints[s + 1];
    int prev = lo;
    for (const auto& pa : sk.passages[s]) {
      if (pa.p <= lo || pa.p >= hi)
        throw MalformedSkeleton("passage outside its segment");
      if (pa.p <= prev && prev != lo)
        throw MalformedSkeleton("passages not strictly increasing");
      for (int e : sk.endpoints)
        if (pa.p == e) throw MalformedSkeleton("passage at an endpoint");
      prev = pa.p;
    }
  }
}

// Pull the skeleton down to the basepoint region, cutting the last segment at
// cut index c (c passages of that segment stay left of the cut). Walking a
// strand away from its endpoint, each strand passed above wraps the word in
// that strand's generator; passages below and endpoint crossings are free.
inline std::vector<FreeWord> skeleton_words_at_cut(const Skeleton& sk, size_t cut) {
  check_skeleton(sk);
  size_t m = sk.endpoints.size();
  const auto& last = sk.passages[m - 2];
  if (cut > last.size()) throw MalformedSkeleton("cut outside last segment");

  std::vector<FreeWord> out;
  for (size_t i = 0; i + 1 < m; ++i) {
    // walk right from endpoint i+1 through segments i..m-2, stopping at the cut
    FreeWord w{sk.endpoints[i]};
    for (size_t s = i; s + 1 < m; ++s) {
      size_t upto = (s + 2 == m) ? cut : sk.passages[s].size();
      for (size_t j = 0; j < upto; ++j)
        if (sk.passages[s][j].above)
          w = word_conj(w, word_gen(sk.passages[s][j].p));
    }
    out.push_back(w);
  }
  // the rightmost endpoint walks left across the tail of the last segment
  FreeWord w{sk.endpoints[m - 1]};
  for (size_t j = last.size(); j-- > cut;)
    if (last[j].above) w = word_conj(w, word_gen(-last[j].p));
  out.push_back(w);
  return out;
}

// Canonical cut: from the rightmost endpoint walk left over passages below,
// consume the first passage above as well, and cut just left of it; with no
// passage above, cut before the whole segment.
inline size_t skeleton_canonical_cut(const Skeleton& sk) {
  check_skeleton(sk);
  const auto& last = sk.passages[sk.endpoints.size() - 2];
  for (size_t j = last.size(); j-- > 0;)
    if (last[j].above) return j;
  return 0;
}

inline std::vector<FreeWord> skeleton_to_words(const Skeleton& sk) {
  return skeleton_words_at_cut(sk, skeleton_canonical_cut(sk));
}

}  // namespace arrangeo
