#pragma once

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace arrangeo {

// Word in a free group: nonzero signed 1-based generator indices.
using FreeWord = std::vector<int>;

inline FreeWord free_reduce(const FreeWord& w) {
  FreeWord out;
  for (int g : w) {
    if (g == 0) throw std::invalid_argument("zero letter");
    if (!out.empty() && out.back() == -g) out.pop_back();
    else out.push_back(g);
  }
  return out;
}

inline FreeWord word_inv(const FreeWord& w) {
  FreeWord out(w.rbegin(), w.rend());
  for (int& g : out) g = -g;
  return out;
}

inline FreeWord word_mul(const FreeWord& a, const FreeWord& b) {
  FreeWord out = a;
  out.insert(out.end(), b.begin(), b.end());
  return free_reduce(out);
}

// u w u^-1
inline FreeWord word_conj(const FreeWord& w, const FreeWord& u) {
  return word_mul(u, word_mul(w, word_inv(u)));
}

inline FreeWord word_gen(int g) { return FreeWord{g}; }

inline std::string word_str(const FreeWord& w) {
  if (w.empty()) return "e";
  std::ostringstream os;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) os << ' ';
    os << w[i];
  }
  return os.str();
}

inline FreeWord word_parse(const std::string& s) {
  FreeWord out;
  std::istringstream is(s);
  std::string tok;
  while (is >> tok) {
    if (tok == "e") continue;
    size_t pos = 0;
    int v;
    try {
      v = std::stoi(tok, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad word token: " + tok);
    }
    if (pos != tok.size() || v == 0)
      throw std::invalid_argument("bad word token: " + tok);
    out.push_back(v);
  }
  return out;
}

// Cyclic reduction: strip conjugating pairs from the ends.
inline FreeWord cyclic_reduce(FreeWord w) {
  w = free_reduce(w);
  while (w.size() >= 2 && w.front() == -w.back()) {
    w.erase(w.begin());
    w.pop_back();
    w = free_reduce(w);
  }
  return w;
}

// Equal up to rotation after cyclic reduction; detects conjugate products
// without a full conjugacy search (enough for cyclically reduced inputs).
inline bool cyclic_rotation_equal(const FreeWord& a_in, const FreeWord& b_in) {
  FreeWord a = cyclic_reduce(a_in), b = cyclic_reduce(b_in);
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  for (size_t r = 0; r < a.size(); ++r) {
    bool ok = true;
    for (size_t i = 0; i < a.size() && ok; ++i)
      ok = a[(r + i) % a.size()] == b[i];
    if (ok) return true;
  }
  return false;
}

// Parse w as u g u^-1 with g a positive generator; the mirror shape
// w[i] == -w[len-1-i] around an odd center. Returns (g, u) or nothing.
struct ConjugatedGenerator {
  int core;
  FreeWord conjugator;
};
inline bool as_conjugated_generator(const FreeWord& w_in, ConjugatedGenerator* out) {
  FreeWord w = free_reduce(w_in);
  if (w.size() % 2 == 0) return false;
  size_t t = w.size() / 2;
  for (size_t i = 0; i < t; ++i)
    if (w[i] != -w[w.size() - 1 - i]) return false;
  if (w[t] < 0) return false;
  if (out) {
    out->core = w[t];
    out->conjugator.assign(w.begin(), w.begin() + t);
  }
  return true;
}

inline std::uint64_t fnv1a64(std::uint64_t h, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) {
    h ^= (v >> (8 * i)) & 0xff;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace arrangeo
