#pragma once

// Independent reference data and brute-force helpers for the tests. Nothing
// here calls into the library's transformation code.

#include <algorithm>
#include <array>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace oracle {

using Triple = std::array<int, 3>;
using Images = std::vector<int>;

struct Row
{
  Triple tones;
  const char *name;
};

// Consonant triads in canonical order, typed in by hand.
inline const std::array<Row, 24> kTable{{
  {{0, 4, 7}, "C"},    {{1, 5, 8}, "C#"},   {{2, 6, 9}, "D"},    {{3, 7, 10}, "D#"},
  {{4, 8, 11}, "E"},   {{5, 9, 0}, "F"},    {{6, 10, 1}, "F#"},  {{7, 11, 2}, "G"},
  {{8, 0, 3}, "G#"},   {{9, 1, 4}, "A"},    {{10, 2, 5}, "A#"},  {{11, 3, 6}, "B"},
  {{0, 8, 5}, "f"},    {{1, 9, 6}, "f#"},   {{2, 10, 7}, "g"},   {{3, 11, 8}, "g#"},
  {{4, 0, 9}, "a"},    {{5, 1, 10}, "a#"},  {{6, 2, 11}, "b"},   {{7, 3, 0}, "c"},
  {{8, 4, 1}, "c#"},   {{9, 5, 2}, "d"},    {{10, 6, 3}, "d#"},  {{11, 7, 4}, "e"},
}};

inline int mod(int x) { return ((x % 12) + 12) % 12; }

inline int index_of(Triple const &t)
{
  for (int i = 0; i < 24; ++i) {
    if (kTable[static_cast<std::size_t>(i)].tones == t)
      return i;
  }
  return -1;
}

inline int index_of(std::string const &name)
{
  for (int i = 0; i < 24; ++i) {
    if (name == kTable[static_cast<std::size_t>(i)].name)
      return i;
  }
  return -1;
}

inline std::set<int> as_set(Triple const &t) { return {t[0], t[1], t[2]}; }

inline bool is_major(int i) { return i < 12; }

// Componentwise T_n / I_n on a triple.
inline Triple ti(bool inversion, int n, Triple const &t)
{
  Triple out{};
  for (std::size_t k = 0; k < 3; ++k)
    out[k] = mod((inversion ? -t[k] : t[k]) + n);
  return out;
}

// P, L, R by their voice-leading description: keep the two tones at `keep`,
// move the third, and land on the other consonant triad with that dyad.
// 'P' keeps positions 0 and 2, 'L' keeps 1 and 2, 'R' keeps 0 and 1; the
// kept tones trade places.
inline int neighbor(char op, int y)
{
  const Triple &t = kTable[static_cast<std::size_t>(y)].tones;
  std::size_t i = 0, j = 0;
  switch (op) {
  case 'P': i = 0, j = 2; break;
  case 'L': i = 1, j = 2; break;
  default: i = 0, j = 1; break;
  }
  for (int z = 0; z < 24; ++z) {
    if (z == y)
      continue;
    const Triple &u = kTable[static_cast<std::size_t>(z)].tones;
    if (u[i] == t[j] && u[j] == t[i])
      return z;
  }
  return -1;
}

inline Images word_images(std::string const &word)
{
  Images out(24);
  for (int y = 0; y < 24; ++y) {
    int z = y;
    for (auto it = word.rbegin(); it != word.rend(); ++it)
      z = neighbor(*it, z);
    out[static_cast<std::size_t>(y)] = z;
  }
  return out;
}

inline Images ti_images(bool inversion, int n)
{
  Images out(24);
  for (int y = 0; y < 24; ++y)
    out[static_cast<std::size_t>(y)] = index_of(ti(inversion, n, kTable[static_cast<std::size_t>(y)].tones));
  return out;
}

inline Images compose(Images const &a, Images const &b)
{
  Images out(b.size());
  for (std::size_t i = 0; i < b.size(); ++i)
    out[i] = a[static_cast<std::size_t>(b[i])];
  return out;
}

inline std::set<Images> closure(std::vector<Images> const &gens, std::size_t degree)
{
  Images id(degree);
  for (std::size_t i = 0; i < degree; ++i)
    id[i] = static_cast<int>(i);
  std::set<Images> seen{id};
  std::vector<Images> frontier{id};
  while (!frontier.empty()) {
    std::vector<Images> next;
    for (auto const &x : frontier) {
      for (auto const &g : gens) {
        auto y = compose(g, x);
        if (seen.insert(y).second)
          next.push_back(y);
      }
    }
    frontier = std::move(next);
  }
  return seen;
}

inline bool commute(Images const &a, Images const &b) { return compose(a, b) == compose(b, a); }

inline std::string slurp(std::string const &path)
{
  std::ifstream in(path, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

} // namespace oracle
