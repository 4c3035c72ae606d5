#pragma once

// Test-side reference implementations. They are written independently of the
// library (different data layout, no shared helpers beyond std) so the suites
// compare two derivations rather than one derivation with itself.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

using word = std::vector<int>;  // chord ids, each appearing twice

/// Relabel by first occurrence: 0, 1, 2, ...
inline word relabel(const word& w) {
  std::map<int, int> names;
  word out;
  for (int x : w) {
    auto it = names.find(x);
    if (it == names.end()) it = names.emplace(x, static_cast<int>(names.size())).first;
    out.push_back(it->second);
  }
  return out;
}

/// Least relabelled image over all rotations and both directions.
inline word canonical(const word& w) {
  word best;
  const std::size_t len = w.size();
  for (int dir = 0; dir < 2; ++dir) {
    word base = w;
    if (dir) std::reverse(base.begin(), base.end());
    for (std::size_t s = 0; s < len; ++s) {
      word rot(base.begin() + static_cast<std::ptrdiff_t>(s), base.end());
      rot.insert(rot.end(), base.begin(), base.begin() + static_cast<std::ptrdiff_t>(s));
      rot = relabel(rot);
      if (best.empty() || rot < best) best = rot;
    }
  }
  return best;
}

inline std::string letters(const word& w) {
  std::string s;
  for (int x : w) s += static_cast<char>('a' + x);
  return s;
}

/// Every double-occurrence word on chords 0..n-1 with first occurrences in
/// increasing order (one representative per relabelling).
inline std::vector<word> all_words(int n) {
  std::vector<word> out;
  word w(static_cast<std::size_t>(2 * n), -1);
  std::function<void(int)> place = [&](int c) {
    if (c == n) {
      out.push_back(w);
      return;
    }
    const auto first = static_cast<std::size_t>(std::find(w.begin(), w.end(), -1) - w.begin());
    w[first] = c;
    for (std::size_t p = first + 1; p < w.size(); ++p) {
      if (w[p] != -1) continue;
      w[p] = c;
      place(c + 1);
      w[p] = -1;
    }
    w[first] = -1;
  };
  place(0);
  return out;
}

/// Positions of chord c.
inline std::pair<int, int> ends(const word& w, int c) {
  int a = -1, b = -1;
  for (int p = 0; p < static_cast<int>(w.size()); ++p)
    if (w[static_cast<std::size_t>(p)] == c) (a < 0 ? a : b) = p;
  return {a, b};
}

inline bool interlaced(const word& w, int x, int y) {
  if (x == y) return false;
  auto [a1, a2] = ends(w, x);
  auto [b1, b2] = ends(w, y);
  const bool in1 = a1 < b1 && b1 < a2, in2 = a1 < b2 && b2 < a2;
  return in1 != in2;
}

inline int chords(const word& w) { return static_cast<int>(w.size() / 2); }

/// Adjacency as a set of unordered label pairs.
inline std::set<std::pair<int, int>> crossing_pairs(const word& w) {
  std::set<std::pair<int, int>> s;
  for (int x : w)
    for (int y : w)
      if (x < y && interlaced(w, x, y)) s.emplace(x, y);
  return s;
}

/// Minimal genus over all transversal rotation systems, by tracing faces of
/// the permutation sigma * alpha on half-edges (edge k, end e).
inline int genus(const word& w) {
  const int len = static_cast<int>(w.size());
  const int n = len / 2;
  if (n == 0) return 0;
  // half-edge h = 2k + e; e = 0 tail of edge k (leaves position k), e = 1 head (arrives at position k + 1)
  const auto tail = [](int k) { return 2 * k; };
  const auto head = [&](int k) { return 2 * ((k + len) % len) + 1; };
  std::vector<std::pair<int, int>> visits(static_cast<std::size_t>(n), {-1, -1});
  for (int p = 0; p < len; ++p) {
    auto& v = visits[static_cast<std::size_t>(w[static_cast<std::size_t>(p)])];
    (v.first < 0 ? v.first : v.second) = p;
  }
  int best_faces = -1;
  std::vector<int> sigma(static_cast<std::size_t>(2 * len));
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    for (int c = 0; c < n; ++c) {
      const auto [p, q] = visits[static_cast<std::size_t>(c)];
      // incoming at p is the head of edge p-1, outgoing the tail of edge p
      std::vector<int> cyc = {head(p - 1), head(q - 1), tail(p), tail(q)};
      if (mask >> c & 1U) cyc = {head(p - 1), tail(q), tail(p), head(q - 1)};
      for (std::size_t k = 0; k < 4; ++k) sigma[static_cast<std::size_t>(cyc[k])] = cyc[(k + 1) % 4];
    }
    std::vector<bool> seen(sigma.size(), false);
    int faces = 0;
    for (std::size_t h = 0; h < sigma.size(); ++h) {
      if (seen[h]) continue;
      ++faces;
      std::size_t x = h;
      while (!seen[x]) {
        seen[x] = true;
        x = static_cast<std::size_t>(sigma[x ^ 1U]);
      }
    }
    best_faces = std::max(best_faces, faces);
  }
  const int euler = n - 2 * n + best_faces;
  return (2 - euler) / 2;
}

/// Conway smoothing of chord c by the word rewrite, on raw chord ids.
inline word smooth(const word& w, int c) {
  auto [a, b] = ends(w, c);
  word out(w.begin(), w.begin() + a);
  for (int p = b - 1; p > a; --p) out.push_back(w[static_cast<std::size_t>(p)]);
  out.insert(out.end(), w.begin() + b + 1, w.end());
  return out;
}

inline word random_word(int n, std::mt19937& rng) {
  word w;
  for (int c = 0; c < n; ++c) w.insert(w.end(), {c, c});
  std::shuffle(w.begin(), w.end(), rng);
  return w;
}

/// Image of w under a random rotation, optional reversal and label permutation.
inline word scramble(const word& w, std::mt19937& rng) {
  word out = w;
  std::rotate(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(rng() % std::max<std::size_t>(1, w.size())),
              out.end());
  if (rng() & 1U) std::reverse(out.begin(), out.end());
  std::vector<int> perm(static_cast<std::size_t>(chords(w)));
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  for (int& x : out) x = perm[static_cast<std::size_t>(x)];
  return out;
}

/// All permutations of 1..n by std::next_permutation.
inline std::vector<std::vector<int>> permutations(int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 1);
  std::vector<std::vector<int>> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

/// Meander visitations by brute force: alternating-parity odd-start
/// permutations of 1..N whose code r 1..N r w has genus 0.
inline std::set<std::vector<int>> meander_visitations(int n) {
  std::set<std::vector<int>> out;
  for (const auto& w : permutations(n)) {
    if (w.front() % 2 == 0) continue;
    bool alt = true;
    for (std::size_t k = 0; k + 1 < w.size(); ++k) alt = alt && (w[k] + w[k + 1]) % 2 == 1;
    if (!alt) continue;
    word code{0};
    for (int i = 1; i <= n; ++i) code.push_back(i);
    code.push_back(0);
    code.insert(code.end(), w.begin(), w.end());
    if (genus(code) == 0) out.insert(w);
  }
  return out;
}

/// Matrix of a visitation from the ordering rule alone: row 0 full, and for
/// 1 <= i < j, m_ij = 1 iff i is visited before j.
inline std::vector<std::vector<int>> order_matrix(const std::vector<int>& w) {
  const std::size_t n = w.size();
  std::vector<std::size_t> pos(n + 1);
  for (std::size_t k = 0; k < n; ++k) pos[static_cast<std::size_t>(w[k])] = k;
  std::vector<std::vector<int>> m(n + 1, std::vector<int>(n + 1, 0));
  for (std::size_t i = 1; i <= n; ++i) m[0][i] = m[i][0] = 1;
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j) m[i][j] = m[j][i] = pos[i] < pos[j] ? 1 : 0;
  return m;
}

}  // namespace oracle
