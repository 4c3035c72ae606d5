#pragma once

#include <algorithm>
#include <cstddef>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "gmk/error.hpp"

namespace gmk {

// Permutations, inversion sets and positive non-repeating braid words.
// Everything here is 1-based: pi(i) for i in 1..n, pairs (i, j) with i < j,
// generator k standing for sigma_k which exchanges positions k and k + 1.

class permutation {
 public:
  permutation() = default;

  /// images[i - 1] = pi(i). Throws parse_error unless images is a bijection on 1..n.
  explicit permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> hit(images_.size() + 1, false);
    for (int v : images_) {
      if (v < 1 || static_cast<std::size_t>(v) > images_.size() || hit[static_cast<std::size_t>(v)]) {
        throw error(errc::parse_error, "not a permutation of 1.." + std::to_string(images_.size()));
      }
      hit[static_cast<std::size_t>(v)] = true;
    }
  }

  static permutation identity(std::size_t n) {
    std::vector<int> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<int>(i + 1);
    return permutation(std::move(v));
  }

  std::size_t size() const noexcept { return images_.size(); }
  int operator()(std::size_t i) const { return images_.at(i - 1); }
  const std::vector<int>& images() const noexcept { return images_; }

  friend bool operator==(const permutation&, const permutation&) = default;
  friend auto operator<=>(const permutation&, const permutation&) = default;

 private:
  std::vector<int> images_;
};

struct inversion_set {
  std::size_t n = 0;
  std::set<std::pair<int, int>> pairs;

  bool contains(int i, int j) const { return pairs.count({i, j}) != 0; }

  /// Throws parse_error unless every pair satisfies 1 <= i < j <= n.
  void require_well_formed() const {
    for (auto [i, j] : pairs) {
      if (i < 1 || j <= i || static_cast<std::size_t>(j) > n) {
        throw error(errc::parse_error, "pair (" + std::to_string(i) + "," + std::to_string(j) +
                                           ") is not 1 <= i < j <= " + std::to_string(n));
      }
    }
  }

  friend bool operator==(const inversion_set&, const inversion_set&) = default;
};

/// R_pi = {(i, j) : i < j, pi(i) > pi(j)}.
inline inversion_set inversions(const permutation& pi) {
  inversion_set r{pi.size(), {}};
  for (std::size_t i = 1; i <= pi.size(); ++i)
    for (std::size_t j = i + 1; j <= pi.size(); ++j)
      if (pi(i) > pi(j)) r.pairs.emplace(static_cast<int>(i), static_cast<int>(j));
  return r;
}

/// (i) (i,j),(j,k) in R => (i,k) in R;  (ii) (i,k) in R => (i,j) or (j,k) in R for i < j < k.
inline bool is_valid_inversion_set(const inversion_set& r) {
  r.require_well_formed();
  const int n = static_cast<int>(r.n);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k) {
        const bool ij = r.contains(i, j), jk = r.contains(j, k), ik = r.contains(i, k);
        if (ij && jk && !ik) return false;
        if (ik && !ij && !jk) return false;
      }
  return true;
}

/// The unique pi with R_pi = r. pi(i) is the rank of i in the order the pairs
/// induce: one more than the number of elements placed below it.
inline permutation permutation_from_inversions(const inversion_set& r) {
  if (!is_valid_inversion_set(r))
    throw error(errc::invalid_inversion_set, "pair set violates the inversion-set axioms");
  const int n = static_cast<int>(r.n);
  std::vector<int> images(r.n);
  for (int i = 1; i <= n; ++i) {
    int below = 0;
    for (int j = 1; j <= n; ++j) {
      if (j == i) continue;
      // j sits below i when j > i is inverted with i, or j < i is not
      if (j > i ? r.contains(i, j) : !r.contains(j, i)) ++below;
    }
    images[static_cast<std::size_t>(i - 1)] = below + 1;
  }
  return permutation(std::move(images));
}

struct braid_word {
  std::vector<int> generators;

  std::size_t length() const noexcept { return generators.size(); }
  friend bool operator==(const braid_word&, const braid_word&) = default;
};

/// Canonical positive word for pi: insertion sort of the strands by target
/// position, emitting sigma_k for every adjacent exchange at positions k, k+1.
/// Strand i ends at position pi(i); each inverted pair is exchanged once.
inline braid_word nonrepeating_braid_word(const permutation& pi) {
  braid_word w;
  std::vector<int> key = pi.images();  // key[p] = target of the strand now at position p + 1
  for (std::size_t k = 1; k < key.size(); ++k) {
    for (std::size_t p = k; p > 0 && key[p - 1] > key[p]; --p) {
      std::swap(key[p - 1], key[p]);
      w.generators.push_back(static_cast<int>(p));
    }
  }
  return w;
}

}  // namespace gmk
