#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "gmk/gauss_code.hpp"
#include "gmk/limits.hpp"

namespace gmk {

// Brute-force planarity for a Gauss code, independent of the parity criteria.
//
// The code is read as a 4-valent map: one vertex per crossing, one edge per
// arc between consecutive positions of the word (edge e runs from position e
// to e + 1, cyclically). Each edge contributes two darts: 2e leaves the tail
// forward, 2e + 1 leaves the head backward, so reversing a dart flips bit 0.
//
// A crossing admits exactly two cyclic orders in which both passages go
// straight through: (in_p, in_q, out_p, out_q) and (in_p, out_q, out_p, in_q).
// Faces are traced with next = rotation(reverse(dart)).

struct oracle_result {
  bool realizable = true;
  std::size_t genus = 0;
  /// max over assignments of V - E + F
  long max_euler = 2;
  std::size_t assignments = 1;
};

struct rotation_assignment {
  std::uint64_t mask = 0;  ///< bit v selects the second cyclic order at crossing v
};

namespace detail {

class rotation_map {
 public:
  explicit rotation_map(const gauss_code& code) : length_(code.length()), ends_(code.chords()) {
    const auto& seq = code.sequence();
    std::vector<bool> seen(code.chords(), false);
    for (std::size_t pos = 0; pos < length_; ++pos) {
      auto& e = ends_[seq[pos]];
      const std::size_t in = 2 * ((pos + length_ - 1) % length_) + 1;
      const std::size_t out = 2 * pos;
      if (!seen[seq[pos]]) {
        e.in_p = in;
        e.out_p = out;
        seen[seq[pos]] = true;
      } else {
        e.in_q = in;
        e.out_q = out;
      }
    }
    next_.resize(2 * length_);
    visited_.resize(2 * length_);
  }

  std::size_t faces(rotation_assignment a) {
    for (std::size_t v = 0; v < ends_.size(); ++v) {
      const auto& e = ends_[v];
      const std::size_t cyc0[4] = {e.in_p, e.in_q, e.out_p, e.out_q};
      const std::size_t cyc1[4] = {e.in_p, e.out_q, e.out_p, e.in_q};
      const std::size_t* cyc = ((a.mask >> v) & 1U) ? cyc1 : cyc0;
      for (int k = 0; k < 4; ++k) next_[cyc[k]] = cyc[(k + 1) % 4];
    }
    std::fill(visited_.begin(), visited_.end(), false);
    std::size_t count = 0;
    for (std::size_t d = 0; d < visited_.size(); ++d) {
      if (visited_[d]) continue;
      ++count;
      for (std::size_t x = d; !visited_[x]; x = next_[x ^ 1U]) visited_[x] = true;
    }
    return count;
  }

 private:
  struct vertex_ends {
    std::size_t in_p = 0, out_p = 0, in_q = 0, out_q = 0;
  };
  std::size_t length_;
  std::vector<vertex_ends> ends_;
  std::vector<std::size_t> next_;
  std::vector<bool> visited_;
};

}  // namespace detail

/// Face count of every transversal rotation assignment, indexed by mask.
inline std::vector<std::size_t> face_counts(const gauss_code& code,
                                            std::size_t max_chords = limits::current().max_oracle_chords) {
  require_within(code.chords(), max_chords, "oracle chord count");
  if (code.empty()) return {};
  detail::rotation_map map(code);
  const std::uint64_t total = std::uint64_t{1} << code.chords();
  std::vector<std::size_t> out;
  out.reserve(total);
  for (std::uint64_t mask = 0; mask < total; ++mask) out.push_back(map.faces({mask}));
  return out;
}

inline oracle_result oracle_realizable(const gauss_code& code,
                                       std::size_t max_chords = limits::current().max_oracle_chords) {
  require_within(code.chords(), max_chords, "oracle chord count");
  oracle_result r;
  if (code.empty()) return r;  // the empty word is a simple closed curve
  detail::rotation_map map(code);
  const long v = static_cast<long>(code.chords());
  const long e = static_cast<long>(code.length());
  const std::uint64_t total = std::uint64_t{1} << code.chords();
  long best = -(1L << 40);
  std::uint64_t mask = 0;
  for (; mask < total; ++mask) {
    const long chi = v - e + static_cast<long>(map.faces({mask}));
    if (chi > best) best = chi;
    if (best == 2) {
      ++mask;
      break;
    }
  }
  r.max_euler = best;
  r.realizable = best == 2;
  r.genus = static_cast<std::size_t>((2 - best) / 2);
  r.assignments = static_cast<std::size_t>(mask);
  return r;
}

}  // namespace gmk
