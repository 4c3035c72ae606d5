#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "gmk/gauss_code.hpp"
#include "gmk/limits.hpp"

namespace gmk {

/// Least word over all rotations, both reading directions and relabelling by
/// first occurrence. Stored as chord indices 0..n-1.
struct canonical_form {
  std::vector<std::size_t> sequence;

  std::size_t chords() const noexcept { return sequence.size() / 2; }

  /// Letters a, b, c, ... when n <= 26, otherwise space-separated 1-based numbers.
  std::string to_string() const {
    std::string s;
    const bool letters = chords() <= 26;
    for (std::size_t i = 0; i < sequence.size(); ++i) {
      if (letters) {
        s += static_cast<char>('a' + sequence[i]);
      } else {
        if (i) s += ' ';
        s += std::to_string(sequence[i] + 1);
      }
    }
    return s;
  }

  gauss_code to_code() const {
    std::vector<std::string> labels;
    for (std::size_t c = 0; c < chords(); ++c) {
      labels.push_back(chords() <= 26 ? std::string(1, static_cast<char>('a' + c)) : std::to_string(c + 1));
    }
    return gauss_code::from_sequence(sequence, labels);
  }

  friend bool operator==(const canonical_form&, const canonical_form&) = default;
  friend auto operator<=>(const canonical_form&, const canonical_form&) = default;
};

namespace detail {

// Compares the relabelled image of seq under (rotation, direction) against
// `best` without materialising it. Returns <0, 0, >0 like memcmp.
inline int compare_image(const std::vector<std::size_t>& seq, std::size_t start, bool reversed,
                         const std::vector<std::size_t>& best, std::vector<std::size_t>& relabel) {
  const std::size_t len = seq.size();
  const std::size_t unset = static_cast<std::size_t>(-1);
  std::fill(relabel.begin(), relabel.end(), unset);
  std::size_t next = 0;
  for (std::size_t k = 0; k < len; ++k) {
    const std::size_t pos = reversed ? (start + len - k) % len : (start + k) % len;
    std::size_t& label = relabel[seq[pos]];
    if (label == unset) label = next++;
    if (label != best[k]) return label < best[k] ? -1 : 1;
  }
  return 0;
}

}  // namespace detail

inline canonical_form canonicalize(const std::vector<std::size_t>& seq) {
  const std::size_t len = seq.size();
  std::vector<std::size_t> relabel(len / 2 + 1);
  std::vector<std::size_t> best(len);
  {
    // identity image, relabelled
    std::vector<std::size_t> map(len / 2 + 1, static_cast<std::size_t>(-1));
    std::size_t next = 0;
    for (std::size_t k = 0; k < len; ++k) {
      if (map[seq[k]] == static_cast<std::size_t>(-1)) map[seq[k]] = next++;
      best[k] = map[seq[k]];
    }
  }
  for (int dir = 0; dir < 2; ++dir) {
    for (std::size_t start = 0; start < len; ++start) {
      const bool reversed = dir == 1;
      if (detail::compare_image(seq, start, reversed, best, relabel) < 0) {
        std::fill(relabel.begin(), relabel.end(), static_cast<std::size_t>(-1));
        std::size_t next = 0;
        for (std::size_t k = 0; k < len; ++k) {
          const std::size_t pos = reversed ? (start + len - k) % len : (start + k) % len;
          std::size_t& label = relabel[seq[pos]];
          if (label == static_cast<std::size_t>(-1)) label = next++;
          best[k] = label;
        }
      }
    }
  }
  return {std::move(best)};
}

inline canonical_form canonicalize(const gauss_code& code) { return canonicalize(code.sequence()); }

/// True when no rotation/reflection/relabelling of seq is lexicographically smaller.
inline bool is_canonical(const std::vector<std::size_t>& seq) {
  std::vector<std::size_t> relabel(seq.size() / 2 + 1);
  for (int dir = 0; dir < 2; ++dir)
    for (std::size_t start = 0; start < seq.size(); ++start)
      if (detail::compare_image(seq, start, dir == 1, seq, relabel) < 0) return false;
  return true;
}

/// Visits every canonical double-occurrence word with n chords once, in
/// lexicographic order. With `require_nonempty_crossings`, words containing a
/// chord that interlaces nothing are skipped.
inline void enumerate_codes(std::size_t n, bool require_nonempty_crossings,
                            const std::function<void(const canonical_form&)>& visit,
                            std::size_t max_chords = limits::current().max_code_chords) {
  require_within(n, max_chords, "chord count");
  std::vector<std::size_t> seq(2 * n);
  std::vector<bool> open(n, false);

  const auto all_interlaced = [&]() {
    for (std::size_t a = 0; a < n; ++a) {
      std::size_t lo = 0, hi = 0;
      bool found = false;
      for (std::size_t p = 0; p < seq.size(); ++p) {
        if (seq[p] == a) {
          if (!found) {
            lo = p;
            found = true;
          } else {
            hi = p;
          }
        }
      }
      // a interlaces something iff some label occurs exactly once inside (lo, hi)
      std::vector<int> count(n, 0);
      for (std::size_t p = lo + 1; p < hi; ++p) ++count[seq[p]];
      if (std::find(count.begin(), count.end(), 1) == count.end()) return false;
    }
    return true;
  };

  std::function<void(std::size_t, std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t next,
                                                                       std::size_t open_count) {
    if (pos == seq.size()) {
      if (!is_canonical(seq)) return;
      if (require_nonempty_crossings && !all_interlaced()) return;
      visit(canonical_form{seq});
      return;
    }
    const std::size_t remaining = seq.size() - pos;
    // close an open chord, smallest label first
    for (std::size_t c = 0; c < next; ++c) {
      if (!open[c]) continue;
      open[c] = false;
      seq[pos] = c;
      rec(pos + 1, next, open_count - 1);
      open[c] = true;
    }
    // open a new chord if the remaining positions can still close everything
    if (next < n && remaining >= open_count + 2) {
      open[next] = true;
      seq[pos] = next;
      rec(pos + 1, next + 1, open_count + 1);
      open[next] = false;
    }
  };
  rec(0, 0, 0);
}

inline std::vector<canonical_form> enumerate_codes(std::size_t n, bool require_nonempty_crossings,
                                                   std::size_t max_chords = limits::current().max_code_chords) {
  std::vector<canonical_form> out;
  enumerate_codes(n, require_nonempty_crossings, [&](const canonical_form& f) { out.push_back(f); }, max_chords);
  return out;
}

}  // namespace gmk
