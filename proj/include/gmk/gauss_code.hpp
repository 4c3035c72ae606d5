#pragma once

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gmk/bit_matrix.hpp"
#include "gmk/error.hpp"

namespace gmk {

/// A double-occurrence word. Labels are opaque, case-sensitive tokens; chords
/// are indexed 0..n-1 in order of first occurrence.
class gauss_code {
 public:
  gauss_code() = default;

  explicit gauss_code(std::vector<std::string> word) : word_(std::move(word)) {
    std::map<std::string, std::size_t> index;
    std::vector<int> seen;
    sequence_.reserve(word_.size());
    for (const auto& token : word_) {
      auto [it, inserted] = index.try_emplace(token, labels_.size());
      if (inserted) {
        labels_.push_back(token);
        seen.push_back(0);
      }
      ++seen[it->second];
      sequence_.push_back(it->second);
    }
    for (std::size_t c = 0; c < labels_.size(); ++c) {
      if (seen[c] != 2) {
        throw error(errc::not_double_occurrence,
                    "label '" + labels_[c] + "' occurs " + std::to_string(seen[c]) + " time(s), expected 2");
      }
    }
  }

  /// Builds a code from chord indices, labelling chord c with `labels[c]`.
  static gauss_code from_sequence(const std::vector<std::size_t>& seq, const std::vector<std::string>& labels) {
    std::vector<std::string> word;
    word.reserve(seq.size());
    for (std::size_t c : seq) word.push_back(labels.at(c));
    return gauss_code(std::move(word));
  }

  std::size_t chords() const noexcept { return labels_.size(); }
  std::size_t length() const noexcept { return word_.size(); }
  bool empty() const noexcept { return word_.empty(); }

  const std::vector<std::string>& word() const noexcept { return word_; }
  /// Chord index at each position.
  const std::vector<std::size_t>& sequence() const noexcept { return sequence_; }
  /// Label of chord c, chords in first-occurrence order.
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  std::optional<std::size_t> index_of(std::string_view label) const {
    for (std::size_t c = 0; c < labels_.size(); ++c)
      if (labels_[c] == label) return c;
    return std::nullopt;
  }

  bool single_char_labels() const {
    return std::all_of(labels_.begin(), labels_.end(), [](const std::string& l) { return l.size() == 1; });
  }

  /// Compact form when every label is one character, else space-separated tokens.
  std::string to_string() const {
    std::string s;
    const bool compact = single_char_labels();
    for (std::size_t i = 0; i < word_.size(); ++i) {
      if (!compact && i) s += ' ';
      s += word_[i];
    }
    return s;
  }

  friend bool operator==(const gauss_code& a, const gauss_code& b) { return a.word_ == b.word_; }

 private:
  std::vector<std::string> word_;
  std::vector<std::size_t> sequence_;
  std::vector<std::string> labels_;
};

/// Accepts "abcabc" (one label per character) or a whitespace/comma separated
/// token list such as "1, 2, 1, 2".
inline gauss_code parse_gauss_code(std::string_view text) {
  const bool tokenized = std::any_of(text.begin(), text.end(),
                                     [](char ch) { return ch == ',' || std::isspace(static_cast<unsigned char>(ch)); });
  std::vector<std::string> tokens;
  if (tokenized) {
    std::string current;
    for (char ch : text) {
      if (ch == ',' || std::isspace(static_cast<unsigned char>(ch))) {
        if (!current.empty()) tokens.push_back(std::move(current));
        current.clear();
      } else {
        current += ch;
      }
    }
    if (!current.empty()) tokens.push_back(std::move(current));
  } else {
    for (char ch : text) tokens.emplace_back(1, ch);
  }
  return gauss_code(std::move(tokens));
}

struct chord {
  std::string label;
  std::size_t first;
  std::size_t second;
};

/// Chords on a 2n-point oriented cycle together with their interlacement.
class chord_diagram {
 public:
  chord_diagram() = default;

  explicit chord_diagram(gauss_code code) : code_(std::move(code)), cross_(code_.chords()) {
    const auto& seq = code_.sequence();
    chords_.resize(code_.chords());
    std::vector<bool> opened(code_.chords(), false);
    for (std::size_t pos = 0; pos < seq.size(); ++pos) {
      auto& c = chords_[seq[pos]];
      if (!opened[seq[pos]]) {
        c.label = code_.labels()[seq[pos]];
        c.first = pos;
        opened[seq[pos]] = true;
      } else {
        c.second = pos;
      }
    }
    for (std::size_t a = 0; a < chords_.size(); ++a)
      for (std::size_t b = a + 1; b < chords_.size(); ++b)
        if (interleaved(chords_[a], chords_[b])) cross_.set_symmetric(a, b, true);
  }

  /// Exactly one endpoint of b lies strictly inside a's span.
  static bool interleaved(const chord& a, const chord& b) {
    const auto inside = [&](std::size_t p) { return a.first < p && p < a.second; };
    return inside(b.first) != inside(b.second);
  }

  const gauss_code& code() const noexcept { return code_; }
  std::size_t size() const noexcept { return chords_.size(); }
  std::size_t points() const noexcept { return code_.length(); }
  const std::vector<chord>& chords() const noexcept { return chords_; }
  const bit_matrix& interlacement() const noexcept { return cross_; }

  bool crosses(std::size_t a, std::size_t b) const { return cross_.get(a, b); }

  /// c_×: chords interlacing c (never contains c).
  std::vector<std::size_t> crossing(std::size_t c) const {
    std::vector<std::size_t> out;
    for (std::size_t t = 0; t < size(); ++t)
      if (cross_.get(c, t)) out.push_back(t);
    return out;
  }

  /// c_∥: chords not interlacing c, c itself included.
  std::vector<std::size_t> parallel(std::size_t c) const {
    std::vector<std::size_t> out;
    for (std::size_t t = 0; t < size(); ++t)
      if (!cross_.get(c, t)) out.push_back(t);
    return out;
  }

  bool has_isolated_chord() const {
    for (std::size_t c = 0; c < size(); ++c)
      if (cross_.row_weight(c) == 0) return true;
    return false;
  }

  std::size_t require_chord(std::string_view label) const {
    if (auto c = code_.index_of(label)) return *c;
    throw error(errc::unknown_chord, "no chord labelled '" + std::string(label) + "'");
  }

 private:
  gauss_code code_;
  std::vector<chord> chords_;
  bit_matrix cross_;
};

inline chord_diagram to_chord_diagram(const gauss_code& code) { return chord_diagram(code); }

/// M(G): m_ij = 1 iff chords i and j interlace; rows in first-occurrence order.
inline bit_matrix interlacement_matrix(const chord_diagram& d) { return d.interlacement(); }

/// Interlacement graph keyed by label, used to compare the two smoothing
/// constructions independently of row order.
struct labeled_graph {
  std::vector<std::string> labels;
  bit_matrix adjacency;

  labeled_graph sorted() const {
    std::vector<std::size_t> order(labels.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return labels[a] < labels[b]; });
    labeled_graph out{{}, adjacency.permuted(order)};
    for (std::size_t i : order) out.labels.push_back(labels[i]);
    return out;
  }

  friend bool operator==(const labeled_graph& a, const labeled_graph& b) {
    const auto sa = a.sorted();
    const auto sb = b.sorted();
    return sa.labels == sb.labels && sa.adjacency == sb.adjacency;
  }
};

inline labeled_graph labeled_interlacement(const chord_diagram& d) { return {d.code().labels(), d.interlacement()}; }

/// Word rewrite W1 c W2 c W3 -> W1 W2^R W3.
inline gauss_code smooth_word(const gauss_code& code, std::size_t c) {
  const auto& word = code.word();
  const auto& seq = code.sequence();
  const auto first = static_cast<std::size_t>(std::find(seq.begin(), seq.end(), c) - seq.begin());
  const auto second = static_cast<std::size_t>(std::find(seq.begin() + first + 1, seq.end(), c) - seq.begin());
  std::vector<std::string> out;
  out.reserve(word.size() - 2);
  out.insert(out.end(), word.begin(), word.begin() + first);
  out.insert(out.end(), word.rbegin() + (word.size() - second), word.rbegin() + (word.size() - first - 1));
  out.insert(out.end(), word.begin() + second + 1, word.end());
  return gauss_code(std::move(out));
}

inline chord_diagram smooth_chord(const chord_diagram& d, std::size_t c) {
  return chord_diagram(smooth_word(d.code(), c));
}

inline chord_diagram smooth_chord(const chord_diagram& d, std::string_view label) {
  return smooth_chord(d, d.require_chord(label));
}

/// Adjacency-only smoothing: delete c and complement the interlacement
/// inside c_×; every other pair keeps its status.
inline labeled_graph smooth_by_toggle(const chord_diagram& d, std::size_t c) {
  const auto crossing = d.crossing(c);
  bit_matrix toggled = d.interlacement();
  for (std::size_t x = 0; x < crossing.size(); ++x)
    for (std::size_t y = x + 1; y < crossing.size(); ++y) toggled.toggle_symmetric(crossing[x], crossing[y]);
  std::vector<std::size_t> keep;
  labeled_graph out;
  for (std::size_t t = 0; t < d.size(); ++t) {
    if (t == c) continue;
    keep.push_back(t);
    out.labels.push_back(d.code().labels()[t]);
  }
  out.adjacency = toggled.permuted(keep);
  return out;
}

inline labeled_graph smooth_by_toggle(const chord_diagram& d, std::string_view label) {
  return smooth_by_toggle(d, d.require_chord(label));
}

/// Removes both occurrences of chord c.
inline gauss_code delete_chord(const gauss_code& code, std::size_t c) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < code.length(); ++i)
    if (code.sequence()[i] != c) out.push_back(code.word()[i]);
  return gauss_code(std::move(out));
}

}  // namespace gmk
