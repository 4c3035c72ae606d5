#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gmk/bit_matrix.hpp"
#include "gmk/error.hpp"
#include "gmk/gauss_code.hpp"
#include "gmk/rotation_oracle.hpp"

namespace gmk {

enum class product_mode { integer, mod2 };

/// <m_{i1}, ..., m_{ik}>: number of columns t with m_{i t} = 1 for every listed i.
/// Equals |c_{i1 ×} ∩ ... ∩ c_{ik ×}| for an interlacement matrix.
inline std::size_t scalar_product(const bit_matrix& m, std::span<const std::size_t> indices,
                                  product_mode mode = product_mode::integer) {
  if (indices.empty()) throw error(errc::index_out_of_range, "scalar product needs at least one row");
  for (std::size_t i : indices) {
    if (i >= m.size()) {
      throw error(errc::index_out_of_range,
                  "row " + std::to_string(i) + " out of range for size " + std::to_string(m.size()));
    }
  }
  const std::size_t value = m.multi_dot(indices);
  return mode == product_mode::mod2 ? value % 2 : value;
}

inline std::size_t scalar_product(const bit_matrix& m, std::initializer_list<std::size_t> indices,
                                  product_mode mode = product_mode::integer) {
  return scalar_product(m, std::span<const std::size_t>(indices.begin(), indices.size()), mode);
}

enum class verdict { realizable, not_realizable };
enum class method { theorem34, oracle };

inline const char* to_string(verdict v) { return v == verdict::realizable ? "realizable" : "not-realizable"; }
inline const char* to_string(method m) { return m == method::theorem34 ? "thm34" : "oracle"; }

/// A parity failure: one chord with |a_×| odd, or a non-interlacing pair with
/// |a_× ∩ b_×| odd.
struct parity_witness {
  enum class kind { odd_chord, odd_pair } type = kind::odd_chord;
  std::string first;
  std::string second;  ///< empty for odd_chord
  std::size_t count = 0;

  std::string describe() const {
    if (type == kind::odd_chord) return "|" + first + "_×| = " + std::to_string(count) + " is odd";
    return "|" + first + "_× ∩ " + second + "_×| = " + std::to_string(count) + " is odd";
  }

  friend bool operator==(const parity_witness&, const parity_witness&) = default;
};

struct realizability_witness {
  /// Set when the parity failure appears only after smoothing this chord.
  std::optional<std::string> smoothed;
  parity_witness parity;

  std::string describe() const {
    if (smoothed) return "smoothing " + *smoothed + " gives " + parity.describe();
    return parity.describe();
  }

  friend bool operator==(const realizability_witness&, const realizability_witness&) = default;
};

struct realizability_report {
  verdict result = verdict::realizable;
  std::optional<realizability_witness> witness;
  method via = method::theorem34;
  /// Oracle runs only.
  std::optional<std::size_t> genus;

  bool realizable() const noexcept { return result == verdict::realizable; }

  friend bool operator==(const realizability_report&, const realizability_report&) = default;
};

/// Both parity conditions; the first failure in index order is the witness
/// (chords before pairs, pairs in lexicographic index order).
inline realizability_report even_condition(const chord_diagram& d) {
  realizability_report r;
  const auto& m = d.interlacement();
  const auto& labels = d.code().labels();
  for (std::size_t c = 0; c < d.size(); ++c) {
    const std::size_t w = m.row_weight(c);
    if (w % 2) {
      r.result = verdict::not_realizable;
      r.witness = realizability_witness{std::nullopt, {parity_witness::kind::odd_chord, labels[c], {}, w}};
      return r;
    }
  }
  for (std::size_t a = 0; a < d.size(); ++a) {
    for (std::size_t b = a + 1; b < d.size(); ++b) {
      if (m.get(a, b)) continue;
      const std::size_t common = m.dot(a, b);
      if (common % 2) {
        r.result = verdict::not_realizable;
        r.witness = realizability_witness{std::nullopt, {parity_witness::kind::odd_pair, labels[a], labels[b], common}};
        return r;
      }
    }
  }
  return r;
}

struct theorem34_options {
  /// Reject diagrams with a chord that interlaces nothing instead of deleting it.
  bool strict = false;
};

/// Deletes chords with empty c_× until none remain. Deleting such a chord
/// leaves every other interlacement unchanged, so one pass suffices.
inline chord_diagram without_isolated_chords(const chord_diagram& d) {
  std::vector<std::string> word;
  for (std::size_t pos = 0; pos < d.points(); ++pos) {
    const std::size_t c = d.code().sequence()[pos];
    if (d.interlacement().row_weight(c) != 0) word.push_back(d.code().word()[pos]);
  }
  return chord_diagram(gauss_code(std::move(word)));
}

/// Realizable iff the even condition holds for d and for the smoothing of
/// every chord of d.
inline realizability_report theorem34_realizable(const chord_diagram& input, theorem34_options opts = {}) {
  if (opts.strict && input.has_isolated_chord()) {
    throw error(errc::isolated_chord, "strict mode: diagram has a chord that interlaces no other chord");
  }
  const chord_diagram d = without_isolated_chords(input);
  auto r = even_condition(d);
  if (!r.realizable()) return r;
  for (std::size_t c = 0; c < d.size(); ++c) {
    auto smoothed = even_condition(smooth_chord(d, c));
    if (!smoothed.realizable()) {
      smoothed.witness->smoothed = d.code().labels()[c];
      return smoothed;
    }
  }
  return r;
}

inline realizability_report oracle_report(const gauss_code& code,
                                          std::size_t max_chords = limits::current().max_oracle_chords) {
  const auto o = oracle_realizable(code, max_chords);
  realizability_report r;
  r.via = method::oracle;
  r.result = o.realizable ? verdict::realizable : verdict::not_realizable;
  r.genus = o.genus;
  return r;
}

struct matrix_violation {
  int condition = 0;                 ///< 1, 2 or 3
  std::vector<std::size_t> indices;  ///< the row, pair or triple involved
  std::size_t value = 0;             ///< the offending scalar product (sum for condition 3)

  friend bool operator==(const matrix_violation&, const matrix_violation&) = default;
};

struct matrix_report {
  std::vector<matrix_violation> violations;

  bool passes() const noexcept { return violations.empty(); }
  bool satisfies(int condition) const {
    for (const auto& v : violations)
      if (v.condition == condition) return false;
    return true;
  }
};

/// The three Z2 conditions on an interlacement-type matrix:
///   (1) <m_i, m_i> even,
///   (2) <m_i, m_j> even when m_ij = 0,
///   (3) <m_i,m_j> + <m_i,m_k> + <m_j,m_k> odd when i, j, k pairwise interlace.
inline matrix_report matrix_conditions(const bit_matrix& m) {
  m.require_symmetric();
  matrix_report r;
  const std::size_t n = m.size();
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t v = m.dot(i, i);
    if (v % 2) r.violations.push_back({1, {i}, v});
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (m.get(i, j)) continue;
      const std::size_t v = m.dot(i, j);
      if (v % 2) r.violations.push_back({2, {i, j}, v});
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!m.get(i, j)) continue;
      for (std::size_t k = j + 1; k < n; ++k) {
        if (!m.get(i, k) || !m.get(j, k)) continue;
        const std::size_t v = m.dot(i, j) + m.dot(i, k) + m.dot(j, k);
        if (v % 2 == 0) r.violations.push_back({3, {i, j, k}, v});
      }
    }
  return r;
}

}  // namespace gmk
