#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "gmk/bit_matrix.hpp"
#include "gmk/realizability.hpp"

namespace gmk {

/// Smallest index whose row is 1 off the diagonal.
inline std::optional<std::size_t> full_row(const bit_matrix& m) {
  for (std::size_t i = 0; i < m.size(); ++i) {
    bool full = true;
    for (std::size_t j = 0; j < m.size() && full; ++j)
      if (j != i && !m.get(i, j)) full = false;
    if (full) return i;
  }
  return std::nullopt;
}

/// Row order with the chosen full row moved to the front, others in order.
inline std::vector<std::size_t> full_row_first(std::size_t size, std::size_t r) {
  std::vector<std::size_t> order{r};
  for (std::size_t i = 0; i < size; ++i)
    if (i != r) order.push_back(i);
  return order;
}

struct meander_verdict {
  /// Full row + the three triple parity conditions + ordered closure.
  bool definition = false;
  /// Full row + ordered closure + pairwise parities <m_i,m_j> = m_ij, <m_i,m_i> = 0.
  bool characterization = false;
  std::vector<std::string> violations;

  bool is_meander() const noexcept { return definition && characterization; }
};

namespace detail {

// Ordered-triple closure on a matrix whose row 0 is the full row:
//   m_ij = m_jk = 1 => m_ik = 1, and m_ik = 1 => m_ij = 1 or m_jk = 1, for i < j < k.
inline bool ordered_closure(const bit_matrix& a, std::vector<std::string>* why,
                            const std::vector<std::size_t>& original) {
  bool ok = true;
  const auto name = [&](std::size_t i, std::size_t j, std::size_t k) {
    return "(" + std::to_string(original[i]) + "," + std::to_string(original[j]) + "," + std::to_string(original[k]) +
           ")";
  };
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      for (std::size_t k = j + 1; k < a.size(); ++k) {
        const bool ij = a.get(i, j), jk = a.get(j, k), ik = a.get(i, k);
        if (ij && jk && !ik) {
          ok = false;
          if (why) why->push_back("transitivity fails at " + name(i, j, k));
        }
        if (ik && !ij && !jk) {
          ok = false;
          if (why) why->push_back("interval condition fails at " + name(i, j, k));
        }
      }
  return ok;
}

}  // namespace detail

/// Checks a square Z2 matrix against both meander-matrix formulations.
/// Throws not_symmetric / nonzero_diagonal for inputs outside the domain.
inline meander_verdict is_meander_matrix(const bit_matrix& m) {
  m.require_symmetric();
  meander_verdict v;
  const auto r = full_row(m);
  if (!r) {
    v.violations.push_back("no full row");
    return v;
  }
  const auto order = full_row_first(m.size(), *r);
  const bit_matrix a = m.permuted(order);
  const bool closure = detail::ordered_closure(a, &v.violations, order);

  const auto triples = matrix_conditions(m);
  for (const auto& t : triples.violations) {
    std::string s = "condition (" + std::to_string(t.condition) + ") fails at (";
    for (std::size_t k = 0; k < t.indices.size(); ++k) s += (k ? "," : "") + std::to_string(t.indices[k]);
    v.violations.push_back(s + ")");
  }
  v.definition = closure && triples.passes();

  bool parity = true;
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i; j < m.size(); ++j) {
      const bool expected = i != j && m.get(i, j);
      if ((m.dot(i, j) % 2 == 1) != expected) {
        parity = false;
        v.violations.push_back("<m_" + std::to_string(i) + ",m_" + std::to_string(j) + "> should be " +
                               (expected ? "odd" : "even"));
      }
    }
  v.characterization = closure && parity;
  return v;
}

}  // namespace gmk
