#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gmk/bit_matrix.hpp"
#include "gmk/error.hpp"
#include "gmk/gf2.hpp"
#include "gmk/limits.hpp"
#include "gmk/meander_matrix.hpp"

namespace gmk {

/// Working tableau of the step-by-step meander construction.
///
/// Cells (i, j) with 1 <= i < j <= N start as their own unknown; row 0 is
/// all ones and the diagonal is zero. Every cell holds an affine form over the
/// unknowns. Rows are Δ-filled in visitation order, and `propagate` keeps the
/// forms reduced against every parity equation that is currently linear.
class partial_meander {
 public:
  explicit partial_meander(std::size_t points) : n_(points) {
    if (points < 2 || points % 2 != 0) {
      throw error(errc::invalid_n, "N must be even and at least 2, got " + std::to_string(points));
    }
    nvars_ = n_ * (n_ - 1) / 2;
    cells_.resize((n_ + 1) * n_ / 2);
    for (std::size_t j = 1; j <= n_; ++j) cell_ref(0, j) = gf2::affine::one(nvars_);
    for (std::size_t i = 1; i <= n_; ++i)
      for (std::size_t j = i + 1; j <= n_; ++j) cell_ref(i, j) = gf2::affine::variable(nvars_, variable_of(i, j));
    chosen_.assign(n_ + 1, false);
  }

  std::size_t points() const noexcept { return n_; }
  std::size_t unknowns() const noexcept { return nvars_; }

  /// The unknown first attached to cell (i, j), 1 <= i < j <= N.
  std::size_t variable_of(std::size_t i, std::size_t j) const {
    if (i > j) std::swap(i, j);
    // row-major over the strict upper triangle of rows 1..N
    return (i - 1) * n_ - (i - 1) * i / 2 + (j - i - 1);
  }

  gf2::affine cell(std::size_t i, std::size_t j) const {
    if (i == j) return gf2::affine::zero(nvars_);
    if (i > j) std::swap(i, j);
    return cells_[index(i, j)];
  }

  std::optional<bool> value(std::size_t i, std::size_t j) const {
    const auto c = cell(i, j);
    if (!c.is_constant()) return std::nullopt;
    return c.value();
  }

  bool complete() const {
    for (const auto& c : cells_)
      if (!c.is_constant()) return false;
    return true;
  }

  const std::vector<std::size_t>& visitation() const noexcept { return visitation_; }
  bool chosen(std::size_t i) const { return chosen_.at(i); }

  /// 1 for odd, 0 for even: the first choice is odd, then parities alternate.
  int next_parity() const {
    if (visitation_.empty()) return 1;
    return 1 - static_cast<int>(visitation_.back() % 2);
  }

  /// Unchosen labels of the given parity (S1 for 1, S0 for 0), ascending.
  std::vector<std::size_t> remaining(int parity) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 1; i <= n_; ++i)
      if (!chosen_[i] && static_cast<int>(i % 2) == parity) out.push_back(i);
    return out;
  }

  /// Unknowns that still occur in some cell.
  std::vector<std::size_t> free_unknowns() const {
    gf2::vector seen(nvars_);
    for (const auto& c : cells_) merge(seen, c.vars);
    return seen.ones();
  }

  /// Display name of an unknown: a, b, c, ... allocated when the unknown is
  /// first shared by a cell other than its own.
  std::optional<std::string> name(std::size_t var) const {
    auto it = names_.find(var);
    if (it == names_.end()) return std::nullopt;
    return it->second;
  }

  /// Tableau text for one cell: 0/1, a sum of named unknowns, or empty.
  std::string cell_text(std::size_t i, std::size_t j) const {
    const auto c = cell(i, j);
    if (c.is_constant()) return c.value() ? "1" : "0";
    std::string s = c.constant ? "1" : "";
    for (std::size_t v : c.vars.ones()) {
      auto nm = name(v);
      if (!nm) return "";
      if (!s.empty()) s += "+";
      s += *nm;
    }
    return s;
  }

  std::string tableau() const {
    std::vector<std::vector<std::string>> grid(n_ + 2, std::vector<std::string>(n_ + 2));
    std::size_t width = 1;
    for (std::size_t i = 0; i <= n_; ++i) {
      grid[0][i + 1] = grid[i + 1][0] = std::to_string(i);
      for (std::size_t j = 0; j <= n_; ++j) {
        grid[i + 1][j + 1] = cell_text(i, j);
        width = std::max(width, grid[i + 1][j + 1].size());
      }
    }
    width = std::max(width, std::to_string(n_).size());
    std::string out;
    for (const auto& row : grid) {
      for (std::size_t k = 0; k < row.size(); ++k) {
        if (k) out += ' ';
        out += std::string(width - row[k].size(), ' ') + (row[k].empty() && k ? "." : row[k]);
      }
      out += '\n';
    }
    return out;
  }

  bit_matrix to_matrix() const {
    bit_matrix m(n_ + 1);
    for (std::size_t i = 0; i <= n_; ++i)
      for (std::size_t j = i + 1; j <= n_; ++j) {
        const auto c = cell(i, j);
        if (!c.is_constant()) throw std::logic_error("tableau still has unknown cells");
        m.set_symmetric(i, j, c.value());
      }
    return m;
  }

  /// Fixes an unknown everywhere it occurs.
  partial_meander assigned(std::size_t var, bool v) const {
    partial_meander out = *this;
    gf2::affine eq = gf2::affine::variable(nvars_, var);
    eq += v;
    out.pending_.push_back(eq);
    return out;
  }

 private:
  friend std::optional<partial_meander> delta_fill(const partial_meander& p, std::size_t index);
  friend std::optional<partial_meander> propagate(const partial_meander& p);

  static void merge(gf2::vector& into, const gf2::vector& v) {
    for (std::size_t b : v.ones()) into.set(b);
  }

  std::size_t index(std::size_t i, std::size_t j) const {
    // rows 0..N-1 of the strict upper triangle, row-major
    return i * n_ - i * (i - 1) / 2 + (j - i - 1);
  }
  gf2::affine& cell_ref(std::size_t i, std::size_t j) {
    if (i > j) std::swap(i, j);
    return cells_[index(i, j)];
  }

  void name_new_aliases() {
    for (std::size_t i = 1; i <= n_; ++i)
      for (std::size_t j = i + 1; j <= n_; ++j) {
        const auto v = cells_[index(i, j)].single_variable();
        if (!v || *v == variable_of(i, j) || names_.count(*v)) continue;
        names_.emplace(*v, next_name());
      }
  }

  std::string next_name() {
    std::size_t k = name_counter_++;
    std::string s(1, static_cast<char>('a' + k % 26));
    if (k >= 26) s += std::to_string(k / 26);
    return s;
  }

  std::size_t n_ = 0;
  std::size_t nvars_ = 0;
  std::vector<gf2::affine> cells_;
  std::vector<bool> chosen_;
  std::vector<std::size_t> visitation_;
  std::vector<gf2::affine> pending_;  // equations "expr = 0" not yet folded into the cells
  std::map<std::size_t, std::string> names_;
  std::size_t name_counter_ = 0;
};

/// Δ-fills row and column `index`: every undetermined cell left of the
/// diagonal becomes 0 and every one right of it becomes 1. Returns nullopt
/// when an already-determined cell contradicts that pattern.
///
/// Throws already_chosen if the row was filled before and parity_violation if
/// index has the same parity as the previous choice (or is even on the first).
inline std::optional<partial_meander> delta_fill(const partial_meander& p, std::size_t index) {
  if (index < 1 || index > p.n_) {
    throw error(errc::index_out_of_range, "row " + std::to_string(index) + " outside 1.." + std::to_string(p.n_));
  }
  if (p.chosen_[index]) throw error(errc::already_chosen, "row " + std::to_string(index) + " is already Δ-filled");
  if (static_cast<int>(index % 2) != p.next_parity()) {
    throw error(errc::parity_violation,
                "row " + std::to_string(index) + " must have " + (p.next_parity() ? "odd" : "even") + " parity");
  }
  partial_meander out = p;
  for (std::size_t j = 1; j <= p.n_; ++j) {
    if (j == index || p.chosen_[j]) continue;
    const bool target = j > index;
    gf2::affine& c = out.cell_ref(index, j);
    if (c.is_constant()) {
      if (c.value() != target) return std::nullopt;
      continue;
    }
    gf2::affine eq = c;
    eq += target;
    out.pending_.push_back(std::move(eq));
    c = gf2::affine::of_bool(p.nvars_, target);
  }
  out.chosen_[index] = true;
  out.visitation_.push_back(index);
  return out;
}

/// Solves every linear consequence of <m_i,m_i> = 0 and <m_i,m_j> = m_ij
/// (i != j) together with pending assignments, substitutes the solution into
/// all cells, and repeats while new equations become linear. nullopt means
/// the constraints are contradictory.
inline std::optional<partial_meander> propagate(const partial_meander& p) {
  partial_meander out = p;
  const std::size_t n = out.n_;
  const std::size_t nv = out.nvars_;
  for (;;) {
    gf2::system sys(nv);
    for (const auto& eq : out.pending_) sys.add(eq);
    for (std::size_t i = 0; i <= n; ++i) {
      for (std::size_t j = i; j <= n; ++j) {
        gf2::affine eq = i == j ? gf2::affine::zero(nv) : out.cell(i, j);
        bool linear = true;
        for (std::size_t t = 0; t <= n && linear; ++t) {
          if (t == i || t == j) continue;
          auto prod = gf2::linear_product(out.cell(i, t), out.cell(j, t));
          if (!prod) {
            linear = false;
          } else {
            eq += *prod;
          }
        }
        if (linear && (eq.constant || eq.vars.any())) sys.add(eq);
      }
    }
    if (!sys.solve()) return std::nullopt;
    bool changed = false;
    for (auto& c : out.cells_) {
      auto reduced = sys.reduce(c);
      if (!(reduced == c)) {
        c = std::move(reduced);
        changed = true;
      }
    }
    out.pending_.clear();
    if (!changed) break;
  }
  out.name_new_aliases();
  return out;
}

struct meander_record {
  bit_matrix matrix;
  std::vector<std::size_t> visitation;

  friend bool operator==(const meander_record&, const meander_record&) = default;
};

/// Depth-first Δ-filling over all parity-alternating visitation orders that
/// start odd, trying candidates in ascending order. A forced prefix pins the
/// first choices. Leaves are emitted once per assignment of any unknowns left
/// over, provided the completed matrix passes is_meander_matrix.
inline void enumerate_meander_matrices(std::size_t points, const std::vector<std::size_t>& forced_prefix,
                                       const std::function<void(const meander_record&)>& visit,
                                       std::size_t max_points = limits::current().max_meander_points) {
  if (points < 2 || points % 2 != 0) throw error(errc::invalid_n, "N must be even and at least 2");
  require_within(points, max_points, "meander size");
  auto root = propagate(partial_meander(points));
  if (!root) return;

  const std::function<void(const partial_meander&)> emit_leaf = [&](const partial_meander& leaf) {
    const auto free = leaf.free_unknowns();
    if (free.empty()) {
      const bit_matrix m = leaf.to_matrix();
      if (is_meander_matrix(m).is_meander()) visit({m, leaf.visitation()});
      return;
    }
    for (bool v : {false, true}) {
      if (auto next = propagate(leaf.assigned(free.front(), v))) emit_leaf(*next);
    }
  };

  const std::function<void(const partial_meander&)> dfs = [&](const partial_meander& state) {
    const std::size_t depth = state.visitation().size();
    if (depth == points) {
      emit_leaf(state);
      return;
    }
    std::vector<std::size_t> candidates;
    if (depth < forced_prefix.size()) {
      candidates.push_back(forced_prefix[depth]);
    } else {
      candidates = state.remaining(state.next_parity());
    }
    for (std::size_t m : candidates) {
      auto filled = delta_fill(state, m);
      if (!filled) continue;
      auto solved = propagate(*filled);
      if (!solved) continue;
      dfs(*solved);
    }
  };
  dfs(*root);
}

inline std::vector<meander_record> enumerate_meander_matrices(
    std::size_t points, const std::vector<std::size_t>& forced_prefix = {},
    std::size_t max_points = limits::current().max_meander_points) {
  std::vector<meander_record> out;
  enumerate_meander_matrices(points, forced_prefix, [&](const meander_record& r) { out.push_back(r); }, max_points);
  return out;
}

}  // namespace gmk
