#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace gmk::gf2 {

/// Dynamic bit vector over GF(2).
class vector {
 public:
  using word = std::uint64_t;

  vector() = default;
  explicit vector(std::size_t bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

  std::size_t size() const noexcept { return bits_; }

  bool get(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }
  void set(std::size_t i, bool v = true) {
    const word mask = word{1} << (i % 64);
    words_[i / 64] = v ? (words_[i / 64] | mask) : (words_[i / 64] & ~mask);
  }
  void flip(std::size_t i) { words_[i / 64] ^= word{1} << (i % 64); }

  vector& operator^=(const vector& o) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] ^= o.words_[k];
    return *this;
  }

  bool any() const {
    for (word w : words_)
      if (w) return true;
    return false;
  }

  std::size_t count() const {
    std::size_t n = 0;
    for (word w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }

  /// Index of the lowest set bit, or size() when none.
  std::size_t lowest() const {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k]) return k * 64 + static_cast<std::size_t>(std::countr_zero(words_[k]));
    return bits_;
  }

  /// Index of the highest set bit, or size() when none.
  std::size_t highest() const {
    for (std::size_t k = words_.size(); k-- > 0;)
      if (words_[k]) return k * 64 + 63 - static_cast<std::size_t>(std::countl_zero(words_[k]));
    return bits_;
  }

  std::vector<std::size_t> ones() const {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < words_.size(); ++k) {
      word w = words_[k];
      while (w) {
        out.push_back(k * 64 + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
    return out;
  }

  friend bool operator==(const vector&, const vector&) = default;

 private:
  std::size_t bits_ = 0;
  std::vector<word> words_;
};

/// constant + sum of the listed unknowns.
struct affine {
  vector vars;
  bool constant = false;

  static affine zero(std::size_t nvars) { return {vector(nvars), false}; }
  static affine one(std::size_t nvars) { return {vector(nvars), true}; }
  static affine of_bool(std::size_t nvars, bool v) { return {vector(nvars), v}; }
  static affine variable(std::size_t nvars, std::size_t v) {
    affine a{vector(nvars), false};
    a.vars.set(v);
    return a;
  }

  bool is_constant() const { return !vars.any(); }
  bool value() const { return constant; }

  std::optional<std::size_t> single_variable() const {
    if (constant || vars.count() != 1) return std::nullopt;
    return vars.lowest();
  }

  affine& operator+=(const affine& o) {
    vars ^= o.vars;
    constant ^= o.constant;
    return *this;
  }
  affine& operator+=(bool c) {
    constant ^= c;
    return *this;
  }
  friend affine operator+(affine a, const affine& b) { return a += b; }

  friend bool operator==(const affine&, const affine&) = default;
};

/// Product of two affine forms when it is again affine: a constant factor,
/// equal factors (x * x = x) or complementary factors (x * (x + 1) = 0).
inline std::optional<affine> linear_product(const affine& a, const affine& b) {
  if (a.is_constant()) return a.value() ? b : affine::zero(b.vars.size());
  if (b.is_constant()) return b.value() ? a : affine::zero(a.vars.size());
  if (a.vars == b.vars) {
    if (a.constant == b.constant) return a;
    return affine::zero(a.vars.size());
  }
  return std::nullopt;
}

/// Reduced row echelon form of a set of equations `expr = 0`, columns in
/// descending unknown order. The highest unknown of each equation becomes its
/// pivot, so the free unknowns are the lowest-indexed ones.
class system {
 public:
  explicit system(std::size_t nvars) : nvars_(nvars) {}

  void add(const affine& eq) { rows_.push_back(eq); }
  std::size_t equations() const noexcept { return rows_.size(); }

  /// Eliminates in place. Returns false when the equations contradict (0 = 1).
  bool solve() {
    std::size_t rank = 0;
    for (std::size_t col = nvars_; col-- > 0 && rank < rows_.size();) {
      std::size_t pick = rank;
      while (pick < rows_.size() && !rows_[pick].vars.get(col)) ++pick;
      if (pick == rows_.size()) continue;
      std::swap(rows_[rank], rows_[pick]);
      for (std::size_t r = 0; r < rows_.size(); ++r)
        if (r != rank && rows_[r].vars.get(col)) rows_[r] += rows_[rank];
      ++rank;
    }
    for (std::size_t r = rank; r < rows_.size(); ++r)
      if (rows_[r].constant) return false;
    rows_.resize(rank);
    pivot_of_.assign(nvars_, npos);
    for (std::size_t r = 0; r < rows_.size(); ++r) pivot_of_[rows_[r].vars.highest()] = r;
    return true;
  }

  /// Rewrites e in terms of free unknowns only. Valid after solve().
  affine reduce(affine e) const {
    for (std::size_t v : e.vars.ones())
      if (pivot_of_[v] != npos) e += rows_[pivot_of_[v]];
    return e;
  }

  bool is_pivot(std::size_t v) const { return pivot_of_[v] != npos; }

 private:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::size_t nvars_;
  std::vector<affine> rows_;
  std::vector<std::size_t> pivot_of_;
};

}  // namespace gmk::gf2
