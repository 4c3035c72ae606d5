#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "gmk/error.hpp"

namespace gmk {

/// Square matrix over Z2 with bit-packed rows.
///
/// Row i is stored as ceil(k / 64) machine words so that row scalar products
/// reduce to word-wise AND + popcount. The type itself accepts any contents;
/// the symmetric / zero-diagonal invariant is checked by `require_symmetric`
/// where an operation needs it.
class bit_matrix {
 public:
  using word = std::uint64_t;
  static constexpr std::size_t word_bits = 64;

  bit_matrix() = default;

  explicit bit_matrix(std::size_t size)
      : size_(size), stride_((size + word_bits - 1) / word_bits), bits_(size_ * stride_, 0) {}

  bit_matrix(std::initializer_list<std::initializer_list<int>> rows) : bit_matrix(rows.size()) {
    std::size_t i = 0;
    for (const auto& row : rows) {
      if (row.size() != size_)
        throw error(errc::parse_error, "matrix rows must all have length " + std::to_string(size_));
      std::size_t j = 0;
      for (int v : row) set(i, j++, v != 0);
      ++i;
    }
  }

  static bit_matrix from_rows(const std::vector<std::vector<int>>& rows) {
    bit_matrix m(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != rows.size()) {
        throw error(errc::parse_error, "row " + std::to_string(i) + " has length " + std::to_string(rows[i].size()) +
                                           ", expected " + std::to_string(rows.size()));
      }
      for (std::size_t j = 0; j < rows.size(); ++j) {
        if (rows[i][j] != 0 && rows[i][j] != 1) throw error(errc::parse_error, "matrix entries must be 0 or 1");
        m.set(i, j, rows[i][j] != 0);
      }
    }
    return m;
  }

  std::size_t size() const noexcept { return size_; }

  bool get(std::size_t i, std::size_t j) const { return (bits_[i * stride_ + j / word_bits] >> (j % word_bits)) & 1U; }
  bool operator()(std::size_t i, std::size_t j) const { return get(i, j); }

  void set(std::size_t i, std::size_t j, bool value) {
    word& w = bits_[i * stride_ + j / word_bits];
    const word mask = word{1} << (j % word_bits);
    w = value ? (w | mask) : (w & ~mask);
  }

  void set_symmetric(std::size_t i, std::size_t j, bool value) {
    set(i, j, value);
    set(j, i, value);
  }

  void toggle_symmetric(std::size_t i, std::size_t j) {
    set(i, j, !get(i, j));
    if (i != j) set(j, i, !get(j, i));
  }

  std::span<const word> row(std::size_t i) const { return {bits_.data() + i * stride_, stride_}; }

  /// Number of ones in row i, i.e. |c_×| for an interlacement matrix.
  std::size_t row_weight(std::size_t i) const {
    std::size_t n = 0;
    for (word w : row(i)) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }

  /// <m_i, m_j> over the integers.
  std::size_t dot(std::size_t i, std::size_t j) const {
    const auto a = row(i);
    const auto b = row(j);
    std::size_t n = 0;
    for (std::size_t k = 0; k < stride_; ++k) n += static_cast<std::size_t>(std::popcount(a[k] & b[k]));
    return n;
  }

  /// <m_{i1}, ..., m_{ik}> over the integers: columns where every listed row has a one.
  std::size_t multi_dot(std::span<const std::size_t> indices) const {
    std::size_t n = 0;
    for (std::size_t k = 0; k < stride_; ++k) {
      word acc = ~word{0};
      for (std::size_t i : indices) acc &= row(i)[k];
      n += static_cast<std::size_t>(std::popcount(acc));
    }
    return n;
  }

  bool is_symmetric() const {
    for (std::size_t i = 0; i < size_; ++i)
      for (std::size_t j = i + 1; j < size_; ++j)
        if (get(i, j) != get(j, i)) return false;
    return true;
  }

  bool has_zero_diagonal() const {
    for (std::size_t i = 0; i < size_; ++i)
      if (get(i, i)) return false;
    return true;
  }

  void require_symmetric() const {
    for (std::size_t i = 0; i < size_; ++i) {
      if (get(i, i))
        throw error(errc::nonzero_diagonal, "entry (" + std::to_string(i) + "," + std::to_string(i) + ") is 1");
    }
    for (std::size_t i = 0; i < size_; ++i)
      for (std::size_t j = i + 1; j < size_; ++j)
        if (get(i, j) != get(j, i)) {
          throw error(errc::not_symmetric, "entries (" + std::to_string(i) + "," + std::to_string(j) + ") and (" +
                                               std::to_string(j) + "," + std::to_string(i) + ") differ");
        }
  }

  /// Simultaneous row/column permutation: result(a, b) = (*this)(order[a], order[b]).
  bit_matrix permuted(std::span<const std::size_t> order) const {
    bit_matrix out(order.size());
    for (std::size_t a = 0; a < order.size(); ++a)
      for (std::size_t b = 0; b < order.size(); ++b) out.set(a, b, get(order[a], order[b]));
    return out;
  }

  std::vector<std::vector<int>> to_rows() const {
    std::vector<std::vector<int>> rows(size_, std::vector<int>(size_, 0));
    for (std::size_t i = 0; i < size_; ++i)
      for (std::size_t j = 0; j < size_; ++j) rows[i][j] = get(i, j) ? 1 : 0;
    return rows;
  }

  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < size_; ++i) {
      for (std::size_t j = 0; j < size_; ++j) {
        if (j) s += ' ';
        s += get(i, j) ? '1' : '0';
      }
      s += '\n';
    }
    return s;
  }

  friend bool operator==(const bit_matrix&, const bit_matrix&) = default;
  friend auto operator<=>(const bit_matrix& a, const bit_matrix& b) {
    if (auto c = a.size_ <=> b.size_; c != 0) return c;
    return a.bits_ <=> b.bits_;
  }

 private:
  std::size_t size_ = 0;
  std::size_t stride_ = 0;
  std::vector<word> bits_;
};

}  // namespace gmk
