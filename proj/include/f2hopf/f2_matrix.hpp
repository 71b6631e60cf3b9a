#pragma once

// Bit-packed linear algebra over F2.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "f2hopf/errors.hpp"

namespace f2hopf {

class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

  std::size_t size() const { return size_; }
  bool get(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }
  void set(std::size_t i, bool v = true) {
    const auto bit = std::uint64_t{1} << (i % 64);
    if (v) {
      words_[i / 64] |= bit;
    } else {
      words_[i / 64] &= ~bit;
    }
  }
  void flip(std::size_t i) { words_[i / 64] ^= std::uint64_t{1} << (i % 64); }
  BitVec& operator^=(const BitVec& other);
  bool any() const;
  std::size_t count() const;
  // Lowest set bit, or size() if none.
  std::size_t first_set() const;
  std::vector<std::size_t> set_bits() const;

  friend bool operator==(const BitVec&, const BitVec&) = default;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

// Row-major; row r is the image of basis vector r when the matrix is used as
// a linear map (row vector times matrix).
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, BitVec(cols)) {}

  static BitMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  bool get(std::size_t r, std::size_t c) const { return rows_[r].get(c); }
  void set(std::size_t r, std::size_t c, bool v = true) { rows_[r].set(c, v); }
  const BitVec& row(std::size_t r) const { return rows_[r]; }
  BitVec& row(std::size_t r) { return rows_[r]; }

  std::size_t rank() const;
  bool is_zero() const;
  // Row vector v (length rows()) times this matrix.
  BitVec apply(const BitVec& v) const;
  // (this * other)(x) = other(this(x)): rows of this, cols of other.
  BitMatrix then(const BitMatrix& other) const;
  std::string to_string() const;

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::size_t cols_ = 0;
  std::vector<BitVec> rows_;
};

// Coordinates of vectors in the span of fixed generators.  Vectors are given
// sparsely as sorted lists of keys (the set of keys with coefficient 1).
template <class Key>
class SpanSolver {
 public:
  explicit SpanSolver(const std::vector<std::vector<Key>>& generators) : n_(generators.size()) {
    for (const auto& g : generators) {
      for (const auto& key : g) index_.try_emplace(key, index_.size());
    }
    for (std::size_t i = 0; i < n_; ++i) {
      BitVec row = encode(generators[i]);
      BitVec combo(n_);
      combo.set(i);
      reduce(row, combo);
      const std::size_t pivot = row.first_set();
      if (pivot == row.size()) {
        independent_ = false;
        continue;
      }
      pivots_.push_back(pivot);
      rows_.push_back(std::move(row));
      combos_.push_back(std::move(combo));
    }
  }

  std::size_t rank() const { return rows_.size(); }
  bool independent() const { return independent_; }

  // Coefficients c with sum c_i generator_i == target, or nullopt if target is
  // not in the span.  Requires independent generators for uniqueness.
  std::optional<BitVec> coordinates(const std::vector<Key>& target) const {
    BitVec row(index_.size());
    for (const auto& key : target) {
      auto it = index_.find(key);
      if (it == index_.end()) return std::nullopt;
      row.flip(it->second);
    }
    BitVec combo(n_);
    reduce(row, combo);
    if (row.any()) return std::nullopt;
    return combo;
  }

 private:
  BitVec encode(const std::vector<Key>& keys) const {
    BitVec row(index_.size());
    for (const auto& key : keys) row.flip(index_.at(key));
    return row;
  }

  void reduce(BitVec& row, BitVec& combo) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (row.get(pivots_[r])) {
        row ^= rows_[r];
        combo ^= combos_[r];
      }
    }
  }

  std::size_t n_;
  bool independent_ = true;
  std::map<Key, std::size_t> index_;
  std::vector<BitVec> rows_;
  std::vector<BitVec> combos_;
  std::vector<std::size_t> pivots_;
};

// All of GL(n, F2) for n <= 20 (rows as bitmasks, each outside the span of
// the rows above, tried in increasing order).  The identity comes first.
std::vector<BitMatrix> general_linear_group(std::size_t n);
// |GL(n, F2)|, saturating at UINT64_MAX.
std::uint64_t general_linear_order(std::size_t n);

}  // namespace f2hopf
