#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ratsurf {

/// Dense matrix over F_2 with rows packed into 64-bit words.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), wpr_((cols + 63) / 64), data_(rows * wpr_, 0) {}

  static BitMatrix identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  bool get(std::size_t r, std::size_t c) const { return (data_[r * wpr_ + c / 64] >> (c % 64)) & 1u; }
  void set(std::size_t r, std::size_t c, bool v) {
    auto& w = data_[r * wpr_ + c / 64];
    const std::uint64_t bit = std::uint64_t{1} << (c % 64);
    w = v ? (w | bit) : (w & ~bit);
  }
  void flip(std::size_t r, std::size_t c) { data_[r * wpr_ + c / 64] ^= std::uint64_t{1} << (c % 64); }

  std::uint64_t* row(std::size_t r) { return data_.data() + r * wpr_; }
  const std::uint64_t* row(std::size_t r) const { return data_.data() + r * wpr_; }
  std::size_t words_per_row() const { return wpr_; }

  void xor_row(std::size_t dst, std::size_t src) {
    std::uint64_t* d = row(dst);
    const std::uint64_t* s = row(src);
    for (std::size_t w = 0; w < wpr_; ++w) d[w] ^= s[w];
  }
  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t w = 0; w < wpr_; ++w) std::swap(data_[a * wpr_ + w], data_[b * wpr_ + w]);
  }

  bool row_is_zero(std::size_t r) const {
    const std::uint64_t* p = row(r);
    for (std::size_t w = 0; w < wpr_; ++w) {
      if (p[w] != 0) return false;
    }
    return true;
  }

  /// Appends a row; `bits` must have at least cols() bits.
  void push_row(const std::vector<std::uint64_t>& bits) {
    if (bits.size() < wpr_) throw std::invalid_argument("row too short");
    data_.insert(data_.end(), bits.begin(), bits.begin() + static_cast<std::ptrdiff_t>(wpr_));
    ++rows_;
  }

  BitMatrix transpose() const {
    BitMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t c = 0; c < cols_; ++c) {
        if (get(r, c)) t.set(c, r, true);
      }
    }
    return t;
  }

  friend BitMatrix operator*(const BitMatrix& a, const BitMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("dimension mismatch in BitMatrix product");
    BitMatrix out(a.rows_, b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r) {
      std::uint64_t* o = out.row(r);
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (!a.get(r, k)) continue;
        const std::uint64_t* src = b.row(k);
        for (std::size_t w = 0; w < out.wpr_; ++w) o[w] ^= src[w];
      }
    }
    return out;
  }

  friend bool operator==(const BitMatrix& a, const BitMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  bool is_zero() const {
    for (auto w : data_) {
      if (w != 0) return false;
    }
    return true;
  }

  /// Reduced row echelon form in place: leftmost pivot first, pivot row taken as the lowest
  /// index among candidates. Returns the pivot columns in row order.
  std::vector<std::size_t> rref() {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
      std::size_t p = r;
      while (p < rows_ && !get(p, c)) ++p;
      if (p == rows_) continue;
      swap_rows(r, p);
      for (std::size_t i = 0; i < rows_; ++i) {
        if (i != r && get(i, c)) xor_row(i, r);
      }
      pivots.push_back(c);
      ++r;
    }
    return pivots;
  }

  std::size_t rank() const {
    BitMatrix m = *this;
    return m.rref().size();
  }

  /// Basis of {v : M v = 0}, one vector per row, indexed by the free columns in ascending
  /// order (v has a 1 in its own free column and 0 in the other free columns).
  BitMatrix kernel() const {
    BitMatrix m = *this;
    const auto pivots = m.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (auto c : pivots) is_pivot[c] = true;
    BitMatrix k(0, cols_);
    std::vector<std::uint64_t> v(wpr_ == 0 ? 1 : wpr_);
    for (std::size_t f = 0; f < cols_; ++f) {
      if (is_pivot[f]) continue;
      std::fill(v.begin(), v.end(), 0);
      v[f / 64] |= std::uint64_t{1} << (f % 64);
      for (std::size_t i = 0; i < pivots.size(); ++i) {
        if (m.get(i, f)) v[pivots[i] / 64] |= std::uint64_t{1} << (pivots[i] % 64);
      }
      k.push_row(v);
    }
    return k;
  }

  /// Basis of {w : w^T M = 0}, one vector per row.
  BitMatrix left_kernel() const { return transpose().kernel(); }

  std::string to_string() const {
    std::string s;
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t c = 0; c < cols_; ++c) s += get(r, c) ? '1' : '0';
      s += '\n';
    }
    return s;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t wpr_ = 0;
  std::vector<std::uint64_t> data_;
};

}  // namespace ratsurf
