#include "bettigraph/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace bettigraph {

namespace {

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t out = 1 % p;
  base %= p;
  while (exp != 0) {
    if (exp & 1) out = out * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return out;
}

// p is prime, so a^(p-2) inverts a.
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  return pow_mod(a, p - 2, p);
}

} // namespace

FieldMatrix::FieldMatrix(FieldSpec field, int rows, int cols)
    : field_(field), rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0)
    throw std::invalid_argument("FieldMatrix: negative dimension");
  size_t cells = static_cast<size_t>(rows) * static_cast<size_t>(cols);
  if (field_.characteristic == 2) {
    words_per_row_ = (cols + 63) / 64;
    bits_.assign(static_cast<size_t>(rows) * static_cast<size_t>(words_per_row_), 0);
  } else if (field_.is_rational()) {
    rat_.assign(cells, Rational(0));
  } else {
    modp_.assign(cells, 0);
  }
}

void FieldMatrix::set(int r, int c, std::int64_t value) {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
    throw std::out_of_range("FieldMatrix::set");
  if (field_.characteristic == 2) {
    std::uint64_t& word =
        bits_[static_cast<size_t>(r) * static_cast<size_t>(words_per_row_) +
              static_cast<size_t>(c / 64)];
    std::uint64_t bit = std::uint64_t{1} << (c % 64);
    if (value & 1)
      word |= bit;
    else
      word &= ~bit;
  } else if (field_.is_rational()) {
    rat_[static_cast<size_t>(r) * static_cast<size_t>(cols_) + static_cast<size_t>(c)] =
        Rational(value);
  } else {
    std::int64_t p = field_.characteristic;
    std::int64_t m = value % p;
    if (m < 0) m += p;
    modp_[static_cast<size_t>(r) * static_cast<size_t>(cols_) + static_cast<size_t>(c)] =
        static_cast<std::uint64_t>(m);
  }
}

std::int64_t FieldMatrix::entry_mod_p(int r, int c) const {
  if (field_.characteristic == 2)
    return (bits_[static_cast<size_t>(r) * static_cast<size_t>(words_per_row_) +
                  static_cast<size_t>(c / 64)] >> (c % 64)) & 1;
  return static_cast<std::int64_t>(
      modp_[static_cast<size_t>(r) * static_cast<size_t>(cols_) + static_cast<size_t>(c)]);
}

bool FieldMatrix::is_zero() const {
  if (field_.characteristic == 2) {
    for (std::uint64_t w : bits_)
      if (w != 0) return false;
    return true;
  }
  if (field_.is_rational()) {
    for (const Rational& x : rat_)
      if (x != 0) return false;
    return true;
  }
  for (std::uint64_t x : modp_)
    if (x != 0) return false;
  return true;
}

FieldMatrix FieldMatrix::multiply(const FieldMatrix& other) const {
  if (field_ != other.field_)
    throw std::invalid_argument("FieldMatrix::multiply: field mismatch");
  if (cols_ != other.rows_)
    throw std::invalid_argument("FieldMatrix::multiply: shape mismatch");
  FieldMatrix out(field_, rows_, other.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < other.cols_; ++j) {
      if (field_.is_rational()) {
        Rational acc = 0;
        for (int k = 0; k < cols_; ++k)
          acc += rat_[static_cast<size_t>(i) * cols_ + static_cast<size_t>(k)] *
                 other.rat_[static_cast<size_t>(k) * other.cols_ + static_cast<size_t>(j)];
        out.rat_[static_cast<size_t>(i) * other.cols_ + static_cast<size_t>(j)] = acc;
      } else {
        std::uint64_t p = field_.characteristic;
        std::uint64_t acc = 0;
        for (int k = 0; k < cols_; ++k)
          acc = (acc + static_cast<std::uint64_t>(entry_mod_p(i, k)) *
                           static_cast<std::uint64_t>(other.entry_mod_p(k, j))) % p;
        out.set(i, j, static_cast<std::int64_t>(acc));
      }
    }
  return out;
}

namespace {

int rank_gf2(std::vector<std::uint64_t> work, int rows, int cols, int words) {
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int word = col / 64;
    std::uint64_t bit = std::uint64_t{1} << (col % 64);
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (work[static_cast<size_t>(r) * words + static_cast<size_t>(word)] & bit) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    for (int w = 0; w < words; ++w)
      std::swap(work[static_cast<size_t>(rank) * words + static_cast<size_t>(w)],
                work[static_cast<size_t>(pivot) * words + static_cast<size_t>(w)]);
    for (int r = rank + 1; r < rows; ++r)
      if (work[static_cast<size_t>(r) * words + static_cast<size_t>(word)] & bit)
        for (int w = word; w < words; ++w)
          work[static_cast<size_t>(r) * words + static_cast<size_t>(w)] ^=
              work[static_cast<size_t>(rank) * words + static_cast<size_t>(w)];
    ++rank;
  }
  return rank;
}

int rank_modp(std::vector<std::uint64_t> work, int rows, int cols, std::uint64_t p) {
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (work[static_cast<size_t>(r) * cols + static_cast<size_t>(col)] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    for (int c = 0; c < cols; ++c)
      std::swap(work[static_cast<size_t>(rank) * cols + static_cast<size_t>(c)],
                work[static_cast<size_t>(pivot) * cols + static_cast<size_t>(c)]);
    std::uint64_t inv =
        inv_mod(work[static_cast<size_t>(rank) * cols + static_cast<size_t>(col)], p);
    for (int r = rank + 1; r < rows; ++r) {
      std::uint64_t head = work[static_cast<size_t>(r) * cols + static_cast<size_t>(col)];
      if (head == 0) continue;
      std::uint64_t factor = head * inv % p;
      for (int c = col; c < cols; ++c) {
        std::uint64_t sub = factor *
                            work[static_cast<size_t>(rank) * cols + static_cast<size_t>(c)] % p;
        std::uint64_t& cell = work[static_cast<size_t>(r) * cols + static_cast<size_t>(c)];
        cell = (cell + p - sub) % p;
      }
    }
    ++rank;
  }
  return rank;
}

int rank_rational(std::vector<Rational> work, int rows, int cols) {
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (work[static_cast<size_t>(r) * cols + static_cast<size_t>(col)] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    for (int c = 0; c < cols; ++c)
      std::swap(work[static_cast<size_t>(rank) * cols + static_cast<size_t>(c)],
                work[static_cast<size_t>(pivot) * cols + static_cast<size_t>(c)]);
    const Rational head =
        work[static_cast<size_t>(rank) * cols + static_cast<size_t>(col)];
    for (int r = rank + 1; r < rows; ++r) {
      Rational factor = work[static_cast<size_t>(r) * cols + static_cast<size_t>(col)];
      if (factor == 0) continue;
      factor /= head;
      for (int c = col; c < cols; ++c)
        work[static_cast<size_t>(r) * cols + static_cast<size_t>(c)] -=
            factor * work[static_cast<size_t>(rank) * cols + static_cast<size_t>(c)];
    }
    ++rank;
  }
  return rank;
}

} // namespace

int matrix_rank(const FieldMatrix& m) {
  if (m.rows_ == 0 || m.cols_ == 0) return 0;
  if (m.field_.characteristic == 2)
    return rank_gf2(m.bits_, m.rows_, m.cols_, m.words_per_row_);
  if (m.field_.is_rational()) return rank_rational(m.rat_, m.rows_, m.cols_);
  return rank_modp(m.modp_, m.rows_, m.cols_, m.field_.characteristic);
}

} // namespace bettigraph
