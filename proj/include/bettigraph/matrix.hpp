#ifndef BETTIGRAPH_MATRIX_HPP
#define BETTIGRAPH_MATRIX_HPP

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "bettigraph/field.hpp"

namespace bettigraph {

using Rational = boost::multiprecision::cpp_rational;

/// Dense matrix over a FieldSpec field with exact entries. Rows are
/// bit-packed for F_2; odd-prime entries are stored reduced mod p;
/// characteristic 0 uses arbitrary-precision rationals.
class FieldMatrix {
 public:
  FieldMatrix(FieldSpec field, int rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  FieldSpec field() const { return field_; }

  // Reduce an integer into the field and store it.
  void set(int r, int c, std::int64_t value);

  bool is_zero() const;
  FieldMatrix multiply(const FieldMatrix& other) const;

  friend int matrix_rank(const FieldMatrix& m);

 private:
  std::int64_t entry_mod_p(int r, int c) const;

  FieldSpec field_;
  int rows_ = 0;
  int cols_ = 0;
  int words_per_row_ = 0;            // characteristic 2
  std::vector<std::uint64_t> bits_;  // characteristic 2
  std::vector<std::uint64_t> modp_;  // odd prime
  std::vector<Rational> rat_;        // characteristic 0
};

// Rank by exact Gaussian elimination over the matrix's field.
int matrix_rank(const FieldMatrix& m);

} // namespace bettigraph

#endif
