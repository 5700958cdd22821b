#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qba/bitvector.hpp"

namespace qba {

/// Dense bit matrix over GF(2) stored as packed rows.
///
/// Operator matrices are square with side 2^n and rows/columns indexed by
/// subsets in integer order; the class itself also allows rectangular shapes
/// for elimination work.
class Gf2Matrix {
 public:
  Gf2Matrix() = default;
  Gf2Matrix(std::size_t rows, std::size_t cols);
  static Gf2Matrix identity(std::size_t size);
  /// Builds a matrix from equal-length rows.
  static Gf2Matrix from_rows(std::vector<BitVector> rows);

  std::size_t rows() const noexcept { return rows_.size(); }
  std::size_t cols() const noexcept { return cols_; }
  bool get(std::size_t r, std::size_t c) const { return rows_[r].get(c); }
  void set(std::size_t r, std::size_t c, bool v) { rows_[r].set(c, v); }
  void flip(std::size_t r, std::size_t c) { rows_[r].flip(c); }
  const BitVector& row(std::size_t r) const { return rows_[r]; }
  BitVector& row(std::size_t r) { return rows_[r]; }
  bool is_zero() const;

  Gf2Matrix& operator+=(const Gf2Matrix& other);
  friend Gf2Matrix operator+(Gf2Matrix a, const Gf2Matrix& b) { return a += b; }
  bool operator==(const Gf2Matrix&) const = default;

 private:
  std::size_t cols_ = 0;
  std::vector<BitVector> rows_;
};

/// (AB)_{a,c} = XOR_b A_{a,b} B_{b,c}. Throws ShapeError unless cols(A) == rows(B).
Gf2Matrix mat_mul(const Gf2Matrix& a, const Gf2Matrix& b);
/// out(a) = XOR_b A_{a,b} v(b).
BitVector mat_apply(const Gf2Matrix& a, const BitVector& v);
Gf2Matrix transpose(const Gf2Matrix& a);
/// Row rank by Gaussian elimination.
std::size_t rank(const Gf2Matrix& a);

/// Result of deciding whether S = T R is solvable.
struct ColspaceResult {
  bool contained = false;
  /// A solution R with S = T R, present when contained and requested.
  std::optional<Gf2Matrix> witness;
};

/// True iff every column of S lies in the column space of T, i.e. S = T R for
/// some R. One reduced echelon form of T serves all columns.
ColspaceResult colspace_contains(const Gf2Matrix& t, const Gf2Matrix& s, bool want_witness = false);

/// Rows of 0/1 characters separated by newlines (no trailing newline).
std::string to_grid(const Gf2Matrix& m);
/// Graph view: node per subset of [n], edge b -> a iff M_{a,b} = 1.
std::string to_dot(const Gf2Matrix& m, unsigned n, const std::string& name = "M");

}  // namespace qba
