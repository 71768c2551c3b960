#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "superspace/rational.hpp"

namespace superspace {

// Dense row-major matrix over Q. Only used at desk scale (a few hundred
// rows/columns), for kernels, inverses and group elements.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  RationalMatrix transpose() const;

  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b);
  friend RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b);
  friend RationalMatrix operator*(const Rational& c, RationalMatrix a);
  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

// Reduced row echelon form in place; returns the pivot column of each
// nonzero row (so its size is the rank).
std::vector<std::size_t> row_reduce(RationalMatrix& a);

std::size_t rank(RationalMatrix a);

// Basis of {v : a v = 0}, one vector per free column, with that free
// coordinate set to 1 (the canonical RREF kernel basis).
std::vector<std::vector<Rational>> nullspace(RationalMatrix a);

// Empty when a is singular. Throws PreconditionError when a is not square.
std::optional<RationalMatrix> inverse(const RationalMatrix& a);

// Solution of a x = b when one exists (any, if underdetermined).
std::optional<std::vector<Rational>> solve(const RationalMatrix& a,
                                           const std::vector<Rational>& b);

}  // namespace superspace
