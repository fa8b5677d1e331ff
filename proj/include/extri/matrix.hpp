#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace extri {

using Scalar = std::uint32_t;

/// Arithmetic in the prime field F_p. Elements are kept reduced in [0, p).
class PrimeField {
 public:
  PrimeField() = default;
  explicit PrimeField(std::uint32_t p);

  std::uint32_t p() const { return p_; }

  Scalar reduce(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    return static_cast<Scalar>(r < 0 ? r + p_ : r);
  }
  Scalar add(Scalar a, Scalar b) const { return (a + b) % p_; }
  Scalar sub(Scalar a, Scalar b) const { return (a + p_ - b) % p_; }
  Scalar neg(Scalar a) const { return a == 0 ? 0 : p_ - a; }
  Scalar mul(Scalar a, Scalar b) const {
    return static_cast<Scalar>((static_cast<std::uint64_t>(a) * b) % p_);
  }
  Scalar inv(Scalar a) const;
  Scalar pow(Scalar a, std::uint64_t e) const;

  bool operator==(const PrimeField&) const = default;

 private:
  std::uint32_t p_ = 2;
};

bool is_prime(std::uint32_t n);

/// Dense row-major matrix over F_p.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::uint32_t p, std::size_t rows, std::size_t cols)
      : p_(p), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static Matrix identity(std::uint32_t p, std::size_t n);
  static Matrix from_rows(std::uint32_t p,
                          const std::vector<std::vector<Scalar>>& rows);
  static Matrix from_columns(std::uint32_t p, std::size_t rows,
                             const std::vector<std::vector<Scalar>>& cols);

  std::uint32_t p() const { return p_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Scalar& operator()(std::size_t r, std::size_t c) {
    return data_[r * cols_ + c];
  }
  Scalar operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }
  const std::vector<Scalar>& data() const { return data_; }

  std::vector<Scalar> row(std::size_t r) const;
  std::vector<Scalar> column(std::size_t c) const;

  bool is_zero() const;
  bool operator==(const Matrix& o) const {
    return p_ == o.p_ && rows_ == o.rows_ && cols_ == o.cols_ &&
           data_ == o.data_;
  }

  Matrix transpose() const;
  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(Scalar s) const;
  std::vector<Scalar> apply(const std::vector<Scalar>& v) const;

  /// Columns [c0, c0 + n).
  Matrix column_block(std::size_t c0, std::size_t n) const;
  /// Rows [r0, r0 + n).
  Matrix row_block(std::size_t r0, std::size_t n) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& b);

  std::string to_string() const;

 private:
  std::uint32_t p_ = 2;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);

/// Reduced row echelon form together with its pivot columns.
struct Echelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;
  std::size_t rank() const { return pivots.size(); }
};

Echelon row_reduce(Matrix m);
std::size_t rank(const Matrix& m);

/// Basis of {x : m x = 0}, one vector per column of the result.
Matrix nullspace(const Matrix& m);
/// Basis of the column space, chosen among the columns of `m` (first
/// independent ones, left to right).
Matrix column_basis(const Matrix& m);
/// Rows spanning {y : y m = 0}.
Matrix left_nullspace(const Matrix& m);

/// Some x with a x = b, if one exists.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);
std::optional<Matrix> inverse(const Matrix& a);

/// Columns of `basis` are independent; returns coordinates c with
/// basis * c = v for every column v of `vectors`. Throws if some column lies
/// outside the span.
Matrix coordinates(const Matrix& basis, const Matrix& vectors);

/// Incremental span of flattened vectors, used wherever a hom space or an
/// ideal is grown one generator at a time.
class SpanBuilder {
 public:
  SpanBuilder(std::uint32_t p, std::size_t length);

  /// Adds v to the span; returns true if it was independent.
  bool add(std::vector<Scalar> v);
  bool contains(std::vector<Scalar> v) const;
  std::size_t dim() const { return rows_.size(); }
  std::size_t length() const { return length_; }
  /// Reduces v against the current basis in place.
  void reduce(std::vector<Scalar>& v) const;

 private:
  PrimeField f_;
  std::size_t length_;
  std::vector<std::vector<Scalar>> rows_;  // echelon rows, pivot entry 1
  std::vector<std::size_t> pivots_;
};

}  // namespace extri
