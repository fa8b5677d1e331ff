#include "extri/matrix.hpp"

#include <sstream>

namespace extri {

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  // Products are accumulated in 64 bits, so entries must stay below 2^16.
  if (!is_prime(p) || p >= 65536) {
    throw std::invalid_argument("field characteristic must be a prime below 65536, got " +
                                std::to_string(p));
  }
}

Scalar PrimeField::pow(Scalar a, std::uint64_t e) const {
  std::uint64_t result = 1 % p_, base = a % p_;
  while (e > 0) {
    if (e & 1) result = (result * base) % p_;
    base = (base * base) % p_;
    e >>= 1;
  }
  return static_cast<Scalar>(result);
}

Scalar PrimeField::inv(Scalar a) const {
  if (a % p_ == 0) throw std::domain_error("inverse of zero in F_p");
  return pow(a, p_ - 2);
}

Matrix Matrix::identity(std::uint32_t p, std::size_t n) {
  Matrix m(p, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(std::uint32_t p,
                         const std::vector<std::vector<Scalar>>& rows) {
  std::size_t c = rows.empty() ? 0 : rows.front().size();
  Matrix m(p, rows.size(), c);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != c) throw std::invalid_argument("ragged rows");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j] % p;
  }
  return m;
}

Matrix Matrix::from_columns(std::uint32_t p, std::size_t rows,
                            const std::vector<std::vector<Scalar>>& cols) {
  Matrix m(p, rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) throw std::invalid_argument("ragged columns");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i] % p;
  }
  return m;
}

std::vector<Scalar> Matrix::row(std::size_t r) const {
  return std::vector<Scalar>(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                             data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

std::vector<Scalar> Matrix::column(std::size_t c) const {
  std::vector<Scalar> v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, c);
  return v;
}

bool Matrix::is_zero() const {
  for (Scalar x : data_) {
    if (x != 0) return false;
  }
  return true;
}

Matrix Matrix::transpose() const {
  Matrix t(p_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) {
    throw std::invalid_argument("matrix product shape mismatch: " +
                                std::to_string(rows_) + "x" + std::to_string(cols_) + " * " +
                                std::to_string(o.rows_) + "x" + std::to_string(o.cols_));
  }
  Matrix r(p_, rows_, o.cols_);
  std::vector<std::uint64_t> acc(o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    std::fill(acc.begin(), acc.end(), 0);
    for (std::size_t k = 0; k < cols_; ++k) {
      std::uint64_t a = (*this)(i, k);
      if (a == 0) continue;
      const Scalar* orow = o.data_.data() + k * o.cols_;
      for (std::size_t j = 0; j < o.cols_; ++j) acc[j] += a * orow[j];
    }
    for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) = static_cast<Scalar>(acc[j] % p_);
  }
  return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix sum shape mismatch");
  Matrix r = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = (data_[i] + o.data_[i]) % p_;
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix difference shape mismatch");
  Matrix r = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = (data_[i] + p_ - o.data_[i]) % p_;
  return r;
}

Matrix Matrix::scaled(Scalar s) const {
  Matrix r = *this;
  for (auto& x : r.data_) x = static_cast<Scalar>((static_cast<std::uint64_t>(x) * s) % p_);
  return r;
}

std::vector<Scalar> Matrix::apply(const std::vector<Scalar>& v) const {
  if (v.size() != cols_) throw std::invalid_argument("matrix-vector shape mismatch");
  std::vector<Scalar> r(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    std::uint64_t acc = 0;
    for (std::size_t j = 0; j < cols_; ++j) acc += static_cast<std::uint64_t>((*this)(i, j)) * v[j];
    r[i] = static_cast<Scalar>(acc % p_);
  }
  return r;
}

Matrix Matrix::column_block(std::size_t c0, std::size_t n) const {
  Matrix r(p_, rows_, n);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < n; ++j) r(i, j) = (*this)(i, c0 + j);
  return r;
}

Matrix Matrix::row_block(std::size_t r0, std::size_t n) const {
  Matrix r(p_, n, cols_);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r(i, j) = (*this)(r0 + i, j);
  return r;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) (*this)(r0 + i, c0 + j) = b(i, j);
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) os << "; ";
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) os << " ";
      os << (*this)(i, j);
    }
  }
  os << "]";
  return os.str();
}

Matrix hstack(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("hstack row mismatch");
  Matrix r(a.p(), a.rows(), a.cols() + b.cols());
  r.set_block(0, 0, a);
  r.set_block(0, a.cols(), b);
  return r;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols()) throw std::invalid_argument("vstack column mismatch");
  Matrix r(a.p(), a.rows() + b.rows(), a.cols());
  r.set_block(0, 0, a);
  r.set_block(a.rows(), 0, b);
  return r;
}

Echelon row_reduce(Matrix m) {
  PrimeField f(m.p());
  Echelon e;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t piv = row;
    while (piv < m.rows() && m(piv, col) == 0) ++piv;
    if (piv == m.rows()) continue;
    if (piv != row) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(row, j));
    }
    Scalar inv = f.inv(m(row, col));
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) = f.mul(m(row, j), inv);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col) == 0) continue;
      Scalar factor = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) {
        if (m(row, j) != 0) m(i, j) = f.sub(m(i, j), f.mul(factor, m(row, j)));
      }
    }
    e.pivots.push_back(col);
    ++row;
  }
  e.reduced = std::move(m);
  return e;
}

std::size_t rank(const Matrix& m) { return row_reduce(m).rank(); }

Matrix nullspace(const Matrix& m) {
  PrimeField f(m.p());
  Echelon e = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : e.pivots) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (!is_pivot[c]) free_cols.push_back(c);
  }
  Matrix basis(m.p(), m.cols(), free_cols.size());
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    std::size_t fc = free_cols[k];
    basis(fc, k) = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
      basis(e.pivots[r], k) = f.neg(e.reduced(r, fc));
    }
  }
  return basis;
}

Matrix column_basis(const Matrix& m) {
  Echelon e = row_reduce(m);
  Matrix b(m.p(), m.rows(), e.pivots.size());
  for (std::size_t k = 0; k < e.pivots.size(); ++k) {
    for (std::size_t i = 0; i < m.rows(); ++i) b(i, k) = m(i, e.pivots[k]);
  }
  return b;
}

Matrix left_nullspace(const Matrix& m) { return nullspace(m.transpose()).transpose(); }

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("solve shape mismatch");
  PrimeField f(a.p());
  Echelon e = row_reduce(hstack(a, b));
  Matrix x(a.p(), a.cols(), b.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    std::size_t pc = e.pivots[r];
    if (pc >= a.cols()) return std::nullopt;  // inconsistent row
    for (std::size_t j = 0; j < b.cols(); ++j) x(pc, j) = e.reduced(r, a.cols() + j);
  }
  return x;
}

std::optional<Matrix> inverse(const Matrix& a) {
  if (a.rows() != a.cols()) return std::nullopt;
  if (rank(a) != a.rows()) return std::nullopt;
  return solve(a, Matrix::identity(a.p(), a.rows()));
}

Matrix coordinates(const Matrix& basis, const Matrix& vectors) {
  if (basis.cols() == 0) {
    if (!vectors.is_zero()) throw std::logic_error("coordinates: vector outside the zero span");
    return Matrix(basis.p(), 0, vectors.cols());
  }
  auto x = solve(basis, vectors);
  if (!x) throw std::logic_error("coordinates: vector outside the span");
  return *x;
}

SpanBuilder::SpanBuilder(std::uint32_t p, std::size_t length) : f_(p), length_(length) {}

void SpanBuilder::reduce(std::vector<Scalar>& v) const {
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    Scalar c = v[pivots_[k]];
    if (c == 0) continue;
    const auto& r = rows_[k];
    for (std::size_t j = pivots_[k]; j < length_; ++j) {
      if (r[j] != 0) v[j] = f_.sub(v[j], f_.mul(c, r[j]));
    }
  }
}

bool SpanBuilder::add(std::vector<Scalar> v) {
  if (v.size() != length_) throw std::invalid_argument("SpanBuilder: wrong vector length");
  reduce(v);
  std::size_t piv = 0;
  while (piv < length_ && v[piv] == 0) ++piv;
  if (piv == length_) return false;
  Scalar inv = f_.inv(v[piv]);
  for (auto& x : v) x = f_.mul(x, inv);
  // Keep rows fully reduced so reduce() is a single pass.
  for (auto& r : rows_) {
    Scalar c = r[piv];
    if (c == 0) continue;
    for (std::size_t j = piv; j < length_; ++j) {
      if (v[j] != 0) r[j] = f_.sub(r[j], f_.mul(c, v[j]));
    }
  }
  rows_.push_back(std::move(v));
  pivots_.push_back(piv);
  return true;
}

bool SpanBuilder::contains(std::vector<Scalar> v) const {
  reduce(v);
  for (Scalar x : v) {
    if (x != 0) return false;
  }
  return true;
}

}  // namespace extri
