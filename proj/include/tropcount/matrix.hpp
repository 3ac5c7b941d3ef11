#pragma once

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "tropcount/bigint.hpp"
#include "tropcount/field_scalar.hpp"

namespace tropcount {

/// Dense row-major matrix over an exact scalar type.
template <typename T> class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T &fill = T{})
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  Matrix(std::initializer_list<std::initializer_list<T>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto &row : init) {
      if (row.size() != cols_) raise(ErrorKind::DimensionMismatch, "ragged matrix literal");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static Matrix identity(std::size_t n, const T &one, const T &zero) {
    Matrix m(n, n, zero);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  T &operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T &operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<T> column(std::size_t j) const {
    std::vector<T> c;
    c.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c.push_back((*this)(i, j));
    return c;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_, rows_ != 0 && cols_ != 0 ? data_[0] : T{});
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool is_symmetric() const {
    if (!square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i + 1; j < cols_; ++j)
        if (!((*this)(i, j) == (*this)(j, i))) return false;
    return true;
  }

  template <typename F> auto map(F &&f) const -> Matrix<decltype(f(std::declval<const T &>()))> {
    using U = decltype(f(std::declval<const T &>()));
    Matrix<U> out(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out(i, j) = f((*this)(i, j));
    return out;
  }

  friend bool operator==(const Matrix &a, const Matrix &b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (std::size_t k = 0; k < a.data_.size(); ++k)
      if (!(a.data_[k] == b.data_[k])) return false;
    return true;
  }
  friend bool operator!=(const Matrix &a, const Matrix &b) { return !(a == b); }

  friend Matrix operator+(const Matrix &a, const Matrix &b) {
    same_shape(a, b);
    Matrix c = a;
    for (std::size_t k = 0; k < c.data_.size(); ++k) c.data_[k] += b.data_[k];
    return c;
  }
  friend Matrix operator-(const Matrix &a, const Matrix &b) {
    same_shape(a, b);
    Matrix c = a;
    for (std::size_t k = 0; k < c.data_.size(); ++k) c.data_[k] -= b.data_[k];
    return c;
  }
  friend Matrix operator*(const Matrix &a, const Matrix &b) {
    if (a.cols_ != b.rows_ || a.cols_ == 0)
      raise(ErrorKind::DimensionMismatch, "cannot multiply " + a.shape() + " by " + b.shape());
    Matrix c(a.rows_, b.cols_, a.data_[0]);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < b.cols_; ++j) {
        T acc = a(i, 0) * b(0, j);
        for (std::size_t k = 1; k < a.cols_; ++k) acc += a(i, k) * b(k, j);
        c(i, j) = std::move(acc);
      }
    return c;
  }
  template <typename S> Matrix scaled(const S &s) const {
    Matrix c = *this;
    for (auto &x : c.data_) x = x * s;
    return c;
  }

  std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

  friend std::ostream &operator<<(std::ostream &os, const Matrix &m) {
    os << '[';
    for (std::size_t i = 0; i < m.rows_; ++i) {
      os << (i ? ",[" : "[");
      for (std::size_t j = 0; j < m.cols_; ++j) os << (j ? "," : "") << m(i, j);
      os << ']';
    }
    return os << ']';
  }

private:
  static void same_shape(const Matrix &a, const Matrix &b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      raise(ErrorKind::DimensionMismatch, a.shape() + " vs " + b.shape());
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Int>;
using RatMatrix = Matrix<Rational>;
using FieldMatrix = Matrix<FieldScalar>;

inline IntMatrix int_identity(std::size_t n) { return IntMatrix::identity(n, Int(1), Int(0)); }

inline IntMatrix int_diagonal(const std::vector<Int> &d) {
  IntMatrix m(d.size(), d.size(), Int(0));
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

inline FieldMatrix field_identity(std::size_t n, std::int64_t D) {
  return FieldMatrix::identity(n, FieldScalar(1, D), FieldScalar(0, D));
}

/// Common discriminant of a field matrix; throws if entries disagree.
inline std::int64_t discriminant_of(const FieldMatrix &m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  std::int64_t D = m(0, 0).disc();
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j).disc() != D) raise(ErrorKind::MixedDiscriminant, "matrix entries use different D");
  return D;
}

inline FieldMatrix to_field(const IntMatrix &m, std::int64_t D) {
  return m.map([D](const Int &x) { return FieldScalar(Rational(x), D); });
}
inline FieldMatrix to_field(const RatMatrix &m, std::int64_t D) {
  return m.map([D](const Rational &x) { return FieldScalar(x, D); });
}
inline RatMatrix to_rational(const IntMatrix &m) {
  return m.map([](const Int &x) { return Rational(x); });
}

/// Converts back to integers; throws if some entry is not integral.
inline IntMatrix to_integer(const RatMatrix &m) {
  return m.map([](const Rational &x) {
    if (!is_integer(x)) raise(ErrorKind::InvalidArgument, "non-integral entry " + to_string(x));
    return Int(boost::multiprecision::numerator(x));
  });
}

inline bool is_integral(const RatMatrix &m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!is_integer(m(i, j))) return false;
  return true;
}

} // namespace tropcount
