// Small dense exact-rational vectors and matrices. Everything here is a value
// type: operations return fresh objects and never round.
#pragma once

#include <alc/rational.hpp>

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace alc {

class RVector {
 public:
  RVector() = default;
  explicit RVector(std::size_t n) : v_(n, Rational(0)) {}
  RVector(std::initializer_list<Rational> init) : v_(init) {}
  explicit RVector(std::vector<Rational> entries) : v_(std::move(entries)) {}

  std::size_t size() const { return v_.size(); }
  Rational& operator[](std::size_t i) { return v_.at(i); }
  const Rational& operator[](std::size_t i) const { return v_.at(i); }

  friend bool operator==(const RVector&, const RVector&) = default;

  RVector operator+(const RVector& o) const {
    require_same_size(o);
    RVector r(size());
    for (std::size_t i = 0; i < size(); ++i) r.v_[i] = v_[i] + o.v_[i];
    return r;
  }
  RVector operator-(const RVector& o) const {
    require_same_size(o);
    RVector r(size());
    for (std::size_t i = 0; i < size(); ++i) r.v_[i] = v_[i] - o.v_[i];
    return r;
  }
  RVector operator*(const Rational& c) const {
    RVector r(size());
    for (std::size_t i = 0; i < size(); ++i) r.v_[i] = v_[i] * c;
    return r;
  }
  Rational dot(const RVector& o) const {
    require_same_size(o);
    Rational s(0);
    for (std::size_t i = 0; i < size(); ++i) s += v_[i] * o.v_[i];
    return s;
  }

  const std::vector<Rational>& entries() const { return v_; }

 private:
  void require_same_size(const RVector& o) const {
    if (size() != o.size()) throw std::invalid_argument("vector size mismatch");
  }
  std::vector<Rational> v_;
};

class RMatrix {
 public:
  RMatrix() = default;
  RMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, Rational(0)) {}
  RMatrix(std::size_t rows, std::size_t cols, std::initializer_list<Rational> init)
      : rows_(rows), cols_(cols), a_(init) {
    if (a_.size() != rows * cols) throw std::invalid_argument("matrix initializer size mismatch");
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& at(std::size_t r, std::size_t c) { return a_.at(index(r, c)); }
  const Rational& at(std::size_t r, std::size_t c) const { return a_.at(index(r, c)); }

  friend bool operator==(const RMatrix&, const RMatrix&) = default;

  RMatrix operator+(const RMatrix& o) const {
    require_same_shape(o);
    RMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
    return r;
  }
  RMatrix operator-(const RMatrix& o) const {
    require_same_shape(o);
    RMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
    return r;
  }
  RMatrix operator*(const Rational& c) const {
    RMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * c;
    return r;
  }
  RMatrix operator*(const RMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
    RMatrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const Rational& x = at(i, k);
        if (x == 0) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, j) += x * o.at(k, j);
      }
    return r;
  }

  RMatrix transpose() const {
    RMatrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
  }

  // Row-major flattening; the fixed convention every LP column uses.
  RVector vectorize() const {
    RVector r(a_.size());
    for (std::size_t i = 0; i < a_.size(); ++i) r[i] = a_[i];
    return r;
  }

  const std::vector<Rational>& entries() const { return a_; }

 private:
  std::size_t index(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_) throw std::out_of_range("matrix index out of range");
    return r * cols_ + c;
  }
  void require_same_shape(const RMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
  }
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> a_;
};

inline RMatrix outer(const RVector& a, const RVector& b) {
  RMatrix r(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r.at(i, j) = a[i] * b[j];
  return r;
}

// Tr[effect^T * state], the GPT outcome rule on the matrix representation.
inline Rational trace_product(const RMatrix& effect, const RMatrix& state) {
  if (effect.rows() != state.rows() || effect.cols() != state.cols())
    throw std::invalid_argument("trace_product shape mismatch");
  Rational s(0);
  for (std::size_t i = 0; i < effect.rows(); ++i)
    for (std::size_t j = 0; j < effect.cols(); ++j) s += effect.at(i, j) * state.at(i, j);
  return s;
}

}  // namespace alc
