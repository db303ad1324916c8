#pragma once

#include <concepts>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace kleene {

/// An idempotent semiring with a star operation, supplied as an object so
/// that instances can carry context (an alphabet, a substituted operation).
template <class A>
concept StarAlgebra = requires(const A& alg, const typename A::Element& x, const typename A::Element& y) {
  typename A::Element;
  { alg.zero() } -> std::convertible_to<typename A::Element>;
  { alg.one() } -> std::convertible_to<typename A::Element>;
  { alg.join(x, y) } -> std::convertible_to<typename A::Element>;
  { alg.multiply(x, y) } -> std::convertible_to<typename A::Element>;
  { alg.star(x) } -> std::convertible_to<typename A::Element>;
  { alg.equal(x, y) } -> std::convertible_to<bool>;
};

/// A StarAlgebra together with a semimodule, a left action and an omega power.
template <class A>
concept OmegaAlgebra = StarAlgebra<A> && requires(const A& alg, const typename A::Element& x,
                                                  const typename A::Vector& v, const typename A::Vector& w) {
  typename A::Vector;
  { alg.vzero() } -> std::convertible_to<typename A::Vector>;
  { alg.vjoin(v, w) } -> std::convertible_to<typename A::Vector>;
  { alg.act(x, v) } -> std::convertible_to<typename A::Vector>;
  { alg.omega(x) } -> std::convertible_to<typename A::Vector>;
  { alg.vequal(v, w) } -> std::convertible_to<bool>;
};

class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class BadAcceptingCount : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Dense row-major matrix. Square matrices form the matrix semiring; the
/// rectangular case only appears as blocks inside the block formulas.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  /// Row-major entries.
  const std::vector<T>& data() const { return data_; }

  Matrix block(std::size_t row0, std::size_t col0, std::size_t rows, std::size_t cols) const {
    Matrix out;
    out.rows_ = rows;
    out.cols_ = cols;
    out.data_.reserve(rows * cols);
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j) out.data_.push_back((*this)(row0 + i, col0 + j));
    }
    return out;
  }

  void paste(std::size_t row0, std::size_t col0, const Matrix& src) {
    for (std::size_t i = 0; i < src.rows_; ++i) {
      for (std::size_t j = 0; j < src.cols_; ++j) (*this)(row0 + i, col0 + j) = src(i, j);
    }
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

template <class T>
using ColumnVector = std::vector<T>;

template <StarAlgebra A>
Matrix<typename A::Element> zero_matrix(const A& alg, std::size_t rows, std::size_t cols) {
  return Matrix<typename A::Element>(rows, cols, alg.zero());
}

template <StarAlgebra A>
Matrix<typename A::Element> identity_matrix(const A& alg, std::size_t n) {
  auto out = zero_matrix(alg, n, n);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = alg.one();
  return out;
}

template <StarAlgebra A>
Matrix<typename A::Element> mat_join(const A& alg, const Matrix<typename A::Element>& m,
                                     const Matrix<typename A::Element>& n) {
  if (m.rows() != n.rows() || m.cols() != n.cols()) throw DimensionMismatch("mat_join: shapes differ");
  auto out = m;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = alg.join(m(i, j), n(i, j));
  }
  return out;
}

template <StarAlgebra A>
Matrix<typename A::Element> mat_mul(const A& alg, const Matrix<typename A::Element>& m,
                                    const Matrix<typename A::Element>& n) {
  if (m.cols() != n.rows()) throw DimensionMismatch("mat_mul: inner dimensions differ");
  auto out = zero_matrix(alg, m.rows(), n.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < n.cols(); ++j) {
      auto acc = alg.zero();
      for (std::size_t k = 0; k < m.cols(); ++k) acc = alg.join(acc, alg.multiply(m(i, k), n(k, j)));
      out(i, j) = std::move(acc);
    }
  }
  return out;
}

template <StarAlgebra A>
bool mat_equal(const A& alg, const Matrix<typename A::Element>& m, const Matrix<typename A::Element>& n) {
  if (m.rows() != n.rows() || m.cols() != n.cols()) return false;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!alg.equal(m(i, j), n(i, j))) return false;
    }
  }
  return true;
}

namespace detail {

template <class T>
struct Blocks {
  Matrix<T> a, b, c, d;
};

template <class T>
Blocks<T> split(const Matrix<T>& m, std::size_t k) {
  const std::size_t n = m.rows();
  return {m.block(0, 0, k, k), m.block(0, k, k, n - k), m.block(k, 0, n - k, k), m.block(k, k, n - k, n - k)};
}

inline void require_square(std::size_t rows, std::size_t cols, const char* op) {
  if (rows != cols || rows == 0) throw DimensionMismatch(std::string(op) + ": matrix must be square and nonempty");
}

inline void require_split(std::size_t n, std::size_t k, const char* op) {
  if (k == 0 || k >= n) throw DimensionMismatch(std::string(op) + ": split point out of range");
}

}  // namespace detail

template <StarAlgebra A>
Matrix<typename A::Element> mat_star(const A& alg, const Matrix<typename A::Element>& m);

/// Block star with the top-left block of size k; sub-blocks split at half.
template <StarAlgebra A>
Matrix<typename A::Element> mat_star_split(const A& alg, const Matrix<typename A::Element>& m, std::size_t k) {
  detail::require_square(m.rows(), m.cols(), "mat_star");
  detail::require_split(m.rows(), k, "mat_star");
  auto [a, b, c, d] = detail::split(m, k);
  auto a_star = mat_star(alg, a);
  auto d_star = mat_star(alg, d);
  // (a + b d* c)* and (d + c a* b)*
  auto top = mat_star(alg, mat_join(alg, a, mat_mul(alg, mat_mul(alg, b, d_star), c)));
  auto bottom = mat_star(alg, mat_join(alg, d, mat_mul(alg, mat_mul(alg, c, a_star), b)));
  Matrix<typename A::Element> out(m.rows(), m.cols(), alg.zero());
  out.paste(0, 0, top);
  out.paste(0, k, mat_mul(alg, mat_mul(alg, top, b), d_star));
  out.paste(k, 0, mat_mul(alg, mat_mul(alg, bottom, c), a_star));
  out.paste(k, k, bottom);
  return out;
}

template <StarAlgebra A>
Matrix<typename A::Element> mat_star(const A& alg, const Matrix<typename A::Element>& m) {
  detail::require_square(m.rows(), m.cols(), "mat_star");
  if (m.rows() == 1) return Matrix<typename A::Element>(1, 1, alg.star(m(0, 0)));
  return mat_star_split(alg, m, m.rows() / 2);
}

template <OmegaAlgebra A>
ColumnVector<typename A::Vector> mat_vec_act(const A& alg, const Matrix<typename A::Element>& m,
                                             const ColumnVector<typename A::Vector>& v) {
  if (m.cols() != v.size()) throw DimensionMismatch("mat_vec_act: dimensions differ");
  ColumnVector<typename A::Vector> out;
  out.reserve(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    auto acc = alg.vzero();
    for (std::size_t k = 0; k < m.cols(); ++k) acc = alg.vjoin(acc, alg.act(m(i, k), v[k]));
    out.push_back(std::move(acc));
  }
  return out;
}

template <OmegaAlgebra A>
ColumnVector<typename A::Vector> vec_join(const A& alg, const ColumnVector<typename A::Vector>& v,
                                          const ColumnVector<typename A::Vector>& w) {
  if (v.size() != w.size()) throw DimensionMismatch("vec_join: dimensions differ");
  ColumnVector<typename A::Vector> out;
  out.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(alg.vjoin(v[i], w[i]));
  return out;
}

template <OmegaAlgebra A>
bool vec_equal(const A& alg, const ColumnVector<typename A::Vector>& v, const ColumnVector<typename A::Vector>& w) {
  if (v.size() != w.size()) return false;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!alg.vequal(v[i], w[i])) return false;
  }
  return true;
}

template <OmegaAlgebra A>
ColumnVector<typename A::Vector> mat_omega(const A& alg, const Matrix<typename A::Element>& m);

/// Block omega with the top-left block of size k.
template <OmegaAlgebra A>
ColumnVector<typename A::Vector> mat_omega_split(const A& alg, const Matrix<typename A::Element>& m, std::size_t k) {
  detail::require_square(m.rows(), m.cols(), "mat_omega");
  detail::require_split(m.rows(), k, "mat_omega");
  auto [a, b, c, d] = detail::split(m, k);
  auto a_star = mat_star(alg, a);
  auto d_star = mat_star(alg, d);
  auto top_loop = mat_join(alg, a, mat_mul(alg, mat_mul(alg, b, d_star), c));
  auto bottom_loop = mat_join(alg, d, mat_mul(alg, mat_mul(alg, c, a_star), b));
  // (a + b d* c)^w + (a + b d* c)* b d^w, and symmetrically for the lower block.
  auto top = vec_join(alg, mat_omega(alg, top_loop),
                      mat_vec_act(alg, mat_mul(alg, mat_star(alg, top_loop), b), mat_omega(alg, d)));
  auto bottom = vec_join(alg, mat_omega(alg, bottom_loop),
                         mat_vec_act(alg, mat_mul(alg, mat_star(alg, bottom_loop), c), mat_omega(alg, a)));
  top.insert(top.end(), bottom.begin(), bottom.end());
  return top;
}

template <OmegaAlgebra A>
ColumnVector<typename A::Vector> mat_omega(const A& alg, const Matrix<typename A::Element>& m) {
  detail::require_square(m.rows(), m.cols(), "mat_omega");
  if (m.rows() == 1) return {alg.omega(m(0, 0))};
  return mat_omega_split(alg, m, m.rows() / 2);
}

/// Buchi stacking for accepting states 0..k-1:
/// ((a + b d* c)^w ; d* c (a + b d* c)^w).
template <OmegaAlgebra A>
ColumnVector<typename A::Vector> mat_omega_k(const A& alg, const Matrix<typename A::Element>& m, std::size_t k) {
  detail::require_square(m.rows(), m.cols(), "mat_omega_k");
  const std::size_t n = m.rows();
  if (k > n) throw BadAcceptingCount("mat_omega_k: accepting count exceeds dimension");
  if (k == 0) return ColumnVector<typename A::Vector>(n, alg.vzero());
  if (k == n) return mat_omega(alg, m);
  auto [a, b, c, d] = detail::split(m, k);
  auto d_star = mat_star(alg, d);
  auto top = mat_omega(alg, mat_join(alg, a, mat_mul(alg, mat_mul(alg, b, d_star), c)));
  auto bottom = mat_vec_act(alg, mat_mul(alg, d_star, c), top);
  top.insert(top.end(), bottom.begin(), bottom.end());
  return top;
}

}  // namespace kleene
