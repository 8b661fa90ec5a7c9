#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "ditlogic/rational.hpp"

namespace ditlogic {

/// Sums within this distance of 1 are renormalized; anything further is rejected.
inline constexpr double normalization_tolerance = 1e-9;

/// A finite probability vector. T is double or Rational; the Rational
/// instantiation keeps every logical-entropy identity exact.
template <class T>
class BasicDistribution {
 public:
  /// Throws Error{empty_input}, Error{negative_entry} or Error{normalization}.
  explicit BasicDistribution(std::vector<T> probs);

  static BasicDistribution uniform(std::size_t n);
  static BasicDistribution point_mass(std::size_t n, std::size_t at);

  std::size_t size() const noexcept { return probs_.size(); }
  const T& operator[](std::size_t i) const { return probs_[i]; }
  std::span<const T> probs() const noexcept { return probs_; }

  friend bool operator==(const BasicDistribution&, const BasicDistribution&) = default;

 private:
  std::vector<T> probs_;
};

using Distribution = BasicDistribution<double>;
using ExactDistribution = BasicDistribution<Rational>;

Distribution to_double(const ExactDistribution& p);
inline const Distribution& to_double(const Distribution& p) noexcept { return p; }

enum class Axis { x, y };

/// p(x, y) on X x Y, rows indexed by x and columns by y.
template <class T>
class BasicJointDistribution {
 public:
  /// Throws Error{empty_input} for an empty or ragged matrix, plus the
  /// BasicDistribution errors.
  explicit BasicJointDistribution(const std::vector<std::vector<T>>& rows);

  static BasicJointDistribution product(const BasicDistribution<T>& px,
                                        const BasicDistribution<T>& py);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const T& operator()(std::size_t x, std::size_t y) const { return cells_[x * cols_ + y]; }

  /// p(x) = sum over y of p(x, y).
  const std::vector<T>& marginal_x() const noexcept { return px_; }
  /// p(y) = sum over x of p(x, y).
  const std::vector<T>& marginal_y() const noexcept { return py_; }
  const std::vector<T>& marginal(Axis a) const noexcept { return a == Axis::x ? px_ : py_; }

  /// All cells in row-major order.
  std::span<const T> cells() const noexcept { return cells_; }

  BasicJointDistribution transposed() const;
  /// p(x) p(y) as a joint on the same grid.
  BasicJointDistribution product_of_marginals() const;

  /// max |p(x,y) - p(x) p(y)|.
  T independence_residual() const;

 private:
  BasicJointDistribution(std::size_t rows, std::size_t cols, std::vector<T> cells);
  void derive_marginals();

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> cells_;
  std::vector<T> px_;
  std::vector<T> py_;
};

using JointDistribution = BasicJointDistribution<double>;
using ExactJointDistribution = BasicJointDistribution<Rational>;

JointDistribution to_double(const ExactJointDistribution& j);
inline const JointDistribution& to_double(const JointDistribution& j) noexcept { return j; }

/// Symmetric non-negative distances with zero diagonal.
class DistanceMatrix {
 public:
  /// Throws Error{empty_input} or Error{invalid_distance}.
  explicit DistanceMatrix(std::vector<std::vector<double>> d);

  /// d(i, j) = 1 - kronecker(i, j).
  static DistanceMatrix logical(std::size_t n);

  std::size_t size() const noexcept { return d_.size(); }
  double operator()(std::size_t i, std::size_t j) const { return d_[i][j]; }

 private:
  std::vector<std::vector<double>> d_;
};

}  // namespace ditlogic
