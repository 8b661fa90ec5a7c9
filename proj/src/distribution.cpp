#include "ditlogic/distribution.hpp"

#include <cmath>
#include <sstream>
#include <string>

#include "ditlogic/error.hpp"

namespace ditlogic {

namespace {

template <class T>
T normalization_tolerance_as() {
  if constexpr (std::is_same_v<T, Rational>) {
    return Rational(1, 1'000'000'000);
  } else {
    return normalization_tolerance;
  }
}

template <class T>
T absolute(const T& x) {
  return x < T(0) ? T(-x) : x;
}

template <class T>
void normalize_in_place(std::vector<T>& values, const char* what) {
  if (values.empty()) throw Error(ErrorKind::empty_input, std::string(what) + " is empty");
  T total(0);
  for (std::size_t i = 0; i < values.size(); ++i) {
    if constexpr (std::is_same_v<T, double>) {
      if (!std::isfinite(values[i])) {
        throw Error(ErrorKind::domain, std::string(what) + " entry " + std::to_string(i) +
                                           " is not finite");
      }
    }
    if (values[i] < T(0)) {
      throw Error(ErrorKind::negative_entry,
                  std::string(what) + " entry " + std::to_string(i) + " is negative");
    }
    total += values[i];
  }
  if (absolute(T(total - T(1))) > normalization_tolerance_as<T>()) {
    std::ostringstream msg;
    msg << what << " sums to " << to_double(total) << ", not 1";
    throw Error(ErrorKind::normalization, msg.str());
  }
  if (total != T(1)) {
    for (auto& v : values) v /= total;
  }
}

}  // namespace

template <class T>
BasicDistribution<T>::BasicDistribution(std::vector<T> probs) : probs_(std::move(probs)) {
  normalize_in_place(probs_, "distribution");
}

template <class T>
BasicDistribution<T> BasicDistribution<T>::uniform(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::empty_input, "distribution is empty");
  return BasicDistribution(std::vector<T>(n, T(1) / T(n)));
}

template <class T>
BasicDistribution<T> BasicDistribution<T>::point_mass(std::size_t n, std::size_t at) {
  if (at >= n) throw Error(ErrorKind::size_mismatch, "point mass index outside distribution");
  std::vector<T> p(n, T(0));
  p[at] = T(1);
  return BasicDistribution(std::move(p));
}

Distribution to_double(const ExactDistribution& p) {
  std::vector<double> v;
  v.reserve(p.size());
  for (const auto& x : p.probs()) v.push_back(to_double(x));
  return Distribution(std::move(v));
}

template <class T>
BasicJointDistribution<T>::BasicJointDistribution(std::size_t rows, std::size_t cols,
                                                  std::vector<T> cells)
    : rows_(rows), cols_(cols), cells_(std::move(cells)) {
  normalize_in_place(cells_, "joint distribution");
  derive_marginals();
}

template <class T>
BasicJointDistribution<T>::BasicJointDistribution(const std::vector<std::vector<T>>& rows) {
  if (rows.empty() || rows.front().empty()) {
    throw Error(ErrorKind::empty_input, "joint distribution is empty");
  }
  rows_ = rows.size();
  cols_ = rows.front().size();
  cells_.reserve(rows_ * cols_);
  for (std::size_t x = 0; x < rows_; ++x) {
    if (rows[x].size() != cols_) {
      throw Error(ErrorKind::size_mismatch, "joint distribution row " + std::to_string(x) +
                                                " has " + std::to_string(rows[x].size()) +
                                                " entries, expected " + std::to_string(cols_));
    }
    cells_.insert(cells_.end(), rows[x].begin(), rows[x].end());
  }
  normalize_in_place(cells_, "joint distribution");
  derive_marginals();
}

template <class T>
void BasicJointDistribution<T>::derive_marginals() {
  px_.assign(rows_, T(0));
  py_.assign(cols_, T(0));
  for (std::size_t x = 0; x < rows_; ++x) {
    for (std::size_t y = 0; y < cols_; ++y) {
      px_[x] += (*this)(x, y);
      py_[y] += (*this)(x, y);
    }
  }
}

template <class T>
BasicJointDistribution<T> BasicJointDistribution<T>::product(const BasicDistribution<T>& px,
                                                             const BasicDistribution<T>& py) {
  std::vector<T> cells;
  cells.reserve(px.size() * py.size());
  for (const auto& a : px.probs()) {
    for (const auto& b : py.probs()) cells.push_back(a * b);
  }
  return BasicJointDistribution(px.size(), py.size(), std::move(cells));
}

template <class T>
BasicJointDistribution<T> BasicJointDistribution<T>::transposed() const {
  std::vector<T> cells(cells_.size());
  for (std::size_t x = 0; x < rows_; ++x) {
    for (std::size_t y = 0; y < cols_; ++y) cells[y * rows_ + x] = (*this)(x, y);
  }
  return BasicJointDistribution(cols_, rows_, std::move(cells));
}

template <class T>
BasicJointDistribution<T> BasicJointDistribution<T>::product_of_marginals() const {
  return product(BasicDistribution<T>(px_), BasicDistribution<T>(py_));
}

template <class T>
T BasicJointDistribution<T>::independence_residual() const {
  T worst(0);
  for (std::size_t x = 0; x < rows_; ++x) {
    for (std::size_t y = 0; y < cols_; ++y) {
      const T r = absolute(T((*this)(x, y) - px_[x] * py_[y]));
      if (r > worst) worst = r;
    }
  }
  return worst;
}

JointDistribution to_double(const ExactJointDistribution& j) {
  std::vector<std::vector<double>> rows(j.rows(), std::vector<double>(j.cols()));
  for (std::size_t x = 0; x < j.rows(); ++x) {
    for (std::size_t y = 0; y < j.cols(); ++y) rows[x][y] = to_double(j(x, y));
  }
  return JointDistribution(rows);
}

template class BasicDistribution<double>;
template class BasicDistribution<Rational>;
template class BasicJointDistribution<double>;
template class BasicJointDistribution<Rational>;

DistanceMatrix::DistanceMatrix(std::vector<std::vector<double>> d) : d_(std::move(d)) {
  if (d_.empty()) throw Error(ErrorKind::empty_input, "distance matrix is empty");
  const std::size_t n = d_.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (d_[i].size() != n) {
      throw Error(ErrorKind::size_mismatch, "distance matrix must be square");
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (d_[i][i] != 0.0) {
      throw Error(ErrorKind::invalid_distance,
                  "distance d(" + std::to_string(i) + "," + std::to_string(i) + ") is not 0");
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (!(d_[i][j] >= 0.0) || !std::isfinite(d_[i][j])) {
        throw Error(ErrorKind::invalid_distance, "distance d(" + std::to_string(i) + "," +
                                                     std::to_string(j) +
                                                     ") is negative or not finite");
      }
      if (d_[i][j] != d_[j][i]) {
        throw Error(ErrorKind::invalid_distance, "distance matrix is not symmetric at (" +
                                                     std::to_string(i) + "," +
                                                     std::to_string(j) + ")");
      }
    }
  }
}

DistanceMatrix DistanceMatrix::logical(std::size_t n) {
  std::vector<std::vector<double>> d(n, std::vector<double>(n, 1.0));
  for (std::size_t i = 0; i < n; ++i) d[i][i] = 0.0;
  return DistanceMatrix(std::move(d));
}

}  // namespace ditlogic
