// SPDX-License-Identifier: Apache-2.0
#include "fedosov/tensor_block.hpp"

#include <algorithm>
#include <cmath>

#include "fedosov/errors.hpp"

namespace fedosov {

TensorBlock::TensorBlock(std::vector<Variance> signature, std::size_t extent, std::string label)
    : signature_(std::move(signature)), extent_(extent), label_(std::move(label)) {
  std::size_t n = 1;
  for (std::size_t i = 0; i < signature_.size(); ++i) n *= extent_;
  data_.assign(n, 0.0);
}

TensorBlock TensorBlock::lower(std::size_t rank, std::size_t extent, std::string label) {
  return TensorBlock(std::vector<Variance>(rank, Variance::Lower), extent, std::move(label));
}

std::size_t TensorBlock::offset(std::span<const std::size_t> idx) const {
  if (idx.size() != signature_.size()) {
    throw ShapeMismatch("index of rank " + std::to_string(idx.size()) + " used on tensor of rank " +
                        std::to_string(signature_.size()));
  }
  std::size_t off = 0;
  for (std::size_t i : idx) {
    if (i >= extent_) throw ShapeMismatch("tensor index out of range");
    off = off * extent_ + i;
  }
  return off;
}

std::vector<std::size_t> TensorBlock::unflatten(std::size_t flat) const {
  std::vector<std::size_t> idx(rank());
  for (std::size_t s = rank(); s-- > 0;) {
    idx[s] = flat % extent_;
    flat /= extent_;
  }
  return idx;
}

void TensorBlock::declare_symmetry(std::size_t first, std::size_t second, bool antisymmetric) {
  if (first >= rank() || second >= rank() || first == second) {
    throw ShapeMismatch("invalid symmetry slots");
  }
  symmetries_.push_back({first, second, antisymmetric});
}

double TensorBlock::symmetry_violation() const {
  double worst = 0.0;
  for (const auto& sym : symmetries_) {
    for (std::size_t flat = 0; flat < data_.size(); ++flat) {
      auto idx = unflatten(flat);
      const double a = data_[flat];
      std::swap(idx[sym.first], idx[sym.second]);
      const double b = at(idx);
      worst = std::max(worst, std::abs(sym.antisymmetric ? a + b : a - b));
    }
  }
  return worst;
}

double TensorBlock::max_abs() const {
  double m = 0.0;
  for (double v : data_) m = std::max(m, std::abs(v));
  return m;
}

std::size_t TensorBlock::count_above(double threshold) const {
  return static_cast<std::size_t>(
      std::count_if(data_.begin(), data_.end(), [&](double v) { return std::abs(v) > threshold; }));
}

bool TensorBlock::same_shape(const TensorBlock& other) const {
  return signature_ == other.signature_ && extent_ == other.extent_;
}

TensorBlock& TensorBlock::operator+=(const TensorBlock& rhs) {
  if (rank() != rhs.rank() || extent_ != rhs.extent_) throw ShapeMismatch("tensor shapes differ in +=");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += rhs.data_[i];
  return *this;
}

TensorBlock& TensorBlock::operator-=(const TensorBlock& rhs) {
  if (rank() != rhs.rank() || extent_ != rhs.extent_) throw ShapeMismatch("tensor shapes differ in -=");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= rhs.data_[i];
  return *this;
}

TensorBlock& TensorBlock::operator*=(double s) {
  for (double& v : data_) v *= s;
  return *this;
}

TensorBlock operator-(TensorBlock lhs, const TensorBlock& rhs) { return lhs -= rhs; }
TensorBlock operator+(TensorBlock lhs, const TensorBlock& rhs) { return lhs += rhs; }
TensorBlock operator*(double s, TensorBlock t) { return t *= s; }

double max_abs_difference(const TensorBlock& a, const TensorBlock& b) {
  if (a.rank() != b.rank() || a.extent() != b.extent()) {
    throw ShapeMismatch("cannot compare tensors of different shape");
  }
  double m = 0.0;
  const auto da = a.data();
  const auto db = b.data();
  for (std::size_t i = 0; i < da.size(); ++i) m = std::max(m, std::abs(da[i] - db[i]));
  return m;
}

double scaled_tolerance(double tolerance, double magnitude) { return tolerance * std::max(1.0, magnitude); }

std::size_t count_nonzero(const TensorBlock& t, double threshold) {
  return t.count_above(scaled_tolerance(threshold, t.max_abs()));
}

std::string to_string(Variance v) { return v == Variance::Upper ? "upper" : "lower"; }

}  // namespace fedosov
