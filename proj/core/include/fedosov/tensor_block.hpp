// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace fedosov {

enum class Variance { Upper, Lower };

/// A declared index symmetry between two slots of a TensorBlock.
struct SlotSymmetry {
  std::size_t first;
  std::size_t second;
  bool antisymmetric;
};

/// Dense multi-index array over R^{2n} coordinate indices.
///
/// Every slot has the same extent. The signature records the variance of
/// each slot (e.g. Gamma^l_{mu nu} is {Upper, Lower, Lower}); symmetries are
/// metadata checked by symmetry_violation().
class TensorBlock {
 public:
  TensorBlock() = default;
  TensorBlock(std::vector<Variance> signature, std::size_t extent, std::string label = {});

  static TensorBlock lower(std::size_t rank, std::size_t extent, std::string label = {});

  std::size_t rank() const { return signature_.size(); }
  std::size_t extent() const { return extent_; }
  std::size_t size() const { return data_.size(); }
  const std::vector<Variance>& signature() const { return signature_; }
  const std::string& label() const { return label_; }

  template <class... I>
  double& operator()(I... idx) {
    return data_[offset({static_cast<std::size_t>(idx)...})];
  }
  template <class... I>
  double operator()(I... idx) const {
    return data_[offset({static_cast<std::size_t>(idx)...})];
  }

  double& at(std::span<const std::size_t> idx) { return data_[offset(idx)]; }
  double at(std::span<const std::size_t> idx) const { return data_[offset(idx)]; }

  std::span<double> data() { return data_; }
  std::span<const double> data() const { return data_; }

  /// Multi-index of the flat position `flat` (row-major, last slot fastest).
  std::vector<std::size_t> unflatten(std::size_t flat) const;

  void declare_symmetry(std::size_t first, std::size_t second, bool antisymmetric);
  const std::vector<SlotSymmetry>& symmetries() const { return symmetries_; }

  /// Largest |T(..a..b..) -/+ T(..b..a..)| over all declared symmetries.
  double symmetry_violation() const;

  double max_abs() const;
  std::size_t count_above(double threshold) const;

  bool same_shape(const TensorBlock& other) const;

  TensorBlock& operator+=(const TensorBlock& rhs);
  TensorBlock& operator-=(const TensorBlock& rhs);
  TensorBlock& operator*=(double s);

 private:
  std::size_t offset(std::span<const std::size_t> idx) const;
  std::size_t offset(std::initializer_list<std::size_t> idx) const {
    return offset(std::span<const std::size_t>(idx.begin(), idx.size()));
  }

  std::vector<Variance> signature_;
  std::size_t extent_ = 0;
  std::vector<double> data_;
  std::vector<SlotSymmetry> symmetries_;
  std::string label_;
};

TensorBlock operator-(TensorBlock lhs, const TensorBlock& rhs);
TensorBlock operator+(TensorBlock lhs, const TensorBlock& rhs);
TensorBlock operator*(double s, TensorBlock t);

/// max |a - b|; throws ShapeMismatch when shapes differ.
double max_abs_difference(const TensorBlock& a, const TensorBlock& b);

/// Tolerance scaled by the magnitude of the tensor under test when it exceeds one.
double scaled_tolerance(double tolerance, double magnitude);

/// Number of entries above `threshold` scaled by the tensor's own magnitude.
std::size_t count_nonzero(const TensorBlock& t, double threshold);

std::string to_string(Variance v);

}  // namespace fedosov
