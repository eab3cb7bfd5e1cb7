#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace hermite_kit {

/// Rank-n tensor over R^d stored densely, d^n entries. The multi-index
/// (a_1, ..., a_n), each a_k in [0, d), maps to sum_k a_k d^{n-k}.
class HermiteTensor {
 public:
  HermiteTensor(std::size_t dimension, std::size_t rank);
  HermiteTensor(std::size_t dimension, std::size_t rank, std::vector<double> values);

  std::size_t dimension() const noexcept { return dimension_; }
  std::size_t rank() const noexcept { return rank_; }
  std::size_t size() const noexcept { return values_.size(); }

  double& operator[](std::size_t flat) { return values_[flat]; }
  double operator[](std::size_t flat) const { return values_[flat]; }
  double at(std::span<const std::size_t> index) const;
  double& at(std::span<const std::size_t> index);

  std::span<const double> values() const noexcept { return values_; }

  std::size_t flat_index(std::span<const std::size_t> index) const;
  std::vector<std::size_t> multi_index(std::size_t flat) const;

  // Largest |T_a - T_{pi(a)}| over all entries and adjacent transpositions pi.
  double symmetry_defect() const;

 private:
  std::size_t dimension_;
  std::size_t rank_;
  std::vector<double> values_;
};

// Per-coordinate occurrence counts of a multi-index: counts[i] = #{k : a_k = i}.
std::vector<unsigned> index_occurrences(std::span<const std::size_t> index, std::size_t dimension);

/// He^(0)(x), ..., He^(max_rank)(x) at the point x via
///   He^(n+1)_{a b_1..b_n} = x_a He^(n)_{b} - sum_k delta_{a b_k} He^(n-1)_{b without b_k}.
std::vector<HermiteTensor> hermite_tensors(std::size_t max_rank, std::span<const double> x);

HermiteTensor hermite_tensor(std::size_t rank, std::span<const double> x);

// Full index contraction sum_a A_a B_a of two tensors of identical shape.
double contract(const HermiteTensor& a, const HermiteTensor& b);

}  // namespace hermite_kit
