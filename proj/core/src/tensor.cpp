#include "hermite_kit/tensor.hpp"

#include "hermite_kit/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

namespace hermite_kit {

namespace {

std::size_t checked_size(std::size_t dimension, std::size_t rank) {
  if (dimension == 0) throw InvalidArgument("tensor dimension must be positive");
  std::size_t n = 1;
  for (std::size_t k = 0; k < rank; ++k) {
    if (n > (std::size_t{1} << 40) / dimension) {
      throw BudgetExceeded("tensor too large", 0, std::size_t{1} << 40);
    }
    n *= dimension;
  }
  return n;
}

}  // namespace

HermiteTensor::HermiteTensor(std::size_t dimension, std::size_t rank)
    : dimension_(dimension), rank_(rank), values_(checked_size(dimension, rank), 0.0) {}

HermiteTensor::HermiteTensor(std::size_t dimension, std::size_t rank, std::vector<double> values)
    : dimension_(dimension), rank_(rank), values_(std::move(values)) {
  if (values_.size() != checked_size(dimension, rank)) {
    throw InvalidArgument("tensor value count does not match dimension^rank");
  }
}

std::size_t HermiteTensor::flat_index(std::span<const std::size_t> index) const {
  if (index.size() != rank_) throw InvalidArgument("multi-index length differs from tensor rank");
  std::size_t flat = 0;
  for (std::size_t a : index) {
    if (a >= dimension_) throw InvalidArgument("multi-index component out of range");
    flat = flat * dimension_ + a;
  }
  return flat;
}

std::vector<std::size_t> HermiteTensor::multi_index(std::size_t flat) const {
  std::vector<std::size_t> index(rank_);
  for (std::size_t k = rank_; k-- > 0;) {
    index[k] = flat % dimension_;
    flat /= dimension_;
  }
  return index;
}

double HermiteTensor::at(std::span<const std::size_t> index) const { return values_[flat_index(index)]; }

double& HermiteTensor::at(std::span<const std::size_t> index) { return values_[flat_index(index)]; }

double HermiteTensor::symmetry_defect() const {
  double worst = 0.0;
  for (std::size_t flat = 0; flat < values_.size(); ++flat) {
    auto index = multi_index(flat);
    for (std::size_t k = 0; k + 1 < rank_; ++k) {
      std::swap(index[k], index[k + 1]);
      worst = std::max(worst, std::abs(values_[flat] - values_[flat_index(index)]));
      std::swap(index[k], index[k + 1]);
    }
  }
  return worst;
}

std::vector<unsigned> index_occurrences(std::span<const std::size_t> index, std::size_t dimension) {
  std::vector<unsigned> counts(dimension, 0);
  for (std::size_t a : index) {
    if (a >= dimension) throw InvalidArgument("multi-index component out of range");
    ++counts[a];
  }
  return counts;
}

std::vector<HermiteTensor> hermite_tensors(std::size_t max_rank, std::span<const double> x) {
  const std::size_t d = x.size();
  if (d == 0) throw InvalidArgument("point must have at least one coordinate");

  std::vector<HermiteTensor> out;
  out.reserve(max_rank + 1);
  out.emplace_back(d, 0, std::vector<double>{1.0});
  if (max_rank == 0) return out;

  HermiteTensor first(d, 1);
  for (std::size_t a = 0; a < d; ++a) first[a] = x[a];
  out.push_back(std::move(first));

  for (std::size_t n = 1; n < max_rank; ++n) {
    const HermiteTensor& cur = out[n];
    const HermiteTensor& prev = out[n - 1];
    HermiteTensor next(d, n + 1);
    const std::size_t block = cur.size();
    for (std::size_t a = 0; a < d; ++a) {
      for (std::size_t tail = 0; tail < block; ++tail) {
        const auto b = cur.multi_index(tail);
        double value = x[a] * cur[tail];
        std::vector<std::size_t> reduced(n - 1);
        for (std::size_t k = 0; k < n; ++k) {
          if (b[k] != a) continue;
          for (std::size_t m = 0, r = 0; m < n; ++m) {
            if (m != k) reduced[r++] = b[m];
          }
          value -= prev.at(reduced);
        }
        next[a * block + tail] = value;
      }
    }
    out.push_back(std::move(next));
  }
  return out;
}

HermiteTensor hermite_tensor(std::size_t rank, std::span<const double> x) {
  auto all = hermite_tensors(rank, x);
  return std::move(all.back());
}

double contract(const HermiteTensor& a, const HermiteTensor& b) {
  if (a.dimension() != b.dimension() || a.rank() != b.rank()) {
    throw InvalidArgument("contraction of tensors with different shapes");
  }
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

}  // namespace hermite_kit
