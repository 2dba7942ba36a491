#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace ellimod {

// Dense row-major integer matrix. Small sizes only (rank of a root system).
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static IntMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  std::int64_t& operator()(int i, int j) { return data_[i * cols_ + j]; }
  std::int64_t operator()(int i, int j) const { return data_[i * cols_ + j]; }

  std::span<const std::int64_t> row(int i) const {
    return {data_.data() + i * cols_, static_cast<std::size_t>(cols_)};
  }

  IntMatrix operator*(const IntMatrix& rhs) const;
  std::vector<std::int64_t> apply(std::span<const std::int64_t> v) const;
  IntMatrix transpose() const;

  bool operator==(const IntMatrix&) const = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<std::int64_t> data_;
};

// Fraction-free Gaussian elimination.
std::int64_t determinant(const IntMatrix& m);

// Coefficients c_0..c_n of det(x I - m), c_n = 1 (Faddeev-LeVerrier, exact).
std::vector<std::int64_t> characteristic_polynomial(const IntMatrix& m);

}  // namespace ellimod
