#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace asmax {

using Coeff = std::uint32_t;
using FpVector = std::vector<Coeff>;

// Dense matrix over the prime field F_p (p < 2^16).
class FpMatrix {
 public:
  FpMatrix(std::uint32_t p, std::size_t rows, std::size_t cols)
      : p_(p), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  std::uint32_t prime() const { return p_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Coeff& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Coeff operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Coeff> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  // Reduced row echelon form in place; returns the pivot columns.
  std::vector<std::size_t> rref();

  std::size_t rank() const;

  // Basis of { x : A x = 0 }.
  std::vector<FpVector> nullspace() const;

  // Basis of { y : y^T A = 0 }, i.e. functionals vanishing on the column space.
  std::vector<FpVector> left_nullspace() const;

  // Some x with A x = b, if one exists.
  std::optional<FpVector> solve(std::span<const Coeff> b) const;

  FpVector apply(std::span<const Coeff> x) const;

  FpMatrix transpose() const;

 private:
  std::uint32_t p_;
  std::size_t rows_, cols_;
  std::vector<Coeff> data_;
};

}  // namespace asmax
