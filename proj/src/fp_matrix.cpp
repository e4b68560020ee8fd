#include "asmax/fp_matrix.hpp"

#include "asmax/numtheory.hpp"

namespace asmax {

std::vector<std::size_t> FpMatrix::rref() {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
    std::size_t sel = r;
    while (sel < rows_ && (*this)(sel, c) == 0) ++sel;
    if (sel == rows_) continue;
    if (sel != r) {
      for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(sel, j), (*this)(r, j));
    }
    const std::uint64_t inv = nt::inv_mod((*this)(r, c), p_);
    for (std::size_t j = c; j < cols_; ++j) (*this)(r, j) = static_cast<Coeff>((*this)(r, j) * inv % p_);
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == r) continue;
      const std::uint64_t f = (*this)(i, c);
      if (f == 0) continue;
      for (std::size_t j = c; j < cols_; ++j) {
        (*this)(i, j) = static_cast<Coeff>(((*this)(i, j) + (p_ - f) * (*this)(r, j)) % p_);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t FpMatrix::rank() const {
  FpMatrix copy = *this;
  return copy.rref().size();
}

std::vector<FpVector> FpMatrix::nullspace() const {
  FpMatrix m = *this;
  const auto pivots = m.rref();
  std::vector<bool> is_pivot(cols_, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<FpVector> basis;
  for (std::size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    FpVector v(cols_, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      const Coeff a = m(i, free);
      v[pivots[i]] = a == 0 ? 0 : p_ - a;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<FpVector> FpMatrix::left_nullspace() const { return transpose().nullspace(); }

std::optional<FpVector> FpMatrix::solve(std::span<const Coeff> b) const {
  FpMatrix aug(p_, rows_, cols_ + 1);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
    aug(i, cols_) = b[i] % p_;
  }
  const auto pivots = aug.rref();
  FpVector x(cols_, 0);
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    if (pivots[i] == cols_) return std::nullopt;
    x[pivots[i]] = aug(i, cols_);
  }
  return x;
}

FpVector FpMatrix::apply(std::span<const Coeff> x) const {
  FpVector y(rows_, 0);
  for (std::size_t i = 0; i < rows_; ++i) {
    std::uint64_t acc = 0;
    for (std::size_t j = 0; j < cols_; ++j) acc += static_cast<std::uint64_t>((*this)(i, j)) * x[j];
    y[i] = static_cast<Coeff>(acc % p_);
  }
  return y;
}

FpMatrix FpMatrix::transpose() const {
  FpMatrix t(p_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

}  // namespace asmax
