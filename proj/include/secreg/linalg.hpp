#pragma once

#include <cstdint>
#include <vector>

#include "secreg/coeffs.hpp"

namespace secreg {

// Dense row-major matrix over F_p.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), a_(rows * cols, 0) {}

  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }
  std::uint32_t& at(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
  std::uint32_t at(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }
  std::uint32_t* row(std::size_t i) { return a_.data() + i * c_; }
  const std::uint32_t* row(std::size_t i) const { return a_.data() + i * c_; }
  void append_row(const std::vector<std::uint32_t>& v);
  DenseMatrix transpose() const;

 private:
  std::size_t r_ = 0, c_ = 0;
  std::vector<std::uint32_t> a_;
};

// In-place reduced row echelon form; returns pivot columns (one per
// nonzero row, rows reordered so row k has pivot pivots[k]).
std::vector<std::size_t> row_reduce(DenseMatrix& m, const PrimeField& F);

std::size_t rank(DenseMatrix m, const PrimeField& F);

// Basis of {v : m v = 0}, one vector per row of the result.
DenseMatrix kernel(const DenseMatrix& m, const PrimeField& F);

// Incremental row echelon basis for a growing subspace; vectors are
// reduced against stored pivots as they arrive.
class EchelonBasis {
 public:
  EchelonBasis(std::size_t dim, const PrimeField& F) : n_(dim), F_(F) {}
  // Returns true if v was independent (and stores it).
  bool insert(std::vector<std::uint32_t> v);
  // Reduces v in place; returns true if it became zero.
  bool reduce(std::vector<std::uint32_t>& v) const;
  std::size_t size() const { return rows_.size(); }
  std::size_t dim() const { return n_; }
  const std::vector<std::vector<std::uint32_t>>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return piv_; }

 private:
  std::size_t n_;
  PrimeField F_;
  std::vector<std::vector<std::uint32_t>> rows_;  // monic at pivot
  std::vector<std::size_t> piv_;
  std::vector<int> piv_row_;  // column -> row or -1
};

}  // namespace secreg
