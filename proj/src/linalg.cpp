#include "secreg/linalg.hpp"

#include <utility>

namespace secreg {

void DenseMatrix::append_row(const std::vector<std::uint32_t>& v) {
  if (r_ == 0 && c_ == 0) c_ = v.size();
  if (v.size() != c_) throw PreconditionError("row length mismatch");
  a_.insert(a_.end(), v.begin(), v.end());
  ++r_;
}

DenseMatrix DenseMatrix::transpose() const {
  DenseMatrix t(c_, r_);
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t j = 0; j < c_; ++j) t.at(j, i) = at(i, j);
  return t;
}

// dst -= f * src on columns [from, n)
static inline void axpy(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t f, std::size_t from,
                        std::size_t n, std::uint32_t p) {
  std::uint64_t nf = p - f;
  for (std::size_t j = from; j < n; ++j)
    if (src[j]) dst[j] = static_cast<std::uint32_t>((dst[j] + nf * src[j]) % p);
}

std::vector<std::size_t> row_reduce(DenseMatrix& m, const PrimeField& F) {
  std::vector<std::size_t> pivots;
  std::size_t R = m.rows(), C = m.cols(), r = 0;
  std::uint32_t p = F.characteristic();
  for (std::size_t c = 0; c < C && r < R; ++c) {
    std::size_t piv = R;
    for (std::size_t i = r; i < R; ++i)
      if (m.at(i, c)) {
        piv = i;
        break;
      }
    if (piv == R) continue;
    if (piv != r)
      for (std::size_t j = 0; j < C; ++j) std::swap(m.at(piv, j), m.at(r, j));
    std::uint32_t inv = F.inv(m.at(r, c));
    std::uint32_t* pr = m.row(r);
    for (std::size_t j = c; j < C; ++j) pr[j] = F.mul(pr[j], inv);
    for (std::size_t i = 0; i < R; ++i) {
      if (i == r) continue;
      std::uint32_t f = m.at(i, c);
      if (f) axpy(m.row(i), pr, f, c, C, p);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t rank(DenseMatrix m, const PrimeField& F) {
  // forward elimination only
  std::size_t R = m.rows(), C = m.cols(), r = 0;
  std::uint32_t p = F.characteristic();
  for (std::size_t c = 0; c < C && r < R; ++c) {
    std::size_t piv = R;
    for (std::size_t i = r; i < R; ++i)
      if (m.at(i, c)) {
        piv = i;
        break;
      }
    if (piv == R) continue;
    if (piv != r)
      for (std::size_t j = 0; j < C; ++j) std::swap(m.at(piv, j), m.at(r, j));
    std::uint32_t inv = F.inv(m.at(r, c));
    std::uint32_t* pr = m.row(r);
    for (std::size_t j = c; j < C; ++j) pr[j] = F.mul(pr[j], inv);
    for (std::size_t i = r + 1; i < R; ++i) {
      std::uint32_t f = m.at(i, c);
      if (f) axpy(m.row(i), pr, f, c, C, p);
    }
    ++r;
  }
  return r;
}

DenseMatrix kernel(const DenseMatrix& m0, const PrimeField& F) {
  DenseMatrix m = m0;
  auto piv = row_reduce(m, F);
  std::size_t C = m.cols();
  std::vector<char> is_piv(C, 0);
  for (auto c : piv) is_piv[c] = 1;
  DenseMatrix K(0, C);
  for (std::size_t f = 0; f < C; ++f) {
    if (is_piv[f]) continue;
    std::vector<std::uint32_t> v(C, 0);
    v[f] = 1;
    for (std::size_t k = 0; k < piv.size(); ++k) v[piv[k]] = F.neg(m.at(k, f));
    K.append_row(v);
  }
  return K;
}

bool EchelonBasis::reduce(std::vector<std::uint32_t>& v) const {
  std::uint32_t p = F_.characteristic();
  bool zero = true;
  for (std::size_t c = 0; c < n_; ++c) {
    if (!v[c]) continue;
    int r = piv_row_.empty() ? -1 : piv_row_[c];
    if (r < 0) {
      zero = false;
      continue;
    }
    axpy(v.data(), rows_[r].data(), v[c], c, n_, p);
  }
  return zero;
}

bool EchelonBasis::insert(std::vector<std::uint32_t> v) {
  if (v.size() != n_) throw PreconditionError("vector length mismatch");
  if (piv_row_.empty()) piv_row_.assign(n_, -1);
  if (reduce(v)) return false;
  std::size_t c = 0;
  while (!v[c]) ++c;
  std::uint32_t inv = F_.inv(v[c]);
  for (std::size_t j = c; j < n_; ++j) v[j] = F_.mul(v[j], inv);
  piv_row_[c] = static_cast<int>(rows_.size());
  piv_.push_back(c);
  rows_.push_back(std::move(v));
  return true;
}

}  // namespace secreg
