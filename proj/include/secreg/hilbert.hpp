#pragma once

#include <cstdint>
#include <vector>

#include "secreg/monomial.hpp"

namespace secreg {

// Integer polynomial in t, coefficient k at index k.
using IntPoly = std::vector<std::int64_t>;

// Hilbert series of S/J for a monomial ideal J in `nvars` standard-graded
// variables, as numerator / (1-t)^nvars.
IntPoly hilbert_numerator(std::vector<Monomial> gens, int nvars);

// N(t)/(1-t)^n after cancelling (1-t) factors.
struct HilbertSeries {
  int nvars = 0;
  IntPoly raw;      // over (1-t)^nvars
  IntPoly reduced;  // over (1-t)^dim
  int dim = 0;      // Krull dimension of S/I

  // dim_k (S/I)_d
  std::int64_t value(int d) const;
  // Hilbert polynomial evaluated at an arbitrary integer d.
  std::int64_t polynomial_value(int d) const;
  std::int64_t degree() const;
  bool is_zero() const { return raw.empty(); }
};

HilbertSeries make_hilbert_series(IntPoly raw, int nvars);

// Generalized binomial x choose m for integer x (may be negative), m >= 0.
std::int64_t binom_poly(std::int64_t x, int m);
// Ordinary binomial, 0 outside 0 <= k <= n.
std::int64_t binom(std::int64_t n, std::int64_t k);

void trim(IntPoly& p);
IntPoly poly_mul(const IntPoly& a, const IntPoly& b);

}  // namespace secreg
