#pragma once

#include <optional>

#include "secreg/geom.hpp"

namespace secreg {

// The line through two points p, q of P^r, parametrized by s*p + t*q.
struct Line {
  std::vector<std::uint32_t> p, q;
};

bool is_degenerate(const Line& L, const PrimeField& F);

// Plucker vector p_ij = p_i q_j - p_j q_i, i < j in lexicographic order.
std::vector<std::uint32_t> plucker(const Line& L, const PrimeField& F);

// Length of X ∩ L, nullopt when L lies in X. Restricts every generator to
// L and takes the degree of the gcd of the nonzero binary forms.
std::optional<int> secant_length(const Ideal& I, const Line& L);

// Independent oracle: the constant Hilbert polynomial of S/(I + I_L).
std::optional<int> secant_length_hilbert(const Ideal& I, const Line& L);

struct SecantSample {
  Line line;
  std::optional<int> length;
  std::vector<std::uint32_t> plucker;
};

constexpr int kRetryBudget = 16;

// Type II: random lines in the extremal plane. Type I: random line
// sections P^1 x {q} of the Segre threefold S(1,1,1) containing X.
// Line k uses the stream Rng::derive(seed, k); lines inside X are redrawn.
std::vector<SecantSample> sample_secant_lines(const SurfaceSpec& spec, const Ideal& I, int n, std::uint64_t seed);

struct PluckerSpan {
  int span_dim = 0;      // projective dimension of the span
  int quadric_dim = 0;   // quadrics in the span vanishing on the fitting samples
  int holdout = 0;       // samples kept back for the check
  bool quadric_check = false;
};

// Quadrics are fitted on all but floor(n/4) samples, in coordinates of the
// linear span, and must vanish on the held-out ones.
PluckerSpan plucker_span(const std::vector<SecantSample>& samples, const PrimeField& F);

}  // namespace secreg
