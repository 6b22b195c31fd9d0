#pragma once

#include <map>
#include <optional>

#include "secreg/hilbert.hpp"
#include "secreg/ideal_ops.hpp"
#include "secreg/module.hpp"

namespace secreg {

struct FreeResolution {
  RingPtr ring;
  std::vector<GradedMatrix> maps;  // maps[i] : F_{i+1} -> F_i, F_0 = S
  bool minimal = false;

  int length() const { return static_cast<int>(maps.size()); }
  // Generator degrees of F_i.
  std::vector<int> twists(int i) const;
};

// Grid beta[i][j] = dim Tor_i(k, S/I)_{i+j}.
struct BettiTable {
  int nvars = 0;
  std::map<std::pair<int, int>, std::int64_t> entries;  // (i, j) -> beta, nonzero only

  std::int64_t at(int i, int j) const;
  int pd() const;
  int reg() const;  // of S/I
  int depth() const { return nvars - pd(); }
  std::int64_t total(int i) const;
  bool operator==(const BettiTable& o) const { return nvars == o.nvars && entries == o.entries; }
};

struct ResolutionStats {
  std::vector<std::size_t> frame_sizes;  // generators per level before minimization
};

// Non-minimal Schreyer resolution of S/I built on the reduced GB.
// Optionally also returns the Betti numbers read off the ranks of the
// constant parts of the maps.
FreeResolution schreyer_resolution(const Ideal& I, ResolutionStats* stats = nullptr,
                                   BettiTable* betti_from_constants = nullptr);
// Same for coker(M); the ambient degrees are M's row degrees.
FreeResolution schreyer_resolution(const GradedMatrix& M, ResolutionStats* stats = nullptr,
                                   BettiTable* betti_from_constants = nullptr);

// Removes every unit pivot; result has no nonzero constant entries.
FreeResolution minimize(FreeResolution R);

FreeResolution minimal_resolution(const Ideal& I);
FreeResolution minimal_resolution(const GradedMatrix& M);

// Betti numbers only; skips minimization (ranks of the constant parts of
// the Schreyer resolution).
BettiTable betti_numbers(const Ideal& I);

BettiTable betti_table(const FreeResolution& R);

// Minimal generators of the kernel of M.
GradedMatrix syzygies(const GradedMatrix& M);

// Subset of the columns that minimally generates the same submodule.
GradedMatrix minimal_generators(const GradedMatrix& M);

// reg(I) = reg(S/I) + 1
int regularity_of_subscheme(const BettiTable& B);

int n2p_index(const BettiTable& B);

// Alternating sum of the twists against the Hilbert series numerator.
bool euler_check(const BettiTable& B, const HilbertSeries& H);
IntPoly euler_numerator(const BettiTable& B);

// Exactness of R in internal degrees <= max_degree, via ranks of graded
// pieces; also checks that consecutive maps compose to zero.
struct ExactnessReport {
  bool compose_zero = true;
  bool exact = true;
  int degrees_checked = 0;
  std::string detail;
};
ExactnessReport check_exactness(const FreeResolution& R, const Ideal& I, int max_degree);

}  // namespace secreg
