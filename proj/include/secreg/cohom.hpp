#pragma once

#include <limits>
#include <optional>

#include "secreg/resolution.hpp"

namespace secreg {

// Hilbert functions of H^k(Hom(F, R)) for a free resolution F over R,
// from module Groebner bases of the images of the dual maps.
class DualComplex {
 public:
  explicit DualComplex(const FreeResolution& F);

  int length() const { return len_; }
  // dim Ext^k(M, R)_q
  std::int64_t ext_dim(int k, int q) const;
  // Number of minimal generators of Ext^k(M, R) in each degree.
  std::map<int, std::int64_t> ext_generators(int k) const;

 private:
  std::int64_t free_dim(int k, int q) const;
  std::int64_t image_dim(int k, int q) const;  // im of F_{k-1}^* in F_k^*

  FreeResolution F_;
  int len_ = 0;
  int nvars_ = 0;
  std::vector<std::vector<int>> dual_deg_;                 // degrees of the basis of F_k^*
  std::vector<std::vector<HilbertSeries>> image_series_;   // per k >= 1, per component
};

// Deficiency modules K^i(A) = Ext^{r+1-i}_S(A, S(-r-1)) of A = S/I for a
// saturated homogeneous ideal.
class Deficiency {
 public:
  virtual ~Deficiency() = default;
  // dim K^i(A)_m
  virtual std::int64_t dim(int i, int m) const = 0;
  // h^i(P^r, I_X(j)) = dim K^i(A)_{-j}, 1 <= i <= dim A - 1
  std::int64_t h(int i, int j) const { return dim(i, -j); }
};

// Computed over a Noether normalization
// T = k[l_0..l_{D-1}] of A (D = dim A) by local duality:
// K^i(A) = Ext^{D-i}_T(A, T(-D)).
// Used as an independent cross-check of the S-route below.
class DeficiencyModules : public Deficiency {
 public:
  explicit DeficiencyModules(const Ideal& I, std::uint64_t seed = 0);

  int krull_dim() const { return D_; }
  // zero for i outside [0, D]
  std::int64_t dim(int i, int m) const override;

  // Variables used as the normalization; if random_coordinates() they
  // refer to a generic change of coordinates of S.
  const std::vector<int>& normalization() const { return tvars_; }
  bool random_coordinates() const { return random_coordinates_; }
  // Degrees of the minimal T-module generators of A.
  const std::vector<int>& generator_degrees() const { return gen_deg_; }
  const FreeResolution& t_resolution() const { return tres_; }

 private:
  int D_ = 0;
  std::vector<int> tvars_;
  bool random_coordinates_ = false;
  std::vector<int> gen_deg_;
  FreeResolution tres_;
  std::optional<DualComplex> dual_;
};

// Same modules from the dual of the minimal S-resolution of S/I.
class DeficiencyModulesS : public Deficiency {
 public:
  explicit DeficiencyModulesS(const FreeResolution& R);
  // Checks that I is saturated, then resolves it.
  explicit DeficiencyModulesS(const Ideal& I, std::uint64_t seed = 0);
  std::int64_t dim(int i, int m) const override;
  // Minimal generators of K^i(A) as an S-module, degree -> count.
  std::map<int, std::int64_t> generators(int i) const;

 private:
  int n_ = 0;  // r + 1
  DualComplex dual_;
};

struct CohomologyTable {
  int lo = 0, hi = 0;
  std::vector<std::int64_t> h1, h2, h3;  // index j - lo
  std::optional<std::int64_t> e;          // e(X), if the window stabilized
  std::optional<int> N;                   // index of normality; nullopt = -inf

  std::int64_t at(int i, int j) const;
};

// Default window [-(d+2), d-r+4].
std::pair<int, int> default_window(std::int64_t d, int r);

CohomologyTable sheaf_cohomology_table(const Ideal& I, int lo, int hi, std::uint64_t seed = 0);
CohomologyTable sheaf_cohomology_table(const Deficiency& K, int lo, int hi, int reg_x);

// dim K^i(A)_m for m in [lo, hi]
std::vector<std::int64_t> deficiency_module(const Ideal& I, int i, int lo, int hi, std::uint64_t seed = 0);

// Reads h^2(I_X(j)) at j = lo and lo+1; they must agree.
std::int64_t e_invariant(const Deficiency& K, int lo);
std::int64_t e_invariant(const Ideal& I, std::uint64_t seed = 0);

// Largest j in [1, reg_x] with h^1(I_X(j)) != 0, nullopt for -inf.
std::optional<int> index_of_normality(const Deficiency& K, int reg_x);
std::optional<int> index_of_normality(const Ideal& I, std::uint64_t seed = 0);

// Saturated ideal of X ∩ {h = 0} in one fewer variable.
Ideal hyperplane_section(const Ideal& I, const Poly& h);
Poly random_linear_form(const RingPtr& R, Rng& rng);

struct SectionalRegularity {
  int value = 0;
  std::vector<int> samples;
};
SectionalRegularity sectional_regularity(const Ideal& I, int samples = 3, std::uint64_t seed = 0);

std::int64_t sectional_genus(const Ideal& I, std::uint64_t seed = 0);

int depth_of(const Ideal& I);
std::pair<int, int> tau(const Ideal& IX, const Ideal& IY);

struct ClassifierInput {
  int sreg = 0, depth = 0;
  std::int64_t sigma = 0, e = 0, h1_1 = 0, h1_2 = 0;
};
// Row of the degree r+1 table, or throws ComputationError("unclassified").
int classify_invariants(const ClassifierInput& in);

struct InvariantReport {
  std::int64_t d = 0;
  int r = 0;
  int dim = 0;
  int reg_x = 0;
  int sreg = 0;
  std::vector<int> sreg_samples;
  int depth_x = 0;
  std::optional<int> depth_y;
  std::int64_t e = 0;
  std::optional<int> N;
  std::int64_t sigma = 0;
  std::int64_t h1_1 = 0, h1_2 = 0;
  std::optional<int> case_label;  // degree r+1 surfaces only
};

InvariantReport compute_invariants(const Ideal& IX, const std::optional<Ideal>& IY, std::uint64_t seed = 0);

int classify_degree_r_plus_1(const Ideal& I, std::uint64_t seed = 0);

}  // namespace secreg
