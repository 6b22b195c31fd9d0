#pragma once

#include <functional>

#include "secreg/io.hpp"

namespace secreg {

// ---------------------------------------------------------------- formulas

// Linear strand (3, 2) in row 1, strand (C(d-1,2), 2(d-1)(d-3),
// 3(d^2-5d+5), 2(d-2)(d-4), C(d-3,2)) in row d-3, over 6 variables.
BettiTable type1_betti_formula(int d);

struct Type1Cohomology {
  std::int64_t h1 = 0;     // h^1(I_X(j))
  std::int64_t h0_OX = 0;  // h^0(O_X(j))
  std::int64_t h1_OX = 0;
  std::int64_t h2_OX = 0;  // equals h^3(I_X(j))
};
Type1Cohomology type1_coh_formula(int d, int j);

// h^3(I_X(j)) of a type II surface (and h^2(O_X(j)) for type I).
std::int64_t h3_formula(int d, int j);

struct H2Expectation {
  std::int64_t value = 0;
  bool exact = true;  // otherwise value is an upper bound
};
// h^2(I_X(j)) of a type II surface with e(X) = e.
H2Expectation type2_expected_h2(int d, int r, std::int64_t e, int j);

std::int64_t minimal_e(int d, int r);

// Possible (depth X, depth Y) for a type II surface.
std::vector<std::pair<int, int>> allowed_tau(int d, int r);

// h^0(O_X(j)) predicted from h^2(I_X(j)) and e, j >= 0.
std::int64_t type2_h0_OX(int d, std::int64_t h2, std::int64_t e, int j);

// ---------------------------------------------------------------- examples

struct PaperExample {
  std::string id;       // "t1-8", "7.3", "7.4(2)", ...
  std::string anchor;
  SurfaceKind kind = SurfaceKind::TypeI;
  int d = 0, a = 0, b = 0;
  std::string f;
  // Rows j = 1..reg(S/I) of the printed table, i = 1..len.
  std::vector<std::vector<std::int64_t>> rows;
  std::optional<std::pair<int, int>> tau;
};

const std::vector<PaperExample>& paper_examples();
const PaperExample& paper_example(const std::string& id);
BettiTable paper_betti_table(const PaperExample& ex, int nvars);
Surface construct(const PaperExample& ex, std::uint32_t p = kDefaultPrime);
// The example matching a spec, if any.
const PaperExample* find_paper_example(const SurfaceSpec& spec);

// ---------------------------------------------------------------- verification

enum class Verdict { Pass, Fail, Skipped };
std::string to_string(Verdict v);

struct Claim {
  std::string claim;
  std::string anchor;
  Json expected;
  Json computed;
  Verdict verdict = Verdict::Skipped;
};

struct VerificationReport {
  std::vector<Claim> claims;
  bool passed() const;  // no failures and at least one pass
  std::size_t count(Verdict v) const;
  void append(const VerificationReport& o, const std::string& prefix = "");
};

Json report_json(const VerificationReport& r);
VerificationReport report_from_json(const Json& j);
std::string report_text(const VerificationReport& r);
std::string report_csv(const VerificationReport& r);

// Everything verify_surface may look at; missing pieces skip their claims.
struct SurfaceArtifacts {
  std::optional<BettiTable> betti;
  std::optional<BettiTable> betti_y;  // of X ∪ F, type II
  std::optional<CohomologyTable> coh;
  std::optional<std::map<int, std::int64_t>> k1_generators;  // degree -> count
  std::optional<std::map<int, std::int64_t>> k2_generators;
  std::optional<std::int64_t> quadrics;                      // h^0(I_X(2))
  std::optional<std::vector<std::int64_t>> hilbert_function;  // dim (S/I)_j, j = 0..
  std::optional<SecantReport> secant;
  std::optional<int> sreg;
  std::optional<bool> plane_generation;  // I = (I ∩ L, f) for f in I_{d-r+3} outside I ∩ L
  // property checks
  std::optional<bool> gb_verified;        // every S-polynomial reduces to zero
  std::optional<bool> euler;              // Betti alternating sum vs Hilbert series
  std::optional<ExactnessReport> exactness;
  std::optional<bool> round_trip;         // ideal file write/read gives the same generators
};

using Progress = std::function<void(const std::string&)>;

struct ArtifactOptions {
  std::uint64_t seed = 0;
  int lines = 20;
  bool secant = true;
  bool exactness = true;  // graded ranks up to reg + 2; the slow part for large examples
  Progress progress;
};
SurfaceArtifacts collect_artifacts(const Surface& S, const ArtifactOptions& opt);

VerificationReport verify_surface(const SurfaceSpec& spec, const SurfaceArtifacts& a);

// Degree r+1 classifier on type2(3,4) with a generic f drawn from the seed,
// and on type1(6).
VerificationReport classifier_claims(std::uint64_t seed);

// Every paper example in table order (claims prefixed by example id), then
// the classifier. Example k uses the seed derived from (seed, k).
VerificationReport demo_paper(std::uint64_t seed, const Progress& progress = {});
std::uint64_t example_seed(std::uint64_t seed, std::size_t k);

}  // namespace secreg
