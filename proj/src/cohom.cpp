#include "secreg/cohom.hpp"

#include <algorithm>
#include <unordered_map>

#include "secreg/linalg.hpp"

namespace secreg {

// ---------------------------------------------------------------- dual complex

namespace {

// Term-over-position order that compares the twisted degree first.
ModuleOrder twisted_order(const RingPtr& R, const std::vector<int>& degs) {
  ModuleOrder ord(R->order(), degs.size());
  if (degs.empty()) return ord;
  int lo = *std::min_element(degs.begin(), degs.end());
  std::vector<Monomial> shifts;
  for (int d : degs) shifts.push_back(Monomial::var(0, d - lo));
  ord.set_shifts(std::move(shifts));
  return ord;
}

}  // namespace

DualComplex::DualComplex(const FreeResolution& F) : F_(F), len_(F.length()), nvars_(F.ring->nvars()) {
  dual_deg_.resize(len_ + 1);
  for (int k = 0; k <= len_; ++k)
    for (int t : F_.twists(k)) dual_deg_[k].push_back(-t);
  image_series_.resize(len_ + 1);
  for (int k = 1; k <= len_; ++k) {
    GradedMatrix Mt = F_.maps[k - 1].transpose();
    ModuleOrder ord = twisted_order(F_.ring, Mt.row_deg);
    ModuleGB gb(F_.ring, Mt.row_deg, ord);
    for (std::size_t j = 0; j < Mt.ncols(); ++j) gb.add(Mt.column_vec(j, ord));
    gb.complete();
    image_series_[k] = gb.component_series();
  }
}

std::int64_t DualComplex::free_dim(int k, int q) const {
  std::int64_t s = 0;
  for (int d : dual_deg_[k])
    if (q >= d) s += binom(q - d + nvars_ - 1, nvars_ - 1);
  return s;
}

std::int64_t DualComplex::image_dim(int k, int q) const {
  if (k < 1 || k > len_) return 0;
  std::int64_t quot = 0;
  for (std::size_t i = 0; i < dual_deg_[k].size(); ++i) quot += image_series_[k][i].value(q - dual_deg_[k][i]);
  return free_dim(k, q) - quot;
}

std::int64_t DualComplex::ext_dim(int k, int q) const {
  if (k < 0 || k > len_) return 0;
  return free_dim(k, q) - image_dim(k + 1, q) - image_dim(k, q);
}

std::map<int, std::int64_t> DualComplex::ext_generators(int k) const {
  std::map<int, std::int64_t> out;
  if (k < 0 || k > len_) return out;
  const RingPtr& R = F_.ring;
  const std::vector<int>& degs = dual_deg_[k];
  ModuleOrder ord = twisted_order(R, degs);
  // cycles
  std::vector<ModVec> Z;
  if (k == len_) {
    for (std::size_t i = 0; i < degs.size(); ++i) Z.push_back({{Monomial(), static_cast<int>(i), 1}});
  } else {
    GradedMatrix S = syzygies(F_.maps[k].transpose());
    for (std::size_t j = 0; j < S.ncols(); ++j) Z.push_back(S.column_vec(j, ord));
  }
  std::stable_sort(Z.begin(), Z.end(),
                   [&](const ModVec& a, const ModVec& b) { return modvec_degree(a, degs) < modvec_degree(b, degs); });
  ModuleGB gb(R, degs, ord);
  if (k >= 1) {
    GradedMatrix B = F_.maps[k - 1].transpose();
    for (std::size_t j = 0; j < B.ncols(); ++j) gb.add(B.column_vec(j, ord));
  }
  for (auto& z : Z) {
    if (z.empty()) continue;
    int d = modvec_degree(z, degs);
    gb.complete(d);
    if (gb.normal_form(z).empty()) continue;
    ++out[d];
    gb.add(std::move(z));
  }
  return out;
}

// ---------------------------------------------------------------- T-route

namespace {

// Subsets of size D of {0..n-1}, starting with the last variables.
std::vector<std::vector<int>> candidate_subsets(int n, int D, std::size_t limit) {
  std::vector<std::vector<int>> out;
  // iterate subsets of reversed indices in lex order
  std::vector<int> idx(D);
  for (int i = 0; i < D; ++i) idx[i] = i;
  while (out.size() < limit) {
    std::vector<int> s;
    for (int i = D - 1; i >= 0; --i) s.push_back(n - 1 - idx[i]);
    out.push_back(s);
    int i = D - 1;
    while (i >= 0 && idx[i] == n - D + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < D; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

bool is_parameter_system(const Ideal& I, const std::vector<int>& vars) {
  std::vector<Poly> g = I.generators();
  for (int v : vars) g.push_back(Poly::variable(I.ring(), v));
  return hilbert_series(Ideal(I.ring(), g)).dim == 0;
}

// Random linear automorphism of the coordinates.
Ideal random_change_of_coordinates(const Ideal& I, Rng& rng) {
  const RingPtr& R = I.ring();
  PrimeField F = field_of<PrimeField>(*R);
  int n = R->nvars();
  for (;;) {
    DenseMatrix M(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) M.at(i, j) = random_element(rng, F);
    if (static_cast<int>(rank(M, F)) != n) continue;
    std::vector<Poly> img;
    for (int i = 0; i < n; ++i) {
      std::vector<Term<PrimeField>> t;
      for (int j = 0; j < n; ++j) t.push_back({Monomial::var(j), M.at(i, j)});
      img.push_back(Poly::from_terms(R, t));
    }
    std::vector<Poly> g;
    for (const auto& f : I.generators()) g.push_back(substitute(f, img));
    return Ideal(R, g);
  }
}

using SparseVec = std::vector<std::pair<int, std::uint32_t>>;

// Graded pieces of A = S/W in the basis of standard monomials, built
// lazily, with multiplication by the normalization variables.
class QuotientTables {
 public:
  QuotientTables(const Ideal& W) : W_(W), G_(W.gb()), F_(field_of<PrimeField>(*W.ring())) {}

  int index(const Monomial& m) {
    auto& tab = idx_[m.degree()];
    auto it = tab.find(m);
    if (it != tab.end()) return it->second;
    int k = static_cast<int>(tab.size());
    tab.emplace(m, k);
    return k;
  }
  std::size_t size(int q) { return idx_[q].size(); }

  // Coordinates of NF(m).
  const SparseVec& nf(const Monomial& m) {
    auto it = nf_.find(m);
    if (it != nf_.end()) return it->second;
    Poly p = normal_form(Poly::monomial(W_.ring(), m), G_);
    SparseVec v;
    for (const auto& t : p.terms()) v.push_back({index(t.m), t.c});
    std::sort(v.begin(), v.end());
    return nf_.emplace(m, std::move(v)).first->second;
  }

  // x_var * (vector in degree q)
  SparseVec multiply(const SparseVec& v, int q, int var) {
    const std::vector<Monomial>& basis = basis_of(q);
    std::map<int, std::uint32_t> acc;
    for (const auto& [i, c] : v) {
      const SparseVec& w = nf(basis[i] * Monomial::var(var));
      for (const auto& [k, d] : w) {
        auto& slot = acc[k];
        slot = F_.add(slot, F_.mul(c, d));
      }
    }
    SparseVec out;
    for (const auto& [k, c] : acc)
      if (c) out.push_back({k, c});
    return out;
  }

 private:
  const std::vector<Monomial>& basis_of(int q) {
    auto& b = basis_[q];
    if (b.size() != idx_[q].size()) {
      b.assign(idx_[q].size(), Monomial());
      for (const auto& [m, k] : idx_[q]) b[k] = m;
    }
    return b;
  }

  const Ideal& W_;
  const GroebnerBasis& G_;
  PrimeField F_;
  std::map<int, std::unordered_map<Monomial, int, MonomialHash>> idx_;
  std::unordered_map<Monomial, SparseVec, MonomialHash> nf_;
  std::map<int, std::vector<Monomial>> basis_;
};

}  // namespace

DeficiencyModules::DeficiencyModules(const Ideal& I0, std::uint64_t seed) {
  const RingPtr& R = I0.ring();
  if (R->characteristic() == 0) throw FieldMismatch("deficiency modules need a prime field");
  if (!R->standard_grading() || !I0.is_homogeneous()) throw PreconditionError("homogeneous ideal required");
  if (!is_saturated(I0, seed)) throw PreconditionError("unsaturated input: (I : m) != I");
  PrimeField F = field_of<PrimeField>(*R);
  int n = R->nvars();
  HilbertSeries H = hilbert_series(I0);
  if (H.is_zero()) throw PreconditionError("unit ideal");
  D_ = H.dim;
  if (D_ == 0) throw PreconditionError("A has dimension 0");

  Ideal W = I0;
  bool found = false;
  for (const auto& s : candidate_subsets(n, D_, 64))
    if (is_parameter_system(W, s)) {
      tvars_ = s;
      found = true;
      break;
    }
  if (!found) {
    Rng rng = Rng::derive(seed, 0x7e57);
    for (int attempt = 0; attempt < 8 && !found; ++attempt) {
      W = random_change_of_coordinates(I0, rng);
      std::vector<int> last;
      for (int k = n - D_; k < n; ++k) last.push_back(k);
      if (is_parameter_system(W, last)) {
        found = true;
        tvars_ = last;
      }
    }
    if (!found) throw ComputationError("no Noether normalization found");
    H = hilbert_series(W);
    random_coordinates_ = true;
  }
  std::vector<int> tv = tvars_;

  // Generators: standard monomials of W + (T).
  std::vector<Poly> jg = W.generators();
  for (int v : tv) jg.push_back(Poly::variable(R, v));
  Ideal J(R, jg);
  std::vector<Monomial> jl = J.gb().lead_monomials();
  std::vector<Monomial> gens;
  for (int q = 0;; ++q) {
    std::size_t before = gens.size();
    for (const auto& m : monomials_of_degree(n, q)) {
      bool uses_t = false;
      for (int v : tv) uses_t |= m[v] != 0;
      if (uses_t) continue;
      bool standard = true;
      for (const auto& l : jl)
        if (l.divides(m)) {
          standard = false;
          break;
        }
      if (standard) gens.push_back(m);
    }
    if (gens.size() == before) break;
  }
  int g = static_cast<int>(gens.size());
  for (const auto& m : gens) gen_deg_.push_back(m.degree());

  RingPtr T = make_ring(R->characteristic(), D_, "t");
  ModuleOrder ord(T->order(), g);
  ModuleGB rel(T, gen_deg_, ord);
  QuotientTables A(W);
  // image of u * b_j in A, memoized per (u, j)
  std::map<std::pair<int, int>, std::unordered_map<Monomial, SparseVec, MonomialHash>> image;
  auto image_of = [&](const Monomial& u, int j) -> SparseVec {
    auto& memo = image[{j, u.degree()}];
    auto it = memo.find(u);
    if (it != memo.end()) return it->second;
    SparseVec v;
    if (u.is_one()) {
      v.push_back({A.index(gens[j]), 1});
    } else {
      int k = 0;
      while (!u[k]) ++k;
      Monomial prev = Monomial::var(k).quotient_of(u);
      auto& pm = image[{j, prev.degree()}];
      auto pit = pm.find(prev);
      if (pit == pm.end()) throw ComputationError("T-module images out of order");
      v = A.multiply(pit->second, gen_deg_[j] + prev.degree(), tv[k]);
    }
    memo.emplace(u, v);
    return v;
  };

  IntPoly target = H.raw;
  trim(target);
  IntPoly shift{1};
  for (int k = 0; k < n - D_; ++k) shift = poly_mul(shift, IntPoly{1, -1});
  int qmin = *std::min_element(gen_deg_.begin(), gen_deg_.end());
  int qmax_gen = *std::max_element(gen_deg_.begin(), gen_deg_.end());
  bool done = false;
  for (int q = qmin; q <= qmax_gen + 200 && !done; ++q) {
    rel.complete(q);
    struct Col {
      Monomial u;
      int j;
    };
    std::vector<Col> cols;
    for (int j = 0; j < g; ++j) {
      int e = q - gen_deg_[j];
      if (e < 0) continue;
      for (const auto& u : monomials_of_degree(D_, e)) {
        image_of(u, j);  // fills the memo even for lead multiples
        if (!rel.is_lead_multiple(u, j)) cols.push_back({u, j});
      }
    }
    std::sort(cols.begin(), cols.end(),
              [&](const Col& a, const Col& b) { return ord.compare(a.u, a.j, b.u, b.j) < 0; });
    if (!cols.empty()) {
      std::vector<SparseVec> imgs;
      for (const auto& c : cols) imgs.push_back(image_of(c.u, c.j));
      std::size_t rows = A.size(q);
      DenseMatrix M(rows, cols.size());
      for (std::size_t c = 0; c < cols.size(); ++c)
        for (const auto& [i, v] : imgs[c]) M.at(i, c) = v;
      DenseMatrix K = kernel(M, F);
      for (std::size_t k = 0; k < K.rows(); ++k) {
        ModVec v;
        for (std::size_t c = cols.size(); c-- > 0;)
          if (K.at(k, c)) v.push_back({cols[c].u, cols[c].j, K.at(k, c)});
        rel.add(std::move(v));
      }
      rel.complete(q);
    }
    if (q > qmax_gen) {
      rel.complete();
      auto hs = rel.component_series();
      IntPoly num;
      for (int j = 0; j < g; ++j) {
        IntPoly part(gen_deg_[j], 0);
        part.insert(part.end(), hs[j].raw.begin(), hs[j].raw.end());
        if (num.size() < part.size()) num.resize(part.size(), 0);
        for (std::size_t k = 0; k < part.size(); ++k) num[k] += part[k];
      }
      IntPoly full = poly_mul(num, shift);
      trim(full);
      done = full == target;
    }
  }
  if (!done) throw ComputationError("T-module presentation did not close");

  std::vector<ModVec> basis = rel.reduced_basis();
  GradedMatrix P = GradedMatrix::from_columns(T, gen_deg_, basis);
  if (basis.empty()) P = GradedMatrix(T, gen_deg_, {});
  tres_ = minimal_resolution(P);
  dual_.emplace(tres_);
}

std::int64_t DeficiencyModules::dim(int i, int m) const {
  if (i < 0 || i > D_) return 0;
  return dual_->ext_dim(D_ - i, m - D_);
}

DeficiencyModulesS::DeficiencyModulesS(const FreeResolution& R) : n_(R.ring->nvars()), dual_(R) {}

namespace {
const Ideal& require_saturated(const Ideal& I, std::uint64_t seed) {
  if (!is_saturated(I, seed)) throw PreconditionError("deficiency modules need a saturated ideal");
  return I;
}
}  // namespace

DeficiencyModulesS::DeficiencyModulesS(const Ideal& I, std::uint64_t seed)
    : DeficiencyModulesS(minimal_resolution(require_saturated(I, seed))) {}

std::int64_t DeficiencyModulesS::dim(int i, int m) const { return dual_.ext_dim(n_ - i, m - n_); }

std::map<int, std::int64_t> DeficiencyModulesS::generators(int i) const {
  std::map<int, std::int64_t> out;
  for (const auto& [q, c] : dual_.ext_generators(n_ - i)) out[q + n_] = c;
  return out;
}

// ---------------------------------------------------------------- tables

std::int64_t CohomologyTable::at(int i, int j) const {
  if (j < lo || j > hi) throw PreconditionError("degree outside the table window");
  const auto& col = i == 1 ? h1 : i == 2 ? h2 : h3;
  if (i < 1 || i > 3) throw PreconditionError("cohomology index must be 1, 2 or 3");
  return col[j - lo];
}

std::pair<int, int> default_window(std::int64_t d, int r) {
  return {static_cast<int>(-(d + 2)), static_cast<int>(d - r + 4)};
}

CohomologyTable sheaf_cohomology_table(const Deficiency& K, int lo, int hi, int reg_x) {
  if (lo > hi) throw PreconditionError("empty window");
  CohomologyTable T;
  T.lo = lo;
  T.hi = hi;
  for (int j = lo; j <= hi; ++j) {
    T.h1.push_back(K.h(1, j));
    T.h2.push_back(K.h(2, j));
    T.h3.push_back(K.h(3, j));
  }
  if (K.h(2, lo) == K.h(2, lo + 1)) T.e = K.h(2, lo);
  T.N = index_of_normality(K, reg_x);
  return T;
}

CohomologyTable sheaf_cohomology_table(const Ideal& I, int lo, int hi, std::uint64_t seed) {
  FreeResolution R = minimal_resolution(require_saturated(I, seed));
  DeficiencyModulesS K(R);
  return sheaf_cohomology_table(K, lo, hi, regularity_of_subscheme(betti_table(R)));
}

std::vector<std::int64_t> deficiency_module(const Ideal& I, int i, int lo, int hi, std::uint64_t seed) {
  if (i < 0 || i > 3) throw PreconditionError("deficiency module index out of range");
  DeficiencyModulesS K(I, seed);
  std::vector<std::int64_t> out;
  for (int m = lo; m <= hi; ++m) out.push_back(K.dim(i, m));
  return out;
}

std::int64_t e_invariant(const Deficiency& K, int lo) {
  std::int64_t a = K.h(2, lo), b = K.h(2, lo + 1);
  if (a != b) throw ComputationError("e(X): h^2(I_X(j)) not yet stable at the window edge");
  return a;
}

std::int64_t e_invariant(const Ideal& I, std::uint64_t seed) {
  HilbertSeries H = hilbert_series(I);
  DeficiencyModulesS K(I, seed);
  return e_invariant(K, default_window(H.degree(), I.ring()->nvars() - 1).first);
}

std::optional<int> index_of_normality(const Deficiency& K, int reg_x) {
  std::optional<int> N;
  for (int j = 1; j <= reg_x; ++j)
    if (K.h(1, j) != 0) N = j;
  return N;
}

std::optional<int> index_of_normality(const Ideal& I, std::uint64_t seed) {
  FreeResolution R = minimal_resolution(require_saturated(I, seed));
  return index_of_normality(DeficiencyModulesS(R), regularity_of_subscheme(betti_table(R)));
}

// ---------------------------------------------------------------- sections

Poly random_linear_form(const RingPtr& R, Rng& rng) {
  PrimeField F = field_of<PrimeField>(*R);
  for (;;) {
    std::vector<Term<PrimeField>> t;
    for (int i = 0; i < R->nvars(); ++i) t.push_back({Monomial::var(i), random_element(rng, F)});
    Poly h = Poly::from_terms(R, t);
    if (!h.is_zero()) return h;
  }
}

Ideal hyperplane_section(const Ideal& I, const Poly& h) {
  if (h.is_zero() || !h.is_homogeneous() || h.total_degree() != 1) throw PreconditionError("h must be a nonzero linear form");
  Ideal C = restrict_to_hyperplane(I, h);
  return saturate(C, irrelevant_ideal<PrimeField>(C.ring())).first;
}

SectionalRegularity sectional_regularity(const Ideal& I, int samples, std::uint64_t seed) {
  if (samples < 1) throw PreconditionError("samples must be at least 1");
  SectionalRegularity out;
  for (int s = 0; s < samples; ++s) {
    Rng rng = Rng::derive(seed, static_cast<std::uint64_t>(s));
    Ideal C = hyperplane_section(I, random_linear_form(I.ring(), rng));
    out.samples.push_back(regularity_of_subscheme(betti_numbers(C)));
  }
  out.value = *std::min_element(out.samples.begin(), out.samples.end());
  return out;
}

std::int64_t sectional_genus(const Ideal& I, std::uint64_t seed) {
  if (hilbert_series(I).dim != 3) throw PreconditionError("sectional genus needs a surface");
  Rng rng = Rng::derive(seed, 0);
  Ideal C = hyperplane_section(I, random_linear_form(I.ring(), rng));
  return 1 - hilbert_series(C).polynomial_value(0);
}

int depth_of(const Ideal& I) { return betti_numbers(I).depth(); }

std::pair<int, int> tau(const Ideal& IX, const Ideal& IY) { return {depth_of(IX), depth_of(IY)}; }

// ---------------------------------------------------------------- classifier

int classify_invariants(const ClassifierInput& x) {
  struct Row {
    int sreg, depth;
    std::int64_t sigma, e, h1, h2;
    bool h2_at_most;
  };
  static const Row rows[] = {
      {2, 3, 2, 0, 0, 0, false}, {3, 2, 1, 0, 0, 0, false}, {3, 2, 1, 1, 0, 0, false},
      {3, 1, 1, 0, 1, 0, false}, {3, 2, 0, 2, 0, 0, false}, {3, 1, 0, 1, 1, 1, true},
      {3, 1, 0, 0, 2, 2, true},  {4, 2, 0, 3, 0, 0, false}, {4, 1, 0, 0, 2, 3, false},
  };
  for (int k = 0; k < 9; ++k) {
    const Row& r = rows[k];
    if (r.sreg != x.sreg || r.depth != x.depth || r.sigma != x.sigma || r.e != x.e || r.h1 != x.h1_1) continue;
    if (r.h2_at_most ? x.h1_2 <= r.h2 : x.h1_2 == r.h2) return k + 1;
  }
  throw ComputationError("unclassified: invariants match no row of the degree r+1 table");
}

InvariantReport compute_invariants(const Ideal& IX, const std::optional<Ideal>& IY, std::uint64_t seed) {
  InvariantReport rep;
  HilbertSeries H = hilbert_series(IX);
  FreeResolution RX = minimal_resolution(require_saturated(IX, seed));
  BettiTable B = betti_table(RX);
  rep.d = H.degree();
  rep.r = IX.ring()->nvars() - 1;
  rep.dim = H.dim - 1;
  rep.reg_x = regularity_of_subscheme(B);
  rep.depth_x = B.depth();
  if (IY) rep.depth_y = depth_of(*IY);
  auto sr = sectional_regularity(IX, 3, seed);
  rep.sreg = sr.value;
  rep.sreg_samples = sr.samples;
  DeficiencyModulesS K(RX);
  rep.e = e_invariant(K, default_window(rep.d, rep.r).first);
  rep.N = index_of_normality(K, rep.reg_x);
  rep.sigma = sectional_genus(IX, seed);
  rep.h1_1 = K.h(1, 1);
  rep.h1_2 = K.h(1, 2);
  if (rep.dim == 2 && rep.d == rep.r + 1 && rep.r >= 5) {
    try {
      rep.case_label = classify_invariants({rep.sreg, rep.depth_x, rep.sigma, rep.e, rep.h1_1, rep.h1_2});
    } catch (const ComputationError&) {
    }
  }
  return rep;
}

int classify_degree_r_plus_1(const Ideal& I, std::uint64_t seed) {
  HilbertSeries H = hilbert_series(I);
  int r = I.ring()->nvars() - 1;
  if (H.dim != 3) throw PreconditionError("classifier needs a surface");
  if (H.degree() != r + 1 || r < 5) throw PreconditionError("classifier needs degree r+1 with r >= 5");
  InvariantReport rep = compute_invariants(I, std::nullopt, seed);
  return classify_invariants({rep.sreg, rep.depth_x, rep.sigma, rep.e, rep.h1_1, rep.h1_2});
}

}  // namespace secreg
