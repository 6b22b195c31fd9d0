#include "secreg/resolution.hpp"

#include <algorithm>
#include <queue>
#include <set>

#include "secreg/linalg.hpp"

namespace secreg {

std::vector<int> FreeResolution::twists(int i) const {
  if (i == 0) return maps.empty() ? std::vector<int>{0} : maps[0].row_deg;
  if (i < 0 || i > length()) return {};
  return maps[i - 1].col_deg;
}

std::int64_t BettiTable::at(int i, int j) const {
  auto it = entries.find({i, j});
  return it == entries.end() ? 0 : it->second;
}

int BettiTable::pd() const {
  int p = 0;
  for (const auto& [k, v] : entries)
    if (v) p = std::max(p, k.first);
  return p;
}

int BettiTable::reg() const {
  int r = 0;
  bool any = false;
  for (const auto& [k, v] : entries)
    if (v) {
      r = any ? std::max(r, k.second) : k.second;
      any = true;
    }
  return r;
}

std::int64_t BettiTable::total(int i) const {
  std::int64_t s = 0;
  for (const auto& [k, v] : entries)
    if (k.first == i) s += v;
  return s;
}

namespace {

// One generator of a Schreyer frame: lead term mu * e_comp in the
// previous level, total = mu * total(comp).
struct FrameElem {
  int comp = -1;
  Monomial mu;
  Monomial total;
  int degree = 0;
  ModVec vec;
};
using Level = std::vector<FrameElem>;

ModuleOrder level_order(const MonomialOrder& ord, const Level& L) {
  std::vector<Monomial> shifts;
  shifts.reserve(L.size());
  for (const auto& e : L) shifts.push_back(e.total);
  ModuleOrder o(ord, L.size());
  o.set_shifts(std::move(shifts));
  return o;
}

// Level k+1 from level k (k >= 1); prev is level k-1.
Level next_level(const Level& prev, const Level& cur, const MonomialOrder& ord, const PrimeField& F) {
  Level out;
  if (cur.empty()) return out;
  ModuleOrder prev_ord = level_order(ord, prev);
  ModuleOrder cur_ord = level_order(ord, cur);

  std::vector<LeadIndex> reducers(prev.size());
  for (std::size_t c = 0; c < cur.size(); ++c) reducers[cur[c].comp].add(cur[c].mu, static_cast<int>(c));

  std::size_t a = 0;
  while (a < cur.size()) {
    std::size_t end = a;
    while (end < cur.size() && cur[end].comp == cur[a].comp) ++end;
    for (std::size_t i = a; i < end; ++i) {
      const FrameElem& A = cur[i];
      std::vector<std::pair<Monomial, std::size_t>> cand;
      for (std::size_t b = i + 1; b < end; ++b) cand.push_back({A.mu.quotient_of(A.mu.lcm(cur[b].mu)), b});
      std::stable_sort(cand.begin(), cand.end(),
                       [](const auto& x, const auto& y) { return x.first.degree() < y.first.degree(); });
      std::vector<std::pair<Monomial, std::size_t>> kept;
      for (const auto& c : cand) {
        bool redundant = false;
        for (const auto& k : kept)
          if (k.first.divides(c.first)) {
            redundant = true;
            break;
          }
        if (!redundant) kept.push_back(c);
      }
      for (const auto& [q, b] : kept) {
        const FrameElem& B = cur[b];
        Monomial l = A.mu * q;
        Monomial qb = B.mu.quotient_of(l);
        ModAccumulator acc(prev_ord, F);
        acc.add(A.vec, 1, q, 1);
        acc.add(B.vec, 1, qb, F.neg(1));
        std::vector<ModTerm> syz{{q, static_cast<int>(i), 1}, {qb, static_cast<int>(b), F.neg(1)}};
        ModTerm t;
        while (acc.pop(t)) {
          int r = reducers[t.comp].find(t.m);
          if (r < 0) throw ComputationError("Schreyer frame: S-vector does not reduce to zero");
          Monomial u = cur[r].mu.quotient_of(t.m);
          acc.add(cur[r].vec, 1, u, F.neg(t.c));
          syz.push_back({u, r, F.neg(t.c)});
        }
        FrameElem e;
        e.comp = static_cast<int>(i);
        e.mu = q;
        e.total = q * A.total;
        e.degree = q.degree() + A.degree;
        e.vec = sort_modvec(std::move(syz), cur_ord, F);
        if (e.vec.empty() || e.vec[0].comp != e.comp || e.vec[0].m != q || e.vec[0].c != 1)
          throw ComputationError("Schreyer frame: unexpected lead term");
        out.push_back(std::move(e));
      }
    }
    a = end;
  }
  return out;
}

BettiTable constant_betti(const std::vector<Level>& levels, const PrimeField& F, int nvars) {
  // n_k(D), rank C_k(D)
  std::vector<std::map<int, std::int64_t>> n(levels.size()), rk(levels.size() + 1);
  for (std::size_t k = 0; k < levels.size(); ++k)
    for (const auto& e : levels[k]) ++n[k][e.degree];
  for (std::size_t k = 1; k < levels.size(); ++k) {
    std::map<int, std::vector<int>> cols_by_deg, rows_by_deg;
    for (std::size_t j = 0; j < levels[k].size(); ++j) cols_by_deg[levels[k][j].degree].push_back(static_cast<int>(j));
    for (std::size_t i = 0; i < levels[k - 1].size(); ++i)
      rows_by_deg[levels[k - 1][i].degree].push_back(static_cast<int>(i));
    for (const auto& [D, cols] : cols_by_deg) {
      auto rit = rows_by_deg.find(D);
      if (rit == rows_by_deg.end()) continue;
      std::map<int, std::size_t> row_pos;
      for (std::size_t r = 0; r < rit->second.size(); ++r) row_pos[rit->second[r]] = r;
      DenseMatrix M(cols.size(), rit->second.size());
      bool any = false;
      for (std::size_t c = 0; c < cols.size(); ++c)
        for (const auto& t : levels[k][cols[c]].vec)
          if (t.m.is_one()) {
            M.at(c, row_pos.at(t.comp)) = t.c;
            any = true;
          }
      if (any) rk[k][D] = static_cast<std::int64_t>(rank(M, F));
    }
  }
  BettiTable B;
  B.nvars = nvars;
  for (std::size_t k = 0; k < levels.size(); ++k)
    for (const auto& [D, cnt] : n[k]) {
      std::int64_t b = cnt;
      if (rk[k].count(D)) b -= rk[k][D];
      if (k + 1 < rk.size() && rk[k + 1].count(D)) b -= rk[k + 1][D];
      if (b) B.entries[{static_cast<int>(k), D - static_cast<int>(k)}] = b;
    }
  return B;
}

FreeResolution frames_to_resolution(const RingPtr& R, const std::vector<Level>& levels) {
  FreeResolution res;
  res.ring = R;
  for (std::size_t k = 1; k < levels.size(); ++k) {
    if (levels[k].empty()) break;
    std::vector<int> rows;
    for (const auto& e : levels[k - 1]) rows.push_back(e.degree);
    std::vector<ModVec> cols;
    for (const auto& e : levels[k]) cols.push_back(e.vec);
    res.maps.push_back(GradedMatrix::from_columns(R, rows, cols));
  }
  return res;
}

// levels[0] and levels[1] given; the rest by frames.
FreeResolution run_frames(const RingPtr& R, std::vector<Level> levels, ResolutionStats* stats,
                          BettiTable* betti) {
  PrimeField F = field_of<PrimeField>(*R);
  const MonomialOrder& ord = R->order();
  while (!levels.back().empty()) {
    if (static_cast<int>(levels.size()) > R->nvars() + 2)
      throw ComputationError("Schreyer frame did not terminate");
    levels.push_back(next_level(levels[levels.size() - 2], levels.back(), ord, F));
  }
  levels.pop_back();
  if (stats) {
    stats->frame_sizes.clear();
    for (const auto& L : levels) stats->frame_sizes.push_back(L.size());
  }
  if (betti) *betti = constant_betti(levels, F, R->nvars());
  return frames_to_resolution(R, levels);
}

}  // namespace

FreeResolution schreyer_resolution(const Ideal& I, ResolutionStats* stats, BettiTable* betti) {
  if (!I.is_homogeneous()) throw PreconditionError("resolution needs a homogeneous ideal");
  const RingPtr& R = I.ring();
  if (!R->standard_grading()) throw PreconditionError("resolution needs the standard grading");
  const auto& G = I.gb();
  if (G.is_unit()) throw PreconditionError("resolution of the unit ideal");
  std::vector<Level> levels(2);
  FrameElem root;
  root.degree = 0;
  levels[0].push_back(root);
  for (const auto& g : G.elements) {
    FrameElem e;
    e.comp = 0;
    e.mu = g.lead_monomial();
    e.total = e.mu;
    e.degree = g.degree();
    for (const auto& t : g.terms()) e.vec.push_back({t.m, 0, t.c});
    levels[1].push_back(std::move(e));
  }
  return run_frames(R, std::move(levels), stats, betti);
}

FreeResolution schreyer_resolution(const GradedMatrix& M, ResolutionStats* stats, BettiTable* betti) {
  const RingPtr& R = M.ring;
  if (!M.degrees_consistent()) throw PreconditionError("matrix entries have inconsistent degrees");
  ModuleOrder ord(R->order(), M.nrows());
  ModuleGB gb(R, M.row_deg, ord);
  for (std::size_t j = 0; j < M.ncols(); ++j) gb.add(M.column_vec(j, ord));
  gb.complete();
  std::vector<Level> levels(2);
  for (int d : M.row_deg) {
    FrameElem e;
    e.degree = d;
    levels[0].push_back(e);
  }
  for (auto& v : gb.reduced_basis()) {
    FrameElem e;
    e.comp = v[0].comp;
    e.mu = v[0].m;
    e.total = e.mu;
    e.degree = modvec_degree(v, M.row_deg);
    e.vec = std::move(v);
    levels[1].push_back(std::move(e));
  }
  if (levels[1].empty()) {
    FreeResolution res;
    res.ring = R;
    res.maps.push_back(GradedMatrix(R, M.row_deg, {}));
    if (stats) stats->frame_sizes = {M.nrows()};
    if (betti) {
      betti->nvars = R->nvars();
      betti->entries.clear();
      for (int d : M.row_deg) betti->entries[{0, d}] += 1;
    }
    return res;
  }
  return run_frames(R, std::move(levels), stats, betti);
}

namespace {

class Minimizer {
 public:
  Minimizer(const GradedMatrix& M, const std::set<int>& dead_rows) : M_(M), F_(field_of<PrimeField>(*M.ring)) {
    cols_.resize(M.ncols());
    rowidx_.resize(M.nrows());
    for (std::size_t j = 0; j < M.ncols(); ++j) {
      for (const auto& [r, p] : M.columns[j]) {
        if (dead_rows.count(r)) continue;
        cols_[j].emplace(r, p);
        rowidx_[r].insert(static_cast<int>(j));
      }
      note_constants(static_cast<int>(j), true);
    }
  }

  // Returns (dead rows, dead columns).
  void run(std::set<int>& dead_rows, std::set<int>& dead_cols) {
    while (!consts_.empty()) {
      auto [a, b] = *consts_.begin();
      std::uint32_t cinv = F_.inv(cols_[b].at(a).lead_coeff());
      std::vector<int> others(rowidx_[a].begin(), rowidx_[a].end());
      for (int bp : others) {
        if (bp == b) continue;
        Poly lambda = cols_[bp].at(a).scaled(F_.neg(cinv));
        note_constants(bp, false);
        for (const auto& [r, p] : cols_[b]) {
          Poly add = lambda * p;
          auto it = cols_[bp].find(r);
          if (it == cols_[bp].end()) {
            cols_[bp].emplace(r, std::move(add));
            rowidx_[r].insert(bp);
          } else {
            it->second += add;
            if (it->second.is_zero()) {
              cols_[bp].erase(it);
              rowidx_[r].erase(bp);
            }
          }
        }
        if (cols_[bp].count(a)) throw ComputationError("minimization: pivot row not cleared");
        note_constants(bp, true);
      }
      note_constants(b, false);
      for (const auto& e : cols_[b]) rowidx_[e.first].erase(b);
      cols_[b].clear();
      dead_rows.insert(a);
      dead_cols.insert(b);
    }
  }

  GradedMatrix result() const {
    GradedMatrix out(M_.ring, M_.row_deg, M_.col_deg);
    for (std::size_t j = 0; j < cols_.size(); ++j)
      for (const auto& [r, p] : cols_[j]) out.columns[j].push_back({r, p});
    return out;
  }

 private:
  void note_constants(int j, bool add) {
    for (const auto& [r, p] : cols_[j])
      if (M_.row_deg[r] == M_.col_deg[j]) {
        if (add) consts_.insert({r, j});
        else consts_.erase({r, j});
      }
  }

  const GradedMatrix& M_;
  PrimeField F_;
  std::vector<std::map<int, Poly>> cols_;
  std::vector<std::set<int>> rowidx_;
  std::set<std::pair<int, int>> consts_;  // (row, col), row-major
};

GradedMatrix drop(const GradedMatrix& M, const std::set<int>& dead_rows, const std::set<int>& dead_cols) {
  std::vector<int> row_new(M.nrows(), -1);
  std::vector<int> rows, cols;
  for (std::size_t i = 0; i < M.nrows(); ++i)
    if (!dead_rows.count(static_cast<int>(i))) {
      row_new[i] = static_cast<int>(rows.size());
      rows.push_back(M.row_deg[i]);
    }
  std::vector<std::size_t> keep;
  for (std::size_t j = 0; j < M.ncols(); ++j)
    if (!dead_cols.count(static_cast<int>(j))) {
      keep.push_back(j);
      cols.push_back(M.col_deg[j]);
    }
  GradedMatrix out(M.ring, rows, cols);
  for (std::size_t k = 0; k < keep.size(); ++k)
    for (const auto& [r, p] : M.columns[keep[k]])
      if (row_new[r] >= 0) out.columns[k].push_back({row_new[r], p});
  return out;
}

}  // namespace

FreeResolution minimize(FreeResolution R) {
  std::size_t L = R.maps.size();
  // dead[k]: basis elements of F_k removed
  std::vector<std::set<int>> dead(L + 1);
  for (std::size_t i = 0; i < L; ++i) {
    Minimizer m(R.maps[i], dead[i]);
    m.run(dead[i], dead[i + 1]);
    R.maps[i] = m.result();
  }
  for (std::size_t i = 0; i < L; ++i) R.maps[i] = drop(R.maps[i], dead[i], dead[i + 1]);
  while (!R.maps.empty() && R.maps.back().ncols() == 0 && R.maps.size() > 1) R.maps.pop_back();
  for (const auto& M : R.maps)
    if (M.has_unit_entry()) throw ComputationError("minimization left a unit entry");
  R.minimal = true;
  return R;
}

FreeResolution minimal_resolution(const Ideal& I) { return minimize(schreyer_resolution(I)); }
FreeResolution minimal_resolution(const GradedMatrix& M) { return minimize(schreyer_resolution(M)); }

BettiTable betti_numbers(const Ideal& I) {
  BettiTable B;
  schreyer_resolution(I, nullptr, &B);
  return B;
}

BettiTable betti_table(const FreeResolution& R) {
  if (!R.minimal) throw PreconditionError("betti_table needs a minimal resolution");
  BettiTable B;
  B.nvars = R.ring->nvars();
  for (int i = 0; i <= R.length(); ++i)
    for (int t : R.twists(i)) B.entries[{i, t - i}] += 1;
  return B;
}

GradedMatrix minimal_generators(const GradedMatrix& M) {
  const RingPtr& R = M.ring;
  ModuleOrder ord(R->order(), M.nrows());
  std::vector<std::size_t> idx(M.ncols());
  for (std::size_t j = 0; j < idx.size(); ++j) idx[j] = j;
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return M.col_deg[a] < M.col_deg[b]; });
  ModuleGB gb(R, M.row_deg, ord);
  std::vector<std::size_t> keep;
  for (std::size_t j : idx) {
    ModVec v = M.column_vec(j, ord);
    if (v.empty()) continue;
    gb.complete(M.col_deg[j]);
    if (gb.normal_form(v).empty()) continue;
    keep.push_back(j);
    gb.add(std::move(v));
  }
  std::sort(keep.begin(), keep.end());
  std::vector<int> cols;
  for (auto j : keep) cols.push_back(M.col_deg[j]);
  GradedMatrix out(R, M.row_deg, cols);
  for (std::size_t k = 0; k < keep.size(); ++k) out.columns[k] = M.columns[keep[k]];
  return out;
}

GradedMatrix syzygies(const GradedMatrix& M) {
  const RingPtr& R = M.ring;
  if (!M.degrees_consistent()) throw PreconditionError("matrix entries have inconsistent degrees");
  std::size_t g = M.nrows(), f = M.ncols();
  std::vector<int> degs = M.row_deg;
  degs.insert(degs.end(), M.col_deg.begin(), M.col_deg.end());
  std::vector<int> blocks(g + f, 1);
  std::fill(blocks.begin(), blocks.begin() + g, 0);
  ModuleOrder ord(R->order(), g + f);
  ord.set_blocks(blocks);
  ModuleGB gb(R, degs, ord);
  for (std::size_t j = 0; j < f; ++j) {
    ModVec v = M.column_vec(j, ord);
    v.push_back({Monomial(), static_cast<int>(g + j), 1});
    gb.add(std::move(v));
  }
  gb.complete();
  std::vector<ModVec> syz;
  for (auto& v : gb.reduced_basis()) {
    if (v[0].comp < static_cast<int>(g)) continue;
    for (auto& t : v) t.comp -= static_cast<int>(g);
    syz.push_back(std::move(v));
  }
  return minimal_generators(GradedMatrix::from_columns(R, M.col_deg, syz));
}

int regularity_of_subscheme(const BettiTable& B) { return B.reg() + 1; }

int n2p_index(const BettiTable& B) {
  int pd = B.pd();
  int p = 0;
  for (int i = 1; i <= pd; ++i) {
    bool linear = true;
    for (const auto& [k, v] : B.entries)
      if (k.first == i && k.second != 1 && v) linear = false;
    if (!linear) break;
    p = i;
  }
  return p;
}

IntPoly euler_numerator(const BettiTable& B) {
  IntPoly num;
  for (const auto& [k, v] : B.entries) {
    int e = k.first + k.second;
    if (e < 0) throw PreconditionError("negative twist in Betti table");
    if (static_cast<int>(num.size()) <= e) num.resize(e + 1, 0);
    num[e] += (k.first % 2 ? -1 : 1) * v;
  }
  trim(num);
  return num;
}

bool euler_check(const BettiTable& B, const HilbertSeries& H) {
  if (B.nvars != H.nvars) return false;
  IntPoly a = euler_numerator(B), b = H.raw;
  trim(b);
  return a == b;
}

namespace {

// Forward elimination with sparse pivot rows; the vectors coming from
// resolution maps have a handful of nonzeros, so dense RREF wastes most of
// its time on zeros.
class SparseEchelon {
 public:
  SparseEchelon(std::size_t width, const PrimeField& F) : F_(F), pivot_(width, kNone), acc_(width, 0) {}

  std::size_t size() const { return rows_.size(); }

  // acc_ holds the vector (nonzero columns listed in touched); returns
  // whether it was independent. acc_ is zero again afterwards.
  bool insert(std::vector<std::size_t>& touched) {
    std::sort(touched.begin(), touched.end());
    touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
    // min-heap over candidate columns
    std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> q(touched.begin(), touched.end());
    bool independent = false;
    std::size_t last = kNone;
    while (!q.empty()) {
      std::size_t c = q.top();
      q.pop();
      if (c == last) continue;
      last = c;
      std::uint32_t v = acc_[c];
      if (!v) continue;
      std::size_t pr = pivot_[c];
      if (pr == kNone) {
        // new pivot: collect the remaining entries, normalized
        std::vector<std::pair<std::size_t, std::uint32_t>> row;
        std::uint32_t inv = F_.inv(v);
        row.push_back({c, 1});
        acc_[c] = 0;
        while (!q.empty()) {
          std::size_t d = q.top();
          q.pop();
          if (d == c || acc_[d] == 0) continue;
          row.push_back({d, F_.mul(acc_[d], inv)});
          acc_[d] = 0;
          c = d;
        }
        pivot_[row.front().first] = rows_.size();
        rows_.push_back(std::move(row));
        independent = true;
        break;
      }
      std::uint32_t m = F_.neg(v);
      for (const auto& [col, x] : rows_[pr]) {
        if (acc_[col] == 0 && col != rows_[pr].front().first) q.push(col);
        acc_[col] = F_.add(acc_[col], F_.mul(m, x));
      }
    }
    for (std::size_t c : touched) acc_[c] = 0;
    return independent;
  }

  std::vector<std::uint32_t>& acc() { return acc_; }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  const PrimeField& F_;
  std::vector<std::size_t> pivot_;
  std::vector<std::uint32_t> acc_;
  std::vector<std::vector<std::pair<std::size_t, std::uint32_t>>> rows_;
};

// Rank of M in internal degree D on monomial bases (one vector per source
// basis element).
std::size_t piece_rank(const GradedMatrix& M, int D, const PrimeField& F) {
  int n = M.ring->nvars();
  std::vector<std::size_t> offset(M.nrows() + 1, 0);
  std::vector<std::unordered_map<Monomial, std::size_t, MonomialHash>> pos(M.nrows());
  for (std::size_t i = 0; i < M.nrows(); ++i) {
    int e = D - M.row_deg[i];
    std::size_t k = 0;
    if (e >= 0)
      for (const auto& m : monomials_of_degree(n, e)) pos[i][m] = k++;
    offset[i + 1] = offset[i] + k;
  }
  std::size_t width = offset.back();
  if (width == 0) return 0;
  SparseEchelon E(width, F);
  auto& acc = E.acc();
  std::vector<std::size_t> touched;
  for (std::size_t j = 0; j < M.ncols(); ++j) {
    int e = D - M.col_deg[j];
    if (e < 0 || M.columns[j].empty()) continue;
    for (const auto& u : monomials_of_degree(n, e)) {
      touched.clear();
      for (const auto& [r, p] : M.columns[j])
        for (const auto& t : p.terms()) {
          std::size_t slot = offset[r] + pos[r].at(t.m * u);
          acc[slot] = F.add(acc[slot], t.c);
          touched.push_back(slot);
        }
      E.insert(touched);
      if (E.size() == width) return width;
    }
  }
  return E.size();
}

std::int64_t free_dim(const std::vector<int>& twists, int D, int n) {
  std::int64_t s = 0;
  for (int t : twists)
    if (D >= t) s += binom(D - t + n - 1, n - 1);
  return s;
}

}  // namespace

ExactnessReport check_exactness(const FreeResolution& R, const Ideal& I, int max_degree) {
  ExactnessReport rep;
  PrimeField F = field_of<PrimeField>(*R.ring);
  int n = R.ring->nvars();
  for (int i = 0; i + 1 < R.length(); ++i)
    if (!R.maps[i].compose(R.maps[i + 1]).is_zero()) {
      rep.compose_zero = false;
      rep.exact = false;
      rep.detail = "maps " + std::to_string(i + 1) + " and " + std::to_string(i + 2) + " do not compose to zero";
      return rep;
    }
  HilbertSeries H = hilbert_series(I);
  for (int D = 0; D <= max_degree; ++D) {
    std::vector<std::size_t> rk(R.length() + 2, 0);
    for (int i = 1; i <= R.length(); ++i) rk[i] = piece_rank(R.maps[i - 1], D, F);
    for (int i = 0; i <= R.length(); ++i) {
      std::int64_t homology = free_dim(R.twists(i), D, n) - std::int64_t(rk[i]) - std::int64_t(rk[i + 1]);
      std::int64_t expected = i == 0 ? H.value(D) : 0;
      if (homology != expected) {
        rep.exact = false;
        rep.detail = "homology at F_" + std::to_string(i) + " in degree " + std::to_string(D);
        return rep;
      }
    }
    ++rep.degrees_checked;
  }
  return rep;
}

}  // namespace secreg
