#include "secreg/module.hpp"

#include <algorithm>

namespace secreg {

ModVec sort_modvec(ModVec v, const ModuleOrder& ord, const PrimeField& F) {
  std::sort(v.begin(), v.end(), [&](const ModTerm& a, const ModTerm& b) { return ord.greater(a, b); });
  ModVec out;
  out.reserve(v.size());
  for (auto& t : v) {
    if (!out.empty() && out.back().comp == t.comp && out.back().m == t.m) {
      out.back().c = F.add(out.back().c, t.c);
      if (!out.back().c) out.pop_back();
    } else if (t.c) {
      out.push_back(t);
    }
  }
  return out;
}

ModVec scale_modvec(ModVec v, std::uint32_t c, const PrimeField& F) {
  for (auto& t : v) t.c = F.mul(t.c, c);
  return v;
}

int modvec_degree(const ModVec& v, const std::vector<int>& degrees) {
  if (v.empty()) throw PreconditionError("degree of the zero vector");
  return v[0].m.degree() + degrees[v[0].comp];
}

Poly GradedMatrix::entry(std::size_t i, std::size_t j) const {
  for (const auto& [r, p] : columns.at(j))
    if (static_cast<std::size_t>(r) == i) return p;
  return Poly(ring);
}

void GradedMatrix::set(std::size_t i, std::size_t j, Poly p) {
  auto& col = columns.at(j);
  auto it = std::lower_bound(col.begin(), col.end(), static_cast<int>(i),
                             [](const std::pair<int, Poly>& e, int r) { return e.first < r; });
  if (it != col.end() && it->first == static_cast<int>(i)) {
    if (p.is_zero()) col.erase(it);
    else it->second = std::move(p);
  } else if (!p.is_zero()) {
    col.insert(it, {static_cast<int>(i), std::move(p)});
  }
}

bool GradedMatrix::degrees_consistent() const {
  for (std::size_t j = 0; j < ncols(); ++j)
    for (const auto& [r, p] : columns[j]) {
      if (!p.is_homogeneous()) return false;
      if (p.degree() != col_deg[j] - row_deg[r]) return false;
    }
  return true;
}

bool GradedMatrix::has_unit_entry() const {
  for (const auto& col : columns)
    for (const auto& e : col)
      if (e.second.is_constant()) return true;
  return false;
}

bool GradedMatrix::is_zero() const {
  for (const auto& col : columns)
    if (!col.empty()) return false;
  return true;
}

GradedMatrix GradedMatrix::compose(const GradedMatrix& o) const {
  if (o.nrows() != ncols()) throw PreconditionError("compose: size mismatch");
  GradedMatrix out(ring, row_deg, o.col_deg);
  for (std::size_t j = 0; j < o.ncols(); ++j) {
    std::map<int, Poly> acc;
    for (const auto& [k, q] : o.columns[j])
      for (const auto& [i, p] : columns[k]) {
        auto it = acc.find(i);
        if (it == acc.end()) acc.emplace(i, p * q);
        else it->second += p * q;
      }
    for (auto& [i, p] : acc)
      if (!p.is_zero()) out.columns[j].push_back({i, std::move(p)});
  }
  return out;
}

GradedMatrix GradedMatrix::transpose() const {
  std::vector<int> rows, cols;
  for (int d : col_deg) rows.push_back(-d);
  for (int d : row_deg) cols.push_back(-d);
  GradedMatrix t(ring, rows, cols);
  for (std::size_t j = 0; j < ncols(); ++j)
    for (const auto& [i, p] : columns[j]) t.columns[i].push_back({static_cast<int>(j), p});
  return t;
}

ModVec GradedMatrix::column_vec(std::size_t j, const ModuleOrder& ord) const {
  ModVec v;
  for (const auto& [i, p] : columns.at(j))
    for (const auto& t : p.terms()) v.push_back({t.m, i, t.c});
  return sort_modvec(std::move(v), ord, field_of<PrimeField>(*ring));
}

GradedMatrix GradedMatrix::from_columns(RingPtr R, std::vector<int> row_deg, const std::vector<ModVec>& cols) {
  std::vector<int> col_deg;
  for (const auto& v : cols) col_deg.push_back(modvec_degree(v, row_deg));
  GradedMatrix M(R, std::move(row_deg), std::move(col_deg));
  for (std::size_t j = 0; j < cols.size(); ++j) {
    std::map<int, std::vector<Term<PrimeField>>> by_row;
    for (const auto& t : cols[j]) by_row[t.comp].push_back({t.m, t.c});
    for (auto& [i, terms] : by_row) {
      Poly p = Poly::from_terms(R, std::move(terms));
      if (!p.is_zero()) M.columns[j].push_back({i, std::move(p)});
    }
  }
  return M;
}

ModuleGB::ModuleGB(RingPtr R, std::vector<int> degrees, ModuleOrder order)
    : R_(std::move(R)), F_(field_of<PrimeField>(*R_)), deg_(std::move(degrees)), ord_(std::move(order)) {
  if (!R_->standard_grading()) throw PreconditionError("module Groebner bases need the standard grading");
  if (ord_.rank() != deg_.size()) throw PreconditionError("module order rank does not match");
  leads_.resize(deg_.size());
  comp_elems_.resize(deg_.size());
  comp_pairs_.resize(deg_.size());
}

void ModuleGB::push_pair(Pair p) {
  int id = static_cast<int>(pairs_.size());
  queue_.push({p.deg, id});
  if (p.j >= 0) comp_pairs_[elems_[p.i][0].comp].push_back(id);
  pairs_.push_back(std::move(p));
}

void ModuleGB::add(ModVec v) {
  v = sort_modvec(std::move(v), ord_, F_);
  if (v.empty()) return;
  int d = modvec_degree(v, deg_);
  for (const auto& t : v)
    if (t.m.degree() + deg_[t.comp] != d) throw PreconditionError("module element is not homogeneous");
  inputs_.push_back(std::move(v));
  push_pair(Pair{static_cast<int>(inputs_.size()) - 1, -1, d, Monomial(), false});
}

ModVec ModuleGB::reduce(ModAccumulator& acc) const {
  ModVec out;
  ModTerm t;
  while (acc.pop(t)) {
    int k = leads_[t.comp].find(t.m);
    if (k >= 0) {
      const ModVec& g = elems_[k];
      acc.add(g, 1, g[0].m.quotient_of(t.m), F_.neg(t.c));
    } else {
      out.push_back(t);
    }
  }
  return out;
}

ModVec ModuleGB::normal_form(const ModVec& v) const {
  ModAccumulator acc(ord_, F_);
  acc.add(v, 0, Monomial(), 1);
  return reduce(acc);
}

void ModuleGB::insert(ModVec h) {
  h = scale_modvec(std::move(h), F_.inv(h[0].c), F_);
  int id = static_cast<int>(elems_.size());
  int c = h[0].comp;
  const Monomial mh = h[0].m;
  int hdeg = modvec_degree(h, deg_);

  // Chain criterion on old pairs.
  auto& live = comp_pairs_[c];
  std::vector<int> keep;
  for (int pid : live) {
    Pair& p = pairs_[pid];
    if (p.dead) continue;
    if (mh.divides(p.lcm) && elems_[p.i][0].m.lcm(mh) != p.lcm && elems_[p.j][0].m.lcm(mh) != p.lcm) {
      p.dead = true;
      continue;
    }
    keep.push_back(pid);
  }
  live.swap(keep);

  // New pairs, minimal lcms only.
  std::vector<std::pair<Monomial, int>> cand;
  for (int g : comp_elems_[c]) cand.push_back({elems_[g][0].m.lcm(mh), g});
  std::stable_sort(cand.begin(), cand.end(), [](const auto& a, const auto& b) {
    return a.first.degree() < b.first.degree();
  });
  std::vector<std::pair<Monomial, int>> chosen;
  for (const auto& [l, g] : cand) {
    bool redundant = false;
    for (const auto& k : chosen)
      if (k.first.divides(l)) {
        redundant = true;
        break;
      }
    if (!redundant) chosen.push_back({l, g});
  }

  elems_.push_back(std::move(h));
  elem_deg_.push_back(hdeg);
  leads_[c].add(mh, id);
  comp_elems_[c].push_back(id);
  for (const auto& [l, g] : chosen)
    push_pair(Pair{g, id, l.degree() + deg_[c], l, false});
}

void ModuleGB::complete(int max_degree) {
  while (!queue_.empty() && queue_.top().first <= max_degree) {
    int pid = queue_.top().second;
    queue_.pop();
    Pair p = pairs_[pid];
    if (p.dead) continue;
    pairs_[pid].dead = true;
    ModAccumulator acc(ord_, F_);
    if (p.j < 0) {
      acc.add(inputs_[p.i], 0, Monomial(), 1);
    } else {
      const ModVec& a = elems_[p.i];
      const ModVec& b = elems_[p.j];
      acc.add(a, 1, a[0].m.quotient_of(p.lcm), 1);
      acc.add(b, 1, b[0].m.quotient_of(p.lcm), F_.neg(1));
    }
    ModVec h = reduce(acc);
    if (!h.empty()) insert(std::move(h));
  }
}

std::vector<ModVec> ModuleGB::reduced_basis() const {
  std::vector<int> minimal;
  for (std::size_t k = 0; k < elems_.size(); ++k) {
    const auto& lk = elems_[k][0];
    bool redundant = false;
    for (std::size_t o = 0; o < elems_.size() && !redundant; ++o) {
      if (o == k || elems_[o][0].comp != lk.comp) continue;
      const Monomial& lo = elems_[o][0].m;
      if (lo.divides(lk.m) && (lo != lk.m || o < k)) redundant = true;
    }
    if (!redundant) minimal.push_back(static_cast<int>(k));
  }
  // Tail reduction against the minimal basis only.
  std::vector<LeadIndex> idx(deg_.size());
  for (int k : minimal) idx[elems_[k][0].comp].add(elems_[k][0].m, k);
  std::vector<ModVec> out;
  for (int k : minimal) {
    ModAccumulator acc(ord_, F_);
    acc.add(elems_[k], 1, Monomial(), 1);
    ModVec v{elems_[k][0]};
    ModTerm t;
    while (acc.pop(t)) {
      int r = idx[t.comp].find(t.m);
      if (r >= 0) acc.add(elems_[r], 1, elems_[r][0].m.quotient_of(t.m), F_.neg(t.c));
      else v.push_back(t);
    }
    out.push_back(std::move(v));
  }
  std::sort(out.begin(), out.end(), [&](const ModVec& a, const ModVec& b) {
    if (a[0].comp != b[0].comp) return a[0].comp < b[0].comp;
    return ord_.compare(a[0].m, a[0].comp, b[0].m, b[0].comp) < 0;
  });
  return out;
}

std::vector<HilbertSeries> ModuleGB::component_series() const {
  std::vector<std::vector<Monomial>> gens(deg_.size());
  for (const auto& v : elems_) gens[v[0].comp].push_back(v[0].m);
  std::vector<HilbertSeries> out;
  int n = R_->nvars();
  for (auto& g : gens) out.push_back(make_hilbert_series(hilbert_numerator(std::move(g), n), n));
  return out;
}

std::int64_t ModuleGB::quotient_dim(int q) const {
  auto hs = component_series();
  std::int64_t s = 0;
  for (std::size_t i = 0; i < hs.size(); ++i) s += hs[i].value(q - deg_[i]);
  return s;
}

}  // namespace secreg
