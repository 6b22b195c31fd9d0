#pragma once

#include <climits>
#include <map>

#include "secreg/hilbert.hpp"
#include "secreg/reduction.hpp"

namespace secreg {

// Term c * m * e_comp of a free module over F_p.
struct ModTerm {
  Monomial m;
  int comp = 0;
  std::uint32_t c = 0;
};
// Terms strictly descending in some ModuleOrder.
using ModVec = std::vector<ModTerm>;

// Order on m * e_i: lower block number wins, then m * shift[i] in the
// ring order, then the smaller index. With shifts set to the lead
// monomials of a Groebner basis this is the Schreyer order.
class ModuleOrder {
 public:
  ModuleOrder() = default;
  ModuleOrder(MonomialOrder ord, std::size_t rank) : ord_(std::move(ord)), block_(rank, 0), shift_(rank) {}

  ModuleOrder& set_blocks(std::vector<int> b) {
    if (b.size() != block_.size()) throw PreconditionError("block vector has wrong length");
    block_ = std::move(b);
    return *this;
  }
  ModuleOrder& set_shifts(std::vector<Monomial> s) {
    if (s.size() != shift_.size()) throw PreconditionError("shift vector has wrong length");
    shift_ = std::move(s);
    has_shift_ = false;
    for (const auto& m : shift_) has_shift_ |= !m.is_one();
    return *this;
  }

  std::size_t rank() const { return block_.size(); }
  const MonomialOrder& monomial_order() const { return ord_; }

  int compare(const Monomial& a, int ia, const Monomial& b, int ib) const {
    if (block_[ia] != block_[ib]) return block_[ia] < block_[ib] ? 1 : -1;
    int c = has_shift_ ? ord_.compare(a * shift_[ia], b * shift_[ib]) : ord_.compare(a, b);
    if (c != 0) return c;
    if (ia == ib) return 0;
    return ia < ib ? 1 : -1;
  }
  bool greater(const ModTerm& a, const ModTerm& b) const { return compare(a.m, a.comp, b.m, b.comp) > 0; }

 private:
  MonomialOrder ord_;
  std::vector<int> block_;
  std::vector<Monomial> shift_;
  bool has_shift_ = false;
};

struct ModKey {
  Monomial m;
  int comp;
  bool operator==(const ModKey& o) const { return comp == o.comp && m == o.m; }
};
struct ModKeyHash {
  std::size_t operator()(const ModKey& k) const { return k.m.hash() ^ (std::size_t(k.comp) * 0x9e3779b97f4a7c15ULL); }
};

// Sum of shifted vectors, popped from the largest term down.
class ModAccumulator {
 public:
  ModAccumulator(const ModuleOrder& ord, const PrimeField& F) : F_(F), heap_(Cmp{&ord}) {}

  void add(const ModVec& v, std::size_t from, const Monomial& shift, std::uint32_t c) {
    for (std::size_t k = from; k < v.size(); ++k) add_term(v[k].m * shift, v[k].comp, F_.mul(v[k].c, c));
  }
  void add_term(const Monomial& m, int comp, std::uint32_t c) {
    if (!c) return;
    auto [it, fresh] = coef_.try_emplace(ModKey{m, comp}, c);
    if (fresh) heap_.push(ModKey{m, comp});
    else it->second = F_.add(it->second, c);
  }
  bool pop(ModTerm& t) {
    while (!heap_.empty()) {
      ModKey k = heap_.top();
      heap_.pop();
      auto it = coef_.find(k);
      std::uint32_t c = it->second;
      coef_.erase(it);
      if (c) {
        t = ModTerm{k.m, k.comp, c};
        return true;
      }
    }
    return false;
  }

 private:
  struct Cmp {
    const ModuleOrder* ord;
    bool operator()(const ModKey& a, const ModKey& b) const { return ord->compare(a.m, a.comp, b.m, b.comp) < 0; }
  };
  PrimeField F_;
  std::priority_queue<ModKey, std::vector<ModKey>, Cmp> heap_;
  std::unordered_map<ModKey, std::uint32_t, ModKeyHash> coef_;
};

ModVec sort_modvec(ModVec v, const ModuleOrder& ord, const PrimeField& F);
ModVec scale_modvec(ModVec v, std::uint32_t c, const PrimeField& F);
int modvec_degree(const ModVec& v, const std::vector<int>& degrees);

// Map F -> G of graded free modules. Column j is the image of the j-th
// generator of F; entry (i, j) is homogeneous of degree
// col_deg[j] - row_deg[i].
struct GradedMatrix {
  RingPtr ring;
  std::vector<int> row_deg;
  std::vector<int> col_deg;
  std::vector<std::vector<std::pair<int, Poly>>> columns;  // (row, entry), rows ascending

  GradedMatrix() = default;
  GradedMatrix(RingPtr R, std::vector<int> rows, std::vector<int> cols)
      : ring(std::move(R)), row_deg(std::move(rows)), col_deg(std::move(cols)), columns(col_deg.size()) {}

  std::size_t nrows() const { return row_deg.size(); }
  std::size_t ncols() const { return col_deg.size(); }
  Poly entry(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, Poly p);
  bool degrees_consistent() const;
  bool has_unit_entry() const;
  bool is_zero() const;
  // this * other; other's rows are this's columns
  GradedMatrix compose(const GradedMatrix& other) const;
  // Hom(-, S): rows and columns swap, degrees negate.
  GradedMatrix transpose() const;

  ModVec column_vec(std::size_t j, const ModuleOrder& ord) const;
  static GradedMatrix from_columns(RingPtr R, std::vector<int> row_deg, const std::vector<ModVec>& cols);
};

// Buchberger for homogeneous submodules of a graded free module over F_p.
// Degrees of the basis vectors may be negative. complete(D) finishes the
// basis in degrees <= D; later calls continue where it stopped.
class ModuleGB {
 public:
  ModuleGB(RingPtr R, std::vector<int> degrees, ModuleOrder order);

  void add(ModVec v);
  void complete(int max_degree = INT_MAX);

  const ModuleOrder& order() const { return ord_; }
  const std::vector<int>& degrees() const { return deg_; }
  const RingPtr& ring() const { return R_; }
  // Current basis (monic, possibly with redundant elements).
  const std::vector<ModVec>& elements() const { return elems_; }
  // Minimal and tail-reduced; sorted by lead component, then ascending lead.
  std::vector<ModVec> reduced_basis() const;
  ModVec normal_form(const ModVec& v) const;
  // Is the term m * e_comp a lead term multiple?
  bool is_lead_multiple(const Monomial& m, int comp) const { return leads_[comp].find(m) >= 0; }

  // dim (F / lead module)_q, which equals dim (F/N)_q once complete in degree q.
  std::int64_t quotient_dim(int q) const;
  // Per-component Hilbert series of S / (lead ideal on that component).
  std::vector<HilbertSeries> component_series() const;

 private:
  struct Pair {
    int i, j;  // j = -1: input generator i
    int deg;
    Monomial lcm;
    bool dead = false;
  };
  ModVec reduce(ModAccumulator& acc) const;
  void insert(ModVec v);
  void push_pair(Pair p);

  RingPtr R_;
  PrimeField F_;
  std::vector<int> deg_;
  ModuleOrder ord_;
  std::vector<ModVec> inputs_;
  std::vector<ModVec> elems_;
  std::vector<int> elem_deg_;
  std::vector<LeadIndex> leads_;             // per component
  std::vector<std::vector<int>> comp_elems_;  // per component
  std::vector<std::vector<int>> comp_pairs_;  // live pair ids per component
  std::vector<Pair> pairs_;
  // (degree, pair id), smallest first
  std::priority_queue<std::pair<int, int>, std::vector<std::pair<int, int>>, std::greater<>> queue_;
};

}  // namespace secreg
