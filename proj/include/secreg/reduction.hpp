#pragma once

#include <queue>
#include <unordered_map>

#include "secreg/polynomial.hpp"

namespace secreg {

// Variable-support bitmask; a divisibility prefilter.
inline std::uint32_t support_mask(const Monomial& m) {
  std::uint32_t s = 0;
  for (int i = 0; i < kMaxVars; ++i)
    if (m[i]) s |= 1u << i;
  return s;
}

// Lead monomials of the current reducers.
struct LeadIndex {
  std::vector<Monomial> leads;
  std::vector<std::uint32_t> masks;
  std::vector<int> ids;

  void add(const Monomial& m, int id) {
    leads.push_back(m);
    masks.push_back(support_mask(m));
    ids.push_back(id);
  }
  void remove(int id) {
    for (std::size_t k = 0; k < ids.size(); ++k)
      if (ids[k] == id) {
        leads.erase(leads.begin() + k);
        masks.erase(masks.begin() + k);
        ids.erase(ids.begin() + k);
        return;
      }
  }
  int find(const Monomial& m) const {
    std::uint32_t mm = support_mask(m);
    for (std::size_t k = 0; k < leads.size(); ++k)
      if ((masks[k] & ~mm) == 0 && leads[k].divides(m)) return ids[k];
    return -1;
  }
};

// Sum of scaled shifted polynomials, popped from the largest monomial down.
template <class Field>
class Accumulator {
 public:
  using Elem = typename Field::Element;
  using P = BasicPolynomial<Field>;

  Accumulator(const MonomialOrder& ord, const Field& F) : F_(F), heap_(Cmp{&ord}) {}

  void add(const P& g, std::size_t from, const Monomial& shift, const Elem& c) {
    const auto& t = g.terms();
    for (std::size_t k = from; k < t.size(); ++k) {
      Monomial m = t[k].m * shift;
      Elem v = F_.mul(t[k].c, c);
      auto [it, fresh] = coef_.try_emplace(m, v);
      if (fresh) heap_.push(m);
      else it->second = F_.add(it->second, v);
    }
  }
  bool pop(Monomial& m, Elem& c) {
    while (!heap_.empty()) {
      m = heap_.top();
      heap_.pop();
      auto it = coef_.find(m);
      c = std::move(it->second);
      coef_.erase(it);
      if (!F_.is_zero(c)) return true;
    }
    return false;
  }
  bool empty() const { return heap_.empty(); }

 private:
  struct Cmp {
    const MonomialOrder* ord;
    bool operator()(const Monomial& a, const Monomial& b) const { return ord->compare(a, b) < 0; }
  };
  Field F_;
  std::priority_queue<Monomial, std::vector<Monomial>, Cmp> heap_;
  std::unordered_map<Monomial, Elem, MonomialHash> coef_;
};

// Full reduction of the accumulator's content by monic reducers.
template <class Field>
BasicPolynomial<Field> reduce_fully(Accumulator<Field>& acc, const RingPtr& R, const Field& F,
                                    const std::vector<BasicPolynomial<Field>>& G, const LeadIndex& idx) {
  std::vector<Term<Field>> out;
  Monomial m;
  typename Field::Element c{};
  while (acc.pop(m, c)) {
    int k = idx.find(m);
    if (k >= 0) {
      const auto& g = G[k];
      acc.add(g, 1, g.lead_monomial().quotient_of(m), F.neg(c));
    } else {
      out.push_back({m, c});
    }
  }
  return BasicPolynomial<Field>::from_sorted_terms(R, std::move(out));
}

}  // namespace secreg
