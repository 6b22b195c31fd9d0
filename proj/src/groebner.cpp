#include "secreg/groebner.hpp"

#include "secreg/reduction.hpp"

namespace secreg {

namespace {

struct PairEntry {
  int i;  // -1: input generator j
  int j;
  Monomial lcm;
  int sugar;
  std::uint64_t seq;
};

struct PairLess {
  bool operator()(const PairEntry& a, const PairEntry& b) const {
    if (a.sugar != b.sugar) return a.sugar < b.sugar;
    return a.seq < b.seq;
  }
};

}  // namespace

template <class Field>
BasicGroebnerBasis<Field> groebner(const RingPtr& R, const std::vector<BasicPolynomial<Field>>& gens,
                                   GBStats* stats) {
  using P = BasicPolynomial<Field>;
  GBStats local;
  GBStats& st = stats ? *stats : local;
  Field F = field_of<Field>(*R);
  const MonomialOrder& ord = R->order();

  std::vector<P> G;
  std::vector<Monomial> lt;
  std::vector<int> sugar;
  std::vector<char> active;
  LeadIndex idx;
  std::set<PairEntry, PairLess> B;
  std::uint64_t seq = 0;

  auto poly_sugar = [&](const P& f) {
    int d = 0;
    for (const auto& t : f.terms()) d = std::max(d, R->degree_of(t.m));
    return d;
  };

  for (std::size_t j = 0; j < gens.size(); ++j) {
    if (!same_ring(gens[j].ring(), R)) throw RingMismatch("groebner: generator from another ring");
    if (gens[j].is_zero()) continue;
    B.insert({-1, static_cast<int>(j), Monomial(), poly_sugar(gens[j]), seq++});
  }

  auto insert = [&](P h, int s) {
    int k = static_cast<int>(G.size());
    Monomial t = h.lead_monomial();
    G.push_back(std::move(h));
    lt.push_back(t);
    sugar.push_back(s);
    active.push_back(0);

    for (auto it = B.begin(); it != B.end();) {
      if (it->i >= 0 && t.divides(it->lcm) && lt[it->i].lcm(t) != it->lcm && lt[it->j].lcm(t) != it->lcm) {
        it = B.erase(it);
        ++st.chain_skips;
      } else {
        ++it;
      }
    }

    struct Cand {
      int i;
      Monomial lcm;
      bool coprime;
    };
    std::vector<Cand> C;
    for (int i = 0; i < k; ++i)
      if (active[i]) C.push_back({i, lt[i].lcm(t), lt[i].coprime(t)});
    std::vector<Cand> D;
    for (std::size_t a = 0; a < C.size(); ++a) {
      bool keep = true;
      if (!C[a].coprime) {
        for (std::size_t b = a + 1; b < C.size() && keep; ++b)
          if (C[b].lcm.divides(C[a].lcm)) keep = false;
        for (std::size_t b = 0; b < D.size() && keep; ++b)
          if (D[b].lcm.divides(C[a].lcm)) keep = false;
      }
      if (keep) D.push_back(C[a]);
      else ++st.chain_skips;
    }
    for (const auto& c : D) {
      if (c.coprime) {
        ++st.product_skips;
        continue;
      }
      int si = sugar[c.i] + R->degree_of(lt[c.i].quotient_of(c.lcm));
      int sk = s + R->degree_of(t.quotient_of(c.lcm));
      B.insert({c.i, k, c.lcm, std::max(si, sk), seq++});
      ++st.pairs_created;
    }
    for (int i = 0; i < k; ++i)
      if (active[i] && t.divides(lt[i])) {
        active[i] = 0;
        idx.remove(i);
      }
    active[k] = 1;
    idx.add(t, k);
  };

  while (!B.empty()) {
    PairEntry p = *B.begin();
    B.erase(B.begin());
    Accumulator<Field> acc(ord, F);
    if (p.i < 0) {
      acc.add(gens[p.j], 0, Monomial(), F.one());
    } else {
      acc.add(G[p.i], 1, lt[p.i].quotient_of(p.lcm), F.one());
      acc.add(G[p.j], 1, lt[p.j].quotient_of(p.lcm), F.neg(F.one()));
      ++st.pairs_reduced;
    }
    P h = reduce_fully(acc, R, F, G, idx);
    if (h.is_zero()) {
      ++st.zero_reductions;
      continue;
    }
    insert(h.monic(), p.sugar);
  }

  // Inter-reduce the minimal basis.
  BasicGroebnerBasis<Field> out;
  out.ring = R;
  for (std::size_t k = 0; k < G.size(); ++k) {
    if (!active[k]) continue;
    Accumulator<Field> acc(ord, F);
    acc.add(G[k], 1, Monomial(), F.one());
    P tail = reduce_fully(acc, R, F, G, idx);
    std::vector<Term<Field>> terms;
    terms.push_back(G[k].terms()[0]);
    terms.insert(terms.end(), tail.terms().begin(), tail.terms().end());
    out.elements.push_back(P::from_sorted_terms(R, std::move(terms)));
  }
  std::sort(out.elements.begin(), out.elements.end(), [&](const P& a, const P& b) {
    return ord.compare(a.lead_monomial(), b.lead_monomial()) < 0;
  });
  return out;
}

template <class Field>
BasicPolynomial<Field> normal_form(const BasicPolynomial<Field>& f, const BasicGroebnerBasis<Field>& G) {
  if (!same_ring(f.ring(), G.ring)) throw RingMismatch("normal_form: polynomial from another ring");
  Field F = field_of<Field>(*G.ring);
  LeadIndex idx;
  for (std::size_t k = 0; k < G.elements.size(); ++k) idx.add(G.elements[k].lead_monomial(), static_cast<int>(k));
  Accumulator<Field> acc(G.ring->order(), F);
  acc.add(f, 0, Monomial(), F.one());
  return reduce_fully(acc, G.ring, F, G.elements, idx);
}

template <class Field>
bool verify_groebner(const BasicGroebnerBasis<Field>& G) {
  Field F = field_of<Field>(*G.ring);
  LeadIndex idx;
  for (std::size_t k = 0; k < G.elements.size(); ++k) idx.add(G.elements[k].lead_monomial(), static_cast<int>(k));
  for (std::size_t i = 0; i < G.elements.size(); ++i)
    for (std::size_t j = i + 1; j < G.elements.size(); ++j) {
      const auto& a = G.elements[i];
      const auto& b = G.elements[j];
      Monomial l = a.lead_monomial().lcm(b.lead_monomial());
      Accumulator<Field> acc(G.ring->order(), F);
      acc.add(a, 0, a.lead_monomial().quotient_of(l), F.inv(a.lead_coeff()));
      acc.add(b, 0, b.lead_monomial().quotient_of(l), F.neg(F.inv(b.lead_coeff())));
      if (!reduce_fully(acc, G.ring, F, G.elements, idx).is_zero()) return false;
    }
  return true;
}

template BasicGroebnerBasis<PrimeField> groebner(const RingPtr&, const std::vector<Poly>&, GBStats*);
template BasicGroebnerBasis<RationalField> groebner(const RingPtr&, const std::vector<QPoly>&, GBStats*);
template Poly normal_form(const Poly&, const GroebnerBasis&);
template QPoly normal_form(const QPoly&, const BasicGroebnerBasis<RationalField>&);
template bool verify_groebner(const GroebnerBasis&);
template bool verify_groebner(const BasicGroebnerBasis<RationalField>&);

}  // namespace secreg
