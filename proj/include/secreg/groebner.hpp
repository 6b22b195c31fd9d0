#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <queue>
#include <set>
#include <unordered_map>

#include "secreg/polynomial.hpp"

namespace secreg {

// Reduced Groebner basis: monic, inter-reduced, sorted by ascending lead
// monomial in the ring order.
template <class Field>
struct BasicGroebnerBasis {
  RingPtr ring;
  std::vector<BasicPolynomial<Field>> elements;

  std::vector<Monomial> lead_monomials() const {
    std::vector<Monomial> out;
    out.reserve(elements.size());
    for (const auto& g : elements) out.push_back(g.lead_monomial());
    return out;
  }
  bool is_unit() const { return elements.size() == 1 && elements[0].is_constant(); }
};

template <class Field>
class BasicIdeal {
 public:
  using P = BasicPolynomial<Field>;

  BasicIdeal() = default;
  BasicIdeal(RingPtr R, std::vector<P> gens) : R_(std::move(R)) {
    for (auto& g : gens) {
      if (!same_ring(g.ring(), R_)) throw RingMismatch("ideal generator from another ring");
      if (!g.is_zero()) gens_.push_back(std::move(g));
    }
  }

  const RingPtr& ring() const { return R_; }
  const std::vector<P>& generators() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }
  bool is_homogeneous() const {
    for (const auto& g : gens_)
      if (!g.is_homogeneous()) return false;
    return true;
  }

  // Reduced GB under the ring's order; computed once, then shared.
  const BasicGroebnerBasis<Field>& gb() const;
  // Seed the cache with a basis known to be reduced (e.g. from elimination).
  void set_gb(BasicGroebnerBasis<Field> G) const {
    ensure_cache();
    std::lock_guard<std::mutex> lk(cache_->mu);
    if (!cache_->gb) cache_->gb = std::move(G);
  }

 private:
  struct Cache {
    std::mutex mu;
    std::optional<BasicGroebnerBasis<Field>> gb;
  };
  void ensure_cache() const {
    static std::mutex init_mu;
    std::lock_guard<std::mutex> lk(init_mu);
    if (!cache_) cache_ = std::make_shared<Cache>();
  }

  RingPtr R_;
  std::vector<P> gens_;
  mutable std::shared_ptr<Cache> cache_;
};

using Ideal = BasicIdeal<PrimeField>;
using QIdeal = BasicIdeal<RationalField>;
using GroebnerBasis = BasicGroebnerBasis<PrimeField>;

struct GBStats {
  std::size_t pairs_created = 0;
  std::size_t pairs_reduced = 0;
  std::size_t zero_reductions = 0;
  std::size_t product_skips = 0;
  std::size_t chain_skips = 0;
};

template <class Field>
BasicGroebnerBasis<Field> groebner(const RingPtr& R, const std::vector<BasicPolynomial<Field>>& gens,
                                   GBStats* stats = nullptr);

template <class Field>
BasicPolynomial<Field> normal_form(const BasicPolynomial<Field>& f, const BasicGroebnerBasis<Field>& G);

// Buchberger's criterion re-checked from scratch: every S-polynomial of
// the basis reduces to zero.
template <class Field>
bool verify_groebner(const BasicGroebnerBasis<Field>& G);

template <class Field>
const BasicGroebnerBasis<Field>& BasicIdeal<Field>::gb() const {
  ensure_cache();
  std::lock_guard<std::mutex> lk(cache_->mu);
  if (!cache_->gb) cache_->gb = groebner<Field>(R_, gens_);
  return *cache_->gb;
}

extern template BasicGroebnerBasis<PrimeField> groebner(const RingPtr&, const std::vector<Poly>&, GBStats*);
extern template BasicGroebnerBasis<RationalField> groebner(const RingPtr&, const std::vector<QPoly>&, GBStats*);
extern template Poly normal_form(const Poly&, const GroebnerBasis&);
extern template QPoly normal_form(const QPoly&, const BasicGroebnerBasis<RationalField>&);
extern template bool verify_groebner(const GroebnerBasis&);
extern template bool verify_groebner(const BasicGroebnerBasis<RationalField>&);

}  // namespace secreg
