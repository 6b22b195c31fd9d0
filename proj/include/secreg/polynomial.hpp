#pragma once

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

#include "secreg/ring.hpp"

namespace secreg {

template <class Field>
struct Term {
  Monomial m;
  typename Field::Element c;
};

// Sparse polynomial; terms strictly descending in the ring's order, no
// zero coefficients.
template <class Field>
class BasicPolynomial {
 public:
  using Elem = typename Field::Element;
  using TermT = Term<Field>;

  BasicPolynomial() = default;
  explicit BasicPolynomial(RingPtr R) : R_(std::move(R)), F_(field_of<Field>(*R_)) {}

  static BasicPolynomial scalar(const RingPtr& R, const Elem& c) {
    BasicPolynomial p(R);
    if (!p.F_.is_zero(c)) p.t_.push_back({Monomial(), c});
    return p;
  }
  static BasicPolynomial constant(const RingPtr& R, std::int64_t c) {
    return scalar(R, field_of<Field>(*R).from_int(c));
  }
  static BasicPolynomial variable(const RingPtr& R, int i) {
    if (i < 0 || i >= R->nvars()) throw PreconditionError("variable index out of range");
    return monomial(R, Monomial::var(i));
  }
  static BasicPolynomial monomial(const RingPtr& R, const Monomial& m) {
    BasicPolynomial p(R);
    p.t_.push_back({m, p.F_.one()});
    return p;
  }
  static BasicPolynomial monomial(const RingPtr& R, const Monomial& m, const Elem& c) {
    BasicPolynomial p(R);
    if (!p.F_.is_zero(c)) p.t_.push_back({m, c});
    return p;
  }
  // Arbitrary term list: sorted, like terms combined, zeros dropped.
  static BasicPolynomial from_terms(const RingPtr& R, std::vector<TermT> terms) {
    BasicPolynomial p(R);
    const auto& ord = R->order();
    std::sort(terms.begin(), terms.end(),
              [&](const TermT& a, const TermT& b) { return ord.greater(a.m, b.m); });
    for (auto& t : terms) {
      if (!p.t_.empty() && p.t_.back().m == t.m) {
        p.t_.back().c = p.F_.add(p.t_.back().c, t.c);
        if (p.F_.is_zero(p.t_.back().c)) p.t_.pop_back();
      } else if (!p.F_.is_zero(t.c)) {
        p.t_.push_back(std::move(t));
      }
    }
    return p;
  }
  // Caller promises the terms are already canonical.
  static BasicPolynomial from_sorted_terms(const RingPtr& R, std::vector<TermT> terms) {
    BasicPolynomial p(R);
    p.t_ = std::move(terms);
    return p;
  }

  const RingPtr& ring() const { return R_; }
  const Field& field() const { return F_; }
  bool is_zero() const { return t_.empty(); }
  std::size_t size() const { return t_.size(); }
  const std::vector<TermT>& terms() const { return t_; }
  const TermT& operator[](std::size_t i) const { return t_[i]; }
  const Monomial& lead_monomial() const { return t_.front().m; }
  const Elem& lead_coeff() const { return t_.front().c; }
  bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_[0].m.is_one()); }

  // Largest degree of a term in the ring's grading; -1 for zero.
  int degree() const {
    int d = -1;
    for (const auto& t : t_) d = std::max(d, R_->degree_of(t.m));
    return d;
  }
  int total_degree() const {
    int d = -1;
    for (const auto& t : t_) d = std::max(d, t.m.degree());
    return d;
  }
  bool is_homogeneous() const {
    if (t_.empty()) return true;
    int d = R_->degree_of(t_[0].m);
    for (const auto& t : t_)
      if (R_->degree_of(t.m) != d) return false;
    return true;
  }

  BasicPolynomial operator-() const {
    BasicPolynomial r = *this;
    for (auto& t : r.t_) t.c = F_.neg(t.c);
    return r;
  }
  BasicPolynomial operator+(const BasicPolynomial& g) const { return combine(g, false); }
  BasicPolynomial operator-(const BasicPolynomial& g) const { return combine(g, true); }
  BasicPolynomial& operator+=(const BasicPolynomial& g) { return *this = *this + g; }
  BasicPolynomial& operator-=(const BasicPolynomial& g) { return *this = *this - g; }

  BasicPolynomial operator*(const BasicPolynomial& g) const {
    check_ring(g);
    if (t_.empty() || g.t_.empty()) return BasicPolynomial(R_);
    if (g.t_.size() == 1) return mul_term(g.t_[0].m, g.t_[0].c);
    if (t_.size() == 1) return g.mul_term(t_[0].m, t_[0].c);
    std::vector<TermT> prod;
    prod.reserve(t_.size() * g.t_.size());
    for (const auto& a : t_)
      for (const auto& b : g.t_) prod.push_back({a.m * b.m, F_.mul(a.c, b.c)});
    return from_terms(R_, std::move(prod));
  }
  BasicPolynomial& operator*=(const BasicPolynomial& g) { return *this = *this * g; }

  BasicPolynomial mul_term(const Monomial& m, const Elem& c) const {
    BasicPolynomial r(R_);
    if (F_.is_zero(c)) return r;
    r.t_.reserve(t_.size());
    for (const auto& t : t_) r.t_.push_back({t.m * m, F_.mul(t.c, c)});
    return r;
  }
  BasicPolynomial scaled(const Elem& c) const { return mul_term(Monomial(), c); }
  BasicPolynomial monic() const {
    if (t_.empty() || F_.is_one(t_[0].c)) return *this;
    return scaled(F_.inv(t_[0].c));
  }
  BasicPolynomial pow(int e) const {
    if (e < 0) throw PreconditionError("negative power");
    BasicPolynomial r = scalar(R_, F_.one()), b = *this;
    while (e) {
      if (e & 1) r = r * b;
      e >>= 1;
      if (e) b = b * b;
    }
    return r;
  }

  // Same terms re-sorted for another ring with identical variables.
  BasicPolynomial in_ring(const RingPtr& S) const {
    if (S->nvars() != R_->nvars() || S->characteristic() != R_->characteristic())
      throw RingMismatch("rings differ in variables or field");
    return from_terms(S, t_);
  }

  bool operator==(const BasicPolynomial& g) const {
    if (t_.size() != g.t_.size()) return false;
    for (std::size_t i = 0; i < t_.size(); ++i)
      if (!(t_[i].m == g.t_[i].m) || !(t_[i].c == g.t_[i].c)) return false;
    return true;
  }
  bool operator!=(const BasicPolynomial& g) const { return !(*this == g); }

  void check_ring(const BasicPolynomial& g) const {
    if (!same_ring(R_, g.R_)) throw RingMismatch("polynomials live in different rings");
  }

 private:
  BasicPolynomial combine(const BasicPolynomial& g, bool subtract) const {
    check_ring(g);
    BasicPolynomial r(R_);
    r.t_.reserve(t_.size() + g.t_.size());
    const auto& ord = R_->order();
    std::size_t i = 0, j = 0;
    while (i < t_.size() || j < g.t_.size()) {
      int c;
      if (i == t_.size()) c = -1;
      else if (j == g.t_.size()) c = 1;
      else c = ord.compare(t_[i].m, g.t_[j].m);
      if (c > 0) {
        r.t_.push_back(t_[i++]);
      } else if (c < 0) {
        const auto& t = g.t_[j++];
        r.t_.push_back({t.m, subtract ? F_.neg(t.c) : t.c});
      } else {
        Elem s = subtract ? F_.sub(t_[i].c, g.t_[j].c) : F_.add(t_[i].c, g.t_[j].c);
        if (!F_.is_zero(s)) r.t_.push_back({t_[i].m, s});
        ++i;
        ++j;
      }
    }
    return r;
  }

  RingPtr R_;
  Field F_{};
  std::vector<TermT> t_;
};

using Poly = BasicPolynomial<PrimeField>;
using QPoly = BasicPolynomial<RationalField>;

// Ring homomorphism x_i -> images[i]. All images must share one ring.
template <class Field>
BasicPolynomial<Field> substitute(const BasicPolynomial<Field>& f,
                                  const std::vector<BasicPolynomial<Field>>& images) {
  if (static_cast<int>(images.size()) < f.ring()->nvars())
    throw PreconditionError("substitute: missing image for a variable");
  if (images.empty()) throw PreconditionError("substitute: no images");
  const RingPtr& T = images[0].ring();
  for (const auto& g : images)
    if (!same_ring(g.ring(), T)) throw RingMismatch("substitute: images live in different rings");
  int n = f.ring()->nvars();
  std::vector<std::vector<BasicPolynomial<Field>>> powers(n);
  auto power = [&](int i, int e) -> const BasicPolynomial<Field>& {
    auto& pw = powers[i];
    if (pw.empty()) pw.push_back(BasicPolynomial<Field>::constant(T, 1));
    while (static_cast<int>(pw.size()) <= e) pw.push_back(pw.back() * images[i]);
    return pw[e];
  };
  BasicPolynomial<Field> out(T);
  std::vector<typename BasicPolynomial<Field>::TermT> acc;
  for (const auto& t : f.terms()) {
    BasicPolynomial<Field> p = BasicPolynomial<Field>::scalar(T, t.c);
    for (int i = 0; i < n && !p.is_zero(); ++i)
      if (t.m[i]) p = p * power(i, t.m[i]);
    acc.insert(acc.end(), p.terms().begin(), p.terms().end());
  }
  return BasicPolynomial<Field>::from_terms(T, std::move(acc));
}

// Image of a monomial under x_i -> images[i].
template <class Field>
BasicPolynomial<Field> substitute_monomial(const Monomial& m, int nvars,
                                           const std::vector<BasicPolynomial<Field>>& images) {
  BasicPolynomial<Field> p = BasicPolynomial<Field>::constant(images.at(0).ring(), 1);
  for (int i = 0; i < nvars; ++i)
    if (m[i]) p = p * images.at(i).pow(m[i]);
  return p;
}

}  // namespace secreg
