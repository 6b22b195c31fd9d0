#pragma once

#include <array>
#include <cstdint>
#include <cstring>
#include <string>
#include <vector>

#include "secreg/error.hpp"

namespace secreg {

inline constexpr int kMaxVars = 16;
inline constexpr int kMaxExponent = 32767;

// Exponent vector with the total degree cached. Unused slots stay zero,
// so two monomials of the same ring compare bytewise.
class Monomial {
 public:
  Monomial() { e_.fill(0); }

  static Monomial var(int i, int power = 1) {
    Monomial m;
    m.set(i, power);
    return m;
  }
  static Monomial from_exponents(const std::vector<int>& exps);

  int operator[](int i) const { return e_[i]; }
  int degree() const { return deg_; }
  void set(int i, int value) {
    if (value < 0 || value > kMaxExponent) throw ArithmeticError("exponent out of range");
    int d = deg_ - e_[i] + value;
    if (d > kMaxExponent) throw ArithmeticError("monomial degree overflow");
    e_[i] = static_cast<std::uint16_t>(value);
    deg_ = static_cast<std::uint16_t>(d);
  }

  Monomial operator*(const Monomial& o) const {
    Monomial r;
    unsigned overflow = 0;
    for (int i = 0; i < kMaxVars; ++i) {
      unsigned s = unsigned(e_[i]) + o.e_[i];
      overflow |= s;
      r.e_[i] = static_cast<std::uint16_t>(s);
    }
    unsigned d = unsigned(deg_) + o.deg_;
    if ((overflow | d) > kMaxExponent) throw ArithmeticError("monomial exponent overflow");
    r.deg_ = static_cast<std::uint16_t>(d);
    return r;
  }
  Monomial& operator*=(const Monomial& o) { return *this = *this * o; }

  // this | o
  bool divides(const Monomial& o) const {
    if (deg_ > o.deg_) return false;
    bool ok = true;
    for (int i = 0; i < kMaxVars; ++i) ok &= e_[i] <= o.e_[i];
    return ok;
  }
  // o / this, caller guarantees divisibility
  Monomial quotient_of(const Monomial& o) const {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) r.e_[i] = static_cast<std::uint16_t>(o.e_[i] - e_[i]);
    r.deg_ = static_cast<std::uint16_t>(o.deg_ - deg_);
    return r;
  }
  Monomial lcm(const Monomial& o) const {
    Monomial r;
    unsigned d = 0;
    for (int i = 0; i < kMaxVars; ++i) {
      r.e_[i] = e_[i] > o.e_[i] ? e_[i] : o.e_[i];
      d += r.e_[i];
    }
    r.deg_ = static_cast<std::uint16_t>(d);
    return r;
  }
  Monomial gcd(const Monomial& o) const {
    Monomial r;
    unsigned d = 0;
    for (int i = 0; i < kMaxVars; ++i) {
      r.e_[i] = e_[i] < o.e_[i] ? e_[i] : o.e_[i];
      d += r.e_[i];
    }
    r.deg_ = static_cast<std::uint16_t>(d);
    return r;
  }
  bool coprime(const Monomial& o) const {
    bool c = true;
    for (int i = 0; i < kMaxVars; ++i) c &= (e_[i] == 0 || o.e_[i] == 0);
    return c;
  }
  bool is_one() const { return deg_ == 0; }

  bool operator==(const Monomial& o) const {
    return deg_ == o.deg_ && std::memcmp(e_.data(), o.e_.data(), sizeof(e_)) == 0;
  }
  bool operator!=(const Monomial& o) const { return !(*this == o); }

  std::size_t hash() const {
    std::uint64_t w[4];
    std::memcpy(w, e_.data(), sizeof(w));
    std::uint64_t h = w[0] * 0x9e3779b97f4a7c15ULL;
    h = (h ^ (h >> 29) ^ w[1]) * 0xbf58476d1ce4e5b9ULL;
    h = (h ^ (h >> 31) ^ w[2]) * 0x94d049bb133111ebULL;
    h = (h ^ (h >> 29) ^ w[3]) * 0x9e3779b97f4a7c15ULL;
    return static_cast<std::size_t>(h ^ (h >> 32));
  }

  // Lexicographic on raw exponents; only for use as a map key.
  bool raw_less(const Monomial& o) const {
    return std::memcmp(e_.data(), o.e_.data(), sizeof(e_)) < 0;
  }

  std::vector<int> exponents(int nvars) const {
    return std::vector<int>(e_.begin(), e_.begin() + nvars);
  }

 private:
  std::array<std::uint16_t, kMaxVars> e_;
  std::uint16_t deg_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

enum class OrderKind { Grevlex, Lex, Block };

// One block of a block order: variables [begin, end) compared by `kind`
// (Grevlex or Lex) using the order weights.
struct OrderBlock {
  int begin = 0;
  int end = 0;
  OrderKind kind = OrderKind::Grevlex;
};

// Weighted grevlex / lex / block orders. Variable 0 is the largest.
// Order weights only affect comparison; homogeneity is judged with the
// ring's grading, which may differ.
class MonomialOrder {
 public:
  MonomialOrder() = default;
  static MonomialOrder grevlex(int nvars, std::vector<int> weights = {});
  static MonomialOrder lex(int nvars);
  // Blocks must tile [0, nvars) in increasing order; earlier blocks dominate.
  static MonomialOrder block(int nvars, std::vector<OrderBlock> blocks, std::vector<int> weights = {});
  // Two grevlex blocks: first `split` variables >> the rest.
  static MonomialOrder elimination(int nvars, int split, std::vector<int> weights = {});

  int nvars() const { return n_; }
  OrderKind kind() const { return kind_; }
  const std::vector<OrderBlock>& blocks() const { return blocks_; }
  const std::vector<int>& weights() const { return w_; }

  // -1, 0, 1
  int compare(const Monomial& a, const Monomial& b) const {
    if (kind_ == OrderKind::Grevlex) return cmp_block(a, b, 0, n_, OrderKind::Grevlex);
    if (kind_ == OrderKind::Lex) return cmp_block(a, b, 0, n_, OrderKind::Lex);
    for (const auto& bl : blocks_) {
      int c = cmp_block(a, b, bl.begin, bl.end, bl.kind);
      if (c != 0) return c;
    }
    return 0;
  }
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  std::string name() const;
  bool operator==(const MonomialOrder& o) const {
    if (n_ != o.n_ || kind_ != o.kind_ || w_ != o.w_ || blocks_.size() != o.blocks_.size()) return false;
    for (std::size_t i = 0; i < blocks_.size(); ++i)
      if (blocks_[i].begin != o.blocks_[i].begin || blocks_[i].end != o.blocks_[i].end ||
          blocks_[i].kind != o.blocks_[i].kind)
        return false;
    return true;
  }

 private:
  int cmp_block(const Monomial& a, const Monomial& b, int lo, int hi, OrderKind k) const {
    if (k == OrderKind::Lex) {
      for (int i = lo; i < hi; ++i)
        if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
      return 0;
    }
    long da = 0, db = 0;
    if (unit_weights_ && lo == 0 && hi == n_) {
      da = a.degree();
      db = b.degree();
    } else {
      for (int i = lo; i < hi; ++i) {
        da += long(w_[i]) * a[i];
        db += long(w_[i]) * b[i];
      }
    }
    if (da != db) return da > db ? 1 : -1;
    for (int i = hi - 1; i >= lo; --i)
      if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    return 0;
  }

  int n_ = 0;
  OrderKind kind_ = OrderKind::Grevlex;
  std::vector<int> w_;
  bool unit_weights_ = true;
  std::vector<OrderBlock> blocks_;
};

// All monomials of total degree `deg` in the first `nvars` variables, in
// descending grevlex order.
std::vector<Monomial> monomials_of_degree(int nvars, int deg);

}  // namespace secreg
