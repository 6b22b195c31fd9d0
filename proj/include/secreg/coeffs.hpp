#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

#include "secreg/error.hpp"

namespace secreg {

inline constexpr std::uint32_t kDefaultPrime = 32003;

bool is_prime(std::uint64_t n);

// Z/p for a prime p < 2^31. Elements are residues in [0, p).
class PrimeField {
 public:
  using Element = std::uint32_t;

  explicit PrimeField(std::uint32_t p = kDefaultPrime);

  std::uint32_t characteristic() const { return p_; }

  Element zero() const { return 0; }
  Element one() const { return 1; }
  bool is_zero(Element a) const { return a == 0; }
  bool is_one(Element a) const { return a == 1; }

  Element add(Element a, Element b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Element sub(Element a, Element b) const { return a >= b ? a - b : a + p_ - b; }
  Element neg(Element a) const { return a == 0 ? 0 : p_ - a; }
  Element mul(Element a, Element b) const {
    return static_cast<Element>(static_cast<std::uint64_t>(a) * b % p_);
  }
  Element inv(Element a) const;
  Element div(Element a, Element b) const { return mul(a, inv(b)); }

  Element from_int(std::int64_t v) const;
  // Decimal digits, optional leading '-'; arbitrary length.
  Element from_decimal(std::string_view digits) const;
  // Symmetric representative, so p-1 prints as -1.
  std::int64_t to_signed(Element a) const {
    return a > p_ / 2 ? static_cast<std::int64_t>(a) - p_ : static_cast<std::int64_t>(a);
  }
  std::string to_string(Element a) const { return std::to_string(to_signed(a)); }

  bool operator==(const PrimeField& o) const { return p_ == o.p_; }

 private:
  std::uint32_t p_;
};

// Q via GMP. Elements are always canonicalized.
class RationalField {
 public:
  using Element = mpq_class;

  std::uint32_t characteristic() const { return 0; }

  Element zero() const { return Element(0); }
  Element one() const { return Element(1); }
  bool is_zero(const Element& a) const { return sgn(a) == 0; }
  bool is_one(const Element& a) const { return a == 1; }

  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element neg(const Element& a) const { return -a; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element inv(const Element& a) const;
  Element div(const Element& a, const Element& b) const { return mul(a, inv(b)); }

  Element from_int(std::int64_t v) const { return Element(static_cast<long>(v)); }
  Element from_decimal(std::string_view digits) const;
  std::string to_string(const Element& a) const { return a.get_str(); }

  bool operator==(const RationalField&) const { return true; }
};

// Deterministic generator used for every "general" choice. MT19937-64 is
// fully specified by the C++ standard, so draws are identical everywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed = 0) : seed_(seed), eng_(seed) {}

  std::uint64_t next() { return eng_(); }
  std::uint64_t seed() const { return seed_; }

  // Independent stream for sub-task `index` (sample k, section k, ...).
  static Rng derive(std::uint64_t seed, std::uint64_t index);

 private:
  std::uint64_t seed_;
  std::mt19937_64 eng_;
};

// Residue next() % p. Not exactly uniform but the bias is below 2^-32.
inline PrimeField::Element random_element(Rng& rng, const PrimeField& F) {
  return static_cast<PrimeField::Element>(rng.next() % F.characteristic());
}
inline PrimeField::Element random_nonzero(Rng& rng, const PrimeField& F) {
  return static_cast<PrimeField::Element>(1 + rng.next() % (F.characteristic() - 1));
}
// Over Q: an integer in [-9, 9].
inline RationalField::Element random_element(Rng& rng, const RationalField&) {
  return RationalField::Element(static_cast<long>(rng.next() % 19) - 9);
}

// Tagged value for callers that pick the field at run time.
struct FieldId {
  std::uint32_t characteristic = kDefaultPrime;  // 0 means Q
  bool operator==(const FieldId&) const = default;
  std::string name() const;
};

class FieldElement {
 public:
  FieldElement(FieldId id, std::int64_t v);
  static FieldElement from_residue(FieldId id, std::uint32_t r);
  static FieldElement from_rational(const mpq_class& q);

  FieldId field() const { return id_; }
  bool is_zero() const;
  std::string to_string() const;
  // Only valid for prime fields.
  std::uint32_t residue() const { return std::get<std::uint32_t>(v_); }
  const mpq_class& rational() const { return std::get<mpq_class>(v_); }

  bool operator==(const FieldElement& o) const;

 private:
  FieldElement() = default;
  FieldId id_;
  std::variant<std::uint32_t, mpq_class> v_;
};

enum class ArithOp { Add, Sub, Mul, Div };

FieldElement field_arith(const FieldElement& a, const FieldElement& b, ArithOp op);
FieldElement random_element(Rng& rng, FieldId id);

}  // namespace secreg
