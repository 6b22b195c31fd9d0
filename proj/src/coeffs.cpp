#include "secreg/coeffs.hpp"

namespace secreg {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p >= (1u << 31) || !is_prime(p))
    throw PreconditionError("characteristic " + std::to_string(p) + " is not a prime below 2^31");
}

PrimeField::Element PrimeField::inv(Element a) const {
  if (a == 0) throw ArithmeticError("division by zero in F_" + std::to_string(p_));
  std::int64_t r0 = p_, r1 = a, s0 = 0, s1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t t = r0 - q * r1;
    r0 = r1;
    r1 = t;
    t = s0 - q * s1;
    s0 = s1;
    s1 = t;
  }
  if (s0 < 0) s0 += p_;
  return static_cast<Element>(s0);
}

PrimeField::Element PrimeField::from_int(std::int64_t v) const {
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return static_cast<Element>(r);
}

PrimeField::Element PrimeField::from_decimal(std::string_view s) const {
  bool negative = false;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
    negative = s[0] == '-';
    s.remove_prefix(1);
  }
  if (s.empty()) throw PreconditionError("empty integer literal");
  std::uint64_t r = 0;
  for (char c : s) {
    if (c < '0' || c > '9') throw PreconditionError("bad digit in integer literal");
    r = (r * 10 + static_cast<unsigned>(c - '0')) % p_;
  }
  Element e = static_cast<Element>(r);
  return negative ? neg(e) : e;
}

RationalField::Element RationalField::inv(const Element& a) const {
  if (sgn(a) == 0) throw ArithmeticError("division by zero in Q");
  Element r = 1 / a;
  r.canonicalize();
  return r;
}

RationalField::Element RationalField::from_decimal(std::string_view s) const {
  std::string str(s);
  if (!str.empty() && str[0] == '+') str.erase(0, 1);
  mpz_class z;
  if (str.empty() || z.set_str(str, 10) != 0) throw PreconditionError("bad integer literal");
  return Element(z);
}

Rng Rng::derive(std::uint64_t seed, std::uint64_t index) {
  // splitmix64 finalizer over (seed, index)
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  z ^= z >> 31;
  return Rng(z);
}

std::string FieldId::name() const {
  return characteristic == 0 ? "QQ" : "F_" + std::to_string(characteristic);
}

FieldElement::FieldElement(FieldId id, std::int64_t v) : id_(id) {
  if (id.characteristic == 0)
    v_ = mpq_class(static_cast<long>(v));
  else
    v_ = PrimeField(id.characteristic).from_int(v);
}

FieldElement FieldElement::from_residue(FieldId id, std::uint32_t r) {
  if (id.characteristic == 0 || r >= id.characteristic)
    throw PreconditionError("residue out of range for " + id.name());
  FieldElement e;
  e.id_ = id;
  e.v_ = r;
  return e;
}

FieldElement FieldElement::from_rational(const mpq_class& q) {
  FieldElement e;
  e.id_ = FieldId{0};
  mpq_class c = q;
  c.canonicalize();
  e.v_ = c;
  return e;
}

bool FieldElement::is_zero() const {
  if (id_.characteristic == 0) return sgn(std::get<mpq_class>(v_)) == 0;
  return std::get<std::uint32_t>(v_) == 0;
}

std::string FieldElement::to_string() const {
  if (id_.characteristic == 0) return std::get<mpq_class>(v_).get_str();
  return std::to_string(std::get<std::uint32_t>(v_));
}

bool FieldElement::operator==(const FieldElement& o) const {
  return id_ == o.id_ && v_ == o.v_;
}

FieldElement field_arith(const FieldElement& a, const FieldElement& b, ArithOp op) {
  if (!(a.field() == b.field()))
    throw FieldMismatch("mixing " + a.field().name() + " and " + b.field().name());
  if (a.field().characteristic == 0) {
    RationalField Q;
    const auto& x = a.rational();
    const auto& y = b.rational();
    switch (op) {
      case ArithOp::Add: return FieldElement::from_rational(Q.add(x, y));
      case ArithOp::Sub: return FieldElement::from_rational(Q.sub(x, y));
      case ArithOp::Mul: return FieldElement::from_rational(Q.mul(x, y));
      case ArithOp::Div: return FieldElement::from_rational(Q.div(x, y));
    }
  }
  PrimeField F(a.field().characteristic);
  auto x = a.residue();
  auto y = b.residue();
  switch (op) {
    case ArithOp::Add: return FieldElement::from_residue(a.field(), F.add(x, y));
    case ArithOp::Sub: return FieldElement::from_residue(a.field(), F.sub(x, y));
    case ArithOp::Mul: return FieldElement::from_residue(a.field(), F.mul(x, y));
    case ArithOp::Div: return FieldElement::from_residue(a.field(), F.div(x, y));
  }
  throw PreconditionError("unknown arithmetic op");
}

FieldElement random_element(Rng& rng, FieldId id) {
  if (id.characteristic == 0) return FieldElement::from_rational(random_element(rng, RationalField{}));
  return FieldElement::from_residue(id, random_element(rng, PrimeField(id.characteristic)));
}

}  // namespace secreg
