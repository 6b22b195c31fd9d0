#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "secreg/coeffs.hpp"
#include "secreg/monomial.hpp"

namespace secreg {

// Polynomial ring k[vars] with a monomial order and a grading (positive
// integer weight per variable; zero allowed for auxiliary variables).
class Ring {
 public:
  Ring(std::uint32_t characteristic, std::vector<std::string> vars, MonomialOrder order,
       std::vector<int> grading = {});

  std::uint32_t characteristic() const { return char_; }
  int nvars() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(int i) const { return names_[i]; }
  int var_index(std::string_view name) const;
  const MonomialOrder& order() const { return order_; }
  const std::vector<int>& grading() const { return grading_; }
  bool standard_grading() const { return standard_grading_; }

  int degree_of(const Monomial& m) const {
    if (standard_grading_) return m.degree();
    int d = 0;
    for (int i = 0; i < nvars(); ++i) d += grading_[i] * m[i];
    return d;
  }

  bool operator==(const Ring& o) const;
  // e.g. "ring 32003 x0,x1,x2 grevlex"
  std::string header() const;

 private:
  std::uint32_t char_;
  std::vector<std::string> names_;
  MonomialOrder order_;
  std::vector<int> grading_;
  bool standard_grading_ = true;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(std::uint32_t characteristic, std::vector<std::string> vars,
                  MonomialOrder order, std::vector<int> grading = {});
// Standard grevlex ring with variables prefix0..prefix{n-1}.
RingPtr make_ring(std::uint32_t characteristic, int nvars, const std::string& prefix = "x");
// Same variables, different order (and optionally grading).
RingPtr with_order(const RingPtr& R, MonomialOrder order, std::vector<int> grading = {});

inline bool same_ring(const RingPtr& a, const RingPtr& b) { return a == b || (a && b && *a == *b); }

// Field object matching a ring's characteristic.
template <class Field>
Field field_of(const Ring& R);
template <>
inline PrimeField field_of<PrimeField>(const Ring& R) {
  if (R.characteristic() == 0) throw FieldMismatch("ring is over QQ, expected a prime field");
  return PrimeField(R.characteristic());
}
template <>
inline RationalField field_of<RationalField>(const Ring& R) {
  if (R.characteristic() != 0) throw FieldMismatch("ring is over a prime field, expected QQ");
  return RationalField{};
}

}  // namespace secreg
