#pragma once

#include <optional>
#include <string>

#include "secreg/ideal_ops.hpp"

namespace secreg {

enum class SurfaceKind { TypeI, TypeII, Scroll };

struct SurfaceSpec {
  SurfaceKind kind = SurfaceKind::TypeI;
  int d = 0;  // degree
  int r = 0;  // ambient P^r
  int a = 0, b = 0;
  std::string f;               // type II: the binary form, as text
  std::vector<int> scroll;     // Scroll: a_1..a_k
  bool extrapolated = false;   // type I outside d = 8, 9, 10
  RingPtr param_ring;          // k[s,t,u,v]
  std::vector<Poly> parametrization;
  std::string label() const;
};

struct Surface {
  SurfaceSpec spec;
  Ideal I;
  std::optional<Ideal> L;  // extremal plane, type II only
};

// Standard coordinate ring k[x0..x_{n-1}].
RingPtr ambient_ring(int nvars, std::uint32_t p = kDefaultPrime);
// k[s,t,u,v]
RingPtr parameter_ring(std::uint32_t p = kDefaultPrime);
// k[s,t]
RingPtr binary_ring(std::uint32_t p = kDefaultPrime);

// 2x2 minors of the catalecticant block matrix of S(a_1, ..., a_k).
Ideal scroll_ideal(const std::vector<int>& a, std::uint32_t p = kDefaultPrime);

Surface type1_surface(int d, std::uint32_t p = kDefaultPrime);
Surface type2_surface(int a, int b, const Poly& f);
Surface type2_surface(int a, int b, const std::string& f, std::uint32_t p = kDefaultPrime);

// Binary form of degree b, every coefficient a nonzero draw from the seed.
Poly random_binary_form(int b, std::uint64_t seed, std::uint32_t p = kDefaultPrime);

// The coordinate plane x_0 = ... = x_a = 0 of a type II surface.
Ideal extremal_plane(int a, int r, std::uint32_t p = kDefaultPrime);

// I ∩ L, checked to be saturated. L must be generated by r-2 linear forms.
Ideal union_with_plane(const Ideal& I, const Ideal& L);

}  // namespace secreg
