#include "secreg/geom.hpp"

#include "secreg/parser.hpp"

namespace secreg {

std::string SurfaceSpec::label() const {
  switch (kind) {
    case SurfaceKind::TypeI: return "type1(d=" + std::to_string(d) + ")";
    case SurfaceKind::TypeII: return "type2(a=" + std::to_string(a) + ",b=" + std::to_string(b) + ",f=" + f + ")";
    case SurfaceKind::Scroll: {
      std::string s = "S(";
      for (std::size_t i = 0; i < scroll.size(); ++i) s += (i ? "," : "") + std::to_string(scroll[i]);
      return s + ")";
    }
  }
  return "?";
}

RingPtr ambient_ring(int nvars, std::uint32_t p) { return make_ring(p, nvars); }

RingPtr parameter_ring(std::uint32_t p) {
  return make_ring(p, {"s", "t", "u", "v"}, MonomialOrder::grevlex(4));
}

RingPtr binary_ring(std::uint32_t p) { return make_ring(p, {"s", "t"}, MonomialOrder::grevlex(2)); }

Ideal scroll_ideal(const std::vector<int>& a, std::uint32_t p) {
  if (a.empty()) throw PreconditionError("scroll: empty signature");
  int n = 0, cols = 0;
  for (int x : a) {
    if (x < 0) throw PreconditionError("scroll: negative entry");
    n += x + 1;
    cols += x;
  }
  if (cols == 0) throw PreconditionError("scroll: all entries zero");
  if (n > kMaxVars) throw PreconditionError("scroll: too many variables");
  RingPtr R = ambient_ring(n, p);
  std::vector<Poly> top, bot;
  int base = 0;
  for (int x : a) {
    for (int k = 0; k < x; ++k) {
      top.push_back(Poly::variable(R, base + k));
      bot.push_back(Poly::variable(R, base + k + 1));
    }
    base += x + 1;
  }
  std::vector<Poly> minors;
  for (int i = 0; i < cols; ++i)
    for (int j = i + 1; j < cols; ++j) minors.push_back(top[i] * bot[j] - top[j] * bot[i]);
  return Ideal(R, minors);
}

static void check_surface(const Ideal& I, int d, const std::string& what) {
  auto [dim, deg] = dim_degree(I);
  if (dim != 2 || deg != d)
    throw ComputationError(what + ": expected a surface of degree " + std::to_string(d) + ", got dimension " +
                           std::to_string(dim) + " and degree " + std::to_string(deg));
}

Surface type1_surface(int d, std::uint32_t p) {
  if (d < 5) throw PreconditionError("type1_surface: needs d >= 5");
  RingPtr P = parameter_ring(p);
  auto s = Poly::variable(P, 0), t = Poly::variable(P, 1), u = Poly::variable(P, 2), v = Poly::variable(P, 3);
  // The tabulated cases use u^7 (d = 8, 9) and u^9 (d = 10); the power of
  // u does not change the image, other d use u itself.
  int ue = d == 8 || d == 9 ? 7 : d == 10 ? 9 : 1;
  Poly U = u.pow(ue);
  std::vector<Poly> img{U * s, U * t, v * s.pow(d - 1), v * s.pow(d - 2) * t, v * s * t.pow(d - 2), v * t.pow(d - 1)};
  Surface out;
  out.spec.kind = SurfaceKind::TypeI;
  out.spec.d = d;
  out.spec.r = 5;
  out.spec.extrapolated = !(d >= 8 && d <= 10);
  out.spec.param_ring = P;
  out.spec.parametrization = img;
  RingPtr R = ambient_ring(6, p);
  out.I = kernel_of_map(R, img);
  check_surface(out.I, d, "type1_surface");
  Ideal W = scroll_ideal({1, 1, 1}, p);
  for (const auto& g : W.generators())
    if (!contains(out.I, g.in_ring(R))) throw ComputationError("type1_surface: surface does not lie on S(1,1,1)");
  return out;
}

Ideal extremal_plane(int a, int r, std::uint32_t p) {
  RingPtr R = ambient_ring(r + 1, p);
  std::vector<Poly> g;
  for (int i = 0; i <= a; ++i) g.push_back(Poly::variable(R, i));
  return Ideal(R, g);
}

Surface type2_surface(int a, int b, const Poly& f0) {
  if (a < 3 || b < a) throw PreconditionError("type2_surface: needs 3 <= a <= b");
  const RingPtr& B = f0.ring();
  if (B->nvars() != 2) throw PreconditionError("type2_surface: f must be a binary form in s,t");
  if (!f0.is_homogeneous() || f0.total_degree() != b)
    throw PreconditionError("type2_surface: f must be homogeneous of degree b = " + std::to_string(b));
  bool inner = false;
  for (const auto& t : f0.terms())
    if (t.m[0] != 0 && t.m[1] != 0) inner = true;
  if (!inner) throw PreconditionError("type2_surface: f must not lie in the span of s^b and t^b");
  std::uint32_t p = B->characteristic();
  RingPtr P = parameter_ring(p);
  Poly f = map_variables(f0, P, {0, 1});
  auto s = Poly::variable(P, 0), t = Poly::variable(P, 1), u = Poly::variable(P, 2), v = Poly::variable(P, 3);
  std::vector<Poly> img;
  for (int k = 0; k <= a; ++k) img.push_back(u * s.pow(a - k) * t.pow(k));
  img.push_back(v * s.pow(b));
  img.push_back(v * f);
  img.push_back(v * t.pow(b));
  int r = a + 3;
  Surface out;
  out.spec.kind = SurfaceKind::TypeII;
  out.spec.a = a;
  out.spec.b = b;
  out.spec.d = a + b;
  out.spec.r = r;
  out.spec.f = to_string(f0);
  out.spec.param_ring = P;
  out.spec.parametrization = img;
  out.I = kernel_of_map(ambient_ring(r + 1, p), img);
  check_surface(out.I, a + b, "type2_surface");
  out.L = extremal_plane(a, r, p);
  return out;
}

Poly random_binary_form(int b, std::uint64_t seed, std::uint32_t p) {
  if (b < 2) throw PreconditionError("random_binary_form: degree must be at least 2");
  RingPtr B = binary_ring(p);
  PrimeField F = field_of<PrimeField>(*B);
  Rng rng = Rng::derive(seed, static_cast<std::uint64_t>(b));
  std::vector<Term<PrimeField>> terms;
  for (int k = 0; k <= b; ++k) {
    PrimeField::Element c = 0;
    while (c == 0) c = random_element(rng, F);
    terms.push_back({Monomial::var(0, k) * Monomial::var(1, b - k), c});
  }
  return Poly::from_terms(B, std::move(terms));
}

Surface type2_surface(int a, int b, const std::string& f, std::uint32_t p) {
  return type2_surface(a, b, parse_poly(f, binary_ring(p)));
}

Ideal union_with_plane(const Ideal& I, const Ideal& L) {
  const RingPtr& R = I.ring();
  for (const auto& g : L.generators())
    if (g.total_degree() != 1 || !g.is_homogeneous()) throw PreconditionError("union_with_plane: L must be linear");
  auto [dimL, degL] = dim_degree(L);
  if (dimL != 2 || degL != 1 || static_cast<int>(L.gb().elements.size()) != R->nvars() - 3)
    throw PreconditionError("union_with_plane: L is not a plane");
  Ideal Y = intersect(I, L);
  if (!is_saturated(Y)) Y = saturate(Y, irrelevant_ideal<PrimeField>(R)).first;
  return Y;
}

}  // namespace secreg
