#include "secreg/ideal_ops.hpp"

#include <functional>
#include <numeric>
#include <unordered_map>

#include "secreg/linalg.hpp"

namespace secreg {

template <class Field>
BasicPolynomial<Field> map_variables(const BasicPolynomial<Field>& f, const RingPtr& T,
                                     const std::vector<int>& varmap) {
  int n = f.ring()->nvars();
  std::vector<Term<Field>> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) {
    Monomial m;
    for (int i = 0; i < n; ++i) {
      if (!t.m[i]) continue;
      if (varmap[i] < 0) throw PreconditionError("map_variables: variable has no image");
      m.set(varmap[i], m[varmap[i]] + t.m[i]);
    }
    terms.push_back({m, t.c});
  }
  return BasicPolynomial<Field>::from_terms(T, std::move(terms));
}

template <class Field>
bool contains(const BasicIdeal<Field>& I, const BasicPolynomial<Field>& f) {
  return normal_form(f, I.gb()).is_zero();
}

template <class Field>
BasicPolynomial<Field> divide_exact(const BasicPolynomial<Field>& f, const BasicPolynomial<Field>& g) {
  f.check_ring(g);
  if (g.is_zero()) throw ArithmeticError("division by the zero polynomial");
  const Field& F = f.field();
  auto ginv = F.inv(g.lead_coeff());
  BasicPolynomial<Field> r = f, q(f.ring());
  std::vector<Term<Field>> qt;
  while (!r.is_zero()) {
    if (!g.lead_monomial().divides(r.lead_monomial())) throw ArithmeticError("divide_exact: not divisible");
    Monomial t = g.lead_monomial().quotient_of(r.lead_monomial());
    auto c = F.mul(r.lead_coeff(), ginv);
    qt.push_back({t, c});
    r = r - g.mul_term(t, c);
  }
  return BasicPolynomial<Field>::from_sorted_terms(f.ring(), std::move(qt));
}

template <class Field>
BasicIdeal<Field> eliminate(const BasicIdeal<Field>& I, const std::vector<int>& vars, bool affine) {
  const RingPtr& R = I.ring();
  int n = R->nvars();
  if (!affine && !I.is_homogeneous()) throw PreconditionError("eliminate: inhomogeneous input in homogeneous mode");
  std::vector<char> elim(n, 0);
  for (int v : vars) {
    if (v < 0 || v >= n) throw PreconditionError("eliminate: variable out of range");
    elim[v] = 1;
  }
  int ne = static_cast<int>(std::count(elim.begin(), elim.end(), 1));
  std::vector<int> perm(n), kept;
  std::vector<std::string> names;
  std::vector<int> grading, oweights;
  int pos = 0;
  for (int v = 0; v < n; ++v)
    if (elim[v]) {
      perm[v] = pos++;
      names.push_back(R->name(v));
      grading.push_back(R->grading()[v]);
      oweights.push_back(std::max(1, R->grading()[v]));
    }
  for (int v = 0; v < n; ++v)
    if (!elim[v]) {
      perm[v] = pos++;
      kept.push_back(v);
      names.push_back(R->name(v));
      grading.push_back(R->grading()[v]);
      oweights.push_back(1);
    }
  std::vector<std::string> kept_names;
  std::vector<int> kept_grading;
  for (int v : kept) {
    kept_names.push_back(R->name(v));
    kept_grading.push_back(R->grading()[v]);
  }
  RingPtr K = make_ring(R->characteristic(), kept_names, MonomialOrder::grevlex(static_cast<int>(kept.size())),
                        kept_grading);
  if (ne == 0) {
    std::vector<int> id(n);
    std::iota(id.begin(), id.end(), 0);
    std::vector<BasicPolynomial<Field>> g;
    for (const auto& f : I.generators()) g.push_back(map_variables(f, K, id));
    return BasicIdeal<Field>(K, g);
  }
  MonomialOrder ord = MonomialOrder::elimination(n, ne, oweights);
  RingPtr E = make_ring(R->characteristic(), names, ord, grading);
  std::vector<BasicPolynomial<Field>> g;
  for (const auto& f : I.generators()) g.push_back(map_variables(f, E, perm));
  auto G = groebner<Field>(E, g);
  std::vector<int> back(n, -1);
  for (int k = 0; k < static_cast<int>(kept.size()); ++k) back[ne + k] = k;
  BasicGroebnerBasis<Field> KG;
  KG.ring = K;
  for (const auto& e : G.elements) {
    bool free = true;
    for (const auto& t : e.terms()) {
      for (int i = 0; i < ne && free; ++i)
        if (t.m[i]) free = false;
      if (!free) break;
    }
    if (free) KG.elements.push_back(map_variables(e, K, back));
  }
  BasicIdeal<Field> out(K, KG.elements);
  out.set_gb(KG);
  return out;
}

// Positive weights w on the parameters making every image homogeneous of
// one common weight; smallest total weight first.
template <class Field>
static std::vector<int> infer_weights(const std::vector<BasicPolynomial<Field>>& images, int np, int& common) {
  const int maxw = 24;
  std::vector<int> w(np, 1);
  auto ok = [&]() {
    long W = -1;
    for (const auto& g : images)
      for (const auto& t : g.terms()) {
        long d = 0;
        for (int i = 0; i < np; ++i) d += long(w[i]) * t.m[i];
        if (W < 0) W = d;
        else if (d != W) return false;
      }
    common = static_cast<int>(W);
    return true;
  };
  for (int total = np; total <= maxw * np; ++total) {
    std::function<bool(int, int)> rec = [&](int i, int left) -> bool {
      if (i == np - 1) {
        if (left < 1 || left > maxw) return false;
        w[i] = left;
        return ok();
      }
      for (int k = 1; k <= std::min(maxw, left - (np - 1 - i)); ++k) {
        w[i] = k;
        if (rec(i + 1, left - k)) return true;
      }
      return false;
    };
    if (rec(0, total)) return w;
  }
  return {};
}

template <class Field>
BasicIdeal<Field> kernel_of_map(const RingPtr& target, const std::vector<BasicPolynomial<Field>>& images) {
  int n = target->nvars();
  if (static_cast<int>(images.size()) != n) throw PreconditionError("kernel_of_map: need one image per variable");
  for (const auto& g : images)
    if (g.is_zero()) throw PreconditionError("kernel_of_map: zero image");
  const RingPtr& P = images[0].ring();
  for (const auto& g : images)
    if (!same_ring(g.ring(), P)) throw RingMismatch("kernel_of_map: images in different rings");
  if (P->characteristic() != target->characteristic()) throw FieldMismatch("kernel_of_map: fields differ");
  int np = P->nvars();
  int W = 0;
  std::vector<int> w = infer_weights(images, np, W);
  if (w.empty()) throw PreconditionError("kernel_of_map: images are not homogeneous of one common degree");
  std::vector<std::string> names = P->names();
  for (const auto& s : target->names()) {
    if (std::find(names.begin(), names.end(), s) != names.end())
      throw PreconditionError("kernel_of_map: variable name clash " + s);
    names.push_back(s);
  }
  std::vector<int> grading = w, oweights = w;
  for (int i = 0; i < n; ++i) {
    grading.push_back(W);
    oweights.push_back(1);
  }
  RingPtr E = make_ring(P->characteristic(), names, MonomialOrder::elimination(np + n, np, oweights), grading);
  std::vector<int> pmap(np);
  std::iota(pmap.begin(), pmap.end(), 0);
  std::vector<BasicPolynomial<Field>> J;
  for (int i = 0; i < n; ++i)
    J.push_back(BasicPolynomial<Field>::variable(E, np + i) - map_variables(images[i], E, pmap));
  BasicIdeal<Field> Jid(E, J);
  std::vector<int> params(np);
  std::iota(params.begin(), params.end(), 0);
  // Elimination ring already has params first with the right block order.
  auto G = groebner<Field>(E, J);
  BasicGroebnerBasis<Field> KG;
  RingPtr K = target;
  bool standard_target = target->order() == MonomialOrder::grevlex(n) && target->standard_grading();
  std::vector<int> back(np + n, -1);
  for (int i = 0; i < n; ++i) back[np + i] = i;
  for (const auto& e : G.elements) {
    bool free = true;
    for (const auto& t : e.terms()) {
      for (int i = 0; i < np && free; ++i)
        if (t.m[i]) free = false;
      if (!free) break;
    }
    if (free) KG.elements.push_back(map_variables(e, K, back));
  }
  KG.ring = K;
  BasicIdeal<Field> out(K, KG.elements);
  if (standard_target) out.set_gb(KG);
  if (!out.is_homogeneous()) throw ComputationError("kernel_of_map: kernel is not homogeneous");
  if (!is_saturated(out)) out = saturate(out, irrelevant_ideal<Field>(K)).first;
  return out;
}

template <class Field>
BasicIdeal<Field> intersect(const BasicIdeal<Field>& I, const BasicIdeal<Field>& J) {
  if (!same_ring(I.ring(), J.ring())) throw RingMismatch("intersect: ideals in different rings");
  const RingPtr& R = I.ring();
  if (I.is_zero() || J.is_zero()) return BasicIdeal<Field>(R, {});
  int n = R->nvars();
  if (n + 1 > kMaxVars) throw PreconditionError("intersect: no room for the auxiliary variable");
  std::vector<std::string> names{"_t"};
  for (const auto& s : R->names()) names.push_back(s);
  std::vector<int> grading{0};
  for (int g : R->grading()) grading.push_back(g);
  std::vector<int> oweights(n + 1, 1);
  RingPtr E = make_ring(R->characteristic(), names, MonomialOrder::elimination(n + 1, 1, oweights), grading);
  std::vector<int> shift(n);
  std::iota(shift.begin(), shift.end(), 1);
  auto t = BasicPolynomial<Field>::variable(E, 0);
  auto one_minus_t = BasicPolynomial<Field>::constant(E, 1) - t;
  std::vector<BasicPolynomial<Field>> gens;
  for (const auto& f : I.generators()) gens.push_back(t * map_variables(f, E, shift));
  for (const auto& g : J.generators()) gens.push_back(one_minus_t * map_variables(g, E, shift));
  auto G = groebner<Field>(E, gens);
  std::vector<int> back(n + 1, -1);
  for (int i = 0; i < n; ++i) back[i + 1] = i;
  BasicGroebnerBasis<Field> KG;
  KG.ring = R;
  for (const auto& e : G.elements) {
    bool free = true;
    for (const auto& tt : e.terms())
      if (tt.m[0]) {
        free = false;
        break;
      }
    if (free) KG.elements.push_back(map_variables(e, R, back));
  }
  BasicIdeal<Field> out(R, KG.elements);
  if (R->order() == MonomialOrder::grevlex(n)) out.set_gb(KG);
  return out;
}

template <class Field>
BasicIdeal<Field> quotient(const BasicIdeal<Field>& I, const BasicPolynomial<Field>& g) {
  const RingPtr& R = I.ring();
  if (g.is_zero()) return BasicIdeal<Field>(R, {BasicPolynomial<Field>::constant(R, 1)});
  BasicIdeal<Field> K = intersect(I, BasicIdeal<Field>(R, {g}));
  std::vector<BasicPolynomial<Field>> q;
  for (const auto& f : K.generators()) q.push_back(divide_exact(f, g));
  return BasicIdeal<Field>(R, q);
}

template <class Field>
BasicIdeal<Field> quotient(const BasicIdeal<Field>& I, const BasicIdeal<Field>& J) {
  const RingPtr& R = I.ring();
  if (J.is_zero()) return BasicIdeal<Field>(R, {BasicPolynomial<Field>::constant(R, 1)});
  BasicIdeal<Field> acc = quotient(I, J.generators()[0]);
  for (std::size_t k = 1; k < J.generators().size(); ++k) acc = intersect(acc, quotient(I, J.generators()[k]));
  return acc;
}

template <class Field>
BasicIdeal<Field> irrelevant_ideal(const RingPtr& R) {
  std::vector<BasicPolynomial<Field>> v;
  for (int i = 0; i < R->nvars(); ++i) v.push_back(BasicPolynomial<Field>::variable(R, i));
  return BasicIdeal<Field>(R, v);
}

static bool is_irrelevant_gens(const Ring& R, const std::vector<Monomial>& leads, std::size_t count) {
  if (count != static_cast<std::size_t>(R.nvars())) return false;
  std::vector<char> seen(R.nvars(), 0);
  for (const auto& m : leads) {
    if (m.degree() != 1) return false;
    for (int i = 0; i < R.nvars(); ++i)
      if (m[i]) seen[i] = 1;
  }
  return std::all_of(seen.begin(), seen.end(), [](char c) { return c; });
}

// Random linear form in the ring's variables with nonzero last coefficient.
template <class Field>
static std::vector<typename Field::Element> random_linear(const Field& F, int n, Rng& rng) {
  std::vector<typename Field::Element> c(n);
  for (int i = 0; i < n; ++i) c[i] = random_element(rng, F);
  while (F.is_zero(c[n - 1])) c[n - 1] = random_element(rng, F);
  return c;
}

// I : l^∞ for l = sum c_i x_i: coordinates with l last, grevlex, divide
// the basis by powers of the last variable.
template <class Field>
static BasicIdeal<Field> saturate_by_linear(const BasicIdeal<Field>& I, const std::vector<typename Field::Element>& c) {
  const RingPtr& R = I.ring();
  int n = R->nvars();
  const Field F = field_of<Field>(*R);
  RingPtr Y = make_ring(R->characteristic(), R->names(), MonomialOrder::grevlex(n), R->grading());
  // x_{n-1} = (y_{n-1} - sum_{i<n-1} c_i y_i) / c_{n-1}
  std::vector<BasicPolynomial<Field>> to_y, to_x;
  auto inv = F.inv(c[n - 1]);
  for (int i = 0; i < n - 1; ++i) to_y.push_back(BasicPolynomial<Field>::variable(Y, i));
  {
    BasicPolynomial<Field> last = BasicPolynomial<Field>::variable(Y, n - 1);
    for (int i = 0; i < n - 1; ++i) last = last - BasicPolynomial<Field>::variable(Y, i).scaled(c[i]);
    to_y.push_back(last.scaled(inv));
  }
  for (int i = 0; i < n - 1; ++i) to_x.push_back(BasicPolynomial<Field>::variable(R, i));
  {
    BasicPolynomial<Field> l(R);
    for (int i = 0; i < n; ++i) l = l + BasicPolynomial<Field>::variable(R, i).scaled(c[i]);
    to_x.push_back(l);
  }
  std::vector<BasicPolynomial<Field>> gy;
  for (const auto& f : I.generators()) gy.push_back(substitute(f, to_y));
  auto G = groebner<Field>(Y, gy);
  std::vector<BasicPolynomial<Field>> out;
  for (const auto& g : G.elements) {
    int k = g.lead_monomial()[n - 1];
    for (const auto& t : g.terms()) k = std::min(k, static_cast<int>(t.m[n - 1]));
    BasicPolynomial<Field> h = g;
    if (k > 0) h = divide_exact(g, BasicPolynomial<Field>::monomial(Y, Monomial::var(n - 1, k)));
    out.push_back(substitute(h, to_x));
  }
  return BasicIdeal<Field>(R, out);
}

template <class Field>
std::pair<BasicIdeal<Field>, int> saturate(const BasicIdeal<Field>& I, const BasicIdeal<Field>& J) {
  if (!same_ring(I.ring(), J.ring())) throw RingMismatch("saturate: ideals in different rings");
  const RingPtr& R = I.ring();
  std::vector<Monomial> jl;
  for (const auto& g : J.generators()) jl.push_back(g.lead_monomial());
  bool irrelevant = I.is_homogeneous() && R->standard_grading() &&
                    std::all_of(J.generators().begin(), J.generators().end(), [](const auto& g) {
                      return g.size() == 1 && g.lead_monomial().degree() == 1;
                    }) &&
                    is_irrelevant_gens(*R, jl, J.generators().size());
  if (irrelevant && !I.is_zero()) {
    if (is_saturated(I)) return {I, 0};
    // One general linear form: I : l^∞ contains I^sat, with equality once
    // the result is saturated and has the same Hilbert polynomial as I.
    const Field F = field_of<Field>(*R);
    Rng rng(0x5a7u);
    HilbertSeries hI = hilbert_series(I);
    for (int attempt = 0; attempt < 4; ++attempt) {
      auto c = random_linear(F, R->nvars(), rng);
      BasicIdeal<Field> K = saturate_by_linear(I, c);
      HilbertSeries hK = hilbert_series(K);
      bool same_poly = hK.dim == hI.dim;
      for (int d = 0; d < 4 && same_poly; ++d)
        same_poly = hK.polynomial_value(d + 50) == hI.polynomial_value(d + 50);
      if (same_poly && is_saturated(K, 17 + attempt)) {
        // exponent: smallest k with I : m^k = K
        int k = 0;
        BasicIdeal<Field> cur = I;
        while (!ideal_equal(cur, K)) {
          cur = quotient(cur, J);
          ++k;
        }
        return {K, k};
      }
    }
  }
  BasicIdeal<Field> cur = I;
  for (int k = 0;; ++k) {
    BasicIdeal<Field> next = quotient(cur, J);
    if (ideal_equal(next, cur)) return {cur, k};
    cur = next;
  }
}

template <class Field>
BasicIdeal<Field> restrict_to_hyperplane(const BasicIdeal<Field>& I, const BasicPolynomial<Field>& h) {
  const RingPtr& R = I.ring();
  h.check_ring(BasicPolynomial<Field>(R));
  if (h.is_zero() || !h.is_homogeneous() || h.total_degree() != 1) throw PreconditionError("hyperplane: h must be a nonzero linear form");
  int n = R->nvars();
  if (n < 2) throw PreconditionError("hyperplane: ring too small");
  const Field F = field_of<Field>(*R);
  std::vector<typename Field::Element> c(n, F.zero());
  for (const auto& t : h.terms())
    for (int i = 0; i < n; ++i)
      if (t.m[i]) c[i] = t.c;
  int k = n - 1;
  while (F.is_zero(c[k])) --k;
  std::vector<std::string> names;
  std::vector<int> grading;
  for (int i = 0; i < n; ++i)
    if (i != k) {
      names.push_back(R->name(i));
      grading.push_back(R->grading()[i]);
    }
  RingPtr T = make_ring(R->characteristic(), names, MonomialOrder::grevlex(n - 1), grading);
  std::vector<BasicPolynomial<Field>> img(n, BasicPolynomial<Field>(T));
  BasicPolynomial<Field> xk(T);
  auto minv = F.neg(F.inv(c[k]));
  for (int i = 0, j = 0; i < n; ++i) {
    if (i == k) continue;
    img[i] = BasicPolynomial<Field>::variable(T, j++);
    xk = xk + img[i].scaled(F.mul(c[i], minv));
  }
  img[k] = xk;
  std::vector<BasicPolynomial<Field>> g;
  for (const auto& f : I.generators()) g.push_back(substitute(f, img));
  return BasicIdeal<Field>(T, g);
}

template <class Field>
bool is_saturated(const BasicIdeal<Field>& I, std::uint64_t seed) {
  const RingPtr& R = I.ring();
  if (!I.is_homogeneous() || !R->standard_grading()) throw PreconditionError("is_saturated: needs a homogeneous ideal");
  if (I.is_zero()) return true;
  if (I.gb().is_unit()) return true;
  int n = R->nvars();
  if (n >= 2) {
    const Field F = field_of<Field>(*R);
    Rng rng(seed ^ 0x3c6ef372fe94f82bULL);
    HilbertSeries hI = hilbert_series(I);
    for (int attempt = 0; attempt < 2; ++attempt) {
      auto c = random_linear(F, n, rng);
      BasicPolynomial<Field> h(R);
      for (int i = 0; i < n; ++i) h = h + BasicPolynomial<Field>::variable(R, i).scaled(c[i]);
      BasicIdeal<Field> sec = restrict_to_hyperplane(I, h);
      HilbertSeries hs = hilbert_series(sec);
      if (hs.raw == hI.raw) return true;
    }
  }
  BasicIdeal<Field> q = quotient(I, irrelevant_ideal<Field>(R));
  return ideal_equal(q, I);
}

template <class Field>
HilbertSeries hilbert_series(const BasicIdeal<Field>& I) {
  const RingPtr& R = I.ring();
  if (!R->standard_grading()) throw PreconditionError("hilbert_series: standard grading required");
  if (!I.is_homogeneous()) throw PreconditionError("hilbert_series: homogeneous ideal required");
  return make_hilbert_series(hilbert_numerator(I.gb().lead_monomials(), R->nvars()), R->nvars());
}

template <class Field>
std::pair<int, std::int64_t> dim_degree(const BasicIdeal<Field>& I) {
  HilbertSeries h = hilbert_series(I);
  if (h.is_zero()) throw PreconditionError("dim_degree: unit ideal");
  return {h.dim - 1, h.degree()};
}

template <class Field>
bool ideal_equal(const BasicIdeal<Field>& I, const BasicIdeal<Field>& J) {
  if (!same_ring(I.ring(), J.ring())) throw RingMismatch("ideal_equal: ideals in different rings");
  const auto& a = I.gb().elements;
  const auto& b = J.gb().elements;
  if (a.size() != b.size()) return false;
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] != b[k]) return false;
  return true;
}

std::vector<Poly> graded_piece(const Ideal& I, int d) {
  const RingPtr& R = I.ring();
  PrimeField F = field_of<PrimeField>(*R);
  auto mons = monomials_of_degree(R->nvars(), d);
  std::unordered_map<Monomial, std::size_t, MonomialHash> pos;
  for (std::size_t k = 0; k < mons.size(); ++k) pos[mons[k]] = k;
  EchelonBasis E(mons.size(), F);
  for (const auto& g : I.generators()) {
    if (!g.is_homogeneous()) throw PreconditionError("graded_piece: homogeneous ideal required");
    int e = d - g.total_degree();
    if (e < 0) continue;
    for (const auto& m : monomials_of_degree(R->nvars(), e)) {
      std::vector<std::uint32_t> v(mons.size(), 0);
      for (const auto& t : g.terms()) v[pos.at(t.m * m)] = t.c;
      E.insert(std::move(v));
    }
  }
  std::vector<Poly> out;
  for (const auto& row : E.rows()) {
    std::vector<Term<PrimeField>> terms;
    for (std::size_t k = 0; k < row.size(); ++k)
      if (row[k]) terms.push_back({mons[k], row[k]});
    out.push_back(Poly::from_sorted_terms(R, std::move(terms)));
  }
  return out;
}

std::int64_t quotient_dimension(const Ideal& I, int d) {
  return static_cast<std::int64_t>(binom(d + I.ring()->nvars() - 1, I.ring()->nvars() - 1)) -
         static_cast<std::int64_t>(graded_piece(I, d).size());
}

#define SECREG_IDEAL_OPS_INST(F)                                                                     \
  template BasicPolynomial<F> map_variables(const BasicPolynomial<F>&, const RingPtr&,               \
                                            const std::vector<int>&);                                \
  template bool contains(const BasicIdeal<F>&, const BasicPolynomial<F>&);                           \
  template BasicPolynomial<F> divide_exact(const BasicPolynomial<F>&, const BasicPolynomial<F>&);    \
  template BasicIdeal<F> eliminate(const BasicIdeal<F>&, const std::vector<int>&, bool);             \
  template BasicIdeal<F> kernel_of_map(const RingPtr&, const std::vector<BasicPolynomial<F>>&);      \
  template BasicIdeal<F> intersect(const BasicIdeal<F>&, const BasicIdeal<F>&);                      \
  template BasicIdeal<F> quotient(const BasicIdeal<F>&, const BasicPolynomial<F>&);                  \
  template BasicIdeal<F> quotient(const BasicIdeal<F>&, const BasicIdeal<F>&);                       \
  template std::pair<BasicIdeal<F>, int> saturate(const BasicIdeal<F>&, const BasicIdeal<F>&);       \
  template BasicIdeal<F> irrelevant_ideal(const RingPtr&);                                           \
  template bool is_saturated(const BasicIdeal<F>&, std::uint64_t);                                   \
  template BasicIdeal<F> restrict_to_hyperplane(const BasicIdeal<F>&, const BasicPolynomial<F>&);    \
  template HilbertSeries hilbert_series(const BasicIdeal<F>&);                                       \
  template std::pair<int, std::int64_t> dim_degree(const BasicIdeal<F>&);                            \
  template bool ideal_equal(const BasicIdeal<F>&, const BasicIdeal<F>&);

SECREG_IDEAL_OPS_INST(PrimeField)
SECREG_IDEAL_OPS_INST(RationalField)

}  // namespace secreg
