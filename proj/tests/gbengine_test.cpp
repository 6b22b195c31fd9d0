#include <gtest/gtest.h>

#include <unordered_map>

#include "secreg/ideal_ops.hpp"
#include "secreg/linalg.hpp"
#include "secreg/parser.hpp"

using namespace secreg;

namespace {

Ideal ideal_of(const RingPtr& R, const std::vector<std::string>& gens) {
  std::vector<Poly> g;
  for (const auto& s : gens) g.push_back(parse_poly(s, R));
  return Ideal(R, g);
}

RingPtr xyz() { return make_ring(32003, {"x", "y", "z"}, MonomialOrder::grevlex(3)); }

Ideal scroll111(const RingPtr& R) { return ideal_of(R, {"x0*x3-x1*x2", "x0*x5-x1*x4", "x2*x5-x3*x4"}); }

// dim of the degree-d kernel of x_i -> images[i], by plain linear algebra.
std::size_t kernel_dim_oracle(int nvars, int d, const std::vector<Poly>& images) {
  auto mons = monomials_of_degree(nvars, d);
  std::unordered_map<Monomial, std::size_t, MonomialHash> rows;
  std::vector<Poly> imgs;
  for (const auto& m : mons) {
    imgs.push_back(substitute_monomial(m, nvars, images));
    for (const auto& t : imgs.back().terms()) rows.try_emplace(t.m, rows.size());
  }
  PrimeField F;
  DenseMatrix M(rows.size(), mons.size());
  for (std::size_t j = 0; j < imgs.size(); ++j)
    for (const auto& t : imgs[j].terms()) M.at(rows.at(t.m), j) = t.c;
  return mons.size() - rank(M, F);
}

}  // namespace

TEST(Groebner, LinearExample) {
  auto R = xyz();
  auto G = ideal_of(R, {"x-y", "y-z"}).gb();
  ASSERT_EQ(G.elements.size(), 2u);
  EXPECT_EQ(G.elements[0], parse_poly("y-z", R));
  EXPECT_EQ(G.elements[1], parse_poly("x-z", R));
  EXPECT_TRUE(verify_groebner(G));
}

TEST(Groebner, ConicMinorIsReduced) {
  auto R = make_ring(32003, 3);
  auto G = ideal_of(R, {"x0*x2-x1^2"}).gb();
  ASSERT_EQ(G.elements.size(), 1u);
  EXPECT_EQ(G.elements[0], parse_poly("x1^2-x0*x2", R));
}

TEST(Groebner, Scroll111) {
  auto R = make_ring(32003, 6);
  auto I = scroll111(R);
  const auto& G = I.gb();
  EXPECT_EQ(G.elements.size(), 3u);
  EXPECT_TRUE(verify_groebner(G));
}

TEST(Groebner, TwistedCubicOverQMatchesFp) {
  auto Rp = make_ring(32003, 4);
  auto Rq = make_ring(0, 4);
  std::vector<std::string> gens{"x0*x2-x1^2", "x1*x3-x2^2", "x0*x3-x1*x2", "x0^2+x3^2-x1*x2"};
  Ideal Ip = ideal_of(Rp, gens);
  std::vector<QPoly> q;
  for (const auto& s : gens) q.push_back(parse_polynomial<RationalField>(s, Rq));
  QIdeal Iq(Rq, q);
  ASSERT_EQ(Ip.gb().elements.size(), Iq.gb().elements.size());
  for (std::size_t k = 0; k < Ip.gb().elements.size(); ++k)
    EXPECT_EQ(to_string(Ip.gb().elements[k]), to_string(Iq.gb().elements[k]));
  EXPECT_TRUE(verify_groebner(Iq.gb()));
}

TEST(Groebner, PermutedGeneratorsSameBasis) {
  auto R = make_ring(32003, 6);
  auto a = ideal_of(R, {"x0*x3-x1*x2", "x0*x5-x1*x4", "x2*x5-x3*x4"});
  auto b = ideal_of(R, {"x2*x5-x3*x4", "x0*x3-x1*x2", "x0*x5-x1*x4", "x0*x3-x1*x2+x2*x5-x3*x4"});
  EXPECT_TRUE(ideal_equal(a, b));
}

TEST(NormalForm, Basics) {
  auto R = xyz();
  auto I = ideal_of(R, {"x-y"});
  EXPECT_EQ(normal_form(parse_poly("x^2", R), I.gb()), parse_poly("y^2", R));
  auto S = make_ring(32003, 6);
  auto J = scroll111(S);
  EXPECT_EQ(normal_form(Poly::constant(S, 1), J.gb()), Poly::constant(S, 1));
  for (const auto& g : J.generators()) EXPECT_TRUE(normal_form(g, J.gb()).is_zero());
  // NF(f + g h) = NF(f), NF idempotent
  Poly f = parse_poly("x0^3+x1*x2*x5-7*x4^2", S);
  Poly h = parse_poly("x3+2*x5", S);
  Poly nf = normal_form(f, J.gb());
  EXPECT_EQ(normal_form(f + J.generators()[1] * h, J.gb()), nf);
  EXPECT_EQ(normal_form(nf, J.gb()), nf);
}

TEST(Eliminate, HomogeneousModeRejectsAffine) {
  auto R = make_ring(32003, {"t", "x"}, MonomialOrder::grevlex(2));
  EXPECT_THROW(eliminate(ideal_of(R, {"t*x-1"}), {0}), PreconditionError);
}

TEST(Eliminate, AffineConic) {
  auto R = make_ring(32003, {"s", "t", "x0", "x1", "x2"}, MonomialOrder::grevlex(5));
  auto K = eliminate(ideal_of(R, {"x0-s^2", "x1-s*t", "x2-t^2"}), {0, 1}, true);
  ASSERT_EQ(K.gb().elements.size(), 1u);
  // oracle: the degree-2 kernel of the map is one-dimensional
  auto P = make_ring(32003, {"s", "t"}, MonomialOrder::grevlex(2));
  std::vector<Poly> img{parse_poly("s^2", P), parse_poly("s*t", P), parse_poly("t^2", P)};
  EXPECT_EQ(kernel_dim_oracle(3, 2, img), 1u);
  EXPECT_TRUE(substitute(K.gb().elements[0], img).is_zero());
  EXPECT_EQ(K.gb().elements[0].total_degree(), 2);
}

TEST(Eliminate, NothingToEliminate) {
  auto R = make_ring(32003, {"u", "v", "x0", "x1", "x2"}, MonomialOrder::grevlex(5));
  auto K = eliminate(ideal_of(R, {"x0*x2-x1^2"}), {0, 1});
  ASSERT_EQ(K.gb().elements.size(), 1u);
  EXPECT_EQ(to_string(K.gb().elements[0]), "x1^2-x0*x2");
}

TEST(KernelOfMap, TwistedCubic) {
  auto P = make_ring(32003, {"s", "t"}, MonomialOrder::grevlex(2));
  auto R = make_ring(32003, 4);
  std::vector<Poly> img{parse_poly("s^3", P), parse_poly("s^2t", P), parse_poly("st^2", P), parse_poly("t^3", P)};
  Ideal I = kernel_of_map(R, img);
  EXPECT_EQ(I.gb().elements.size(), 3u);
  EXPECT_EQ(kernel_dim_oracle(4, 2, img), 3u);
  for (const auto& g : I.gb().elements) {
    EXPECT_EQ(g.total_degree(), 2);
    EXPECT_TRUE(substitute(g, img).is_zero());
  }
  // degree-3 piece matches the oracle too
  EXPECT_EQ(graded_piece(I, 3).size(), kernel_dim_oracle(4, 3, img));
  EXPECT_TRUE(is_saturated(I));
  auto [dim, deg] = dim_degree(I);
  EXPECT_EQ(dim, 1);
  EXPECT_EQ(deg, 3);
}

TEST(KernelOfMap, Segre) {
  auto P = make_ring(32003, {"s", "t", "u", "v"}, MonomialOrder::grevlex(4));
  auto R = make_ring(32003, 4);
  std::vector<Poly> img{parse_poly("s*u", P), parse_poly("s*v", P), parse_poly("t*u", P), parse_poly("t*v", P)};
  Ideal I = kernel_of_map(R, img);
  ASSERT_EQ(I.gb().elements.size(), 1u);
  EXPECT_EQ(to_string(I.gb().elements[0]), "x1*x2-x0*x3");
}

TEST(KernelOfMap, Errors) {
  auto P = make_ring(32003, {"s", "t"}, MonomialOrder::grevlex(2));
  auto R = make_ring(32003, 2);
  EXPECT_THROW(kernel_of_map(R, std::vector<Poly>{parse_poly("s^2+t", P), parse_poly("t^2", P)}), PreconditionError);
  EXPECT_THROW(kernel_of_map(R, std::vector<Poly>{Poly(P), parse_poly("t^2", P)}), PreconditionError);
}

TEST(Intersect, Basics) {
  auto R = xyz();
  EXPECT_TRUE(ideal_equal(intersect(ideal_of(R, {"x"}), ideal_of(R, {"y"})), ideal_of(R, {"x*y"})));
  auto S = make_ring(32003, 6);
  auto I = scroll111(S);
  EXPECT_TRUE(ideal_equal(intersect(I, I), I));
}

TEST(Intersect, MembershipOracle) {
  auto R = make_ring(32003, 3);
  Ideal I = ideal_of(R, {"x0^2-x1*x2", "x1^3"});
  Ideal J = ideal_of(R, {"x0*x1", "x2^2-x0^2"});
  Ideal K = intersect(I, J);
  EXPECT_TRUE(verify_groebner(K.gb()));
  Rng rng(21);
  PrimeField F;
  int both = 0;
  for (int k = 0; k < 100; ++k) {
    // random element of I*J or of I or J alone, plus noise sometimes
    Poly f(R);
    for (int a = 0; a < 3; ++a) {
      const auto& gi = I.generators()[rng.next() % 2];
      const auto& gj = J.generators()[rng.next() % 2];
      Monomial m = Monomial::var(static_cast<int>(rng.next() % 3));
      switch (k % 3) {
        case 0: f += (gi * gj).mul_term(m, random_nonzero(rng, F)); break;
        case 1: f += gi.mul_term(m, random_nonzero(rng, F)); break;
        default: f += gj.mul_term(m, random_nonzero(rng, F)); break;
      }
    }
    bool in_both = contains(I, f) && contains(J, f);
    EXPECT_EQ(contains(K, f), in_both);
    both += in_both;
  }
  EXPECT_GT(both, 10);
}

TEST(Quotient, Basics) {
  auto R = xyz();
  EXPECT_TRUE(ideal_equal(quotient(ideal_of(R, {"x*y"}), ideal_of(R, {"x"})), ideal_of(R, {"y"})));
  auto [S, k] = saturate(ideal_of(R, {"x^2", "x*y"}), ideal_of(R, {"x", "y"}));
  EXPECT_TRUE(ideal_equal(S, ideal_of(R, {"x"})));
  EXPECT_EQ(k, 1);
  EXPECT_TRUE(is_saturated(ideal_of(R, {"x^2", "x*y"})));  // m = (x,y,z) is not associated
  EXPECT_FALSE(is_saturated(ideal_of(R, {"x^2", "x*y", "x*z"})));
}

TEST(Saturate, GeneralRouteMatchesIteratedQuotient) {
  auto R = make_ring(32003, 4);
  // twisted cubic with an embedded point at (0:0:0:1)
  Ideal C = ideal_of(R, {"x0*x2-x1^2", "x1*x3-x2^2", "x0*x3-x1*x2"});
  Ideal m2 = ideal_of(R, {"x0^2", "x0*x1", "x1^2", "x0*x2", "x1*x2", "x2^2", "x0*x3^2", "x1*x3^3", "x2*x3^4"});
  Ideal I = intersect(C, m2);
  EXPECT_FALSE(is_saturated(I));
  auto [S, k] = saturate(I, irrelevant_ideal<PrimeField>(R));
  EXPECT_TRUE(ideal_equal(S, C));
  EXPECT_GE(k, 1);
  // plain iterated quotient agrees
  Ideal cur = I;
  for (int i = 0; i < k; ++i) cur = quotient(cur, irrelevant_ideal<PrimeField>(R));
  EXPECT_TRUE(ideal_equal(cur, C));
  auto [S2, k2] = saturate(S, irrelevant_ideal<PrimeField>(R));
  EXPECT_TRUE(ideal_equal(S2, S));
  EXPECT_EQ(k2, 0);
}

TEST(Hilbert, Examples) {
  auto R6 = make_ring(32003, 6);
  auto h0 = hilbert_series(Ideal(R6, {}));
  EXPECT_EQ(h0.raw, (IntPoly{1}));
  EXPECT_EQ(h0.dim, 6);
  auto h = hilbert_series(scroll111(R6));
  EXPECT_EQ(h.reduced, (IntPoly{1, 2}));
  EXPECT_EQ(h.dim, 4);
  auto R4 = make_ring(32003, 4);
  auto c = hilbert_series(ideal_of(R4, {"x0*x2-x1^2", "x1*x3-x2^2", "x0*x3-x1*x2"}));
  EXPECT_EQ(c.reduced, (IntPoly{1, 2}));
  EXPECT_EQ(c.dim, 2);
  for (int j = 0; j < 10; ++j) EXPECT_EQ(c.value(j), 3 * j + 1);
}

TEST(Hilbert, AgreesWithLinearAlgebra) {
  auto R = make_ring(32003, 4);
  Ideal I = ideal_of(R, {"x0^2*x1-x2^3", "x1*x3^2-x0^3+x1^2*x2", "x0*x3-x1*x2"});
  auto h = hilbert_series(I);
  for (int d = 0; d <= 12; ++d) EXPECT_EQ(h.value(d), quotient_dimension(I, d)) << d;
}

TEST(DimDegree, Basics) {
  auto R = make_ring(32003, 4);
  auto [d, e] = dim_degree(ideal_of(R, {"x0", "x1"}));
  EXPECT_EQ(d, 1);
  EXPECT_EQ(e, 1);
  EXPECT_THROW(dim_degree(ideal_of(R, {"1"})), PreconditionError);
}

TEST(IdealEqual, Redundant) {
  auto R = xyz();
  EXPECT_TRUE(ideal_equal(ideal_of(R, {"x"}), ideal_of(R, {"x", "x^2"})));
  EXPECT_FALSE(ideal_equal(ideal_of(R, {"x"}), ideal_of(R, {"x^2"})));
}
