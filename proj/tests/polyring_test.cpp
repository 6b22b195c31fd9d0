#include <gtest/gtest.h>

#include "secreg/parser.hpp"

using namespace secreg;

namespace {

RingPtr ring_x(int n, std::uint32_t p = 32003) { return make_ring(p, n); }

Poly random_poly(const RingPtr& R, Rng& rng, int terms, int maxdeg) {
  PrimeField F(R->characteristic());
  std::vector<Term<PrimeField>> t;
  for (int k = 0; k < terms; ++k) {
    Monomial m;
    for (int i = 0; i < R->nvars(); ++i) m.set(i, static_cast<int>(rng.next() % (maxdeg + 1)));
    t.push_back({m, random_element(rng, F)});
  }
  return Poly::from_terms(R, t);
}

}  // namespace

TEST(MonomialOrder, Grevlex) {
  auto o = MonomialOrder::grevlex(3);
  auto a = Monomial::from_exponents({2, 1, 0}), b = Monomial::from_exponents({1, 2, 0});
  EXPECT_EQ(o.compare(a, b), 1);
  EXPECT_EQ(o.compare(a, a), 0);
  // degree first
  EXPECT_EQ(o.compare(Monomial::from_exponents({0, 0, 3}), Monomial::from_exponents({1, 1, 0})), 1);
  // reverse lex: x1^2 > x0 x2
  EXPECT_EQ(o.compare(Monomial::from_exponents({0, 2, 0}), Monomial::from_exponents({1, 0, 1})), 1);
}

TEST(MonomialOrder, BlockEliminates) {
  auto o = MonomialOrder::elimination(10, 4);  // s,t,u,v >> x0..x5
  Monomial a = Monomial::from_exponents({1, 0, 0, 0, 5, 0, 0, 0, 0, 0});
  Monomial b = Monomial::from_exponents({0, 0, 0, 0, 6, 1, 0, 0, 0, 0});
  EXPECT_EQ(o.compare(a, b), 1);
}

TEST(MonomialOrder, Lex) {
  auto o = MonomialOrder::lex(2);
  EXPECT_EQ(o.compare(Monomial::from_exponents({1, 0}), Monomial::from_exponents({0, 5})), 1);
}

TEST(MonomialOrder, MultiplicativeAndRefinesDivisibility) {
  Rng rng(3);
  std::vector<MonomialOrder> orders{MonomialOrder::grevlex(4), MonomialOrder::lex(4),
                                    MonomialOrder::elimination(4, 2), MonomialOrder::grevlex(4, {3, 1, 2, 1})};
  for (const auto& o : orders)
    for (int k = 0; k < 300; ++k) {
      auto r = [&] {
        return Monomial::from_exponents({int(rng.next() % 4), int(rng.next() % 4), int(rng.next() % 4), int(rng.next() % 4)});
      };
      Monomial a = r(), b = r(), c = r();
      EXPECT_EQ(o.compare(a, b), o.compare(a * c, b * c));
      EXPECT_EQ(o.compare(a * c, a) >= 0, true);
    }
}

TEST(Monomial, OverflowChecked) {
  Monomial a = Monomial::var(0, 20000);
  EXPECT_THROW(a * a, ArithmeticError);
}

TEST(Polynomial, Arithmetic) {
  auto R = ring_x(2);
  auto x0 = Poly::variable(R, 0), x1 = Poly::variable(R, 1);
  EXPECT_EQ((x0 + x1) * (x0 - x1), x0 * x0 - x1 * x1);
  EXPECT_TRUE((x0 + x1 - (x0 + x1)).is_zero());
  auto R7 = ring_x(2, 7);
  auto y = Poly::variable(R7, 0);
  EXPECT_EQ(y.scaled(5) + y.scaled(3), y);
  EXPECT_THROW(x0 + y, RingMismatch);
}

TEST(Polynomial, RandomRingAxioms) {
  auto R = ring_x(3);
  Rng rng(5);
  for (int k = 0; k < 30; ++k) {
    Poly a = random_poly(R, rng, 5, 3), b = random_poly(R, rng, 4, 3), c = random_poly(R, rng, 3, 2);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
  }
}

TEST(Substitute, TwistedCubicRelation) {
  auto P = make_ring(32003, {"s", "t"}, MonomialOrder::grevlex(2));
  auto R = ring_x(4);
  std::vector<Poly> img{parse_poly("s^3", P), parse_poly("s^2t", P), parse_poly("st^2", P), parse_poly("t^3", P)};
  EXPECT_TRUE(substitute(parse_poly("x0*x3-x1*x2", R), img).is_zero());
  auto S1 = ring_x(1);
  EXPECT_EQ(substitute(Poly::variable(S1, 0), {parse_poly("s+t", P)}), parse_poly("s+t", P));
}

TEST(Substitute, QuadricOnLineIsBinaryQuadric) {
  // x0*x3 - x1*x2 restricted to s*p + t*q, expanded by hand.
  auto P = make_ring(32003, {"s", "t"}, MonomialOrder::grevlex(2));
  auto R = ring_x(6);
  std::vector<int> p{1, 2, 0, 3, 1, 1}, q{0, 1, 4, 1, 2, 5};
  std::vector<Poly> img;
  for (int i = 0; i < 6; ++i)
    img.push_back(Poly::variable(P, 0).scaled(PrimeField().from_int(p[i])) +
                  Poly::variable(P, 1).scaled(PrimeField().from_int(q[i])));
  Poly r = substitute(parse_poly("x0*x3-x1*x2", R), img);
  // (s)(3s+t) - (2s+t)(4t) = 3s^2 + st - 8st - 4t^2
  EXPECT_EQ(r, parse_poly("3s^2-7st-4t^2", P));
}

TEST(Substitute, Homomorphism) {
  auto R = ring_x(3);
  auto P = make_ring(32003, {"s", "t"}, MonomialOrder::grevlex(2));
  Rng rng(8);
  std::vector<Poly> img{random_poly(P, rng, 3, 2), random_poly(P, rng, 2, 2), random_poly(P, rng, 3, 1)};
  for (int k = 0; k < 10; ++k) {
    Poly f = random_poly(R, rng, 3, 2), g = random_poly(R, rng, 3, 2);
    EXPECT_EQ(substitute(f * g, img), substitute(f, img) * substitute(g, img));
    EXPECT_EQ(substitute(f + g, img), substitute(f, img) + substitute(g, img));
  }
  EXPECT_THROW(substitute(Poly::variable(R, 2), std::vector<Poly>{img[0], img[1]}), PreconditionError);
}

TEST(Parser, PaperForm) {
  auto P = make_ring(32003, {"s", "t"}, MonomialOrder::grevlex(2));
  Poly explicit_form = parse_poly("s^4*t+s^3*t^2+s^2*t^3+s*t^4", P);
  Poly implicit_form = parse_poly("s^4t+s^3t^2+s^2t^3+st^4", P);
  EXPECT_EQ(explicit_form, implicit_form);
  EXPECT_EQ(explicit_form.size(), 4u);
  auto s = Poly::variable(P, 0), t = Poly::variable(P, 1);
  EXPECT_EQ(explicit_form, s.pow(4) * t + s.pow(3) * t.pow(2) + s.pow(2) * t.pow(3) + s * t.pow(4));
}

TEST(Parser, Quadric) {
  auto R = ring_x(3);
  Poly q = parse_poly("x0*x2-x1^2", R);
  EXPECT_EQ(q, Poly::variable(R, 0) * Poly::variable(R, 2) - Poly::variable(R, 1).pow(2));
  EXPECT_EQ(parse_poly("x0x2 - x1^2", R), q);
  EXPECT_EQ(parse_poly("2(x0+x1)^2", R), (Poly::variable(R, 0) + Poly::variable(R, 1)).pow(2).scaled(2));
}

TEST(Parser, Errors) {
  auto R = ring_x(3);
  try {
    parse_poly("x0+*x1", R);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 3u);
  }
  EXPECT_THROW(parse_poly("x0+y", R), ParseError);
  EXPECT_THROW(parse_poly("(x0", R), ParseError);
  EXPECT_THROW(parse_poly("x0^", R), ParseError);
  EXPECT_THROW(parse_poly("", R), ParseError);
}

TEST(Parser, RoundTripRandom) {
  auto R = ring_x(4);
  Rng rng(9);
  for (int k = 0; k < 200; ++k) {
    Poly f = random_poly(R, rng, 1 + k % 7, 4);
    EXPECT_EQ(parse_poly(to_string(f), R), f) << to_string(f);
  }
  auto Q = make_ring(0, 3);
  QPoly g = parse_polynomial<RationalField>("1/2*x0^2 - 3/4 x1 + 5", Q);
  EXPECT_EQ(parse_polynomial<RationalField>(to_string(g), Q), g);
}
