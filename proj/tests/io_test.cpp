#include <gtest/gtest.h>

#include <sstream>

#include "oracles.hpp"
#include "secreg/io.hpp"

using namespace secreg;
using oracle::ideal_of;

namespace {

Ideal read(const std::string& text) {
  std::istringstream in(text);
  return read_ideal(in);
}

}  // namespace

TEST(IdealFile, RoundTrip) {
  for (const Ideal& I : {type1_surface(8).I, type2_surface(3, 5, "s^4t+s^3t^2+s^2t^3+st^4").I,
                         ideal_of(make_ring(101, {"a", "b", "c"}, MonomialOrder::lex(3)), {"a^2-3*b*c", "c^3+b"})}) {
    std::ostringstream out;
    write_ideal(out, I);
    Ideal back = read(out.str());
    EXPECT_EQ(back.ring()->header(), I.ring()->header());
    ASSERT_EQ(back.generators().size(), I.generators().size());
    for (std::size_t k = 0; k < I.generators().size(); ++k)
      EXPECT_EQ(to_string(back.generators()[k]), to_string(I.generators()[k]));
    std::ostringstream again;
    write_ideal(again, back);
    EXPECT_EQ(again.str(), out.str());
  }
}

TEST(IdealFile, HeaderAndComments) {
  Ideal I = read("# twisted cubic\nring 32003 x,y,z,w grevlex\n\nx*z-y^2\n# middle\ny*w-z^2\nx*w-y*z\n");
  EXPECT_EQ(I.generators().size(), 3u);
  EXPECT_EQ(I.ring()->nvars(), 4);
  EXPECT_EQ(dim_degree(I), std::make_pair(1, std::int64_t(3)));
  Ideal B = read("ring 7 x0,x1,x2,x3 block:2\nx0-x2\n");
  EXPECT_EQ(B.ring()->header(), "ring 7 x0,x1,x2,x3 block:2");
}

TEST(IdealFile, Errors) {
  EXPECT_THROW(read(""), ParseError);
  EXPECT_THROW(read("x^2\n"), ParseError);
  EXPECT_THROW(read("ring 32003 x,y grevlax\nx\n"), ParseError);
  EXPECT_THROW(read("ring 32004 x,y grevlex\nx\n"), PreconditionError);
  EXPECT_THROW(read("ring 0 x,y grevlex\nx\n"), ComputationError);
  try {
    read("ring 32003 x,y grevlex\nx+y\nx*+y\n");
    FAIL() << "no error";
  } catch (const ParseError& e) {
    std::string msg = e.what();
    EXPECT_NE(msg.find("line 3"), std::string::npos) << msg;
    EXPECT_EQ(msg.find("at offset", msg.find("at offset") + 1), std::string::npos) << msg;
  }
}

TEST(Format, Names) {
  EXPECT_EQ(parse_format("json"), Format::Json);
  EXPECT_EQ(parse_format("csv"), Format::Csv);
  EXPECT_EQ(parse_format("text"), Format::Text);
  EXPECT_THROW(parse_format("xml"), PreconditionError);
}

TEST(BettiOutput, SegreTextIsTheLinearStrand) {
  BettiTable B = betti_numbers(scroll_ideal({1, 1, 1}));
  std::string t = betti_text(B);
  EXPECT_NE(t.find("beta_i,1 |  3  2"), std::string::npos) << t;
  EXPECT_EQ(t.find("beta_i,2"), std::string::npos) << t;
}

TEST(BettiOutput, CsvRoundTrip) {
  for (const Ideal& I : {type2_surface(3, 5, "s^4t+s^3t^2+s^2t^3+st^4").I, scroll_ideal({1, 1, 1}),
                         ideal_of(make_ring(32003, 3), {"x0", "x1^2", "x2^3"})}) {
    BettiTable B = betti_numbers(I);
    EXPECT_EQ(betti_from_csv(betti_csv(B), B.nvars), B) << betti_csv(B);
  }
  EXPECT_THROW(betti_from_csv("i,1\n", 3), ParseError);
  EXPECT_THROW(betti_from_csv("j,i1\n1,x\n", 3), ParseError);
}

TEST(BettiOutput, JsonSchema) {
  BettiTable B = betti_numbers(type2_surface(3, 5, "s^4t+s^3t^2+s^2t^3+st^4").I);
  Json j = betti_json(B);
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  EXPECT_EQ(keys, (std::vector<std::string>{"pd", "reg_module", "reg_subscheme", "depth", "rows"}));
  EXPECT_EQ(j["pd"], 5);
  EXPECT_EQ(j["reg_subscheme"], 5);
  EXPECT_EQ(j["depth"], 2);
  EXPECT_EQ(j["rows"][3]["j"], 4);
  EXPECT_EQ(j["rows"][3]["beta"], Json::array({1, 4, 6, 4, 1}));
}

TEST(CohomologyOutput, JsonSchemaAndText) {
  CohomologyTable T;
  T.lo = -2;
  T.hi = 1;
  T.h1 = {0, 0, 0, 0};
  T.h2 = {6, 6, 6, 3};
  T.h3 = {7, 0, 0, 0};
  T.e = 6;
  Json j = cohomology_json(T);
  EXPECT_EQ(j.dump(), R"({"window":[-2,1],"h1":[0,0,0,0],"h2":[6,6,6,3],"h3":[7,0,0,0],"e":6,"N":"-inf"})");
  T.N = 4;
  T.e.reset();
  j = cohomology_json(T);
  EXPECT_EQ(j["N"], 4);
  EXPECT_TRUE(j["e"].is_null());
  std::string t = cohomology_text(T);
  EXPECT_NE(t.find("h2(I_X(j))"), std::string::npos);
  EXPECT_EQ(cohomology_csv(T).substr(0, 11), "j,h1,h2,h3\n");
}

TEST(SecantOutput, JsonSchema) {
  SecantReport s;
  s.n = 2;
  s.lengths = {5, 5};
  s.span_dim = 2;
  s.quadric_check = true;
  s.seed = 42;
  EXPECT_EQ(secant_json(s).dump(), R"({"n":2,"lengths":[5,5],"span_dim":2,"quadric_check":true,"seed":42})");
}
