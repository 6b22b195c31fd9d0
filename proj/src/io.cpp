#include "secreg/io.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

#include "secreg/parser.hpp"

namespace secreg {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(trim(cur));
  return out;
}

std::string pad(const std::string& s, std::size_t w) { return std::string(w > s.size() ? w - s.size() : 0, ' ') + s; }

Json n_value(const std::optional<int>& N) {
  if (N) return *N;
  return "-inf";
}

}  // namespace

RingPtr parse_ring_header(const std::string& line) {
  std::istringstream in(line);
  std::string kw, ch, vars, order, extra;
  in >> kw >> ch >> vars >> order;
  if (kw != "ring" || ch.empty() || vars.empty()) throw ParseError("expected 'ring <char> <vars> <order>'", 0);
  if (in >> extra) throw ParseError("trailing text after ring order", 0);
  if (order.empty()) order = "grevlex";
  std::uint64_t p = 0;
  try {
    std::size_t used = 0;
    p = std::stoull(ch, &used);
    if (used != ch.size()) throw ParseError("bad characteristic '" + ch + "'", 0);
  } catch (const std::logic_error&) {
    throw ParseError("bad characteristic '" + ch + "'", 0);
  }
  if (p > 0xffffffffULL) throw ParseError("characteristic too large", 0);
  std::vector<std::string> names = split(vars, ',');
  int n = static_cast<int>(names.size());
  for (const auto& v : names)
    if (v.empty()) throw ParseError("empty variable name", 0);
  MonomialOrder ord;
  if (order == "grevlex") {
    ord = MonomialOrder::grevlex(n);
  } else if (order == "lex") {
    ord = MonomialOrder::lex(n);
  } else if (order.rfind("block:", 0) == 0) {
    int k = 0;
    try {
      k = std::stoi(order.substr(6));
    } catch (const std::logic_error&) {
      throw ParseError("bad block order '" + order + "'", 0);
    }
    if (k <= 0 || k >= n) throw ParseError("block split out of range", 0);
    ord = MonomialOrder::elimination(n, k);
  } else {
    throw ParseError("unknown monomial order '" + order + "'", 0);
  }
  return make_ring(static_cast<std::uint32_t>(p), names, ord);
}

Ideal read_ideal(std::istream& in) {
  std::string line;
  RingPtr R;
  std::vector<Poly> gens;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    if (!R) {
      R = parse_ring_header(t);
      if (R->characteristic() == 0)
        throw ComputationError("ideal files over characteristic 0 are not supported by the command line tools");
      continue;
    }
    try {
      gens.push_back(parse_poly(t, R));
    } catch (const ParseError& e) {
      std::string msg = e.what();
      msg = msg.substr(0, msg.rfind(" at offset "));
      throw ParseError("line " + std::to_string(lineno) + ": " + msg, e.offset());
    }
  }
  if (!R) throw ParseError("missing ring header", 0);
  return Ideal(R, gens);
}

Ideal read_ideal_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot open " + path);
  return read_ideal(in);
}

void write_ideal(std::ostream& out, const Ideal& I) {
  out << I.ring()->header() << "\n";
  for (const auto& g : I.generators()) out << to_string(g) << "\n";
}

Format parse_format(const std::string& s) {
  if (s == "text") return Format::Text;
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  throw PreconditionError("unknown format '" + s + "'");
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

// ---------------------------------------------------------------- Betti

Json betti_json(const BettiTable& B) {
  Json j;
  j["pd"] = B.pd();
  j["reg_module"] = B.reg();
  j["reg_subscheme"] = regularity_of_subscheme(B);
  j["depth"] = B.depth();
  Json rows = Json::array();
  for (int r = 1; r <= B.reg(); ++r) {
    Json beta = Json::array();
    for (int i = 1; i <= B.pd(); ++i) beta.push_back(B.at(i, r));
    rows.push_back(Json{{"j", r}, {"beta", beta}});
  }
  j["rows"] = rows;
  return j;
}

// Row 0 only shows up for ideals with linear generators.
static int first_row(const BettiTable& B) {
  for (const auto& [k, v] : B.entries)
    if (k.first >= 1 && k.second == 0 && v) return 0;
  return 1;
}

std::string betti_text(const BettiTable& B) {
  int pd = B.pd(), reg = B.reg();
  std::size_t w = 3;
  for (const auto& [k, v] : B.entries) w = std::max(w, std::to_string(v).size() + 1);
  std::ostringstream out;
  std::string lead = "beta_i," + std::to_string(std::max(reg, 1));
  std::size_t lw = lead.size() + 1;
  out << pad("i", lw) << " |";
  for (int i = 1; i <= pd; ++i) out << pad(std::to_string(i), w);
  out << "\n" << std::string(lw + 2 + w * static_cast<std::size_t>(std::max(pd, 0)), '-') << "\n";
  for (int r = first_row(B); r <= reg; ++r) {
    out << pad("beta_i," + std::to_string(r), lw) << " |";
    for (int i = 1; i <= pd; ++i) out << pad(std::to_string(B.at(i, r)), w);
    out << "\n";
  }
  out << "pd " << pd << "  depth " << B.depth() << "  reg(S/I) " << reg << "  reg(X) " << regularity_of_subscheme(B)
      << "\n";
  return out.str();
}

std::string betti_csv(const BettiTable& B) {
  std::ostringstream out;
  out << "j";
  for (int i = 1; i <= B.pd(); ++i) out << ",i" << i;
  out << "\n";
  for (int r = first_row(B); r <= B.reg(); ++r) {
    out << r;
    for (int i = 1; i <= B.pd(); ++i) out << "," << B.at(i, r);
    out << "\n";
  }
  return out.str();
}

BettiTable betti_from_csv(const std::string& csv, int nvars) {
  BettiTable B;
  B.nvars = nvars;
  B.entries[{0, 0}] = 1;
  std::istringstream in(csv);
  std::string line;
  bool header = true;
  while (std::getline(in, line)) {
    if (trim(line).empty()) continue;
    auto cells = split(line, ',');
    if (header) {
      if (cells.empty() || cells[0] != "j") throw ParseError("Betti CSV must start with a 'j' column", 0);
      header = false;
      continue;
    }
    try {
      int r = std::stoi(cells.at(0));
      for (std::size_t i = 1; i < cells.size(); ++i) {
        std::int64_t v = std::stoll(cells[i]);
        if (v) B.entries[{static_cast<int>(i), r}] = v;
      }
    } catch (const std::logic_error&) {
      throw ParseError("bad Betti CSV row '" + line + "'", 0);
    }
  }
  return B;
}

// ---------------------------------------------------------------- cohomology

Json cohomology_json(const CohomologyTable& T) {
  Json j;
  j["window"] = Json::array({T.lo, T.hi});
  j["h1"] = T.h1;
  j["h2"] = T.h2;
  j["h3"] = T.h3;
  j["e"] = T.e ? Json(*T.e) : Json(nullptr);
  j["N"] = n_value(T.N);
  return j;
}

std::string cohomology_text(const CohomologyTable& T) {
  std::size_t w = 4;
  for (const auto* col : {&T.h1, &T.h2, &T.h3})
    for (auto v : *col) w = std::max(w, std::to_string(v).size() + 1);
  std::ostringstream out;
  out << pad("j", 14) << " |";
  for (int j = T.lo; j <= T.hi; ++j) out << pad(std::to_string(j), w);
  out << "\n" << std::string(16 + w * T.h1.size(), '-') << "\n";
  const char* names[] = {"h1(I_X(j))", "h2(I_X(j))", "h3(I_X(j))"};
  const std::vector<std::int64_t>* cols[] = {&T.h1, &T.h2, &T.h3};
  for (int k = 0; k < 3; ++k) {
    out << pad(names[k], 14) << " |";
    for (auto v : *cols[k]) out << pad(std::to_string(v), w);
    out << "\n";
  }
  out << "e " << (T.e ? std::to_string(*T.e) : std::string("unstable")) << "  N "
      << (T.N ? std::to_string(*T.N) : std::string("-inf")) << "\n";
  return out.str();
}

std::string cohomology_csv(const CohomologyTable& T) {
  std::ostringstream out;
  out << "j,h1,h2,h3\n";
  for (int j = T.lo; j <= T.hi; ++j) {
    std::size_t k = static_cast<std::size_t>(j - T.lo);
    out << j << "," << T.h1[k] << "," << T.h2[k] << "," << T.h3[k] << "\n";
  }
  return out.str();
}

// ---------------------------------------------------------------- secant

SecantReport secant_report(const std::vector<SecantSample>& samples, const PluckerSpan& span, std::uint64_t seed) {
  SecantReport r;
  r.n = static_cast<int>(samples.size());
  for (const auto& s : samples) r.lengths.push_back(s.length ? *s.length : -1);
  r.span_dim = span.span_dim;
  r.quadric_dim = span.quadric_dim;
  r.quadric_check = span.quadric_check;
  r.seed = seed;
  return r;
}

Json secant_json(const SecantReport& s) {
  Json j;
  j["n"] = s.n;
  j["lengths"] = s.lengths;
  j["span_dim"] = s.span_dim;
  j["quadric_check"] = s.quadric_check;
  j["seed"] = s.seed;
  if (s.oracles_agree) j["oracles_agree"] = *s.oracles_agree;
  return j;
}

std::string secant_text(const SecantReport& s) {
  std::ostringstream out;
  out << "lines " << s.n << "  seed " << s.seed << "\nlengths";
  for (int l : s.lengths) out << " " << l;
  out << "\nplucker span " << s.span_dim << "  quadrics " << s.quadric_dim << "  holdout "
      << (s.quadric_check ? "consistent" : "inconsistent") << "\n";
  if (s.oracles_agree) out << "length oracles " << (*s.oracles_agree ? "agree" : "DISAGREE") << "\n";
  return out.str();
}

std::string secant_csv(const SecantReport& s) {
  std::ostringstream out;
  out << "line,length\n";
  for (std::size_t i = 0; i < s.lengths.size(); ++i) out << i << "," << s.lengths[i] << "\n";
  return out.str();
}

// ---------------------------------------------------------------- invariants

Json invariants_json(const InvariantReport& r) {
  Json j;
  j["d"] = r.d;
  j["r"] = r.r;
  j["dim"] = r.dim;
  j["reg"] = r.reg_x;
  j["sreg"] = r.sreg;
  j["sreg_samples"] = r.sreg_samples;
  j["depth"] = r.depth_x;
  j["depth_y"] = r.depth_y ? Json(*r.depth_y) : Json(nullptr);
  j["tau"] = r.depth_y ? Json::array({r.depth_x, *r.depth_y}) : Json(nullptr);
  j["e"] = r.e;
  j["N"] = n_value(r.N);
  j["sigma"] = r.sigma;
  j["h1_1"] = r.h1_1;
  j["h1_2"] = r.h1_2;
  j["case"] = r.case_label ? Json(*r.case_label) : Json(nullptr);
  return j;
}

std::string invariants_text(const InvariantReport& r) {
  std::ostringstream out;
  out << "d " << r.d << "  r " << r.r << "  dim " << r.dim << "\n";
  out << "reg(X) " << r.reg_x << "  sreg(X) " << r.sreg << " (samples";
  for (int s : r.sreg_samples) out << " " << s;
  out << ")\n";
  out << "depth(X) " << r.depth_x;
  if (r.depth_y) out << "  depth(Y) " << *r.depth_y << "  tau (" << r.depth_x << "," << *r.depth_y << ")";
  out << "\n";
  out << "e(X) " << r.e << "  N(X) " << (r.N ? std::to_string(*r.N) : std::string("-inf")) << "  sigma " << r.sigma
      << "\n";
  out << "h1(I_X(1)) " << r.h1_1 << "  h1(I_X(2)) " << r.h1_2 << "\n";
  if (r.case_label) out << "case " << *r.case_label << "\n";
  return out.str();
}

std::string invariants_csv(const InvariantReport& r) {
  std::ostringstream out;
  out << "d,r,reg,sreg,depth,depth_y,e,N,sigma,h1_1,h1_2,case\n";
  out << r.d << "," << r.r << "," << r.reg_x << "," << r.sreg << "," << r.depth_x << ","
      << (r.depth_y ? std::to_string(*r.depth_y) : "") << "," << r.e << ","
      << (r.N ? std::to_string(*r.N) : std::string("-inf")) << "," << r.sigma << "," << r.h1_1 << "," << r.h1_2
      << "," << (r.case_label ? std::to_string(*r.case_label) : "") << "\n";
  return out.str();
}

}  // namespace secreg
