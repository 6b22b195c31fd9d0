#pragma once

#include <iosfwd>
#include <string>

#include "json.hpp"

#include "secreg/cohom.hpp"
#include "secreg/secant.hpp"

namespace secreg {

using Json = nlohmann::ordered_json;

// "ring <char> <v1,v2,...> <order>", order one of grevlex, lex, block:k
RingPtr parse_ring_header(const std::string& line);

// Header line, then one polynomial per non-empty line. Lines starting with
// '#' are comments.
Ideal read_ideal(std::istream& in);
Ideal read_ideal_file(const std::string& path);
void write_ideal(std::ostream& out, const Ideal& I);

enum class Format { Text, Json, Csv };
Format parse_format(const std::string& s);

Json betti_json(const BettiTable& B);
// Rows j = 1..reg(S/I), columns i = 1..pd.
std::string betti_text(const BettiTable& B);
std::string betti_csv(const BettiTable& B);
BettiTable betti_from_csv(const std::string& csv, int nvars);

Json cohomology_json(const CohomologyTable& T);
std::string cohomology_text(const CohomologyTable& T);
std::string cohomology_csv(const CohomologyTable& T);

struct SecantReport {
  int n = 0;
  std::vector<int> lengths;
  int span_dim = 0;
  int quadric_dim = 0;
  bool quadric_check = false;
  std::uint64_t seed = 0;
  std::optional<bool> oracles_agree;  // GCD vs Hilbert polynomial lengths, when checked
};
SecantReport secant_report(const std::vector<SecantSample>& samples, const PluckerSpan& span, std::uint64_t seed);
Json secant_json(const SecantReport& s);
std::string secant_text(const SecantReport& s);
std::string secant_csv(const SecantReport& s);

Json invariants_json(const InvariantReport& r);
std::string invariants_text(const InvariantReport& r);
std::string invariants_csv(const InvariantReport& r);

// JSON text with a trailing newline; key order is fixed.
std::string dump(const Json& j);

}  // namespace secreg
