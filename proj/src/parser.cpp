#include "secreg/parser.hpp"

namespace secreg {

std::string monomial_to_string(const Monomial& m, const Ring& R) {
  if (m.is_one()) return "1";
  std::string s;
  for (int i = 0; i < R.nvars(); ++i) {
    if (!m[i]) continue;
    if (!s.empty()) s += "*";
    s += R.name(i);
    if (m[i] > 1) s += "^" + std::to_string(m[i]);
  }
  return s;
}

static bool split_rec(std::string_view rest, const Ring& R, std::vector<int>& out) {
  if (rest.empty()) return true;
  // longest match first
  for (std::size_t len = rest.size(); len >= 1; --len) {
    int v = R.var_index(rest.substr(0, len));
    if (v < 0) continue;
    out.push_back(v);
    if (split_rec(rest.substr(len), R, out)) return true;
    out.pop_back();
  }
  return false;
}

std::vector<int> split_identifier(std::string_view ident, const Ring& R) {
  std::vector<int> out;
  if (!split_rec(ident, R, out)) out.clear();
  return out;
}

}  // namespace secreg
