#pragma once

// Brute-force oracles shared by the test suites. Nothing here uses the
// resolution code: Tor is Koszul homology of S/I computed from normal forms.

#include <unordered_map>

#include "secreg/ideal_ops.hpp"
#include "secreg/linalg.hpp"
#include "secreg/parser.hpp"
#include "secreg/resolution.hpp"

namespace oracle {

using namespace secreg;

inline Ideal ideal_of(const RingPtr& R, const std::vector<std::string>& gens) {
  std::vector<Poly> g;
  for (const auto& s : gens) g.push_back(parse_poly(s, R));
  return Ideal(R, g);
}

// Standard monomials of degree d: a basis of (S/I)_d.
inline std::vector<Monomial> standard_monomials(const Ideal& I, int d) {
  auto leads = I.gb().lead_monomials();
  std::vector<Monomial> out;
  for (const auto& m : monomials_of_degree(I.ring()->nvars(), d)) {
    bool standard = true;
    for (const auto& l : leads)
      if (l.divides(m)) {
        standard = false;
        break;
      }
    if (standard) out.push_back(m);
  }
  return out;
}

inline std::vector<std::vector<int>> subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int v = start; v < n; ++v) {
      cur.push_back(v);
      self(self, v + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

// Rank of the Koszul differential  wedge^i V (x) (S/I)_{j}  ->  wedge^{i-1} V (x) (S/I)_{j+1}.
inline std::size_t koszul_rank(const Ideal& I, int i, int j) {
  if (i <= 0 || j < 0) return 0;
  const RingPtr& R = I.ring();
  int n = R->nvars();
  PrimeField F = field_of<PrimeField>(*R);
  auto src_sets = subsets(n, i), dst_sets = subsets(n, i - 1);
  auto src_mons = standard_monomials(I, j), dst_mons = standard_monomials(I, j + 1);
  if (src_sets.empty() || src_mons.empty() || dst_sets.empty() || dst_mons.empty()) return 0;
  std::map<std::vector<int>, std::size_t> set_idx;
  for (std::size_t k = 0; k < dst_sets.size(); ++k) set_idx[dst_sets[k]] = k;
  std::unordered_map<Monomial, std::size_t, MonomialHash> mon_idx;
  for (std::size_t k = 0; k < dst_mons.size(); ++k) mon_idx[dst_mons[k]] = k;
  const GroebnerBasis& G = I.gb();
  DenseMatrix M(0, dst_sets.size() * dst_mons.size());
  for (const auto& s : src_sets)
    for (const auto& m : src_mons) {
      std::vector<std::uint32_t> row(dst_sets.size() * dst_mons.size(), 0);
      for (int pos = 0; pos < i; ++pos) {
        std::vector<int> rest = s;
        rest.erase(rest.begin() + pos);
        std::size_t base = set_idx.at(rest) * dst_mons.size();
        Poly nf = normal_form(Poly::from_terms(R, {{m * Monomial::var(s[pos]), F.one()}}), G);
        for (const auto& t : nf.terms()) {
          std::uint32_t c = pos % 2 ? F.neg(t.c) : t.c;
          std::uint32_t& slot = row[base + mon_idx.at(t.m)];
          slot = F.add(slot, c);
        }
      }
      M.append_row(row);
    }
  return rank(M, F);
}

// beta_{i,j}(S/I) = dim Tor_i(k, S/I)_{i+j}
inline std::int64_t koszul_betti(const Ideal& I, int i, int j) {
  int n = I.ring()->nvars();
  if (i < 0 || i > n) return 0;
  std::int64_t dim = static_cast<std::int64_t>(subsets(n, i).size()) *
                     static_cast<std::int64_t>(standard_monomials(I, j).size());
  return dim - static_cast<std::int64_t>(koszul_rank(I, i, j)) -
         static_cast<std::int64_t>(koszul_rank(I, i + 1, j - 1));
}

// Whole table for rows j = 0..max_row.
inline BettiTable koszul_table(const Ideal& I, int max_row) {
  BettiTable B;
  B.nvars = I.ring()->nvars();
  for (int i = 0; i <= B.nvars; ++i)
    for (int j = 0; j <= max_row; ++j)
      if (auto b = koszul_betti(I, i, j)) B.entries[{i, j}] = b;
  return B;
}

}  // namespace oracle
