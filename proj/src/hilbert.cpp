#include "secreg/hilbert.hpp"

#include <algorithm>

#include "secreg/error.hpp"

namespace secreg {

void trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

IntPoly poly_mul(const IntPoly& a, const IntPoly& b) {
  if (a.empty() || b.empty()) return {};
  IntPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

static void add_shifted(IntPoly& acc, const IntPoly& p, int shift, std::int64_t sign) {
  if (acc.size() < p.size() + shift) acc.resize(p.size() + shift, 0);
  for (std::size_t i = 0; i < p.size(); ++i) acc[i + shift] += sign * p[i];
}

static void minimalize(std::vector<Monomial>& g) {
  std::sort(g.begin(), g.end(), [](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.raw_less(b);
  });
  std::vector<Monomial> out;
  for (const auto& m : g) {
    bool redundant = false;
    for (const auto& k : out)
      if (k.divides(m)) {
        redundant = true;
        break;
      }
    if (!redundant) out.push_back(m);
  }
  g.swap(out);
}

// Numerator of HS(S/J) over (1-t)^n; gens minimal.
static IntPoly numerator_rec(std::vector<Monomial> g) {
  if (g.empty()) return {1};
  // Pairwise coprime generators: product of (1 - t^deg).
  std::uint32_t seen = 0;
  bool coprime = true;
  int counts[kMaxVars] = {0};
  for (const auto& m : g) {
    std::uint32_t s = 0;
    for (int i = 0; i < kMaxVars; ++i)
      if (m[i]) {
        s |= 1u << i;
        ++counts[i];
      }
    if (s & seen) coprime = false;
    seen |= s;
  }
  if (coprime) {
    IntPoly r{1};
    for (const auto& m : g) {
      IntPoly f(m.degree() + 1, 0);
      f[0] = 1;
      f[m.degree()] -= 1;
      r = poly_mul(r, f);
    }
    return r;
  }
  int pivot = static_cast<int>(std::max_element(counts, counts + kMaxVars) - counts);
  // HS(S/J) numerator = N(J + x) + t * N(J : x)
  std::vector<Monomial> plus, colon;
  Monomial x = Monomial::var(pivot);
  plus.push_back(x);
  for (const auto& m : g) {
    if (!m[pivot]) plus.push_back(m);
    Monomial c = m;
    if (c[pivot]) c.set(pivot, c[pivot] - 1);
    colon.push_back(c);
  }
  minimalize(plus);
  minimalize(colon);
  IntPoly r = numerator_rec(std::move(plus));
  IntPoly q = numerator_rec(std::move(colon));
  add_shifted(r, q, 1, 1);
  trim(r);
  return r;
}

IntPoly hilbert_numerator(std::vector<Monomial> gens, int nvars) {
  (void)nvars;
  minimalize(gens);
  IntPoly r = numerator_rec(std::move(gens));
  trim(r);
  return r;
}

std::int64_t binom(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  __int128 r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return static_cast<std::int64_t>(r);
}

std::int64_t binom_poly(std::int64_t x, int m) {
  if (m < 0) return 0;
  __int128 r = 1;
  for (int i = 0; i < m; ++i) r = r * (x - i) / (i + 1);
  return static_cast<std::int64_t>(r);
}

HilbertSeries make_hilbert_series(IntPoly raw, int nvars) {
  HilbertSeries h;
  h.nvars = nvars;
  trim(raw);
  h.raw = raw;
  IntPoly n = raw;
  int dim = nvars;
  auto at_one = [](const IntPoly& p) {
    std::int64_t s = 0;
    for (auto c : p) s += c;
    return s;
  };
  while (!n.empty() && dim > 0 && at_one(n) == 0) {
    // divide by (1 - t): q_k = sum_{i<=k} n_i
    IntPoly q(n.size() - 1, 0);
    std::int64_t run = 0;
    for (std::size_t k = 0; k + 1 < n.size(); ++k) {
      run += n[k];
      q[k] = run;
    }
    n = q;
    trim(n);
    --dim;
  }
  h.reduced = n;
  h.dim = dim;
  return h;
}

std::int64_t HilbertSeries::value(int d) const {
  if (d < 0) return 0;
  std::int64_t s = 0;
  for (std::size_t k = 0; k < reduced.size(); ++k) {
    int e = d - static_cast<int>(k);
    if (e < 0) break;
    s += reduced[k] * (dim == 0 ? (e == 0 ? 1 : 0) : binom(e + dim - 1, dim - 1));
  }
  return s;
}

std::int64_t HilbertSeries::polynomial_value(int d) const {
  if (dim == 0) return 0;
  std::int64_t s = 0;
  for (std::size_t k = 0; k < reduced.size(); ++k)
    s += reduced[k] * binom_poly(d - static_cast<std::int64_t>(k) + dim - 1, dim - 1);
  return s;
}

std::int64_t HilbertSeries::degree() const {
  std::int64_t s = 0;
  for (auto c : reduced) s += c;
  return s;
}

}  // namespace secreg
