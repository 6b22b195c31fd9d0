#include "secreg/secant.hpp"

#include <algorithm>

#include "secreg/linalg.hpp"

namespace secreg {

namespace {

using Coeffs = std::vector<std::uint32_t>;  // index = power of the first variable

void trim_coeffs(Coeffs& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Coeffs mul_coeffs(const Coeffs& a, const Coeffs& b, const PrimeField& F) {
  if (a.empty() || b.empty()) return {};
  Coeffs out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = F.add(out[i + j], F.mul(a[i], b[j]));
  return out;
}

// a mod b, b nonzero with nonzero top coefficient
Coeffs rem_coeffs(Coeffs a, const Coeffs& b, const PrimeField& F) {
  std::uint32_t lead_inv = F.inv(b.back());
  trim_coeffs(a);
  while (a.size() >= b.size()) {
    std::uint32_t c = F.mul(a.back(), lead_inv);
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = F.sub(a[shift + i], F.mul(c, b[i]));
    trim_coeffs(a);
  }
  return a;
}

Coeffs gcd_coeffs(Coeffs a, Coeffs b, const PrimeField& F) {
  trim_coeffs(a);
  trim_coeffs(b);
  while (!b.empty()) {
    Coeffs r = rem_coeffs(a, b, F);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// g(s p + t q) as coefficients of s^k t^(D-k)
Coeffs restrict_to_line(const Poly& g, const Line& L, const PrimeField& F) {
  int n = g.ring()->nvars();
  int D = g.total_degree();
  Coeffs out(static_cast<std::size_t>(D) + 1, 0);
  for (const auto& term : g.terms()) {
    Coeffs acc{term.c};
    for (int i = 0; i < n; ++i) {
      Coeffs lin{L.q[i], L.p[i]};
      for (int e = 0; e < term.m[i]; ++e) acc = mul_coeffs(acc, lin, F);
    }
    acc.resize(out.size(), 0);
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = F.add(out[k], acc[k]);
  }
  return out;
}

void check_line(const Ideal& I, const Line& L, const PrimeField& F) {
  std::size_t n = static_cast<std::size_t>(I.ring()->nvars());
  if (L.p.size() != n || L.q.size() != n) throw PreconditionError("line points have the wrong number of coordinates");
  if (is_degenerate(L, F)) throw PreconditionError("degenerate line: the two points are dependent");
}

}  // namespace

bool is_degenerate(const Line& L, const PrimeField& F) {
  for (auto c : plucker(L, F))
    if (c) return false;
  return true;
}

std::vector<std::uint32_t> plucker(const Line& L, const PrimeField& F) {
  std::vector<std::uint32_t> out;
  std::size_t n = L.p.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) out.push_back(F.sub(F.mul(L.p[i], L.q[j]), F.mul(L.p[j], L.q[i])));
  return out;
}

std::optional<int> secant_length(const Ideal& I, const Line& L) {
  PrimeField F = field_of<PrimeField>(*I.ring());
  check_line(I, L, F);
  Coeffs g;
  int t_mult = -1;
  for (const auto& f : I.generators()) {
    Coeffs c = restrict_to_line(f, L, F);
    int D = static_cast<int>(c.size()) - 1;
    trim_coeffs(c);
    if (c.empty()) continue;
    int m = D - (static_cast<int>(c.size()) - 1);
    t_mult = t_mult < 0 ? m : std::min(t_mult, m);
    g = gcd_coeffs(std::move(g), std::move(c), F);
  }
  if (t_mult < 0) return std::nullopt;
  return t_mult + static_cast<int>(g.size()) - 1;
}

std::optional<int> secant_length_hilbert(const Ideal& I, const Line& L) {
  const RingPtr& R = I.ring();
  PrimeField F = field_of<PrimeField>(*R);
  check_line(I, L, F);
  std::size_t n = L.p.size();
  DenseMatrix M(2, n);
  for (std::size_t i = 0; i < n; ++i) {
    M.at(0, i) = L.p[i];
    M.at(1, i) = L.q[i];
  }
  DenseMatrix K = kernel(M, F);
  std::vector<Poly> gens = I.generators();
  for (std::size_t k = 0; k < K.rows(); ++k) {
    std::vector<Term<PrimeField>> t;
    for (std::size_t i = 0; i < n; ++i)
      if (K.at(k, i)) t.push_back({Monomial::var(static_cast<int>(i)), K.at(k, i)});
    gens.push_back(Poly::from_terms(R, std::move(t)));
  }
  HilbertSeries H = hilbert_series(Ideal(R, std::move(gens)));
  if (H.dim >= 2) return std::nullopt;
  if (H.dim == 0) return 0;
  return static_cast<int>(H.degree());
}

std::vector<SecantSample> sample_secant_lines(const SurfaceSpec& spec, const Ideal& I, int n, std::uint64_t seed) {
  if (n < 1) throw PreconditionError("need at least one line");
  PrimeField F = field_of<PrimeField>(*I.ring());
  std::size_t nv = static_cast<std::size_t>(I.ring()->nvars());
  if (spec.kind == SurfaceKind::TypeI && nv != 6) throw PreconditionError("type I surfaces live in P^5");
  if (spec.kind == SurfaceKind::TypeII && static_cast<int>(nv) != spec.r + 1)
    throw PreconditionError("ideal does not match the surface spec");
  if (spec.kind == SurfaceKind::Scroll) throw PreconditionError("no secant sampler for scrolls");

  std::vector<SecantSample> out;
  for (int k = 0; k < n; ++k) {
    Rng rng = Rng::derive(seed, static_cast<std::uint64_t>(k));
    bool done = false;
    for (int attempt = 0; attempt < kRetryBudget && !done; ++attempt) {
      Line L{std::vector<std::uint32_t>(nv, 0), std::vector<std::uint32_t>(nv, 0)};
      if (spec.kind == SurfaceKind::TypeII) {
        for (std::size_t i = static_cast<std::size_t>(spec.a) + 1; i < nv; ++i) {
          L.p[i] = random_element(rng, F);
          L.q[i] = random_element(rng, F);
        }
      } else {
        // x = (y0 s, y0 t, y1 s, y1 t, y2 s, y2 t) on [[x0,x2,x4],[x1,x3,x5]]
        for (std::size_t i = 0; i < 3; ++i) {
          std::uint32_t y = random_element(rng, F);
          L.p[2 * i] = y;
          L.q[2 * i + 1] = y;
        }
      }
      if (is_degenerate(L, F)) continue;
      auto len = secant_length(I, L);
      if (!len) continue;
      out.push_back({L, len, plucker(L, F)});
      done = true;
    }
    if (!done)
      throw ComputationError("secant sampling: retry budget exhausted for line " + std::to_string(k) +
                             " (seed " + std::to_string(seed) + ")");
  }
  return out;
}

PluckerSpan plucker_span(const std::vector<SecantSample>& samples, const PrimeField& F) {
  if (samples.size() < 2) throw PreconditionError("Plucker span needs at least two samples");
  std::size_t m = samples[0].plucker.size();
  DenseMatrix P(0, m);
  for (const auto& s : samples) {
    if (s.plucker.size() != m) throw PreconditionError("Plucker vectors of different lengths");
    P.append_row(s.plucker);
  }
  std::vector<std::size_t> piv = row_reduce(P, F);
  PluckerSpan out;
  out.span_dim = static_cast<int>(piv.size()) - 1;
  if (piv.empty()) throw PreconditionError("zero Plucker vectors");

  // Coordinates in the span: reduced rows are unit vectors on the pivots.
  std::size_t k = piv.size();
  std::vector<std::vector<std::uint32_t>> coords;
  for (const auto& s : samples) {
    std::vector<std::uint32_t> c;
    for (std::size_t j : piv) c.push_back(s.plucker[j]);
    coords.push_back(std::move(c));
  }
  auto quadric_row = [&](const std::vector<std::uint32_t>& c) {
    std::vector<std::uint32_t> row;
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = a; b < k; ++b) row.push_back(F.mul(c[a], c[b]));
    return row;
  };
  out.holdout = static_cast<int>(samples.size() / 4);
  std::size_t fit = samples.size() - static_cast<std::size_t>(out.holdout);
  std::size_t nq = k * (k + 1) / 2;
  DenseMatrix A(0, nq);
  for (std::size_t i = 0; i < fit; ++i) A.append_row(quadric_row(coords[i]));
  DenseMatrix Q = kernel(A, F);
  out.quadric_dim = static_cast<int>(Q.rows());
  out.quadric_check = true;
  for (std::size_t i = fit; i < samples.size() && out.quadric_check; ++i) {
    auto row = quadric_row(coords[i]);
    for (std::size_t q = 0; q < Q.rows(); ++q) {
      std::uint32_t v = 0;
      for (std::size_t j = 0; j < nq; ++j) v = F.add(v, F.mul(Q.at(q, j), row[j]));
      if (v) {
        out.quadric_check = false;
        break;
      }
    }
  }
  return out;
}

}  // namespace secreg
