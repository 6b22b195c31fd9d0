#pragma once

#include <utility>

#include "secreg/groebner.hpp"
#include "secreg/hilbert.hpp"

namespace secreg {

// Move f into ring T; variable i of f's ring becomes variable varmap[i]
// of T (-1: the variable must not occur).
template <class Field>
BasicPolynomial<Field> map_variables(const BasicPolynomial<Field>& f, const RingPtr& T,
                                     const std::vector<int>& varmap);

template <class Field>
bool contains(const BasicIdeal<Field>& I, const BasicPolynomial<Field>& f);

// Exact quotient f / g; throws if g does not divide f.
template <class Field>
BasicPolynomial<Field> divide_exact(const BasicPolynomial<Field>& f, const BasicPolynomial<Field>& g);

// I ∩ k[kept variables]. The result lives in a grevlex ring on the kept
// variables. Homogeneous input is required unless `affine` is set.
template <class Field>
BasicIdeal<Field> eliminate(const BasicIdeal<Field>& I, const std::vector<int>& vars, bool affine = false);

// Kernel of k[x_0..x_n] -> k[params], x_i -> images[i]. The images must be
// homogeneous of one common degree for some positive weighting of the
// parameters (found by search). Result is a homogeneous ideal in `target`.
template <class Field>
BasicIdeal<Field> kernel_of_map(const RingPtr& target, const std::vector<BasicPolynomial<Field>>& images);

template <class Field>
BasicIdeal<Field> intersect(const BasicIdeal<Field>& I, const BasicIdeal<Field>& J);

template <class Field>
BasicIdeal<Field> quotient(const BasicIdeal<Field>& I, const BasicPolynomial<Field>& g);
template <class Field>
BasicIdeal<Field> quotient(const BasicIdeal<Field>& I, const BasicIdeal<Field>& J);

// (I : J^∞) and the first k with I : J^k = I : J^{k+1}.
template <class Field>
std::pair<BasicIdeal<Field>, int> saturate(const BasicIdeal<Field>& I, const BasicIdeal<Field>& J);

// (x_0, ..., x_n) of I's ring.
template <class Field>
BasicIdeal<Field> irrelevant_ideal(const RingPtr& R);

// Exact test that (I : m) = I. A cheap certificate is tried first: for a
// random linear form h, HS(S/(I,h)) = (1-t) HS(S/I) proves that h is a
// non-zero-divisor. Only when it fails is the colon computed.
template <class Field>
bool is_saturated(const BasicIdeal<Field>& I, std::uint64_t seed = 0);

// Substitute x_k = rest of a linear form and drop x_k: the ideal of the
// section by {h = 0} in the remaining variables (not saturated).
template <class Field>
BasicIdeal<Field> restrict_to_hyperplane(const BasicIdeal<Field>& I, const BasicPolynomial<Field>& h);

template <class Field>
HilbertSeries hilbert_series(const BasicIdeal<Field>& I);

// (projective dimension, degree)
template <class Field>
std::pair<int, std::int64_t> dim_degree(const BasicIdeal<Field>& I);

template <class Field>
bool ideal_equal(const BasicIdeal<Field>& I, const BasicIdeal<Field>& J);

// Degree-d part of I as a basis of polynomials, by linear algebra on
// generator multiples (independent of Groebner bases). Prime fields only.
std::vector<Poly> graded_piece(const Ideal& I, int d);

// dim (S/I)_d from graded_piece.
std::int64_t quotient_dimension(const Ideal& I, int d);

#define SECREG_IDEAL_OPS_EXTERN(F)                                                                   \
  extern template BasicPolynomial<F> map_variables(const BasicPolynomial<F>&, const RingPtr&,        \
                                                   const std::vector<int>&);                         \
  extern template bool contains(const BasicIdeal<F>&, const BasicPolynomial<F>&);                    \
  extern template BasicPolynomial<F> divide_exact(const BasicPolynomial<F>&, const BasicPolynomial<F>&); \
  extern template BasicIdeal<F> eliminate(const BasicIdeal<F>&, const std::vector<int>&, bool);      \
  extern template BasicIdeal<F> kernel_of_map(const RingPtr&, const std::vector<BasicPolynomial<F>>&); \
  extern template BasicIdeal<F> intersect(const BasicIdeal<F>&, const BasicIdeal<F>&);               \
  extern template BasicIdeal<F> quotient(const BasicIdeal<F>&, const BasicPolynomial<F>&);           \
  extern template BasicIdeal<F> quotient(const BasicIdeal<F>&, const BasicIdeal<F>&);                \
  extern template std::pair<BasicIdeal<F>, int> saturate(const BasicIdeal<F>&, const BasicIdeal<F>&); \
  extern template BasicIdeal<F> irrelevant_ideal(const RingPtr&);                                    \
  extern template bool is_saturated(const BasicIdeal<F>&, std::uint64_t);                            \
  extern template BasicIdeal<F> restrict_to_hyperplane(const BasicIdeal<F>&, const BasicPolynomial<F>&); \
  extern template HilbertSeries hilbert_series(const BasicIdeal<F>&);                                \
  extern template std::pair<int, std::int64_t> dim_degree(const BasicIdeal<F>&);                     \
  extern template bool ideal_equal(const BasicIdeal<F>&, const BasicIdeal<F>&);

SECREG_IDEAL_OPS_EXTERN(PrimeField)
SECREG_IDEAL_OPS_EXTERN(RationalField)

}  // namespace secreg
