#pragma once

#include "gkzcy/groebner.hpp"
#include "gkzcy/poly.hpp"

namespace gkzcy {

// Indicial ideal in Q[rho_1..rho_{p-d}]: one generator per Groebner basis
// element, from the leading theta-operator conjugated by a_0^{-1} x^rho.
struct IndicialIdeal {
    std::vector<Poly> generators;
    MoriBasis basis;
    bool radical_form = false;  // generators from rad(LT) (type III companion)
};

IndicialIdeal indicial_ideal(const GroebnerBasis& gb, const MoriBasis& basis);
// "Radical" companion ideal Ind~: each leading exponent squarefree-ified.
IndicialIdeal radical_indicial_ideal(const GroebnerBasis& gb, const MoriBasis& basis);

// Hilbert function of Q[rho]/<gens> for homogeneous gens, degrees 0..cap.
// Stops early once a degree hits zero (all higher degrees vanish).
std::vector<int> hilbert_function(const std::vector<Poly>& gens, int nvars, int cap);

// True iff all generators are homogeneous and the quotient ring is finite
// dimensional (staircase linear algebra), i.e. V(Ind) = {0}.
bool indicial_variety_is_origin(const IndicialIdeal& ind);

// dim_Q of Q[rho]/Ind when finite (homogeneous case); throws otherwise.
// For inhomogeneous ideals in one variable falls back to the degree.
int quotient_dimension(const IndicialIdeal& ind);

}  // namespace gkzcy
