#pragma once

#include "giq/problem.hpp"
#include "giq/series.hpp"

namespace giq {

struct PresetSeries {
  PoincareSeries equivariant;   // P^K_t(M^ss)
  PoincareSeries intersection;  // IP_t of the quotient, a polynomial
  BettiPolynomial betti;
  int dimension = 0;            // real dimension of the quotient
};

/// C^* acting on P^n with n_plus positive, n_zero zero and n_minus negative
/// weights. Throws BalanceError unless n_plus == n_minus.
PresetSeries preset_pn_cstar(int n_plus, int n_zero, int n_minus);

/// SL(2) acting on ordered 2n-tuples of points of P^1, n >= 2.
PresetSeries preset_p1_sl2(int n);

/// Full problems driving every stage. The C^* generator accepts unbalanced
/// weights so that the balance failure path can be exercised.
ProblemSpec problem_pn_cstar(int n_plus, int n_zero, int n_minus);
ProblemSpec problem_p1_sl2(int n);

}  // namespace giq
