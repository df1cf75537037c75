#pragma once

#include "nclab/gaussian.hpp"

namespace nclab {

// Building blocks of the two-time coherence at scaled time x.
struct CoherenceIngredients {
  complex a_tau;      // field amplitude A(x); A(0) = alpha
  double n_tau;       // (nbar+1/2) cosh(x+2r) - cosh(x)/2
  double s_tau;       // (nbar+1/2) sinh(x+2r) - sinh(x)/2
  double u_tau;       // alpha A* + alpha* A
  double v_tau;       // alpha A e^{-i theta} + alpha* A* e^{i theta}
  double mean_n0;     // photon number at x = 0
  double mean_n_tau;  // photon number at x
};

// Coefficients of the exponential decomposition
//   A(x) = plus * e^{x} + zero + minus * e^{-x}.
// `plus` vanishes identically under the amplitude-quadrature convention
// theta = 2*phi, which is what keeps A(x) bounded there. Requires r > 0.
struct AmplitudeModes {
  complex plus;
  complex zero;
  complex minus;
};

AmplitudeModes amplitude_modes(const GaussianParams& params);

// Field amplitude A(x) = <a> at scaled time x. A(0) equals alpha exactly.
complex amplitude_A(const GaussianParams& params, ScaledTime x);

CoherenceIngredients ingredients(const GaussianParams& params, ScaledTime x);

// Two-time second-order coherence
//   g2(x) = 1 + (n^2 + s^2 + u n - v s) / (<n(0)> <n(x)>).
// Throws DegenerateState for the bare vacuum. For x + 2r > 250 the evaluation
// switches to a form with the dominant e^{x} growth factored out, so it never
// overflows.
double g2(const GaussianParams& params, ScaledTime x);

// Exact x -> infinity limit of g2, evaluated without overflow. Requires r > 0.
double g2_asymptote(const GaussianParams& params);

namespace detail {
// g2 with every ingredient scaled by its dominant e^{x} growth; em = e^{-x}.
// em = 0 yields the asymptote. Algebraically identical to g2 for em = e^{-x}.
double g2_scaled(const GaussianParams& params, double em);
}  // namespace detail

}  // namespace nclab
