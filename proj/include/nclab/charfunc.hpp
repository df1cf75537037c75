#pragma once

#include "nclab/gaussian.hpp"

namespace nclab {

// Argument of the characteristic function.
struct CharVariable {
  complex eta;
};

// Quadratic kernel of the Gaussian characteristic-function exponent:
//   T(x) = (1/2) e^{i theta} sinh[2(x+r)],   S(x) = cosh[2(x+r)].
// Satisfies S^2 - 4|T|^2 = 1.
struct QuadraticKernel {
  complex t_tau;
  double s_tau;
};

// First and second normally ordered field moments at scaled time x.
struct MomentSet {
  complex mean_a;      // <a> = A(x)
  double n_mean;       // <a^dag a>
  complex aa_central;  // <a^2> - <a>^2 = -2 (nbar+1/2) T
  double n_central;    // <a^dag a> - |<a>|^2 = (nbar+1/2) S - 1/2
  double a2dag_a2;     // <a^dag^2 a^2>
};

QuadraticKernel quadratic_kernel(const GaussianParams& params, ScaledTime x);

// Normally ordered characteristic function
//   chi(eta) = exp(|eta|^2/2 + eta A* - eta* A
//                  - (nbar+1/2)(eta^2 T* + eta*^2 T + |eta|^2 S)).
// chi(0) = 1 exactly.
complex chi(const GaussianParams& params, ScaledTime x, CharVariable eta);

// Moments in closed form from the Gaussian cumulants; the fourth-order moment
// follows from the Gaussian (Wick with means) expansion
//   <a^dag^2 a^2> = |<a>|^4 + 4|<a>|^2 n_c + 2 Re(<a>*^2 aa_c) + 2 n_c^2 + |aa_c|^2.
MomentSet moments(const GaussianParams& params, ScaledTime x);

// Mandel parameter (<a^dag^2 a^2> - <n>^2) / <n>, the normalized excess
// photon-number variance. Throws DegenerateState for the bare vacuum.
double mandel_q(const GaussianParams& params, ScaledTime x);

}  // namespace nclab
