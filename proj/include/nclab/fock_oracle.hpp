#pragma once

#include <Eigen/Dense>

#include "nclab/charfunc.hpp"
#include "nclab/gaussian.hpp"

namespace nclab {

// State and ladder operator in a truncated Fock basis. The population of the
// top basis state gates truncation adequacy: every builder requires it to be
// below 1e-10 and throws TruncationError otherwise.
struct TruncatedState {
  int dim = 0;
  Eigen::MatrixXcd rho;
  Eigen::MatrixXcd annihilator;  // <k-1| a |k> = sqrt(k)
};

// Displaced squeezed thermal state built as D(alpha) S(xi) rho_0 S(-xi) D(-alpha)
// with matrix exponentials of the displacement and squeeze generators.
TruncatedState build_gaussian_state(const GaussianParams& params, int dim);

// The same state built by the preparation dynamics exp(-i H t_prep) rho_0
// exp(i H t_prep), with H from hamiltonian_coeffs. Must agree with
// build_gaussian_state to truncation accuracy; requires r > 0.
TruncatedState build_via_hamiltonian(const GaussianParams& params, int dim);

// Two-time coherence from first principles: with a(tau) = e^{iH tau} a e^{-iH tau}
// and tau = x t_prep / r, returns
//   Tr[rho a^dag a^dag(tau) a(tau) a] / (Tr[rho a^dag a] Tr[rho a^dag(tau) a(tau)]).
double oracle_g2(const GaussianParams& params, ScaledTime x, int dim);

// Moments of the evolved state read off by trace.
MomentSet oracle_observables(const GaussianParams& params, ScaledTime x, int dim);

// Normally ordered characteristic function of the evolved state,
// Tr[rho(x) e^{eta a^dag} e^{-eta* a}]; both factors are exact polynomials in
// the truncated basis.
complex oracle_chi(const GaussianParams& params, ScaledTime x, complex eta,
                   int dim);

// Retries fn with the dimension doubled (up to 320) whenever the truncation
// gate trips. fn receives the dimension to use.
template <class Fn>
auto with_dim_escalation(int dim, Fn&& fn) {
  for (;;) {
    try {
      return fn(dim);
    } catch (const TruncationError&) {
      if (2 * dim > 320) throw;
      dim *= 2;
    }
  }
}

}  // namespace nclab
