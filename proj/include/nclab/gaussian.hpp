#pragma once

#include <complex>

#include "nclab/errors.hpp"

namespace nclab {

using complex = std::complex<double>;

// Physical parameters of a displaced squeezed thermal state driven by a
// degenerate parametric amplifier. The pump rate is Omega = r / t_prep, and
// all time-dependent quantities are functions of the scaled time x = Omega*tau.
struct GaussianParams {
  double nbar = 0.0;       // mean thermal photon number of the seed state
  double r = 0.0;          // squeeze magnitude, xi = r e^{i theta}
  double theta = 0.0;      // squeeze phase (radians)
  double alpha_mag = 0.0;  // coherent amplitude magnitude |alpha|
  double phi = 0.0;        // coherent phase (radians), alpha = |alpha| e^{i phi}
  double t_prep = 1.0;     // preparation time t; kept only for the Fock oracle

  complex alpha() const { return std::polar(alpha_mag, phi); }
  complex xi() const { return std::polar(r, theta); }

  // True when the squeeze phase locks to the coherent phase as theta = 2*phi,
  // the convention that squeezes the amplitude quadrature.
  bool amplitude_quadrature() const { return theta == 2.0 * phi; }
};

// Convenience factory enforcing theta = 2*phi exactly.
GaussianParams amplitude_quadrature_params(double nbar, double r,
                                           double alpha_mag, double phi = 0.0,
                                           double t_prep = 1.0);

// Dimensionless evolution time x = Omega * tau >= 0.
struct ScaledTime {
  double x = 0.0;

  ScaledTime() = default;
  explicit ScaledTime(double value);
};

// Returns `params` unchanged when every invariant holds; otherwise throws
// DomainError naming the violated field.
const GaussianParams& validate(const GaussianParams& params);

// Coefficients of H = c a^dag^2 + c* a^2 + b a + b* a^dag (hbar = 1).
struct HamiltonianCoeffs {
  complex c;
  complex b;
};

// Maps the state parameters to the Hamiltonian coefficients that prepare the
// state in time t_prep. Requires r > 0 (the map involves coth(r/2)).
HamiltonianCoeffs hamiltonian_coeffs(const GaussianParams& params);

namespace detail {
// Guards operations that evolve in time: x > 0 needs a nonzero pump rate.
void require_dynamics(const GaussianParams& params, double x);
}  // namespace detail

}  // namespace nclab
