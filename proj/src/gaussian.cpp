#include "nclab/gaussian.hpp"

#include <cmath>

namespace nclab {

GaussianParams amplitude_quadrature_params(double nbar, double r,
                                           double alpha_mag, double phi,
                                           double t_prep) {
  GaussianParams p{nbar, r, 2.0 * phi, alpha_mag, phi, t_prep};
  validate(p);
  return p;
}

ScaledTime::ScaledTime(double value) : x(value) {
  if (!(value >= 0.0)) throw DomainError("scaled time x must be nonnegative");
}

const GaussianParams& validate(const GaussianParams& params) {
  if (!(params.nbar >= 0.0)) throw DomainError("nbar must be nonnegative");
  if (!(params.r >= 0.0)) throw DomainError("r must be nonnegative");
  if (!(params.alpha_mag >= 0.0))
    throw DomainError("alpha_mag must be nonnegative");
  if (!(params.t_prep > 0.0)) throw DomainError("t_prep must be positive");
  if (!std::isfinite(params.theta) || !std::isfinite(params.phi))
    throw DomainError("theta and phi must be finite");
  return params;
}

HamiltonianCoeffs hamiltonian_coeffs(const GaussianParams& params) {
  validate(params);
  if (!(params.r > 0.0))
    throw DomainError(
        "hamiltonian_coeffs requires r > 0: the coefficient map involves "
        "coth(r/2)");
  const double omega = params.r / params.t_prep;
  const complex minus_half_i(0.0, -0.5);
  const complex c = minus_half_i * omega * std::polar(1.0, params.theta);
  const complex alpha = params.alpha();
  const complex b = minus_half_i * omega *
                    (alpha * std::polar(1.0, -params.theta) +
                     std::conj(alpha) / std::tanh(0.5 * params.r));
  return {c, b};
}

namespace detail {
void require_dynamics(const GaussianParams& params, double x) {
  if (x > 0.0 && !(params.r > 0.0))
    throw DomainError(
        "evolution to x > 0 requires r > 0: the pump rate Omega = r/t "
        "vanishes");
}
}  // namespace detail

}  // namespace nclab
