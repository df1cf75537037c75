#include "nclab/prep.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "nclab/charfunc.hpp"
#include "nclab/coherence.hpp"

namespace nclab {

PCoefficients p_coefficients(const GaussianParams& params, ScaledTime x) {
  const QuadraticKernel k = quadratic_kernel(params, x);
  const double nb = params.nbar + 0.5;
  const double two_re_t = 2.0 * k.t_tau.real();
  const double a_sq = -0.5 + nb * (two_re_t + k.s_tau);
  const double b_sq = -0.5 - nb * (two_re_t - k.s_tau);
  // i (T* - T) pairs two imaginary quantities into a real coefficient; the
  // product is exactly real in floating point, but assert rather than assume.
  const complex c = complex(0.0, -2.0) * nb * (std::conj(k.t_tau) - k.t_tau);
  if (std::abs(c.imag()) > 1e-12 * std::fmax(1.0, std::abs(c.real())))
    throw std::logic_error("cross coefficient of the P quadratic form is not real");
  const double c_coef = c.real();
  const double w = 2.0 * (x.x + params.r);
  const double scale = 2.0 * params.nbar + 1.0;
  return {a_sq,
          b_sq,
          c_coef,
          4.0 * a_sq * b_sq - c_coef * c_coef,
          2.0 * (-1.0 + scale * std::exp(w)),
          2.0 * (-1.0 + scale * std::exp(-w))};
}

double p_exists_margin(const GaussianParams& params, ScaledTime x) {
  validate(params);
  return (2.0 * params.nbar + 1.0) * std::exp(-2.0 * (x.x + params.r)) - 1.0;
}

PThreshold p_threshold(double nbar, double r) {
  if (!(nbar >= 0.0)) throw DomainError("nbar must be nonnegative");
  if (!(r >= 0.0)) throw DomainError("r must be nonnegative");
  const double x_star = 0.5 * std::log(2.0 * nbar + 1.0) - r;
  if (x_star > 0.0) return {x_star, false};
  return {std::nullopt, x_star == 0.0};
}

double p_value(const GaussianParams& params, ScaledTime x, PhasePoint beta) {
  const double margin = p_exists_margin(params, x);
  if (std::abs(margin) < 1e-12)
    throw DegenerateDistribution(
        "P degenerates to a delta function at the existence boundary");
  if (margin < 0.0)
    throw NonclassicalRegion(
        "P does not exist as a probability density: existence margin is "
        "negative");
  return p_density(p_coefficients(params, x), amplitude_A(params, x),
                   beta.beta);
}

double p_density(const PCoefficients& coeffs, complex a_tau, complex beta) {
  const double f = 2.0 * (a_tau.real() - beta.real());
  const double d = 2.0 * (beta.imag() - a_tau.imag());
  const double form =
      coeffs.a_sq * f * f + coeffs.b_sq * d * d + coeffs.c_coef * f * d;
  return (2.0 / std::numbers::pi) / std::sqrt(coeffs.discriminant) *
         std::exp(-form / coeffs.discriminant);
}

}  // namespace nclab
