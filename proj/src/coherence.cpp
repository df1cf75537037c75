#include "nclab/coherence.hpp"

#include <cmath>
#include <stdexcept>

namespace nclab {

namespace {

// The closed forms below produce u and v as z + conj(z), so their imaginary
// parts cancel exactly; the guard only documents that expectation.
double realified(complex z, const char* what) {
  if (std::abs(z.imag()) > 1e-12 * std::fmax(1.0, std::abs(z.real())))
    throw std::logic_error(std::string(what) +
                           " acquired a non-negligible imaginary part");
  return z.real();
}

double mean_photons_initial(const GaussianParams& p) {
  return (p.nbar + 0.5) * std::cosh(2.0 * p.r) +
         p.alpha_mag * p.alpha_mag - 0.5;
}

}  // namespace

AmplitudeModes amplitude_modes(const GaussianParams& params) {
  validate(params);
  if (!(params.r > 0.0))
    throw DomainError("amplitude_modes requires r > 0: coth(r/2) diverges");
  const complex alpha = params.alpha();
  const double k = 1.0 / std::tanh(0.5 * params.r);
  // Relative phase between the squeeze axis and the coherent displacement;
  // e = 1 exactly under the theta = 2*phi convention.
  const complex e = std::polar(1.0, params.theta - 2.0 * params.phi);
  return {0.25 * alpha * (1.0 + k) * (1.0 - e),
          0.50 * alpha * (1.0 + e * k),
          0.25 * alpha * (1.0 - k) * (1.0 + e)};
}

complex amplitude_A(const GaussianParams& params, ScaledTime x) {
  validate(params);
  detail::require_dynamics(params, x.x);
  if (x.x == 0.0) return params.alpha();
  if (params.alpha_mag == 0.0) return {0.0, 0.0};
  // Summing the exponential modes avoids the catastrophic cancellation the
  // raw cosh/sinh bracket form suffers at large x when theta = 2*phi.
  const AmplitudeModes m = amplitude_modes(params);
  complex a = m.zero + m.minus * std::exp(-x.x);
  if (m.plus != complex(0.0, 0.0)) a += m.plus * std::exp(x.x);
  return a;
}

CoherenceIngredients ingredients(const GaussianParams& params, ScaledTime x) {
  validate(params);
  detail::require_dynamics(params, x.x);
  const double nb = params.nbar + 0.5;
  const complex a_tau = amplitude_A(params, x);
  const complex alpha = params.alpha();
  const double n = nb * std::cosh(x.x + 2.0 * params.r) - 0.5 * std::cosh(x.x);
  const double s = nb * std::sinh(x.x + 2.0 * params.r) - 0.5 * std::sinh(x.x);
  const complex u = alpha * std::conj(a_tau) + std::conj(alpha) * a_tau;
  const complex v = alpha * a_tau * std::polar(1.0, -params.theta) +
                    std::conj(alpha) * std::conj(a_tau) *
                        std::polar(1.0, params.theta);
  const double mean_n_tau =
      nb * std::cosh(2.0 * (x.x + params.r)) + std::norm(a_tau) - 0.5;
  return {a_tau,
          n,
          s,
          realified(u, "u"),
          realified(v, "v"),
          mean_photons_initial(params),
          mean_n_tau};
}

double g2(const GaussianParams& params, ScaledTime x) {
  validate(params);
  detail::require_dynamics(params, x.x);
  if (!(mean_photons_initial(params) > 0.0))
    throw DegenerateState("g2 is undefined for the vacuum state");
  if (x.x + 2.0 * params.r > 250.0)
    return detail::g2_scaled(params, std::exp(-x.x));
  const CoherenceIngredients ing = ingredients(params, x);
  const double num = ing.n_tau * ing.n_tau + ing.s_tau * ing.s_tau +
                     ing.u_tau * ing.n_tau - ing.v_tau * ing.s_tau;
  return 1.0 + num / (ing.mean_n0 * ing.mean_n_tau);
}

double g2_asymptote(const GaussianParams& params) {
  validate(params);
  if (!(params.r > 0.0))
    throw DomainError("g2_asymptote requires r > 0: no dynamics otherwise");
  return detail::g2_scaled(params, 0.0);
}

namespace detail {

double g2_scaled(const GaussianParams& params, double em) {
  const double nb = params.nbar + 0.5;
  const double grow = std::exp(2.0 * params.r);
  const double shrink = std::exp(-2.0 * params.r);
  const double n_lim = nb * grow - 0.5;   // limit of n e^{-x} and s e^{-x}
  const double n_rev = nb * shrink - 0.5;
  const double em2 = em * em;
  const double n_t = 0.5 * (n_lim + em2 * n_rev);
  const double s_t = 0.5 * (n_lim - em2 * n_rev);
  complex a_t(0.0, 0.0);  // A(x) e^{-x}
  double u_t = 0.0, v_t = 0.0;
  if (params.alpha_mag > 0.0) {
    const AmplitudeModes m = amplitude_modes(params);
    a_t = m.plus + em * m.zero + em2 * m.minus;
    const complex alpha = params.alpha();
    u_t = 2.0 * std::real(std::conj(alpha) * a_t);
    v_t = 2.0 * std::real(alpha * a_t * std::polar(1.0, -params.theta));
  }
  const double mean_n0 = (params.nbar + 0.5) * std::cosh(2.0 * params.r) +
                         params.alpha_mag * params.alpha_mag - 0.5;
  const double mean_t =
      0.5 * nb * (grow + em2 * em2 * shrink) + std::norm(a_t) - 0.5 * em2;
  const double num =
      n_t * n_t + s_t * s_t + u_t * n_t - v_t * s_t;
  return 1.0 + num / (mean_n0 * mean_t);
}

}  // namespace detail

}  // namespace nclab
