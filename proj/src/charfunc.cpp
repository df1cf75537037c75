#include "nclab/charfunc.hpp"

#include <cmath>

#include "nclab/coherence.hpp"

namespace nclab {

QuadraticKernel quadratic_kernel(const GaussianParams& params, ScaledTime x) {
  validate(params);
  detail::require_dynamics(params, x.x);
  const double w = 2.0 * (x.x + params.r);
  return {0.5 * std::sinh(w) * std::polar(1.0, params.theta), std::cosh(w)};
}

complex chi(const GaussianParams& params, ScaledTime x, CharVariable eta) {
  const QuadraticKernel k = quadratic_kernel(params, x);
  const complex a_tau = amplitude_A(params, x);
  const complex e = eta.eta;
  const double abs2 = std::norm(e);
  // eta A* - eta* A is purely imaginary and the quadratic form purely real;
  // both cancellations are exact because each is a z + conj(z) pair.
  const complex linear = e * std::conj(a_tau) - std::conj(e) * a_tau;
  const complex quad = e * e * std::conj(k.t_tau) +
                       std::conj(e) * std::conj(e) * k.t_tau +
                       abs2 * k.s_tau;
  return std::exp(0.5 * abs2 + linear - (params.nbar + 0.5) * quad);
}

MomentSet moments(const GaussianParams& params, ScaledTime x) {
  const QuadraticKernel k = quadratic_kernel(params, x);
  const complex a_tau = amplitude_A(params, x);
  const double nb = params.nbar + 0.5;
  const double n_central = nb * k.s_tau - 0.5;
  const complex aa_central = -2.0 * nb * k.t_tau;
  const double abs2 = std::norm(a_tau);
  const double n_mean = n_central + abs2;
  const double a2dag_a2 =
      abs2 * abs2 + 4.0 * abs2 * n_central +
      2.0 * std::real(std::conj(a_tau) * std::conj(a_tau) * aa_central) +
      2.0 * n_central * n_central + std::norm(aa_central);
  return {a_tau, n_mean, aa_central, n_central, a2dag_a2};
}

double mandel_q(const GaussianParams& params, ScaledTime x) {
  const MomentSet m = moments(params, x);
  if (!(m.n_mean > 0.0))
    throw DegenerateState("mandel_q is undefined for the vacuum state");
  return (m.a2dag_a2 - m.n_mean * m.n_mean) / m.n_mean;
}

}  // namespace nclab
