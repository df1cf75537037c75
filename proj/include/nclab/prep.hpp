#pragma once

#include <optional>

#include "nclab/gaussian.hpp"

namespace nclab {

// Coherent-state label for pointwise P evaluation.
struct PhasePoint {
  complex beta;
};

// Coefficients of the Gaussian quadratic form in the P density together with
// the eigenvalues of the underlying quadratic form (up to a fixed factor 4):
//   eig_plus  = 2(-1 + (2 nbar + 1) e^{+2(x+r)}),
//   eig_minus = 2(-1 + (2 nbar + 1) e^{-2(x+r)}).
// The identity discriminant = eig_plus * eig_minus / 4 ties both views.
struct PCoefficients {
  double a_sq;
  double b_sq;
  double c_coef;
  double discriminant;  // 4 a_sq b_sq - c_coef^2
  double eig_plus;
  double eig_minus;
};

// Existence threshold of the P density in scaled time.
struct PThreshold {
  std::optional<double> x_star;  // crossing time when strictly positive
  bool boundary;                 // the crossing sits exactly at x = 0
};

PCoefficients p_coefficients(const GaussianParams& params, ScaledTime x);

// Existence margin m = (2 nbar + 1) e^{-2(x+r)} - 1.
// m >= 0: P is a genuine probability density (classical);
// m <  0: nonclassical, P does not exist as a function.
// Independent of alpha and phi.
double p_exists_margin(const GaussianParams& params, ScaledTime x);

// Scaled time x* = ln(2 nbar + 1)/2 - r at which the margin crosses zero.
// Returns no value when the state is nonclassical from x = 0 on; the boundary
// flag marks the degenerate case x* = 0.
PThreshold p_threshold(double nbar, double r);

// P density at beta. Throws NonclassicalRegion when the margin is negative
// and DegenerateDistribution within 1e-12 of the delta-function boundary.
double p_value(const GaussianParams& params, ScaledTime x, PhasePoint beta);

// Evaluation kernel for grid sweeps: the density from precomputed
// coefficients and field amplitude, with no existence checks.
double p_density(const PCoefficients& coeffs, complex a_tau, complex beta);

}  // namespace nclab
