#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "nclab/gaussian.hpp"

namespace nclab {

// Nonclassicality verdicts at one scaled time. Every inequality is strict;
// sitting exactly on a boundary counts as classical and raises `boundary`.
// Note that at x = 0 the antibunching and rc margins vanish identically, so
// the boundary flag is always set there.
struct CriterionVerdict {
  bool sub_poissonian = false;        // g2(0) < 1
  bool antibunched_at_x = false;      // g2(0) < g2(x)
  bool rc_criterion_at_x = false;     // |g2(0)-1| < |g2(x)-1|
  bool mandel_negative_at_x = false;  // Q_M(x) < 0
  bool p_nonclassical_at_x = false;   // P existence margin < 0
  bool boundary = false;              // some margin is exactly zero
};

// Regime classification over [0, x_max]: verdicts on a uniform grid, root
// locations of every criterion margin, and the exact large-x limits.
// Crossing keys: "antibunching" (g2(x) - g2(0)), "rc" (rc_margin),
// "qm" (Q_M(x)), "pmargin" (P existence margin).
struct ClassificationReport {
  std::vector<std::pair<double, CriterionVerdict>> verdict_curve;
  std::map<std::string, std::vector<double>> crossings;
  double g2_limit = 0.0;  // lim_{x->inf} g2(x)
  double rc_limit = 0.0;  // lim_{x->inf} rc_margin(x)
  bool amplitude_quadrature = false;
};

// All five verdicts at scaled time x. Throws DegenerateState for the vacuum.
CriterionVerdict evaluate(const GaussianParams& params, ScaledTime x);

// Grid scan (n_points uniform samples on [0, x_max]) followed by bisection
// refinement of every sign change to 1e-10 in x.
ClassificationReport classify(const GaussianParams& params, double x_max,
                              int n_points);

// rc_margin(x) = |g2(0)-1| - |g2(x)-1|; negative means the coherence has
// moved farther from unity than it started, a nonclassical signature.
double rc_margin(const GaussianParams& params, ScaledTime x);

// Coherent amplitude |alpha| at which g2(inf) = g2(0) under the
// amplitude-quadrature convention theta = 2*phi; found by bracket doubling
// plus bisection to 1e-6. Throws NoBracket when no sign change exists below
// |alpha| = 1e3.
double critical_alpha(double nbar, double r);

}  // namespace nclab
