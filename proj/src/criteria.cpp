#include "nclab/criteria.hpp"

#include <cmath>

#include "nclab/charfunc.hpp"
#include "nclab/coherence.hpp"
#include "nclab/prep.hpp"
#include "nclab/root_finding.hpp"

namespace nclab {

namespace {

// Sign-change scan over precomputed margin samples, refined by bisection.
// A margin that is exactly zero at a node (always the case for the
// antibunching and rc margins at x = 0) does not count as a crossing.
template <class F>
std::vector<double> refine_crossings(F&& margin, const std::vector<double>& xs,
                                     const std::vector<double>& values) {
  std::vector<double> roots;
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    const double a = values[i], b = values[i + 1];
    if (a == 0.0 || b == 0.0) continue;
    if ((a < 0.0) != (b < 0.0))
      roots.push_back(bisect(margin, xs[i], xs[i + 1], 1e-10));
  }
  return roots;
}

}  // namespace

CriterionVerdict evaluate(const GaussianParams& params, ScaledTime x) {
  const double g2_0 = g2(params, ScaledTime(0.0));
  const double g2_x = g2(params, x);
  const double qm = mandel_q(params, x);
  const double margin = p_exists_margin(params, x);
  const double dist_0 = std::abs(g2_0 - 1.0);
  const double dist_x = std::abs(g2_x - 1.0);
  CriterionVerdict v;
  v.sub_poissonian = g2_0 < 1.0;
  v.antibunched_at_x = g2_0 < g2_x;
  v.rc_criterion_at_x = dist_0 < dist_x;
  v.mandel_negative_at_x = qm < 0.0;
  v.p_nonclassical_at_x = margin < 0.0;
  v.boundary = g2_0 == 1.0 || g2_0 == g2_x || dist_0 == dist_x || qm == 0.0 ||
               margin == 0.0;
  return v;
}

double rc_margin(const GaussianParams& params, ScaledTime x) {
  const double g2_0 = g2(params, ScaledTime(0.0));
  return std::abs(g2_0 - 1.0) - std::abs(g2(params, x) - 1.0);
}

ClassificationReport classify(const GaussianParams& params, double x_max,
                              int n_points) {
  validate(params);
  if (!(x_max > 0.0)) throw DomainError("x_max must be positive");
  if (n_points < 2) throw DomainError("n_points must be at least 2");

  const double g2_0 = g2(params, ScaledTime(0.0));
  ClassificationReport report;
  report.amplitude_quadrature = params.amplitude_quadrature();
  report.g2_limit = g2_asymptote(params);
  report.rc_limit = std::abs(g2_0 - 1.0) - std::abs(report.g2_limit - 1.0);

  const auto antibunching = [&](double x) {
    return g2(params, ScaledTime(x)) - g2_0;
  };
  const auto rc = [&](double x) { return rc_margin(params, ScaledTime(x)); };
  const auto qm = [&](double x) { return mandel_q(params, ScaledTime(x)); };
  const auto pmargin = [&](double x) {
    return p_exists_margin(params, ScaledTime(x));
  };

  std::vector<double> xs(n_points);
  std::vector<double> m_anti(n_points), m_rc(n_points), m_qm(n_points),
      m_p(n_points);
  report.verdict_curve.reserve(n_points);
  for (int i = 0; i < n_points; ++i) {
    const double x = x_max * double(i) / double(n_points - 1);
    xs[i] = x;
    m_anti[i] = antibunching(x);
    m_rc[i] = rc(x);
    m_qm[i] = qm(x);
    m_p[i] = pmargin(x);
    report.verdict_curve.emplace_back(x, evaluate(params, ScaledTime(x)));
  }

  report.crossings["antibunching"] = refine_crossings(antibunching, xs, m_anti);
  report.crossings["rc"] = refine_crossings(rc, xs, m_rc);
  report.crossings["qm"] = refine_crossings(qm, xs, m_qm);
  report.crossings["pmargin"] = refine_crossings(pmargin, xs, m_p);
  return report;
}

double critical_alpha(double nbar, double r) {
  if (!(nbar >= 0.0)) throw DomainError("nbar must be nonnegative");
  if (!(r > 0.0)) throw DomainError("critical_alpha requires r > 0");
  const auto excess = [&](double alpha_mag) {
    const GaussianParams p = amplitude_quadrature_params(nbar, r, alpha_mag);
    return g2_asymptote(p) - g2(p, ScaledTime(0.0));
  };
  // At alpha = 0 the initial coherence dominates its limit; grow the upper
  // bracket edge until the excess turns positive.
  if (excess(0.0) >= 0.0) return 0.0;
  double hi = 1.0;
  while (excess(hi) < 0.0) {
    hi *= 2.0;
    if (hi > 1e3)
      throw NoBracket(
          "g2(inf) - g2(0) does not change sign for |alpha| up to 1e3");
  }
  return bisect(excess, 0.0, hi, 1e-6);
}

}  // namespace nclab
