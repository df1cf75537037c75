#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "nclab/prep.hpp"
#include "test_support.hpp"

using nclab::complex;
using nclab::GaussianParams;
using nclab::ScaledTime;

namespace {

double rel(double got, double want) {
  return std::abs(got - want) / std::fmax(1.0, std::abs(want));
}

}  // namespace

TEST_CASE("existence margin matches the frozen boundary constants") {
  const GaussianParams hot{1.0, 0.1, 0.0, 0.0, 0.0, 1.0};
  const GaussianParams cool{0.1, 0.1, 0.0, 0.0, 0.0, 1.0};
  CHECK(rel(nclab::p_exists_margin(hot, ScaledTime(0.0)) + 1.0,
            2.456192259233945576) < 1e-14);
  CHECK(rel(nclab::p_exists_margin(cool, ScaledTime(0.0)) + 1.0,
            0.9824769036935782304) < 1e-14);
  // Hot seed: classical at x = 0; cool seed: nonclassical from the start.
  CHECK(nclab::p_exists_margin(hot, ScaledTime(0.0)) > 0.0);
  CHECK(nclab::p_exists_margin(cool, ScaledTime(0.0)) < 0.0);
}

TEST_CASE("existence margin never depends on the displacement") {
  std::mt19937 rng(321);
  for (int i = 0; i < 200; ++i) {
    const double nbar = test_support::uniform(rng, 0.0, 2.0);
    const double r = test_support::uniform(rng, 0.0, 0.5);
    const double x = test_support::uniform(rng, 0.0, 2.0);
    const GaussianParams a{nbar, r, 0.3, test_support::uniform(rng, 0.0, 3.0),
                           test_support::uniform(rng, 0.0, 6.28), 1.0};
    const GaussianParams b{nbar, r, 0.3, test_support::uniform(rng, 0.0, 3.0),
                           test_support::uniform(rng, 0.0, 6.28), 1.0};
    // Bitwise equality: the margin formula never touches alpha or phi.
    CHECK(nclab::p_exists_margin(a, ScaledTime(x)) ==
          nclab::p_exists_margin(b, ScaledTime(x)));
  }
}

TEST_CASE("threshold crossing matches its frozen value") {
  const nclab::PThreshold t = nclab::p_threshold(1.0, 0.1);
  REQUIRE(t.x_star.has_value());
  CHECK(rel(*t.x_star, 0.4493061443340548457) < 1e-13);
  CHECK_FALSE(t.boundary);
}

TEST_CASE("threshold is absent when the state starts nonclassical") {
  const nclab::PThreshold t = nclab::p_threshold(0.1, 0.1);
  CHECK_FALSE(t.x_star.has_value());
  CHECK_FALSE(t.boundary);
}

TEST_CASE("threshold flags the exact boundary case") {
  // r = ln(2 nbar + 1)/2 puts the crossing exactly at x = 0.
  const nclab::PThreshold t = nclab::p_threshold(1.0, 0.5 * std::log(3.0));
  CHECK_FALSE(t.x_star.has_value());
  CHECK(t.boundary);
  // The bare vacuum P is a delta function: boundary as well.
  CHECK(nclab::p_threshold(0.0, 0.0).boundary);
  CHECK_THROWS_AS(nclab::p_threshold(-0.5, 0.1), nclab::DomainError);
  CHECK_THROWS_AS(nclab::p_threshold(0.5, -0.1), nclab::DomainError);
}

TEST_CASE("quadratic form coefficients diagonalize to the two eigenvalues") {
  std::mt19937 rng(888);
  for (int i = 0; i < 200; ++i) {
    const GaussianParams p{test_support::uniform(rng, 0.0, 1.5),
                           test_support::uniform(rng, 0.01, 0.8),
                           test_support::uniform(rng, 0.0, 6.28),
                           1.0,
                           0.2,
                           1.0};
    const ScaledTime x(test_support::uniform(rng, 0.0, 2.0));
    const nclab::PCoefficients c = nclab::p_coefficients(p, x);
    // Determinant and trace of [[a_sq, c/2], [c/2, b_sq]] against eig/4.
    const double det = c.a_sq * c.b_sq - 0.25 * c.c_coef * c.c_coef;
    const double want_det = c.eig_plus * c.eig_minus / 16.0;
    CHECK(std::abs(det - want_det) <= 1e-12 * std::fmax(1.0, std::abs(want_det)));
    const double tr = c.a_sq + c.b_sq;
    const double want_tr = 0.25 * (c.eig_plus + c.eig_minus);
    CHECK(std::abs(tr - want_tr) <= 1e-12 * std::fmax(1.0, std::abs(want_tr)));
    CHECK(rel(c.discriminant, 4.0 * det) < 1e-12);
  }
}

TEST_CASE("squeeze axes align with the coefficients at special phases") {
  const GaussianParams p{0.8, 0.3, 0.0, 0.0, 0.0, 1.0};
  const nclab::PCoefficients c = nclab::p_coefficients(p, ScaledTime(0.4));
  CHECK(c.c_coef == 0.0);
  CHECK(rel(c.a_sq, c.eig_plus / 4.0) < 1e-13);
  CHECK(rel(c.b_sq, c.eig_minus / 4.0) < 1e-13);
  // Rotating the squeeze phase by pi swaps the two axes.
  const GaussianParams q{0.8, 0.3, std::numbers::pi, 0.0, 0.0, 1.0};
  const nclab::PCoefficients d = nclab::p_coefficients(q, ScaledTime(0.4));
  CHECK(rel(d.a_sq, c.b_sq) < 1e-12);
  CHECK(rel(d.b_sq, c.a_sq) < 1e-12);
}

TEST_CASE("narrow-axis eigenvalue matches its frozen value") {
  const GaussianParams hot{1.0, 0.1, 0.0, 0.0, 0.0, 1.0};
  CHECK(rel(nclab::p_coefficients(hot, ScaledTime(0.0)).eig_minus,
            2.912384518467891152) < 1e-14);
}

TEST_CASE("unsqueezed limit reduces to the displaced thermal density") {
  const GaussianParams p{1.0, 0.0, 0.0, 1.0, 0.3, 1.0};
  const complex alpha = p.alpha();
  for (const complex beta :
       {alpha, alpha + complex(0.4, -0.2), complex(0.0, 0.0)}) {
    const double got = nclab::p_value(p, ScaledTime(0.0), {beta});
    const double want = std::exp(-std::norm(beta - alpha) / p.nbar) /
                        (std::numbers::pi * p.nbar);
    CHECK(rel(got, want) < 1e-13);
  }
}

TEST_CASE("density evaluation enforces the existence checks") {
  const GaussianParams cool{0.1, 0.1, 0.0, 0.0, 0.0, 1.0};
  CHECK_THROWS_AS(nclab::p_value(cool, ScaledTime(0.0), {complex(0, 0)}),
                  nclab::NonclassicalRegion);
  const GaussianParams edge{1.0, 0.5 * std::log(3.0), 0.0, 0.0, 0.0, 1.0};
  CHECK_THROWS_AS(nclab::p_value(edge, ScaledTime(0.0), {complex(0, 0)}),
                  nclab::DegenerateDistribution);
  const GaussianParams hot{1.0, 0.1, 0.0, 0.5, 0.0, 1.0};
  CHECK(nclab::p_value(hot, ScaledTime(0.0), {complex(0.5, 0.0)}) > 0.0);
}

TEST_CASE("density integrates to one with the field amplitude as mean") {
  const GaussianParams hot =
      nclab::amplitude_quadrature_params(1.0, 0.1, 1.5, 0.4);
  const ScaledTime x(0.2);  // margin = 3 e^{-0.6} - 1 = 0.646, wide of zero
  const test_support::PIntegral integral = test_support::integrate_p(hot, x);
  CHECK(std::abs(integral.norm - 1.0) < 1e-8);
  const complex a_tau = nclab::amplitude_A(hot, x);
  CHECK(std::abs(integral.mean - a_tau) < 1e-8 * std::fmax(1.0, std::abs(a_tau)));
}

TEST_CASE("density stays normalized close to the existence boundary") {
  // Tight margin: nbar = 0.2, r = 0.02, x = x* - 0.025 gives margin 0.0513.
  const double x_star = 0.5 * std::log(1.4) - 0.02;
  const GaussianParams p{0.2, 0.02, 0.04, 1.0, 0.02, 1.0};
  const ScaledTime x(x_star - 0.025);
  REQUIRE(nclab::p_exists_margin(p, x) > 0.05);
  const test_support::PIntegral integral = test_support::integrate_p(p, x, 500);
  CHECK(std::abs(integral.norm - 1.0) < 1e-7);
}

TEST_CASE("grid kernel matches the checked evaluation where both apply") {
  const GaussianParams hot{1.0, 0.1, 0.7, 1.0, 0.3, 1.0};
  const ScaledTime x(0.1);
  const nclab::PCoefficients c = nclab::p_coefficients(hot, x);
  const complex a_tau = nclab::amplitude_A(hot, x);
  const complex beta(0.8, -0.4);
  CHECK(nclab::p_density(c, a_tau, beta) ==
        nclab::p_value(hot, x, {beta}));
}
