#include "nclab/fock_oracle.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace nclab {

namespace {

using Mat = Eigen::MatrixXcd;

constexpr double kLeakageGate = 1e-10;

Mat annihilator_op(int dim) {
  Mat a = Mat::Zero(dim, dim);
  for (int k = 1; k < dim; ++k) a(k - 1, k) = std::sqrt(double(k));
  return a;
}

// Thermal density operator, geometric weights renormalized over the
// truncated basis.
Mat thermal_density(double nbar, int dim) {
  Eigen::VectorXd weights = Eigen::VectorXd::Zero(dim);
  if (nbar == 0.0) {
    weights(0) = 1.0;
  } else {
    const double q = nbar / (nbar + 1.0);
    double w = 1.0, sum = 0.0;
    for (int k = 0; k < dim; ++k) {
      weights(k) = w;
      sum += w;
      w *= q;
    }
    weights /= sum;
  }
  Mat rho = Mat::Zero(dim, dim);
  rho.diagonal() = weights.cast<complex>();
  return rho;
}

// exp(G) for anti-Hermitian G, via the eigendecomposition of the Hermitian
// matrix iG: exp(G) = U exp(-i Lambda) U^dag.
Mat exp_antihermitian(const Mat& g) {
  Eigen::SelfAdjointEigenSolver<Mat> es(complex(0.0, 1.0) * g);
  const Eigen::VectorXd& lambda = es.eigenvalues();
  Eigen::VectorXcd phases(lambda.size());
  for (Eigen::Index i = 0; i < lambda.size(); ++i)
    phases(i) = std::exp(complex(0.0, -lambda(i)));
  return es.eigenvectors() * phases.asDiagonal() *
         es.eigenvectors().adjoint();
}

Mat displacement_op(complex alpha, int dim) {
  const Mat a = annihilator_op(dim);
  return exp_antihermitian(alpha * a.adjoint() - std::conj(alpha) * a);
}

Mat squeeze_op(complex xi, int dim) {
  const Mat a = annihilator_op(dim);
  return exp_antihermitian(
      0.5 * (std::conj(xi) * a * a - xi * a.adjoint() * a.adjoint()));
}

Mat hamiltonian_matrix(const GaussianParams& params, int dim) {
  const HamiltonianCoeffs hc = hamiltonian_coeffs(params);
  const Mat a = annihilator_op(dim);
  const Mat ad = a.adjoint();
  return hc.c * ad * ad + std::conj(hc.c) * a * a + hc.b * a +
         std::conj(hc.b) * ad;
}

// exp(-i H t) from a precomputed eigendecomposition of H.
Mat propagator(const Eigen::SelfAdjointEigenSolver<Mat>& es, double t) {
  const Eigen::VectorXd& lambda = es.eigenvalues();
  Eigen::VectorXcd phases(lambda.size());
  for (Eigen::Index i = 0; i < lambda.size(); ++i)
    phases(i) = std::exp(complex(0.0, -lambda(i) * t));
  return es.eigenvectors() * phases.asDiagonal() *
         es.eigenvectors().adjoint();
}

void check_leakage(const Mat& rho, const char* what) {
  const double top = rho(rho.rows() - 1, rho.cols() - 1).real();
  if (!(top < kLeakageGate))
    throw TruncationError(std::string(what) +
                          ": population of the top Fock state (" +
                          std::to_string(top) +
                          ") exceeds the truncation gate 1e-10; enlarge dim");
}

void check_dim(int dim) {
  if (dim < 16) throw DomainError("oracle dimension must be at least 16");
}

// Density operator at scaled time x (rho itself at x = 0).
Mat evolved_density(const GaussianParams& params, ScaledTime x,
                    const Mat& rho) {
  if (x.x == 0.0) return rho;
  const Mat h = hamiltonian_matrix(params, int(rho.rows()));
  const Eigen::SelfAdjointEigenSolver<Mat> es(h);
  const double tau = x.x * params.t_prep / params.r;
  const Mat u = propagator(es, tau);
  Mat evolved = u * rho * u.adjoint();
  check_leakage(evolved, "evolved state");
  return evolved;
}

// Lower-triangular matrix of e^{eta a^dag}; exact in the truncated basis
// because the truncated a^dag is nilpotent. Column recurrence:
// E(n,n) = 1, E(m+1,n) = E(m,n) * eta * sqrt(m+1) / (m-n+1).
Mat exp_eta_adagger(complex eta, int dim) {
  Mat e = Mat::Zero(dim, dim);
  for (int n = 0; n < dim; ++n) {
    e(n, n) = 1.0;
    for (int m = n; m + 1 < dim; ++m)
      e(m + 1, n) = e(m, n) * eta * std::sqrt(double(m + 1)) / double(m - n + 1);
  }
  return e;
}

}  // namespace

TruncatedState build_gaussian_state(const GaussianParams& params, int dim) {
  validate(params);
  check_dim(dim);
  const Mat ds =
      displacement_op(params.alpha(), dim) * squeeze_op(params.xi(), dim);
  Mat rho = ds * thermal_density(params.nbar, dim) * ds.adjoint();
  check_leakage(rho, "gaussian state");
  return {dim, std::move(rho), annihilator_op(dim)};
}

TruncatedState build_via_hamiltonian(const GaussianParams& params, int dim) {
  validate(params);
  check_dim(dim);
  const Mat h = hamiltonian_matrix(params, dim);
  const Eigen::SelfAdjointEigenSolver<Mat> es(h);
  const Mat u = propagator(es, params.t_prep);
  Mat rho = u * thermal_density(params.nbar, dim) * u.adjoint();
  check_leakage(rho, "prepared state");
  return {dim, std::move(rho), annihilator_op(dim)};
}

double oracle_g2(const GaussianParams& params, ScaledTime x, int dim) {
  const TruncatedState st = build_gaussian_state(params, dim);
  const Mat& a = st.annihilator;
  const Mat number = a.adjoint() * a;

  Mat number_tau = number;  // a^dag(tau) a(tau)
  Mat rho_tau = st.rho;
  if (x.x > 0.0) {
    const Mat h = hamiltonian_matrix(params, dim);
    const Eigen::SelfAdjointEigenSolver<Mat> es(h);
    const double tau = x.x * params.t_prep / params.r;
    const Mat u = propagator(es, tau);
    rho_tau = u * st.rho * u.adjoint();
    check_leakage(rho_tau, "evolved state");
    number_tau = u.adjoint() * number * u;
  }

  const double den_0 = (st.rho * number).trace().real();
  const double den_tau = (rho_tau * number).trace().real();
  if (!(den_0 > 0.0) || !(den_tau > 0.0))
    throw DegenerateState("oracle g2 is undefined for the vacuum state");
  const Mat sandwich = a * st.rho * a.adjoint();
  const double num = (sandwich * number_tau).trace().real();
  return num / (den_0 * den_tau);
}

MomentSet oracle_observables(const GaussianParams& params, ScaledTime x,
                             int dim) {
  const TruncatedState st = build_gaussian_state(params, dim);
  const Mat rho_tau = evolved_density(params, x, st.rho);
  const Mat& a = st.annihilator;
  const complex mean_a = (rho_tau * a).trace();
  const double n_mean = (rho_tau * a.adjoint() * a).trace().real();
  const complex aa = (rho_tau * a * a).trace();
  const Mat a_sq = a * a;
  const double a2dag_a2 = (rho_tau * a_sq.adjoint() * a_sq).trace().real();
  return {mean_a, n_mean, aa - mean_a * mean_a,
          n_mean - std::norm(mean_a), a2dag_a2};
}

complex oracle_chi(const GaussianParams& params, ScaledTime x, complex eta,
                   int dim) {
  const TruncatedState st = build_gaussian_state(params, dim);
  const Mat rho_tau = evolved_density(params, x, st.rho);
  const Mat raise = exp_eta_adagger(eta, dim);
  const Mat lower = exp_eta_adagger(-eta, dim).adjoint();  // e^{-eta* a}
  return (rho_tau * raise * lower).trace();
}

}  // namespace nclab
