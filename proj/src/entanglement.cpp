#include "eitangle/entanglement.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

namespace eitangle {

namespace {

void require_component_normalized(const TruncatedMode& m, const char* name) {
  if (std::abs(m.norm() - 1.0) > 1e-10)
    throw ContractError(std::string("two_term_concurrence: component ") + name +
                        " not normalized");
}

ConcurrenceResult via_schmidt(const TwoTermBipartite& s, Complex p1, Complex p2) {
  TwoModeState psi(static_cast<int>(s.eta.amps.size()) - 1,
                   static_cast<int>(s.gamma.amps.size()) - 1);
  psi.amps = s.mu * s.eta.amps * s.gamma.amps.transpose() +
             s.nu * s.xi.amps * s.delta_st.amps.transpose();
  const double norm_sq = psi.amps.squaredNorm();
  const Eigen::VectorXd lam = schmidt_spectrum(normalize(psi));
  const double l1 = lam[0];
  const double l2 = lam.size() > 1 ? lam[1] : 0.0;
  const double c = 2.0 * std::sqrt(std::max(0.0, l1 * l2));
  const double root = std::sqrt(std::max(0.0, 1.0 - c * c));
  return {p1, p2, norm_sq, 0.5 * (1.0 + root), 0.5 * (1.0 - root), c, true};
}

}  // namespace

ConcurrenceResult two_term_concurrence(const TwoTermBipartite& s) {
  require_component_normalized(s.eta, "eta");
  require_component_normalized(s.xi, "xi");
  require_component_normalized(s.gamma, "gamma");
  require_component_normalized(s.delta_st, "delta");

  const Complex p1 = inner_product(s.eta, s.xi);
  const Complex p2 = inner_product(s.delta_st, s.gamma);
  const double pmax = std::max(std::abs(p1), std::abs(p2));
  if (pmax >= 1.0 - 1e-12)
    throw DomainError(
        "two_term_concurrence: linearly dependent components; use "
        "schmidt_spectrum");
  if (pmax > 1.0 - 1e-6) return via_schmidt(s, p1, p2);

  const double norm_sq = std::norm(s.mu) + std::norm(s.nu) +
                         2.0 * std::real(std::conj(s.mu) * s.nu * p1 * std::conj(p2));
  const double c = 2.0 * std::abs(s.mu) * std::abs(s.nu) / norm_sq *
                   std::sqrt((1.0 - std::norm(p1)) * (1.0 - std::norm(p2)));
  const double root = std::sqrt(std::max(0.0, 1.0 - c * c));
  return {p1, p2, norm_sq, 0.5 * (1.0 + root), 0.5 * (1.0 - root), c, false};
}

double closed_form_concurrence(Complex alpha, Complex beta) {
  const double fa = 1.0 - std::exp(-4.0 * std::norm(alpha));
  const double fb = 1.0 - std::exp(-4.0 * std::norm(beta));
  return std::sqrt(fa * fb);
}

Eigen::VectorXd schmidt_spectrum(const TwoModeState& s) {
  if (std::abs(s.norm() - 1.0) > 1e-8)
    throw ContractError("schmidt_spectrum: state must be normalized");
  // Reduced density operator on the photon mode: rho = A A^dagger.
  const Eigen::MatrixXcd rho = s.amps * s.amps.adjoint();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(rho,
                                                         Eigen::EigenvaluesOnly);
  Eigen::VectorXd lam = solver.eigenvalues();
  for (Eigen::Index i = 0; i < lam.size(); ++i)
    lam[i] = std::clamp(lam[i], 0.0, 1.0);  // rounding can leave ~ -1e-16
  std::sort(lam.data(), lam.data() + lam.size(), std::greater<double>());
  return lam;
}

double entanglement_entropy(const TwoModeState& s) {
  const Eigen::VectorXd lam = schmidt_spectrum(s);
  double entropy = 0.0;
  for (Eigen::Index i = 0; i < lam.size(); ++i)
    if (lam[i] > 0.0) entropy -= lam[i] * std::log2(lam[i]);
  return entropy;
}

}  // namespace eitangle
