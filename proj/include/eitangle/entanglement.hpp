#pragma once

#include "eitangle/fockspace.hpp"

namespace eitangle {

// Two-term bipartite superposition mu |eta>|gamma> + nu |xi>|delta> of
// normalized, pairwise linearly independent components.
struct TwoTermBipartite {
  Complex mu, nu;
  TruncatedMode eta, xi;        // subsystem 1
  TruncatedMode gamma, delta_st;  // subsystem 2
};

struct ConcurrenceResult {
  Complex p1;            // <eta|xi>
  Complex p2;            // <delta|gamma>
  double norm_sq;        // |mu|^2 + |nu|^2 + 2 Re(mu* nu p1 p2*)
  double lambda_plus;    // reduced-density eigenvalues, lambda_+ + lambda_- = 1
  double lambda_minus;
  double concurrence;    // 2 sqrt(lambda_+ lambda_-), in [0, 1]
  bool schmidt_fallback;  // true when |p| was too close to 1 for the closed form
};

// Concurrence of the two-term state via the 2-dim subspace reduction:
//   C = (2|mu||nu| / N^2) sqrt((1-|p1|^2)(1-|p2|^2)).
// Components with |p| > 1 - 1e-6 are routed through the numeric Schmidt
// spectrum instead (flagged in the result); exactly dependent components
// (|p| >= 1 - 1e-12) are an error.
ConcurrenceResult two_term_concurrence(const TwoTermBipartite& s);

// sqrt((1 - e^{-4|alpha|^2})(1 - e^{-4|beta|^2})), the concurrence shared by
// the two-state entangled states and both entangled coherent states.
double closed_form_concurrence(Complex alpha, Complex beta);

// Eigenvalues of the photon-mode reduced density operator, descending,
// clamped to [0, 1]. Input must be normalized within 1e-8.
Eigen::VectorXd schmidt_spectrum(const TwoModeState& s);

// -sum lambda_k log2 lambda_k over the nonzero Schmidt eigenvalues.
double entanglement_entropy(const TwoModeState& s);

}  // namespace eitangle
