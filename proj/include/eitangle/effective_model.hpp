#pragma once

#include "eitangle/fockspace.hpp"

namespace eitangle {

// Derived parameters of the effective two-mode Hamiltonian
//   H_eff = 2 w1' b'b + 4 w1' a'a b'b + lambda1 b'^2 b^2
// obtained from the Lambda system by adiabatic elimination of the upper and
// intermediate atomic levels.
struct EffectiveParams {
  Complex g1;      // probe dipole coupling
  Complex g2;      // coupling-laser dipole coupling
  double delta;    // two-photon detuning
  double lambda1;  // intra-species collision strength

  double omega1p;  // -|g1|^2 / delta
  double omega3p;  // -|g2|^2 / delta
  Complex gprime;  // -g1 conj(g2) / delta
  double K;        // 2|g1|^2 / (lambda1 delta)

  // True when |g1/g2|^2 < 1, the regime the elimination assumes. Violating
  // it is allowed here; the full-model validation flags it.
  bool adiabatic_regime;
};

EffectiveParams derive_params(Complex g1, Complex g2, double delta, double lambda1);

// Running frequency theta(n,m) = (1+K) m + 2 K n m - m^2 of the scaled-time
// phase e^{i tau theta}.
double theta(int n, int m, double K);

// Exact integer version used by the fractional-revival module.
long long theta_int(long long n, long long m, long long K);

// Eigenvalue E(n,m) = 2 w1' m + 4 w1' n m + lambda1 m (m-1). Satisfies
// E(n,m) t = -theta(n,m,K) tau with tau = lambda1 t.
double energy(int n, int m, const EffectiveParams& p);

// Multiplies every amplitude by e^{i tau theta(n,m,K)}; norm-preserving.
TwoModeState evolve(const TwoModeState& initial, double tau, double K);

}  // namespace eitangle
