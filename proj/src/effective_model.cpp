#include "eitangle/effective_model.hpp"

#include <cmath>

namespace eitangle {

EffectiveParams derive_params(Complex g1, Complex g2, double delta, double lambda1) {
  if (delta == 0.0) throw DomainError("derive_params: delta must be nonzero");
  if (lambda1 == 0.0) throw DomainError("derive_params: lambda1 must be nonzero");
  EffectiveParams p;
  p.g1 = g1;
  p.g2 = g2;
  p.delta = delta;
  p.lambda1 = lambda1;
  p.omega1p = -std::norm(g1) / delta;
  p.omega3p = -std::norm(g2) / delta;
  p.gprime = -g1 * std::conj(g2) / delta;
  p.K = 2.0 * std::norm(g1) / (lambda1 * delta);
  p.adiabatic_regime = g2 != Complex(0.0) && std::norm(g1) < std::norm(g2);
  return p;
}

double theta(int n, int m, double K) {
  const double dn = n, dm = m;
  return (1.0 + K) * dm + 2.0 * K * dn * dm - dm * dm;
}

long long theta_int(long long n, long long m, long long K) {
  return (1 + K) * m + 2 * K * n * m - m * m;
}

double energy(int n, int m, const EffectiveParams& p) {
  const double dn = n, dm = m;
  return 2.0 * p.omega1p * dm + 4.0 * p.omega1p * dn * dm +
         p.lambda1 * dm * (dm - 1.0);
}

TwoModeState evolve(const TwoModeState& initial, double tau, double K) {
  TwoModeState out = initial;
  for (int n = 0; n <= out.photon_cutoff(); ++n)
    for (int m = 0; m <= out.atom_cutoff(); ++m)
      out.amps(n, m) *= std::exp(Complex(0.0, tau * theta(n, m, K)));
  return out;
}

}  // namespace eitangle
