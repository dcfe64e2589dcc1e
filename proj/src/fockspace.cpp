#include "eitangle/fockspace.hpp"

#include <cmath>
#include <ostream>

#include "eitangle/io.hpp"

namespace eitangle {

int default_cutoff(Complex alpha) {
  const double a = std::abs(alpha);
  return std::max(24, static_cast<int>(std::ceil(a * a + 8.0 * a + 10.0)));
}

CoherentState coherent_amplitudes(Complex alpha, int cutoff) {
  if (cutoff < 0) throw DomainError("coherent_amplitudes: cutoff must be >= 0");
  Eigen::VectorXcd amps(cutoff + 1);
  amps[0] = std::exp(-0.5 * std::norm(alpha));
  for (int n = 1; n <= cutoff; ++n) {
    amps[n] = amps[n - 1] * alpha / std::sqrt(static_cast<double>(n));
  }
  const double kept = amps.squaredNorm();
  return {TruncatedMode(std::move(amps)), std::max(0.0, 1.0 - kept)};
}

TruncatedMode coherent_mode(Complex alpha, int cutoff) {
  return coherent_amplitudes(alpha, cutoff).mode;
}

TwoModeState tensor(const TruncatedMode& photon, const TruncatedMode& atom) {
  return TwoModeState(photon.amps * atom.amps.transpose());
}

Complex inner_product(const TruncatedMode& a, const TruncatedMode& b) {
  if (a.amps.size() != b.amps.size())
    throw DimensionError("inner_product: cutoff mismatch");
  return a.amps.dot(b.amps);  // Eigen dot conjugates the left argument
}

Complex inner_product(const TwoModeState& a, const TwoModeState& b) {
  if (a.amps.rows() != b.amps.rows() || a.amps.cols() != b.amps.cols())
    throw DimensionError("inner_product: shape mismatch");
  return (a.amps.conjugate().cwiseProduct(b.amps)).sum();
}

double fidelity_up_to_global_phase(const TwoModeState& a, const TwoModeState& b) {
  if (std::abs(a.norm() - 1.0) > 1e-8 || std::abs(b.norm() - 1.0) > 1e-8)
    throw ContractError("fidelity_up_to_global_phase: inputs must be normalized");
  const double f = std::norm(inner_product(a, b));
  return std::min(f, 1.0 + 1e-12);
}

TruncatedMode normalize(const TruncatedMode& s) {
  const double n = s.norm();
  if (n <= 0.0) throw DomainError("normalize: zero state");
  return TruncatedMode(s.amps / n);
}

TwoModeState normalize(const TwoModeState& s) {
  const double n = s.norm();
  if (n <= 0.0) throw DomainError("normalize: zero state");
  return TwoModeState(s.amps / n);
}

void dump_csv(const TwoModeState& s, std::ostream& out) {
  out << "# photon_cutoff=" << s.photon_cutoff()
      << ",atom_cutoff=" << s.atom_cutoff() << "\n";
  out << "n,m,re,im\n";
  for (int n = 0; n <= s.photon_cutoff(); ++n) {
    for (int m = 0; m <= s.atom_cutoff(); ++m) {
      const Complex v = s.amps(n, m);
      out << n << ',' << m << ',' << format_double(v.real()) << ','
          << format_double(v.imag()) << "\n";
    }
  }
}

}  // namespace eitangle
