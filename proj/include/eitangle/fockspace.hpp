#pragma once

#include <Eigen/Dense>
#include <complex>
#include <iosfwd>

#include "eitangle/errors.hpp"

namespace eitangle {

using Complex = std::complex<double>;

// Default truncation tolerance: constructors report the probability mass the
// cutoff discards instead of silently renormalizing.
inline constexpr double kTailTol = 1e-12;

// One bosonic mode, truncated at a highest kept occupation number.
struct TruncatedMode {
  Eigen::VectorXcd amps;  // length cutoff()+1, indexed by occupation n

  TruncatedMode() = default;
  explicit TruncatedMode(Eigen::VectorXcd a) : amps(std::move(a)) {}
  explicit TruncatedMode(int cutoff) : amps(Eigen::VectorXcd::Zero(cutoff + 1)) {}

  int cutoff() const { return static_cast<int>(amps.size()) - 1; }
  double norm() const { return amps.norm(); }
  Complex operator[](int n) const { return amps[n]; }
};

// Two-mode (photon x atom) amplitude grid: amps(n, m) with n the photon and
// m the atom occupation.
struct TwoModeState {
  Eigen::MatrixXcd amps;

  TwoModeState() = default;
  explicit TwoModeState(Eigen::MatrixXcd a) : amps(std::move(a)) {}
  TwoModeState(int photon_cutoff, int atom_cutoff)
      : amps(Eigen::MatrixXcd::Zero(photon_cutoff + 1, atom_cutoff + 1)) {}

  int photon_cutoff() const { return static_cast<int>(amps.rows()) - 1; }
  int atom_cutoff() const { return static_cast<int>(amps.cols()) - 1; }
  double norm() const { return amps.norm(); }
};

// Cutoff policy: keeps the coherent tail mass below kTailTol for |alpha| <= 4.
int default_cutoff(Complex alpha);

struct CoherentState {
  TruncatedMode mode;
  double tail_mass;  // exact probability mass beyond the cutoff
};

// amps[n] = e^{-|alpha|^2/2} alpha^n / sqrt(n!), evaluated by recurrence.
CoherentState coherent_amplitudes(Complex alpha, int cutoff);

// Convenience wrapper that drops the tail diagnostic.
TruncatedMode coherent_mode(Complex alpha, int cutoff);

TwoModeState tensor(const TruncatedMode& photon, const TruncatedMode& atom);

Complex inner_product(const TruncatedMode& a, const TruncatedMode& b);
Complex inner_product(const TwoModeState& a, const TwoModeState& b);

// |<a|b>|^2 for states normalized within 1e-8; insensitive to global phase.
double fidelity_up_to_global_phase(const TwoModeState& a, const TwoModeState& b);

TruncatedMode normalize(const TruncatedMode& s);
TwoModeState normalize(const TwoModeState& s);

// CSV rows `n,m,re,im` preceded by a comment line carrying the cutoffs.
void dump_csv(const TwoModeState& s, std::ostream& out);

}  // namespace eitangle
