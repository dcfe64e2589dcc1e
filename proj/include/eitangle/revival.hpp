#pragma once

#include <vector>

#include "eitangle/fockspace.hpp"

namespace eitangle {

// Reduced fraction M/N defining the rational scaled time tau = 2 pi M / N.
class RationalTau {
 public:
  RationalTau(long long m, long long n);

  long long M() const { return m_; }
  long long N() const { return n_; }
  double value() const;  // 2 pi M / N

 private:
  long long m_ = 1;
  long long n_ = 1;
};

// N x N grid of discrete-superposition coefficients c_rs; r indexes the
// photon phase phi_r = 2 pi r / N, s the atom phase phi_s (r, s = 1..N).
struct CoefficientGrid {
  long long order = 0;   // N
  Eigen::MatrixXcd c;    // c(r-1, s-1) holds c_rs

  Complex at(long long r, long long s) const { return c(r - 1, s - 1); }
};

// c_rs = (1/N^2) sum_{n,m=1..N} exp{-(2 pi i / N)[n r + m s - M theta(n,m)]}
// with the exponent reduced mod N in exact integer arithmetic. Requires a
// nonzero integer K.
CoefficientGrid coefficients(const RationalTau& tau, long long k);

// Checked conversion for callers holding K as a floating value.
long long require_integer_k(double k);

// Max over (n,m) in {1..N}^2 of
// |sum_{r,s} c_rs exp{(2 pi i / N)[n r + m s - M theta(n,m)]} - 1|.
double verify_determining_identity(const CoefficientGrid& grid,
                                   const RationalTau& tau, long long k);

// sum_{r,s} c_rs |alpha e^{i phi_r}> (x) |beta e^{i phi_s}>. Normalized to
// within truncation tolerance by construction; no renormalization applied.
TwoModeState assemble(const CoefficientGrid& grid, Complex alpha, Complex beta,
                      int photon_cutoff, int atom_cutoff);

struct GridEntry {
  long long r, s;
  Complex value;
};

// Entries with modulus above the clamp, in (r, s) order; matches the sparse
// way the coefficient tables are usually quoted.
std::vector<GridEntry> nonzero_entries(const CoefficientGrid& grid,
                                       double clamp = 1e-13);

}  // namespace eitangle
