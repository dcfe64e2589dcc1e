#include "eitangle/revival.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

#include "eitangle/effective_model.hpp"

namespace eitangle {

namespace {

long long mod_floor(long long a, long long n) {
  const long long r = a % n;
  return r < 0 ? r + n : r;
}

// exp(-2 pi i k / N) for k = 0..N-1
std::vector<Complex> conj_roots(long long n) {
  std::vector<Complex> roots(static_cast<std::size_t>(n));
  for (long long k = 0; k < n; ++k)
    roots[static_cast<std::size_t>(k)] =
        std::polar(1.0, -2.0 * std::numbers::pi * static_cast<double>(k) /
                            static_cast<double>(n));
  return roots;
}

}  // namespace

RationalTau::RationalTau(long long m, long long n) {
  if (m <= 0 || n <= 0)
    throw DomainError("RationalTau: M and N must be positive");
  const long long g = std::gcd(m, n);
  m_ = m / g;
  n_ = n / g;
}

double RationalTau::value() const {
  return 2.0 * std::numbers::pi * static_cast<double>(m_) /
         static_cast<double>(n_);
}

long long require_integer_k(double k) {
  const double r = std::round(k);
  if (k == 0.0 || r != k)
    throw DomainError("K must be a nonzero integer for rational-time revivals");
  return static_cast<long long>(r);
}

CoefficientGrid coefficients(const RationalTau& tau, long long k) {
  if (k == 0) throw DomainError("coefficients: K must be a nonzero integer");
  const long long n_ord = tau.N();
  const long long m_num = tau.M();
  const auto roots = conj_roots(n_ord);

  CoefficientGrid grid;
  grid.order = n_ord;
  grid.c = Eigen::MatrixXcd::Zero(n_ord, n_ord);
  for (long long r = 1; r <= n_ord; ++r) {
    for (long long s = 1; s <= n_ord; ++s) {
      Complex acc = 0.0;
      for (long long n = 1; n <= n_ord; ++n) {
        for (long long m = 1; m <= n_ord; ++m) {
          const long long e =
              mod_floor(n * r + m * s - m_num * theta_int(n, m, k), n_ord);
          acc += roots[static_cast<std::size_t>(e)];
        }
      }
      grid.c(r - 1, s - 1) = acc / static_cast<double>(n_ord * n_ord);
    }
  }
  return grid;
}

double verify_determining_identity(const CoefficientGrid& grid,
                                   const RationalTau& tau, long long k) {
  const long long n_ord = tau.N();
  if (grid.order != n_ord || grid.c.rows() != n_ord || grid.c.cols() != n_ord)
    throw DimensionError("verify_determining_identity: grid/tau mismatch");
  const auto roots = conj_roots(n_ord);  // conj(root[e]) = forward phase

  double max_residual = 0.0;
  for (long long n = 1; n <= n_ord; ++n) {
    for (long long m = 1; m <= n_ord; ++m) {
      Complex acc = 0.0;
      for (long long r = 1; r <= n_ord; ++r) {
        for (long long s = 1; s <= n_ord; ++s) {
          const long long e = mod_floor(
              n * r + m * s - tau.M() * theta_int(n, m, k), n_ord);
          acc += grid.c(r - 1, s - 1) *
                 std::conj(roots[static_cast<std::size_t>(e)]);
        }
      }
      max_residual = std::max(max_residual, std::abs(acc - 1.0));
    }
  }
  return max_residual;
}

TwoModeState assemble(const CoefficientGrid& grid, Complex alpha, Complex beta,
                      int photon_cutoff, int atom_cutoff) {
  const long long n_ord = grid.order;
  std::vector<Eigen::VectorXcd> photon_branches, atom_branches;
  photon_branches.reserve(static_cast<std::size_t>(n_ord));
  atom_branches.reserve(static_cast<std::size_t>(n_ord));
  for (long long r = 1; r <= n_ord; ++r) {
    const double phi = 2.0 * std::numbers::pi * static_cast<double>(r) /
                       static_cast<double>(n_ord);
    const Complex rot = std::polar(1.0, phi);
    photon_branches.push_back(coherent_mode(alpha * rot, photon_cutoff).amps);
    atom_branches.push_back(coherent_mode(beta * rot, atom_cutoff).amps);
  }

  TwoModeState out(photon_cutoff, atom_cutoff);
  for (long long r = 1; r <= n_ord; ++r)
    for (long long s = 1; s <= n_ord; ++s)
      out.amps += grid.c(r - 1, s - 1) *
                  (photon_branches[static_cast<std::size_t>(r - 1)] *
                   atom_branches[static_cast<std::size_t>(s - 1)].transpose());
  return out;
}

std::vector<GridEntry> nonzero_entries(const CoefficientGrid& grid, double clamp) {
  std::vector<GridEntry> out;
  for (long long r = 1; r <= grid.order; ++r)
    for (long long s = 1; s <= grid.order; ++s)
      if (std::abs(grid.at(r, s)) > clamp) out.push_back({r, s, grid.at(r, s)});
  return out;
}

}  // namespace eitangle
