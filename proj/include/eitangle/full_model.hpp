#pragma once

#include <Eigen/SparseCore>
#include <array>
#include <map>
#include <utility>
#include <vector>

#include "eitangle/effective_model.hpp"
#include "eitangle/fockspace.hpp"

namespace eitangle {

// Parameters of the interaction-picture four-mode Hamiltonian
//   H = (d1-d2) n3 + d1 n2 - [g1 a b2'b1 + g2 b2'b3 + h.c.]
//       + sum_i lambda_i b_i'^2 b_i^2 + sum_{i!=j} lambda_ij n_i n_j
// The cross sum runs over ordered pairs, so each lambda_ij enters twice.
struct FullModelParams {
  Complex g1, g2;
  double delta1 = 0.0;
  double delta2 = 0.0;
  std::array<double, 3> lambda{0.0, 0.0, 0.0};  // lambda_1..lambda_3
  double lambda12 = 0.0;
  double lambda13 = 0.0;
  double lambda23 = 0.0;

  bool ideal_eit() const { return delta1 == delta2; }
};

struct ModeCutoffs {
  int photon = 12;
  int b1 = 12;
  int b2 = 2;  // intermediate and upper levels stay perturbatively populated
  int b3 = 2;
};

// Subspace of fixed conserved charges n_atoms = n1+n2+n3 and
// n_exc = n_a+n2+n3, in which H is block-diagonal.
struct ChargeSector {
  int n_atoms = 0;
  int n_exc = 0;
  std::vector<std::array<int, 4>> basis;  // (n_a, n1, n2, n3), lexicographic
};

ChargeSector make_sector(int n_atoms, int n_exc, const ModeCutoffs& cut);

Eigen::SparseMatrix<Complex> build_sector_hamiltonian_sparse(
    const FullModelParams& p, const ChargeSector& sector);

// Dense form; Hermiticity within 1e-14 is asserted.
Eigen::MatrixXcd build_sector_hamiltonian(const FullModelParams& p,
                                          const ChargeSector& sector);

// State stored as per-sector amplitude vectors aligned with the sector basis
// enumeration; sector weights are constants of motion.
struct FourModeState {
  ModeCutoffs cutoffs;
  std::map<std::pair<int, int>, Eigen::VectorXcd> sectors;  // (n_atoms, n_exc)

  double norm() const;
  double expectation_n2() const;
  double expectation_n3() const;
  double expectation_n_atoms() const;
  double expectation_n_exc() const;

  // Amplitudes on the (n2 = 0, n3 = 0) subspace as a (photon, b1) grid;
  // not renormalized.
  TwoModeState project_ground() const;
};

// Photon coherent |alpha>, b1 coherent |beta>, b2 and b3 vacuum.
FourModeState initial_product_state(Complex alpha, Complex beta,
                                    const ModeCutoffs& cut);

struct EvolveOptions {
  int dense_limit = 4000;     // per-sector dense eigendecomposition up to here
  int hard_limit = 200000;    // refuse sectors beyond this dimension
  double krylov_tol = 1e-10;  // local error target of the Krylov stepper
  int jobs = 1;               // worker threads across sectors
};

FourModeState evolve_full(const FourModeState& state, const FullModelParams& p,
                          double t, const EvolveOptions& opt = {});

struct ValidationSample {
  double t;
  double fidelity;  // projected (photon, b1) state vs the effective evolution
  double leak_n2;
  double leak_n3;
  double norm;
};

struct ValidationReport {
  std::vector<ValidationSample> samples;
  double min_fidelity = 1.0;
  double max_leakage = 0.0;        // max over samples of leak_n2 + leak_n3
  double fitted_cross_kerr = 0.0;  // empirical n*m phase coefficient
  double nominal_cross_kerr = 0.0;  // 4 * omega1p of the effective model
  double fitted_linear_m = 0.0;    // empirical m coefficient
  double fitted_kerr_m = 0.0;      // empirical m(m-1) coefficient
  EffectiveParams effective;
};

// Evolves the full model from |alpha> (x) |beta> (x) |0,0>, sampling fidelity
// against the effective evolution and the leakage populations, and fits the
// empirical phase law of the projected amplitudes. Requires delta1 = delta2
// and |g1/g2|^2 < 1; allow_off_resonance downgrades the first requirement to
// a robustness probe with the effective model taken at delta = delta1.
ValidationReport adiabatic_validation(Complex alpha, Complex beta,
                                      const FullModelParams& p, double lambda1,
                                      double t_max, int samples,
                                      const ModeCutoffs& cut = {},
                                      const EvolveOptions& opt = {},
                                      bool allow_off_resonance = false);

}  // namespace eitangle
