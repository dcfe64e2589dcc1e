#include "eitangle/full_model.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numbers>

#include "eitangle/parallel.hpp"

namespace eitangle {

namespace {

using SpMat = Eigen::SparseMatrix<Complex>;
using Tuple = std::array<int, 4>;  // (n_a, n1, n2, n3)

int find_index(const std::vector<Tuple>& basis, const Tuple& t) {
  const auto it = std::lower_bound(basis.begin(), basis.end(), t);
  if (it == basis.end() || *it != t) return -1;
  return static_cast<int>(it - basis.begin());
}

double diagonal_energy(const FullModelParams& p, const Tuple& t) {
  const double n1 = t[1], n2 = t[2], n3 = t[3];
  double e = (p.delta1 - p.delta2) * n3 + p.delta1 * n2;
  e += p.lambda[0] * n1 * (n1 - 1.0) + p.lambda[1] * n2 * (n2 - 1.0) +
       p.lambda[2] * n3 * (n3 - 1.0);
  // ordered-pair cross sum: each unordered pair enters twice
  e += 2.0 * (p.lambda12 * n1 * n2 + p.lambda13 * n1 * n3 + p.lambda23 * n2 * n3);
  return e;
}

}  // namespace

ChargeSector make_sector(int n_atoms, int n_exc, const ModeCutoffs& cut) {
  ChargeSector sector;
  sector.n_atoms = n_atoms;
  sector.n_exc = n_exc;
  for (int n2 = 0; n2 <= cut.b2; ++n2) {
    for (int n3 = 0; n3 <= cut.b3; ++n3) {
      const int n1 = n_atoms - n2 - n3;
      const int na = n_exc - n2 - n3;
      if (n1 < 0 || n1 > cut.b1 || na < 0 || na > cut.photon) continue;
      sector.basis.push_back({na, n1, n2, n3});
    }
  }
  std::sort(sector.basis.begin(), sector.basis.end());
  return sector;
}

Eigen::SparseMatrix<Complex> build_sector_hamiltonian_sparse(
    const FullModelParams& p, const ChargeSector& sector) {
  const auto& basis = sector.basis;
  const int dim = static_cast<int>(basis.size());
  std::vector<Eigen::Triplet<Complex>> trip;
  trip.reserve(static_cast<std::size_t>(dim) * 4);

  for (int i = 0; i < dim; ++i) {
    const Tuple& t = basis[i];
    trip.emplace_back(i, i, Complex(diagonal_energy(p, t), 0.0));

    // -g1 a b2' b1 : (n_a, n1, n2, n3) -> (n_a-1, n1-1, n2+1, n3)
    if (t[0] > 0 && t[1] > 0) {
      const int j = find_index(basis, {t[0] - 1, t[1] - 1, t[2] + 1, t[3]});
      if (j >= 0) {
        const Complex amp = -p.g1 * std::sqrt(static_cast<double>(t[0]) *
                                              static_cast<double>(t[1]) *
                                              static_cast<double>(t[2] + 1));
        trip.emplace_back(j, i, amp);
        trip.emplace_back(i, j, std::conj(amp));
      }
    }
    // -g2 b2' b3 : (n_a, n1, n2, n3) -> (n_a, n1, n2+1, n3-1)
    if (t[3] > 0) {
      const int j = find_index(basis, {t[0], t[1], t[2] + 1, t[3] - 1});
      if (j >= 0) {
        const Complex amp = -p.g2 * std::sqrt(static_cast<double>(t[3]) *
                                              static_cast<double>(t[2] + 1));
        trip.emplace_back(j, i, amp);
        trip.emplace_back(i, j, std::conj(amp));
      }
    }
  }
  SpMat h(dim, dim);
  h.setFromTriplets(trip.begin(), trip.end());
  return h;
}

Eigen::MatrixXcd build_sector_hamiltonian(const FullModelParams& p,
                                          const ChargeSector& sector) {
  if (sector.basis.empty())
    throw DomainError("build_sector_hamiltonian: empty sector basis");
  Eigen::MatrixXcd h = Eigen::MatrixXcd(build_sector_hamiltonian_sparse(p, sector));
  const double asym = (h - h.adjoint()).cwiseAbs().maxCoeff();
  if (asym > 1e-14)
    throw Error("build_sector_hamiltonian: hermiticity assertion failed");
  return h;
}

double FourModeState::norm() const {
  double sq = 0.0;
  for (const auto& [key, amps] : sectors) sq += amps.squaredNorm();
  return std::sqrt(sq);
}

namespace {

double occupation_expectation(const FourModeState& s, int slot) {
  double acc = 0.0;
  for (const auto& [key, amps] : s.sectors) {
    const ChargeSector sector = make_sector(key.first, key.second, s.cutoffs);
    for (int i = 0; i < amps.size(); ++i)
      acc += sector.basis[static_cast<std::size_t>(i)][static_cast<std::size_t>(slot)] *
             std::norm(amps[i]);
  }
  return acc;
}

}  // namespace

double FourModeState::expectation_n2() const { return occupation_expectation(*this, 2); }
double FourModeState::expectation_n3() const { return occupation_expectation(*this, 3); }

double FourModeState::expectation_n_atoms() const {
  double acc = 0.0;
  for (const auto& [key, amps] : sectors) acc += key.first * amps.squaredNorm();
  return acc;
}

double FourModeState::expectation_n_exc() const {
  double acc = 0.0;
  for (const auto& [key, amps] : sectors) acc += key.second * amps.squaredNorm();
  return acc;
}

TwoModeState FourModeState::project_ground() const {
  TwoModeState grid(cutoffs.photon, cutoffs.b1);
  for (const auto& [key, amps] : sectors) {
    const ChargeSector sector = make_sector(key.first, key.second, cutoffs);
    const int idx = find_index(sector.basis, {key.second, key.first, 0, 0});
    if (idx >= 0 && key.second <= cutoffs.photon && key.first <= cutoffs.b1)
      grid.amps(key.second, key.first) = amps[idx];
  }
  return grid;
}

FourModeState initial_product_state(Complex alpha, Complex beta,
                                    const ModeCutoffs& cut) {
  const auto photon = coherent_mode(alpha, cut.photon).amps;
  const auto atom = coherent_mode(beta, cut.b1).amps;

  FourModeState state;
  state.cutoffs = cut;
  for (int na = 0; na <= cut.photon; ++na) {
    for (int n1 = 0; n1 <= cut.b1; ++n1) {
      const Complex weight = photon[na] * atom[n1];
      if (weight == Complex(0.0)) continue;
      const ChargeSector sector = make_sector(n1, na, cut);
      const int idx = find_index(sector.basis, {na, n1, 0, 0});
      Eigen::VectorXcd amps =
          Eigen::VectorXcd::Zero(static_cast<int>(sector.basis.size()));
      amps[idx] = weight;
      state.sectors.emplace(std::make_pair(n1, na), std::move(amps));
    }
  }
  return state;
}

namespace {

// One adaptive step of Hermitian Lanczos exp(-i H dt) v; returns how much of
// dt was actually taken.
double lanczos_step(const SpMat& h, Eigen::VectorXcd& v, double dt, double tol) {
  constexpr int kMaxBasis = 40;
  const double vnorm = v.norm();
  if (vnorm == 0.0) return dt;

  const int dim = static_cast<int>(v.size());
  const int m = std::min(kMaxBasis, dim);
  Eigen::MatrixXcd basis(dim, m);
  Eigen::VectorXd alpha(m), beta(m);  // beta[k] couples k and k+1

  basis.col(0) = v / vnorm;
  int built = m;
  for (int k = 0; k < m; ++k) {
    Eigen::VectorXcd w = h * basis.col(k);
    alpha[k] = std::real(basis.col(k).dot(w));
    w -= alpha[k] * basis.col(k);
    if (k > 0) w -= beta[k - 1] * basis.col(k - 1);
    // full reorthogonalization; the bases here are small
    for (int j = 0; j <= k; ++j) w -= basis.col(j).dot(w) * basis.col(j);
    beta[k] = w.norm();
    if (k + 1 == m) break;
    if (beta[k] < 1e-14 * std::max(1.0, std::abs(alpha[k]))) {
      built = k + 1;  // happy breakdown: Krylov space is invariant
      break;
    }
    basis.col(k + 1) = w / beta[k];
  }

  Eigen::MatrixXd tmat = Eigen::MatrixXd::Zero(built, built);
  for (int k = 0; k < built; ++k) {
    tmat(k, k) = alpha[k];
    if (k + 1 < built) tmat(k, k + 1) = tmat(k + 1, k) = beta[k];
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(tmat);

  double step = dt;
  for (;;) {
    Eigen::VectorXcd phases(built);
    for (int k = 0; k < built; ++k)
      phases[k] = std::exp(Complex(0.0, -step * es.eigenvalues()[k]));
    const Eigen::VectorXcd z =
        (phases.array() *
         es.eigenvectors().row(0).transpose().array().cast<Complex>())
            .matrix();
    const Eigen::VectorXcd y = es.eigenvectors().cast<Complex>() * z;
    const double err =
        built < m || built == dim ? 0.0 : beta[built - 1] * std::abs(y[built - 1]);
    if (err <= tol || step <= dt * 1e-12) {
      v = basis.leftCols(built) * (vnorm * y);
      return step;
    }
    step *= 0.5;
  }
}

Eigen::VectorXcd krylov_expm(const SpMat& h, Eigen::VectorXcd v, double t,
                             double tol) {
  const double direction = t < 0.0 ? -1.0 : 1.0;
  double remaining = std::abs(t);
  while (remaining > 0.0) {
    const double taken = lanczos_step(h, v, direction * remaining, tol);
    remaining -= std::abs(taken);
  }
  return v;
}

}  // namespace

FourModeState evolve_full(const FourModeState& state, const FullModelParams& p,
                          double t, const EvolveOptions& opt) {
  std::vector<std::pair<int, int>> keys;
  keys.reserve(state.sectors.size());
  for (const auto& [key, amps] : state.sectors) {
    if (amps.size() > opt.hard_limit)
      throw ResourceError("evolve_full: sector exceeds the configured hard limit");
    keys.push_back(key);
  }

  FourModeState out = state;
  parallel_for(keys.size(), opt.jobs, [&](std::size_t i) {
    const auto key = keys[i];
    const ChargeSector sector = make_sector(key.first, key.second, state.cutoffs);
    Eigen::VectorXcd& amps = out.sectors.at(key);
    if (amps.size() <= opt.dense_limit) {
      const Eigen::MatrixXcd h = Eigen::MatrixXcd(
          build_sector_hamiltonian_sparse(p, sector));
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
      Eigen::VectorXcd coeff = es.eigenvectors().adjoint() * amps;
      for (int k = 0; k < coeff.size(); ++k)
        coeff[k] *= std::exp(Complex(0.0, -t * es.eigenvalues()[k]));
      amps = es.eigenvectors() * coeff;
    } else {
      amps = krylov_expm(build_sector_hamiltonian_sparse(p, sector), amps, t,
                         opt.krylov_tol);
    }
  });
  return out;
}

namespace {

// Cached spectral data of one sector, enough to evaluate the state at any t.
struct SectorSpectral {
  std::pair<int, int> key;
  std::vector<Tuple> basis;
  Eigen::VectorXd eigenvalues;
  Eigen::MatrixXcd eigenvectors;
  Eigen::VectorXcd coeff0;     // eigenbasis coordinates of the initial vector
  int ground_row = -1;         // row of the (n2=0, n3=0) tuple, -1 if absent
};

Eigen::VectorXcd sector_state_at(const SectorSpectral& s, double t) {
  Eigen::VectorXcd coeff = s.coeff0;
  for (int k = 0; k < coeff.size(); ++k)
    coeff[k] *= std::exp(Complex(0.0, -t * s.eigenvalues[k]));
  return s.eigenvectors * coeff;
}

Complex ground_amplitude_at(const SectorSpectral& s, double t) {
  if (s.ground_row < 0) return 0.0;
  Complex acc = 0.0;
  for (int k = 0; k < s.coeff0.size(); ++k)
    acc += s.eigenvectors(s.ground_row, k) * s.coeff0[k] *
           std::exp(Complex(0.0, -t * s.eigenvalues[k]));
  return acc;
}

}  // namespace

ValidationReport adiabatic_validation(Complex alpha, Complex beta,
                                      const FullModelParams& p, double lambda1,
                                      double t_max, int samples,
                                      const ModeCutoffs& cut,
                                      const EvolveOptions& opt,
                                      bool allow_off_resonance) {
  if (!p.ideal_eit() && !allow_off_resonance)
    throw RegimeError("adiabatic_validation: requires delta1 = delta2");
  if (p.g2 == Complex(0.0) || std::norm(p.g1) >= std::norm(p.g2))
    throw RegimeError("adiabatic_validation: requires |g1/g2|^2 < 1");
  if (samples < 1) throw DomainError("adiabatic_validation: samples must be >= 1");
  if (t_max <= 0.0) throw DomainError("adiabatic_validation: t_max must be > 0");

  ValidationReport report;
  report.effective = derive_params(p.g1, p.g2, p.delta1, lambda1);
  report.nominal_cross_kerr = 4.0 * report.effective.omega1p;

  const FourModeState initial = initial_product_state(alpha, beta, cut);
  const TwoModeState eff0 = tensor(coherent_mode(alpha, cut.photon),
                                   coherent_mode(beta, cut.b1));

  // Spectral decomposition of every populated sector, once.
  std::vector<SectorSpectral> spectral(initial.sectors.size());
  {
    std::vector<std::pair<int, int>> keys;
    keys.reserve(initial.sectors.size());
    for (const auto& [key, amps] : initial.sectors) keys.push_back(key);
    parallel_for(keys.size(), opt.jobs, [&](std::size_t i) {
      const auto key = keys[i];
      SectorSpectral s;
      s.key = key;
      ChargeSector sector = make_sector(key.first, key.second, cut);
      s.basis = std::move(sector.basis);
      ChargeSector view{key.first, key.second, s.basis};
      const Eigen::MatrixXcd h =
          Eigen::MatrixXcd(build_sector_hamiltonian_sparse(p, view));
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
      s.eigenvalues = es.eigenvalues();
      s.eigenvectors = es.eigenvectors();
      s.coeff0 = s.eigenvectors.adjoint() * initial.sectors.at(key);
      s.ground_row = find_index(s.basis, {key.second, key.first, 0, 0});
      spectral[i] = std::move(s);
    });
  }

  // Sampled fidelity and leakage along the trajectory.
  report.samples.resize(static_cast<std::size_t>(samples) + 1);
  parallel_for(report.samples.size(), opt.jobs, [&](std::size_t k) {
    const double t = t_max * static_cast<double>(k) / samples;
    double leak2 = 0.0, leak3 = 0.0, norm_sq = 0.0;
    TwoModeState projected(cut.photon, cut.b1);
    for (const auto& s : spectral) {
      const Eigen::VectorXcd amps = sector_state_at(s, t);
      norm_sq += amps.squaredNorm();
      for (int i = 0; i < amps.size(); ++i) {
        const double w = std::norm(amps[i]);
        leak2 += s.basis[static_cast<std::size_t>(i)][2] * w;
        leak3 += s.basis[static_cast<std::size_t>(i)][3] * w;
      }
      if (s.ground_row >= 0)
        projected.amps(s.key.second, s.key.first) = amps[s.ground_row];
    }
    const double pnorm = projected.norm();
    Complex overlap = 0.0;
    for (int n = 0; n <= cut.photon; ++n)
      for (int m = 0; m <= cut.b1; ++m)
        overlap += std::conj(eff0.amps(n, m) *
                             std::exp(Complex(0.0, -t * energy(n, m, report.effective)))) *
                   projected.amps(n, m) / pnorm;
    report.samples[k] = {t, std::norm(overlap) / eff0.amps.squaredNorm(),
                         leak2, leak3, std::sqrt(norm_sq)};
  });
  for (const auto& s : report.samples) {
    report.min_fidelity = std::min(report.min_fidelity, s.fidelity);
    report.max_leakage = std::max(report.max_leakage, s.leak_n2 + s.leak_n3);
  }

  // Empirical phase law of the projected amplitudes: unwrap the phase of each
  // (n, m) amplitude on a grid fine enough that per-step increments stay well
  // below pi, regress the per-mode slopes on [1, m, n, nm, m(m-1)], and
  // report the nm coefficient next to the effective model's nominal 4 w1'.
  struct Tracked {
    int n, m;
    double weight;
    const SectorSpectral* sector;
  };
  std::vector<Tracked> tracked;
  double max_rate = 1e-12;
  for (const auto& s : spectral) {
    if (s.ground_row < 0) continue;
    const int n = s.key.second, m = s.key.first;
    const double w = std::norm(eff0.amps(n, m));
    if (w < 1e-12) continue;
    tracked.push_back({n, m, w, &s});
    max_rate = std::max(max_rate, std::abs(energy(n, m, report.effective)));
  }
  const long long fine =
      std::clamp<long long>(static_cast<long long>(
                                std::ceil(1.25 * t_max * max_rate / (std::numbers::pi / 2.0))),
                            std::max(64, samples), 500000);

  std::vector<double> slope(tracked.size(), 0.0);
  parallel_for(tracked.size(), opt.jobs, [&](std::size_t i) {
    const Tracked& tr = tracked[i];
    double phase_acc = 0.0, st_phi = 0.0, st_t = 0.0;
    Complex prev = ground_amplitude_at(*tr.sector, 0.0);
    for (long long k = 1; k <= fine; ++k) {
      const double t = t_max * static_cast<double>(k) / static_cast<double>(fine);
      const Complex cur = ground_amplitude_at(*tr.sector, t);
      phase_acc += std::arg(cur * std::conj(prev));
      prev = cur;
      st_phi += t * phase_acc;
      st_t += t * t;
    }
    slope[i] = -st_phi / st_t;  // amplitudes carry e^{-i E t}
  });

  Eigen::MatrixXd design(static_cast<Eigen::Index>(tracked.size()), 5);
  Eigen::VectorXd rhs(static_cast<Eigen::Index>(tracked.size()));
  for (std::size_t i = 0; i < tracked.size(); ++i) {
    const double n = tracked[i].n, m = tracked[i].m;
    const double sw = std::sqrt(tracked[i].weight);
    design.row(static_cast<Eigen::Index>(i)) << sw, sw * m, sw * n, sw * n * m,
        sw * m * (m - 1.0);
    rhs[static_cast<Eigen::Index>(i)] = sw * slope[i];
  }
  const Eigen::VectorXd fit = design.colPivHouseholderQr().solve(rhs);
  report.fitted_linear_m = fit[1];
  report.fitted_cross_kerr = fit[3];
  report.fitted_kerr_m = fit[4];
  return report;
}

}  // namespace eitangle
