#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "eitangle/full_model.hpp"

using namespace eitangle;

namespace {

FullModelParams eit_params(double g1, double g2, double delta, double lambda1) {
  FullModelParams p;
  p.g1 = g1;
  p.g2 = g2;
  p.delta1 = p.delta2 = delta;
  p.lambda = {lambda1, 0.0, 0.0};
  return p;
}

FourModeState random_sector_state(std::mt19937& rng, const ModeCutoffs& cut,
                                  int n_atoms, int n_exc) {
  std::normal_distribution<double> dist;
  const ChargeSector sector = make_sector(n_atoms, n_exc, cut);
  Eigen::VectorXcd amps(static_cast<int>(sector.basis.size()));
  for (int i = 0; i < amps.size(); ++i) amps[i] = Complex(dist(rng), dist(rng));
  amps /= amps.norm();
  FourModeState state;
  state.cutoffs = cut;
  state.sectors.emplace(std::make_pair(n_atoms, n_exc), std::move(amps));
  return state;
}

}  // namespace

TEST_CASE("sector enumeration: charges, cutoffs, lexicographic order") {
  const ModeCutoffs cut{6, 6, 2, 2};
  const ChargeSector sector = make_sector(3, 4, cut);
  CHECK_FALSE(sector.basis.empty());
  for (std::size_t i = 0; i < sector.basis.size(); ++i) {
    const auto& t = sector.basis[i];
    CHECK(t[1] + t[2] + t[3] == 3);  // n_atoms
    CHECK(t[0] + t[2] + t[3] == 4);  // n_exc
    CHECK(t[2] <= 2);
    CHECK(t[3] <= 2);
    if (i > 0) CHECK(sector.basis[i - 1] < t);
  }

  // one b1 atom, no excitation: a single zero-energy state
  const ChargeSector trivial = make_sector(1, 0, cut);
  REQUIRE(trivial.basis.size() == 1);
  CHECK(trivial.basis[0] == std::array<int, 4>{0, 1, 0, 0});
  const Eigen::MatrixXcd h =
      build_sector_hamiltonian(eit_params(0.3, 1.0, 5.0, 0.7), trivial);
  CHECK(h.rows() == 1);
  CHECK(std::abs(h(0, 0)) == 0.0);
}

TEST_CASE("hand-enumerated (n_atoms=1, n_exc=1) sector matrix") {
  FullModelParams p;
  p.g1 = Complex(0.25, 0.1);
  p.g2 = Complex(1.0, -0.4);
  p.delta1 = 7.0;
  p.delta2 = 3.0;
  const ChargeSector sector = make_sector(1, 1, ModeCutoffs{4, 4, 2, 2});
  REQUIRE(sector.basis.size() == 3);
  // lexicographic: (0,0,0,1), (0,0,1,0), (1,1,0,0)
  CHECK(sector.basis[0] == std::array<int, 4>{0, 0, 0, 1});
  CHECK(sector.basis[1] == std::array<int, 4>{0, 0, 1, 0});
  CHECK(sector.basis[2] == std::array<int, 4>{1, 1, 0, 0});

  const Eigen::MatrixXcd h = build_sector_hamiltonian(p, sector);
  CHECK(h(0, 0) == Complex(p.delta1 - p.delta2));
  CHECK(h(1, 1) == Complex(p.delta1));
  CHECK(h(2, 2) == Complex(0.0));
  CHECK(h(1, 2) == -p.g1);             // a b2' b1 annihilates (1,1,0,0)
  CHECK(h(2, 1) == -std::conj(p.g1));
  CHECK(h(1, 0) == -p.g2);             // b2' b3 annihilates (0,0,0,1)
  CHECK(h(0, 1) == -std::conj(p.g2));
  CHECK(h(0, 2) == Complex(0.0));
  CHECK(h(2, 0) == Complex(0.0));
}

TEST_CASE("collision diagonals: two b1 atoms contribute 2 lambda1") {
  const double lambda1 = 0.37;
  const ChargeSector sector = make_sector(2, 0, ModeCutoffs{4, 4, 2, 2});
  REQUIRE(sector.basis.size() == 1);
  const Eigen::MatrixXcd h =
      build_sector_hamiltonian(eit_params(0.0, 1.0, 5.0, lambda1), sector);
  CHECK(h(0, 0) == Complex(2.0 * lambda1));
}

TEST_CASE("sector Hamiltonians are Hermitian for random parameters") {
  std::mt19937 rng(31);
  std::normal_distribution<double> dist;
  for (int trial = 0; trial < 8; ++trial) {
    FullModelParams p;
    p.g1 = Complex(dist(rng), dist(rng));
    p.g2 = Complex(dist(rng), dist(rng));
    p.delta1 = dist(rng);
    p.delta2 = dist(rng);
    p.lambda = {dist(rng), dist(rng), dist(rng)};
    p.lambda12 = dist(rng);
    p.lambda13 = dist(rng);
    p.lambda23 = dist(rng);
    const ChargeSector sector =
        make_sector(3 + trial % 3, 4 + trial % 2, ModeCutoffs{8, 8, 2, 2});
    const Eigen::MatrixXcd h = build_sector_hamiltonian(p, sector);
    CHECK((h - h.adjoint()).cwiseAbs().maxCoeff() < 1e-13);
  }
}

TEST_CASE("initial product state: vacuum case and Poisson sector weights") {
  const ModeCutoffs cut{10, 10, 2, 2};
  const FourModeState vac = initial_product_state(0.0, 0.0, cut);
  REQUIRE(vac.sectors.size() == 1);
  CHECK(vac.sectors.count({0, 0}) == 1);
  CHECK(vac.norm() == doctest::Approx(1.0));

  const double a = 1.5;
  const int pol = default_cutoff(a);
  const FourModeState st = initial_product_state(a, a, ModeCutoffs{pol, pol, 2, 2});
  CHECK(st.norm() >= 1.0 - 1e-10);

  const double mean = a * a;
  auto poisson = [&](int n) {
    return std::exp(-mean + n * std::log(mean) - std::lgamma(n + 1.0));
  };
  for (const auto& [key, amps] : st.sectors) {
    const auto [n_atoms, n_exc] = key;
    if (n_atoms > 8 || n_exc > 8) continue;
    CHECK(amps.squaredNorm() ==
          doctest::Approx(poisson(n_atoms) * poisson(n_exc)).epsilon(1e-10));
  }
}

TEST_CASE("evolve_full: identity at t=0 and phase-only dynamics when decoupled") {
  std::mt19937 rng(5);
  const ModeCutoffs cut{6, 6, 2, 2};
  const FourModeState st = random_sector_state(rng, cut, 3, 3);

  FullModelParams p = eit_params(0.4, 1.0, 9.0, 0.3);
  const FourModeState same = evolve_full(st, p, 0.0);
  for (const auto& [key, amps] : st.sectors)
    CHECK((same.sectors.at(key) - amps).cwiseAbs().maxCoeff() < 1e-14);

  FullModelParams detuning_only;
  detuning_only.g1 = detuning_only.g2 = 0.0;
  detuning_only.delta1 = 4.0;
  detuning_only.delta2 = 1.5;
  const FourModeState rotated = evolve_full(st, detuning_only, 0.83);
  for (const auto& [key, amps] : st.sectors) {
    const Eigen::VectorXcd& out = rotated.sectors.at(key);
    for (int i = 0; i < amps.size(); ++i)
      CHECK(std::abs(std::abs(out[i]) - std::abs(amps[i])) < 1e-12);
  }
}

TEST_CASE("evolve_full conserves norm and both charges") {
  const ModeCutoffs cut{8, 8, 2, 2};
  const FourModeState initial = initial_product_state(1.2, 0.9, cut);
  const FullModelParams p = eit_params(0.3, 1.0, 12.0, 0.2);
  const double n_atoms0 = initial.expectation_n_atoms();
  const double n_exc0 = initial.expectation_n_exc();
  for (double t : {1.0, 4.0, 10.0}) {
    const FourModeState out = evolve_full(initial, p, t);
    CHECK(std::abs(out.norm() - initial.norm()) < 1e-10);
    CHECK(std::abs(out.expectation_n_atoms() - n_atoms0) < 1e-10);
    CHECK(std::abs(out.expectation_n_exc() - n_exc0) < 1e-10);
  }
}

TEST_CASE("block independence: joint evolution equals per-sector evolution") {
  std::mt19937 rng(17);
  const ModeCutoffs cut{6, 6, 2, 2};
  const FourModeState a = random_sector_state(rng, cut, 2, 3);
  const FourModeState b = random_sector_state(rng, cut, 4, 2);
  FourModeState joint;
  joint.cutoffs = cut;
  joint.sectors = a.sectors;
  joint.sectors.insert(b.sectors.begin(), b.sectors.end());
  for (auto& [key, amps] : joint.sectors) amps /= std::sqrt(2.0);

  const FullModelParams p = eit_params(0.5, 1.3, 6.0, 0.4);
  const double t = 2.7;
  const FourModeState joint_out = evolve_full(joint, p, t);
  const FourModeState a_out = evolve_full(a, p, t);
  const FourModeState b_out = evolve_full(b, p, t);
  CHECK((joint_out.sectors.at({2, 3}) - a_out.sectors.at({2, 3}) / std::sqrt(2.0))
            .cwiseAbs()
            .maxCoeff() < 1e-12);
  CHECK((joint_out.sectors.at({4, 2}) - b_out.sectors.at({4, 2}) / std::sqrt(2.0))
            .cwiseAbs()
            .maxCoeff() < 1e-12);
}

TEST_CASE("Krylov stepping agrees with dense evolution") {
  std::mt19937 rng(29);
  const ModeCutoffs cut{10, 10, 6, 6};
  const FourModeState st = random_sector_state(rng, cut, 8, 8);
  REQUIRE(st.sectors.begin()->second.size() > 30);
  const FullModelParams p = eit_params(0.6, 1.4, 3.0, 0.5);

  EvolveOptions dense;
  EvolveOptions krylov;
  krylov.dense_limit = 1;  // force the Krylov path
  const double t = 2.3;
  const FourModeState d = evolve_full(st, p, t, dense);
  const FourModeState k = evolve_full(st, p, t, krylov);
  const auto key = st.sectors.begin()->first;
  CHECK((d.sectors.at(key) - k.sectors.at(key)).cwiseAbs().maxCoeff() < 1e-8);
  CHECK(std::abs(k.norm() - 1.0) < 1e-9);
}

TEST_CASE("evolve_full refuses sectors beyond the hard limit") {
  std::mt19937 rng(3);
  const ModeCutoffs cut{6, 6, 2, 2};
  const FourModeState st = random_sector_state(rng, cut, 3, 3);
  EvolveOptions opt;
  opt.hard_limit = 2;
  CHECK_THROWS_AS((void)evolve_full(st, eit_params(0.2, 1.0, 5.0, 0.1), 1.0, opt),
                  ResourceError);
}

TEST_CASE("adiabatic validation: regime preconditions") {
  FullModelParams off = eit_params(0.1, 1.0, 50.0, 0.05);
  off.delta2 = 40.0;
  CHECK_THROWS_AS(
      (void)adiabatic_validation(1.0, 1.0, off, 0.05, 1.0, 4, ModeCutoffs{4, 4, 1, 1}),
      RegimeError);

  const FullModelParams strong = eit_params(2.0, 1.0, 50.0, 0.05);
  CHECK_THROWS_AS(
      (void)adiabatic_validation(1.0, 1.0, strong, 0.05, 1.0, 4, ModeCutoffs{4, 4, 1, 1}),
      RegimeError);
}

TEST_CASE("adiabatic validation: decoupled probe gives exact agreement") {
  const FullModelParams p = eit_params(0.0, 1.0, 50.0, 0.05);
  const ValidationReport r = adiabatic_validation(
      1.0, 1.0, p, 0.05, 2.0 * std::numbers::pi / 0.05, 16, ModeCutoffs{8, 8, 2, 2});
  CHECK(r.min_fidelity >= 1.0 - 1e-12);
  CHECK(r.max_leakage < 1e-14);
  CHECK(r.nominal_cross_kerr == 0.0);
  for (const auto& s : r.samples) {
    CHECK(s.fidelity == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(s.norm - r.samples.front().norm) < 1e-10);
  }
}

TEST_CASE("adiabatic validation: leakage converges in the b2/b3 cutoff") {
  const double lambda1 = 0.05;
  const double t_max = 2.0 * std::numbers::pi / lambda1;
  const FullModelParams p = eit_params(0.1, 1.0, 50.0, lambda1);
  double leak[3];
  int i = 0;
  for (int b23 : {1, 2, 3}) {
    const ValidationReport r = adiabatic_validation(
        1.0, 1.0, p, lambda1, t_max, 12, ModeCutoffs{8, 8, b23, b23});
    leak[i++] = r.max_leakage;
  }
  // populations above one quantum in the eliminated modes are perturbative:
  // raising the cutoff from 2 to 3 must change the answer far less than
  // raising it from 1 to 2
  CHECK(std::abs(leak[2] - leak[1]) < 0.05 * std::abs(leak[1] - leak[0]));
  CHECK(std::abs(leak[2] - leak[1]) < 1e-4);
}

TEST_CASE("adiabatic validation: infidelity falls as g1/g2 shrinks") {
  const ModeCutoffs cut{8, 8, 2, 2};
  const double lambda1 = 0.05;
  const double t_max = 2.0 * std::numbers::pi / lambda1;
  double previous = 2.0;
  for (double ratio : {0.3, 0.2, 0.1, 0.05}) {
    const FullModelParams p = eit_params(ratio, 1.0, 50.0, lambda1);
    const ValidationReport r =
        adiabatic_validation(1.0, 1.0, p, lambda1, t_max, 24, cut);
    const double infidelity = 1.0 - r.samples.back().fidelity;
    CHECK(infidelity < previous);
    previous = infidelity;
    if (ratio <= 0.1) CHECK(r.max_leakage < 0.05);
    // norm drift along the whole trajectory
    for (const auto& s : r.samples)
      CHECK(std::abs(s.norm - r.samples.front().norm) < 1e-8);
    // empirical bound on the intermediate-level population; the constant was
    // fitted once on these runs (max observed 3.29) and is pinned here
    double leak2 = 0.0;
    for (const auto& s : r.samples) leak2 = std::max(leak2, s.leak_n2);
    CHECK(leak2 <= 3.3 * std::pow(ratio * 1.0 / 50.0, 2));
  }
}
