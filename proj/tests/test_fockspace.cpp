#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "eitangle/fockspace.hpp"

using namespace eitangle;

namespace {

TwoModeState random_state(std::mt19937& rng, int pc, int ac) {
  std::normal_distribution<double> dist;
  TwoModeState s(pc, ac);
  for (int n = 0; n <= pc; ++n)
    for (int m = 0; m <= ac; ++m) s.amps(n, m) = Complex(dist(rng), dist(rng));
  return s;
}

// Independent tail oracle: sum the exact Poisson weights beyond the cutoff.
double poisson_tail(double abs_alpha, int cutoff) {
  const double mean = abs_alpha * abs_alpha;
  double tail = 0.0;
  for (int n = cutoff + 1; n < cutoff + 400; ++n)
    tail += std::exp(-mean + n * std::log(mean) - std::lgamma(n + 1.0));
  return tail;
}

}  // namespace

TEST_CASE("coherent amplitudes: vacuum and closed-form values") {
  const auto vac = coherent_amplitudes(0.0, 5);
  CHECK(vac.mode.cutoff() == 5);
  CHECK(vac.mode[0] == Complex(1.0));
  for (int n = 1; n <= 5; ++n) CHECK(vac.mode[n] == Complex(0.0));
  CHECK(vac.tail_mass == doctest::Approx(0.0).epsilon(1e-15));

  const auto one = coherent_amplitudes(1.0, 10);
  CHECK(std::abs(one.mode[0] - std::exp(-0.5)) < 1e-15);
  CHECK(std::abs(one.mode[1] - std::exp(-0.5)) < 1e-15);  // alpha^1/sqrt(1!)
}

TEST_CASE("coherent amplitudes: truncation tail at alpha=2, cutoff=40") {
  const auto st = coherent_amplitudes(2.0, 40);
  const double lost = 1.0 - st.mode.amps.squaredNorm();
  CHECK(std::abs(lost) < 1e-12);
  CHECK(st.tail_mass < 1e-12);
  // the reported diagnostic agrees with the direct Poisson tail oracle at a
  // cutoff where the tail is still representable
  const auto wide = coherent_amplitudes(2.0, 8);
  CHECK(wide.tail_mass == doctest::Approx(poisson_tail(2.0, 8)).epsilon(1e-10));
}

TEST_CASE("default cutoff policy keeps the tail below tolerance") {
  for (double a : {0.5, 1.0, 2.0, 3.0, 4.0}) {
    const int cut = default_cutoff(a);
    CHECK(coherent_amplitudes(a, cut).tail_mass < kTailTol);
  }
  CHECK(default_cutoff(0.0) == 24);
}

TEST_CASE("tensor: vacuum product and norm product rule") {
  const auto vac = coherent_mode(0.0, 3);
  const TwoModeState prod = tensor(vac, vac);
  CHECK(prod.amps(0, 0) == Complex(1.0));
  CHECK(prod.norm() == doctest::Approx(1.0));
  CHECK(prod.amps.cwiseAbs().sum() == doctest::Approx(1.0));

  std::mt19937 rng(7);
  std::normal_distribution<double> dist;
  Eigen::VectorXcd a(5), b(7);
  for (int i = 0; i < 5; ++i) a[i] = Complex(dist(rng), dist(rng));
  for (int i = 0; i < 7; ++i) b[i] = Complex(dist(rng), dist(rng));
  const TruncatedMode ma(a), mb(b);
  CHECK(tensor(ma, mb).norm() == doctest::Approx(ma.norm() * mb.norm()));
}

TEST_CASE("tensor of coherent states matches the two-mode formula entrywise") {
  const Complex alpha(1.2, -0.3), beta(0.7, 0.4);
  const TwoModeState prod = tensor(coherent_mode(alpha, 18), coherent_mode(beta, 16));
  const double pref = std::exp(-0.5 * (std::norm(alpha) + std::norm(beta)));
  double lognf = 0.0;  // log n!
  for (int n = 0; n <= 18; ++n) {
    if (n > 0) lognf += std::log(static_cast<double>(n));
    double logmf = 0.0;
    for (int m = 0; m <= 16; ++m) {
      if (m > 0) logmf += std::log(static_cast<double>(m));
      const Complex expected = pref * std::pow(alpha, n) * std::pow(beta, m) /
                               std::exp(0.5 * (lognf + logmf));
      CHECK(std::abs(prod.amps(n, m) - expected) < 1e-13);
    }
  }
}

TEST_CASE("inner product: orthonormal basis and coherent overlaps") {
  TwoModeState e00(4, 4), e10(4, 4);
  e00.amps(0, 0) = 1.0;
  e10.amps(1, 0) = 1.0;
  CHECK(inner_product(e00, e00) == Complex(1.0));
  CHECK(inner_product(e00, e10) == Complex(0.0));

  const Complex alpha(1.1, 0.6);
  const int cut = default_cutoff(alpha);
  const auto a = tensor(coherent_mode(alpha, cut), coherent_mode(0.0, 2));
  const auto b = tensor(coherent_mode(-alpha, cut), coherent_mode(0.0, 2));
  CHECK(std::abs(inner_product(a, a) - 1.0) < 1e-12);
  CHECK(std::abs(inner_product(a, b) - std::exp(-2.0 * std::norm(alpha))) < 1e-12);

  TwoModeState bad(3, 4);
  CHECK_THROWS_AS((void)inner_product(e00, bad), DimensionError);
}

TEST_CASE("inner product is conjugate-symmetric") {
  std::mt19937 rng(21);
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = random_state(rng, 6, 5);
    const auto b = random_state(rng, 6, 5);
    const Complex ab = inner_product(a, b);
    const Complex ba = inner_product(b, a);
    CHECK(std::abs(ab - std::conj(ba)) < 1e-12 * std::abs(ab));
  }
}

TEST_CASE("coherent overlap law over a grid") {
  // |<alpha|alpha'>| = e^{-|alpha-alpha'|^2/2}
  for (double ra : {0.0, 1.0, 2.0, 3.0}) {
    for (double rb : {0.5, 1.5, 3.0}) {
      const Complex a(ra, 0.4), b(-0.3, rb);
      const int cut = std::max(default_cutoff(a), default_cutoff(b));
      const Complex ov = inner_product(coherent_mode(a, cut), coherent_mode(b, cut));
      const double expect = std::exp(-0.5 * std::norm(a - b));
      CHECK(std::abs(std::abs(ov) - expect) < 1e-10);
    }
  }
}

TEST_CASE("fidelity: identity, phase invariance, orthogonality") {
  const auto s = tensor(coherent_mode(Complex(0.9, 0.2), 20), coherent_mode(1.0, 20));
  CHECK(fidelity_up_to_global_phase(s, s) == doctest::Approx(1.0));

  TwoModeState rotated = s;
  rotated.amps *= std::polar(1.0, std::numbers::pi / 3.0);
  CHECK(fidelity_up_to_global_phase(s, rotated) == doctest::Approx(1.0));

  TwoModeState e00(2, 2), e10(2, 2);
  e00.amps(0, 0) = 1.0;
  e10.amps(1, 0) = 1.0;
  CHECK(fidelity_up_to_global_phase(e00, e10) == doctest::Approx(0.0));

  TwoModeState unnormalized(2, 2);
  unnormalized.amps(0, 0) = 2.0;
  CHECK_THROWS_AS((void)fidelity_up_to_global_phase(unnormalized, e00), ContractError);
}

TEST_CASE("normalize: scaling, random states, zero state") {
  TwoModeState scaled(3, 3);
  scaled.amps(0, 0) = 2.0;
  const TwoModeState unit = normalize(scaled);
  CHECK(unit.amps(0, 0) == Complex(1.0));

  std::mt19937 rng(5);
  for (int trial = 0; trial < 10; ++trial)
    CHECK(normalize(random_state(rng, 8, 9)).norm() == doctest::Approx(1.0));

  CHECK_THROWS_AS((void)normalize(TwoModeState(4, 4)), DomainError);
}

TEST_CASE("csv dump carries cutoffs and round-trips values") {
  TwoModeState s(1, 1);
  s.amps(0, 0) = Complex(0.5, -0.25);
  s.amps(1, 1) = Complex(1.0 / 3.0, 0.0);
  std::ostringstream os;
  dump_csv(s, os);
  const std::string text = os.str();
  CHECK(text.find("# photon_cutoff=1,atom_cutoff=1\n") == 0);
  CHECK(text.find("n,m,re,im\n") != std::string::npos);
  CHECK(text.find("0,0,0.5,-0.25\n") != std::string::npos);
  // shortest round-trip form of 1/3
  CHECK(text.find("1,1,0.3333333333333333,0\n") != std::string::npos);
}
