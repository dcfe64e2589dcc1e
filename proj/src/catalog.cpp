#include "eitangle/catalog.hpp"

#include <cmath>
#include <numbers>

namespace eitangle {

namespace {

constexpr Complex kI{0.0, 1.0};

Complex phase(double arg) { return std::polar(1.0, arg); }

// |gamma> + sign |-gamma>, unnormalized
Eigen::VectorXcd raw_cat(Complex gamma, Complex sign, int cutoff) {
  return coherent_mode(gamma, cutoff).amps +
         sign * coherent_mode(-gamma, cutoff).amps;
}

}  // namespace

TruncatedMode even_odd_cat(Complex beta, Parity parity, int cutoff) {
  const double overlap = std::exp(-2.0 * std::norm(beta));  // <beta|-beta>
  if (parity == Parity::kOdd && beta == Complex(0.0))
    throw DomainError("even_odd_cat: odd cat undefined at beta = 0");
  const double scale =
      std::sqrt(2.0 * (parity == Parity::kEven ? 1.0 + overlap : 1.0 - overlap));
  const Complex sign = parity == Parity::kEven ? 1.0 : -1.0;
  return TruncatedMode(raw_cat(beta, sign, cutoff) / scale);
}

TruncatedMode yurke_stoler_cat(Complex alpha, YsSign sign, int cutoff) {
  const Complex s = sign == YsSign::kPlus ? kI : -kI;
  return TruncatedMode(raw_cat(alpha, s, cutoff) / std::sqrt(2.0));
}

NamedState two_state_entangled(Complex alpha, Complex beta, CutoffPair cut) {
  const double overlap = std::exp(-2.0 * std::norm(beta));
  const double beta_plus = std::sqrt(2.0 * (1.0 + overlap));
  const double beta_minus = std::sqrt(2.0 * (1.0 - overlap));

  TwoModeState state(cut.photon, cut.atom);
  state.amps = 0.5 * beta_plus * coherent_mode(alpha, cut.photon).amps *
                   even_odd_cat(beta, Parity::kEven, cut.atom).amps.transpose();
  if (beta_minus > 0.0)
    state.amps -= kI * 0.5 * beta_minus * coherent_mode(-alpha, cut.photon).amps *
                  even_odd_cat(beta, Parity::kOdd, cut.atom).amps.transpose();
  return {"two_state_27", std::move(state), false};
}

NamedState two_state_entangled_alt(Complex alpha, Complex beta, CutoffPair cut) {
  TwoModeState state(cut.photon, cut.atom);
  state.amps =
      0.5 * (yurke_stoler_cat(alpha, YsSign::kMinus, cut.photon).amps *
                 coherent_mode(beta, cut.atom).amps.transpose() +
             yurke_stoler_cat(alpha, YsSign::kPlus, cut.photon).amps *
                 coherent_mode(-beta, cut.atom).amps.transpose());
  return {"two_state_27_alt", std::move(state), false};
}

NamedState entangled_coherent_ys(Complex alpha, Complex beta, YsVariant variant,
                                 CutoffPair cut) {
  const auto p = coherent_mode(alpha, cut.photon).amps;
  const auto pm = coherent_mode(-alpha, cut.photon).amps;
  const auto a = coherent_mode(beta, cut.atom).amps;
  const auto am = coherent_mode(-beta, cut.atom).amps;

  TwoModeState state(cut.photon, cut.atom);
  if (variant == YsVariant::kEq31)
    state.amps = (p * a.transpose() + kI * pm * am.transpose()) / std::sqrt(2.0);
  else
    state.amps = (p * am.transpose() - kI * pm * a.transpose()) / std::sqrt(2.0);
  return {variant == YsVariant::kEq31 ? "ys_31" : "ys_33", std::move(state),
          true};
}

NamedState three_state_entangled(Complex alpha, Complex beta, CutoffPair cut) {
  constexpr double pi3 = std::numbers::pi / 3.0;
  const Complex e_m = phase(-pi3), e_p = phase(pi3);

  const auto beta_rot_p = coherent_mode(-beta * e_p, cut.atom).amps;
  const auto beta_rot_m = coherent_mode(-beta * e_m, cut.atom).amps;
  const auto beta_id = coherent_mode(beta, cut.atom).amps;

  const Eigen::VectorXcd b1 = e_m * beta_rot_p + e_p * beta_rot_m - beta_id;
  const Eigen::VectorXcd b2 = e_p * beta_rot_p + e_m * beta_rot_m - beta_id;
  const Eigen::VectorXcd b3 = beta_rot_p + beta_rot_m + beta_id;

  auto photon_k = [&](int k) {
    const double sgn = k % 2 == 0 ? 1.0 : -1.0;
    return coherent_mode(sgn * alpha * phase(-k * pi3), cut.photon).amps;
  };

  TwoModeState state(cut.photon, cut.atom);
  state.amps = (photon_k(1) * b1.transpose() + photon_k(2) * b2.transpose() +
                e_m * photon_k(3) * b3.transpose()) /
               3.0;
  return {"three_state_36", std::move(state), false};
}

NamedState four_state_entangled(Complex alpha, Complex beta, CutoffPair cut) {
  constexpr double pi4 = std::numbers::pi / 4.0;
  const Eigen::VectorXcd pa_m = raw_cat(kI * alpha, -1.0, cut.photon);
  const Eigen::VectorXcd pa_p = raw_cat(kI * alpha, 1.0, cut.photon);
  const Eigen::VectorXcd a_p = raw_cat(alpha, 1.0, cut.photon);
  const Eigen::VectorXcd a_m = raw_cat(alpha, -1.0, cut.photon);
  const Eigen::VectorXcd qb_m = raw_cat(kI * beta, -1.0, cut.atom);
  const Eigen::VectorXcd qb_p = raw_cat(kI * beta, 1.0, cut.atom);
  const Eigen::VectorXcd b_m = raw_cat(beta, -1.0, cut.atom);
  const Eigen::VectorXcd b_p = raw_cat(beta, 1.0, cut.atom);

  TwoModeState state(cut.photon, cut.atom);
  state.amps = (phase(pi4) * pa_m * qb_m.transpose() +
                phase(-pi4) * pa_p * b_m.transpose() +
                a_p * qb_p.transpose() + a_m * b_p.transpose()) /
               4.0;
  return {"four_state_39", std::move(state), false};
}

const std::vector<std::string>& catalog_labels() {
  static const std::vector<std::string> labels = {
      "two_state_27", "two_state_27_alt", "ys_31",       "ys_33",
      "three_state_36", "four_state_39",  "even_cat",    "odd_cat",
      "ys_cat_plus",  "ys_cat_minus"};
  return labels;
}

NamedState make_named_state(const std::string& label, Complex alpha,
                            Complex beta, CutoffPair cut) {
  if (label == "two_state_27") return two_state_entangled(alpha, beta, cut);
  if (label == "two_state_27_alt")
    return two_state_entangled_alt(alpha, beta, cut);
  if (label == "ys_31")
    return entangled_coherent_ys(alpha, beta, YsVariant::kEq31, cut);
  if (label == "ys_33")
    return entangled_coherent_ys(alpha, beta, YsVariant::kEq33, cut);
  if (label == "three_state_36") return three_state_entangled(alpha, beta, cut);
  if (label == "four_state_39") return four_state_entangled(alpha, beta, cut);
  if (label == "even_cat")
    return {label, even_odd_cat(beta, Parity::kEven, cut.atom), true};
  if (label == "odd_cat")
    return {label, even_odd_cat(beta, Parity::kOdd, cut.atom), true};
  if (label == "ys_cat_plus")
    return {label, yurke_stoler_cat(alpha, YsSign::kPlus, cut.photon), true};
  if (label == "ys_cat_minus")
    return {label, yurke_stoler_cat(alpha, YsSign::kMinus, cut.photon), true};
  throw DomainError("unknown catalog label: " + label);
}

}  // namespace eitangle
