#pragma once

#include <string>
#include <variant>
#include <vector>

#include "eitangle/fockspace.hpp"

namespace eitangle {

enum class Parity { kEven, kOdd };
enum class YsSign { kPlus, kMinus };
enum class YsVariant { kEq31, kEq33 };

struct CutoffPair {
  int photon;
  int atom;
};

// A target state with a fixed construction formula. Unnormalized formulas
// are stored as written; `normalized` records whether normalize() was applied.
struct NamedState {
  std::string label;
  std::variant<TruncatedMode, TwoModeState> state;
  bool normalized = false;
};

// (|beta> +- |-beta>)/beta_pm with beta_pm = sqrt(2 (1 +- e^{-2|beta|^2})).
// The odd cat is undefined at beta = 0.
TruncatedMode even_odd_cat(Complex beta, Parity parity, int cutoff);

// (|alpha> +- i |-alpha>)/sqrt(2); exactly normalized for every alpha.
TruncatedMode yurke_stoler_cat(Complex alpha, YsSign sign, int cutoff);

// (1/2)[beta_+ |alpha> (x) |beta>_+  -  i beta_- |-alpha> (x) |beta>_-]
NamedState two_state_entangled(Complex alpha, Complex beta, CutoffPair cut);

// Equivalent decomposition (1/2)[|alpha>_- (x) |beta> + |alpha>_+ (x) |-beta>]
// built from Yurke-Stoler photon cats; proportional to the state above.
NamedState two_state_entangled_alt(Complex alpha, Complex beta, CutoffPair cut);

// kEq31: (|alpha>|beta> + i |-alpha>|-beta>)/sqrt(2)
// kEq33: (|alpha>|-beta> - i |-alpha>|beta>)/sqrt(2)
NamedState entangled_coherent_ys(Complex alpha, Complex beta, YsVariant variant,
                                 CutoffPair cut);

// (1/3)[|a>_1|b>_1 + |a>_2|b>_2 + e^{-i pi/3}|a>_3|b>_3] with
// |a>_k = |(-1)^k alpha e^{-i k pi/3}> and the three atomic MQS branches
//   |b>_1 = e^{-i pi/3}|-beta e^{i pi/3}> + e^{i pi/3}|-beta e^{-i pi/3}> - |beta>
//   |b>_2 = e^{i pi/3}|-beta e^{i pi/3}> + e^{-i pi/3}|-beta e^{-i pi/3}> - |beta>
//   |b>_3 = |-beta e^{i pi/3}> + |-beta e^{-i pi/3}> + |beta>
// The N=3 coefficient grid fixes the three branches unambiguously (see
// tests). Matches the tau = 2 pi/3 evolution up to the discarded global
// phase e^{i pi/3}.
NamedState three_state_entangled(Complex alpha, Complex beta, CutoffPair cut);

// (1/4)[e^{i pi/4}|ia>_-|ib>_- + e^{-i pi/4}|ia>_+|b>_- + |a>_+|ib>_+
//       + |a>_-|b>_+] with unnormalized cats |g>_pm = |g> +- |-g>.
NamedState four_state_entangled(Complex alpha, Complex beta, CutoffPair cut);

// All labels accepted by make_named_state, in a fixed order.
const std::vector<std::string>& catalog_labels();

// Dispatch by label. Cat labels produce single-mode states: even_cat and
// odd_cat use beta (atom side), ys_cat_plus and ys_cat_minus use alpha
// (photon side).
NamedState make_named_state(const std::string& label, Complex alpha,
                            Complex beta, CutoffPair cut);

}  // namespace eitangle
