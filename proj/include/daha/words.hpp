#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace daha {

// Abstract generator symbols; A_1 words use T/X/Y, CvC_1 words use the four
// T's plus X/Y shorthands (X = (T1v T1)^-1, Y = T1 T0).
enum class GenSym : int { T, X, Y, T0, T1, T0v, T1v };

struct Letter {
  GenSym g;
  int pw;  // +1 or -1
  friend bool operator==(const Letter&, const Letter&) = default;
};

/// q-monomial-scaled word in the generators: v^scalar_vpow * l1 * l2 * ...
struct OpWord {
  int64_t scalar_vpow = 0;
  std::vector<Letter> letters;

  static OpWord gen(GenSym g, int pw = 1) { return OpWord{0, {{g, pw}}}; }
  OpWord inverse() const;
  friend OpWord operator*(const OpWord& a, const OpWord& b);
};

// --- A_1 automorphisms (tau_R/tau_L, epsilon, epsilon') -------------------

enum class A1Twist { TauR, TauRInv, TauL, TauLInv, Epsilon, EpsilonPrime };

/// Image of a word under one twist.  The q^(1/2) factors of the tau images
/// are expressed through the instance's q: scalars scale with q_vpow
/// (q^(1/2) contributes q_vpow/2 to the v-power; q_vpow is always even).
OpWord apply_a1_twist(A1Twist tw, const OpWord& w, int64_t q_vpow = 4);

/// Applies a twist sequence left-to-right: word.back() acts first on w.
OpWord apply_a1_twists(const std::vector<A1Twist>& tws, const OpWord& w,
                       int64_t q_vpow = 4);

// --- CvC_1 automorphisms (sigma_R/sigma_L, epsilon') ----------------------

enum class CC1Twist { SigmaR, SigmaRInv, SigmaL, SigmaLInv, EpsilonPrime };

/// Parameter permutation (entry i of the result names which old t_j lands
/// in slot i).
std::array<int, 4> cc1_param_perm(CC1Twist tw);

/// Image of a word; X/Y letters are first expanded into T-letters.
OpWord apply_cc1_twist(CC1Twist tw, const OpWord& w);

}  // namespace daha
