#pragma once

#include "daha/orthopoly.hpp"
#include "daha/ore.hpp"
#include "daha/words.hpp"

namespace daha {

/// CvC_1 DAHA generators in the polynomial representation on C[x^, x^-1]
/// (q = v^4).  Parameters may be symbolic t0..t3 or specializations such
/// as t_natural / t_star.
struct CC1 {
  AlgebraConfig cfg;
  AWParams params;
  OreOp T0, T1, T0v, T1v, T0i, T1i, T0vi, T1vi, X, Xinv, Y, Yinv, e, one;
};

CC1 build_cc1(const AWParams& params);

/// (t0,t1,t2,t3) = (I xu, I q^-1/2 xl, I xu, I xr): the twice-punctured
/// torus gluing of b1 ~ b2.
AWParams params_t_natural();

/// (t0,t1,t2,t3) = (I xu, I q^-1/2 xd, I xu, I xd): the genus-two gluing.
AWParams params_t_star();

OreOp eval_word(const CC1& c, const OpWord& w);
OreOp ch_word(const CC1& c, const OpWord& w);

/// Applies a sigma-twist sequence to a word and the parameter vector
/// together (both transform; see the braiding dictionary).
struct TwistedWord {
  OpWord word;
  AWParams params;
};
TwistedWord apply_sigma(const std::vector<CC1Twist>& tws, const OpWord& w,
                        const AWParams& params);

/// O_(r,s) words of the curve catalog on the 4-punctured sphere.
OpWord cc1_word_10();   // T1v T1  (ch gives X + X^-1)
OpWord cc1_word_01();   // T1 T0
OpWord cc1_word_11();   // T1 T0v
OpWord cc1_word_1m1();  // q^(1/2) T0 T1v
OpWord cc1_word_12();   // T1 T0v T1v (T0v)^-1
OpWord cc1_word_21();   // T1 (T0v)^-1 T0 T0v
OpWord cc1_word_1_2k(int64_t k);    // Y^-k X^-1 T1^-1 Y^k T1
OpWord cc1_word_1_2k1(int64_t k);   // q^-1/2 Y^-k-1 T1 X Y^k T1
OpWord cc1_word_2k_1(int64_t k);    // T1 X^-k T1^-1 Y X^k
OpWord cc1_word_2k1_1(int64_t k);   // q^-1/2 T1 X^-k Y^-1 T1 X^(k+1)

/// t_{ij,kl} boundary constants of the product-to-sum formulas.
RatFun t_const_03_12(const AWParams& p);
RatFun t_const_02_13(const AWParams& p);
RatFun t_const_01_23(const AWParams& p);

/// Sphere DAHA polynomial P_n(x,q,t; c) = M_{n-1}(O; q, q)(1).
RatFun daha_poly_sphere(const CC1& c, int64_t n, const OpWord& w);

}  // namespace daha
