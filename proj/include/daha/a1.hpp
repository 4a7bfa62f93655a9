#pragma once

#include "daha/ore.hpp"
#include "daha/words.hpp"

namespace daha {

struct DtNotSupported : std::domain_error {
  DtNotSupported() : std::domain_error("twist image of ð_t is not materialized") {}
};

/// A_1 DAHA generators in the polynomial representation
///   T = t^-1 s + (t^-1 - t)(z^2-1)^-1 (s - 1),  X = z,  Y = ð s T,
/// on the Laurent polynomials of the site variable z, with ð z = q z ð for
/// the configured shift constant q (v^4 standalone, v^2 for the x_u / x_d
/// copies glued into the surface representations).
struct A1 {
  AlgebraConfig cfg;
  Site site;
  int64_t q_vpow;  // v-power of this instance's q
  OreOp T, Tinv, X, Xinv, Y, Yinv, e, s, sh, shinv, one;

  Var zvar() const { return site_var(site); }
  RatFun q() const { return RatFun::vpow(q_vpow); }
  RatFun qhalf() const { return RatFun::vpow(q_vpow / 2); }
};

A1 build_a1(Site site, AlgebraConfig cfg);

/// Standalone torus algebra: site x, shift q = v^4, ð_t with the same q.
A1 build_a1_standard();

OreOp eval_word(const A1& a, const OpWord& w);

/// ch(word) = eval(w) + eval(w^-1).
OreOp ch_word(const A1& a, const OpWord& w);

/// O_{(r,s)} words for the families the paper uses.
OpWord word_x();                      // (1,0)
OpWord word_y();                      // (0,1)
OpWord word_slope11(int64_t q_vpow);  // q^(1/2) X Y
OpWord word_slope1m1(int64_t q_vpow); // q^(-1/2) X^-1 Y
OpWord word_n1(int64_t n, int64_t q_vpow);  // (n,1): q^(n/2-1) X^(n-1) Y X
OpWord word_1n(int64_t n, int64_t q_vpow);  // (1,n): q^(-n/2+1) Y^(n-1) X Y
OpWord word_2k1_2(int64_t k, int64_t q_vpow);  // (2k+1,2): q^(k-1) (X^k Y)^2 X

/// Macdonald operator on the symmetric space (Y + Y^-1 restricted):
/// (t z - (t z)^-1... ) ð + ... built from its displayed rational form.
OreOp macdonald_operator(const A1& a);

/// ch-image of q^(1/2) X Y + ... on the symmetric space (the (1,1) curve).
OreOp slope11_operator_sym(const A1& a);

/// M-hat operators for the (2k+1,2) torus family, as symmetric-space
/// difference operators in the site variable.
OreOp mhat0_2k1(const A1& a, int64_t k);
OreOp mhat_plus_2k1(const A1& a, int64_t k);
OreOp mhat_minus_2k1(const A1& a, int64_t k);

/// Raising/lowering operators (parameter-shift pair): K^+ maps
/// M_m(z;q,qt) to (q^(m+1)t^2 - q^(-m-1)t^-2) M_{m+1}(z;q,t), K^- maps
/// M_m(z;q,t) to (q^m - q^-m) M_{m-1}(z;q,qt).
OreOp raising_operator(const A1& a);
OreOp lowering_operator(const A1& a);

/// P_n(x,q,t; c) = M_{n-1}(O; q,t)(1), computed in the power-sum basis of
/// the Macdonald polynomial; `w` is the O-word of the curve.
RatFun daha_poly_torus(const A1& a, int64_t n, const OpWord& w);

}  // namespace daha
