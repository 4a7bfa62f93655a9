#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "daha/a1.hpp"
#include "daha/orthopoly.hpp"
#include "daha/qseries.hpp"

using namespace daha;

namespace {
RatFun V(int64_t k) { return RatFun::vpow(k); }
RatFun T(int64_t k = 1) { return RatFun::var(Var::t, k); }
const RatFun one(1);

void check_relations(const A1& a) {
  // (T + t)(T - t^-1) = 0
  OreOp r1 = (a.T + OreOp::scalar(a.cfg, T())) * (a.T - OreOp::scalar(a.cfg, T(-1)));
  CHECK(r1.is_zero());
  // T X T = X^-1
  CHECK(equal(a.T * a.X * a.T, a.Xinv));
  // T^-1 Y T^-1 = Y^-1
  CHECK(equal(a.Tinv * a.Y * a.Tinv, a.Yinv));
  // X Y = q^-1 Y X T^2
  OreOp rhs = RatFun::vpow(-a.q_vpow) * (a.Y * a.X * a.T * a.T);
  CHECK(equal(a.X * a.Y, rhs));
  // inverses are genuine
  CHECK(equal(a.T * a.Tinv, a.one));
  CHECK(equal(a.Y * a.Yinv, a.one));
  // idempotent
  CHECK(equal(a.e * a.e, a.e));
  CHECK(equal(a.e * a.T, T(-1) * a.e));
  CHECK(equal(a.T * a.e, T(-1) * a.e));
}

}  // namespace

TEST_CASE("A1 DAHA relations, standalone and the renamed surface copies") {
  check_relations(build_a1_standard());
  AlgebraConfig glued;
  glued.shift_vpow = {4, 2, 2, 2};
  check_relations(build_a1(Site::Xu, glued));
  check_relations(build_a1(Site::Xd, glued));
}

TEST_CASE("polynomial representation spot values") {
  A1 a = build_a1_standard();
  RatFun sym = RatFun::var(Var::x) + RatFun::var(Var::x, -1);
  CHECK(a.T.apply(sym) == T(-1) * sym);
  CHECK(a.Y.apply(one) == T(-1));
  CHECK((a.X * a.Y - V(-4) * (a.Y * a.X * a.T * a.T)).is_zero());
}

TEST_CASE("tau twists act as the displayed substitutions") {
  A1 a = build_a1_standard();
  // tau_R(Y) = q^(1/2) X Y, tau_R(X) = X
  OpWord ty = apply_a1_twist(A1Twist::TauR, word_y());
  CHECK(equal(eval_word(a, ty), V(2) * (a.X * a.Y)));
  OpWord tx = apply_a1_twist(A1Twist::TauR, word_x());
  CHECK(equal(eval_word(a, tx), a.X));
  // tau_L(X) = q^(-1/2) Y X
  OpWord lx = apply_a1_twist(A1Twist::TauL, word_x());
  CHECK(equal(eval_word(a, lx), V(-2) * (a.Y * a.X)));
  // tau_R^k tau_L^2 (X) = q^(k-1) (X^k Y)^2 X, k <= 3
  for (int64_t k = 0; k <= 3; ++k) {
    OpWord w = word_2k1_2(k, 4);
    OreOp direct = OreOp::scalar(a.cfg, V(4 * (k - 1)));
    OreOp xk = a.one;
    for (int64_t i = 0; i < k; ++i) xk = xk * a.X;
    OreOp xky = xk * a.Y;
    direct = direct * xky * xky * a.X;
    CHECK(equal(eval_word(a, w), direct));
  }
}

TEST_CASE("epsilon conjugation: eps tau_R eps = tau_L on generator images") {
  A1 a = build_a1_standard();
  for (const OpWord& o : {word_x(), word_y(), word_slope11(4)}) {
    OpWord lhs = apply_a1_twists(
        {A1Twist::Epsilon, A1Twist::TauR, A1Twist::Epsilon}, o);
    OpWord rhs = apply_a1_twist(A1Twist::TauL, o);
    CHECK(equal(eval_word(a, lhs), eval_word(a, rhs)));
  }
}

TEST_CASE("epsilon-prime is an anti-automorphism") {
  A1 a = build_a1_standard();
  // eps'(XY) = eps'(Y) eps'(X) = X^-1 Y^-1
  OpWord xy = word_x() * word_y();
  OpWord img = apply_a1_twist(A1Twist::EpsilonPrime, xy);
  CHECK(equal(eval_word(a, img), a.Xinv * a.Yinv));
}

TEST_CASE("curve operators and product-to-sum identities") {
  A1 a = build_a1_standard();
  RatFun q = V(4), qh = V(2), qhi = V(-2);
  OreOp m10 = ch_word(a, word_x());
  OreOp m01 = ch_word(a, word_y());
  OreOp m11 = ch_word(a, word_slope11(4));
  OreOp m1m1 = ch_word(a, word_slope1m1(4));
  CHECK(equal(m10, a.X + a.Xinv));
  CHECK(equal(m01, a.Y + a.Yinv));
  // M_(1,1) = ch(q^(1/2) X Y) = ch(q^(-1/2) Y X)
  OreOp m11b = V(-2) * (a.Y * a.X) + V(2) * (a.Xinv * a.Yinv);
  CHECK(equal(m11, m11b));
  // mm_prod_1
  CHECK(equal(m10 * m01, qhi * m11 + qh * m1m1));
  OreOp m12 = ch_word(a, word_1n(2, 4));
  CHECK(equal(m01 * m11, qhi * m10 + qh * m12));
  OreOp m21 = ch_word(a, word_n1(2, 4));
  CHECK(equal(m11 * m10, qhi * m01 + qh * m21));
  // mm_prod_2 for n <= 3
  for (int64_t n = 1; n <= 3; ++n) {
    OreOp mn1 = ch_word(a, word_n1(n, 4));
    OreOp mn1p = ch_word(a, word_n1(n + 1, 4));
    OreOp mn1m = n == 1 ? m01 : ch_word(a, word_n1(n - 1, 4));
    CHECK(equal(mn1 * m10, qhi * mn1m + qh * mn1p));
    OreOp m1n = ch_word(a, word_1n(n, 4));
    OreOp m1np = ch_word(a, word_1n(n + 1, 4));
    OreOp m1nm = n == 1 ? m10 : ch_word(a, word_1n(n - 1, 4));
    CHECK(equal(m01 * m1n, qhi * m1nm + qh * m1np));
  }
  // mm_prod_3 with the boundary constant
  OreOp m20t = a.X * a.X + a.Xinv * a.Xinv;
  OreOp m02t = a.Y * a.Y + a.Yinv * a.Yinv;
  OreOp rhs = q.inv() * m20t + q * m02t +
              OreOp::scalar(a.cfg, q + q.inv() - (T(2) * q.inv() + T(-2) * q));
  CHECK(equal(m1m1 * m11, rhs));
}

TEST_CASE("word_1n/word_n1 match their displayed normalizations") {
  A1 a = build_a1_standard();
  // M_(1,1) from the n=1 family words
  CHECK(equal(ch_word(a, word_1n(1, 4)), ch_word(a, word_slope11(4))));
  CHECK(equal(ch_word(a, word_n1(1, 4)), ch_word(a, word_slope11(4))));
}

TEST_CASE("M-hat(0) agrees with ch(O_(2k+1,2)) on symmetric inputs, k <= 3") {
  A1 a = build_a1_standard();
  for (int64_t k = 0; k <= 3; ++k) {
    OreOp chop = ch_word(a, word_2k1_2(k, 4));
    OreOp mhat = mhat0_2k1(a, k);
    for (int64_t m = 0; m <= 4; ++m) {
      RatFun f = macdonald_a1(m, 4, Var::x);
      CHECK(chop.apply(f) == mhat.apply(f));
    }
  }
}

TEST_CASE("torus DAHA polynomials") {
  A1 a = build_a1_standard();
  // P_n(c_(1,0)) = M_(n-1)(x), P_n(c_(0,1)) = M_(n-1)(t^-1)
  for (int64_t n = 1; n <= 4; ++n) {
    CHECK(daha_poly_torus(a, n, word_x()) == macdonald_a1(n - 1, 4, Var::x));
    RatFun expect = macdonald_a1(n - 1, 4, Var::x)
                        .substituted({{Var::x, T(-1)}});
    CHECK(daha_poly_torus(a, n, word_y()) == expect);
  }
  // P_2(-q, q, -q; c_(2k+1,2)) = 1 - q^4k - q^(4k+2) - q^(4k+4), k <= 3
  std::map<Var, RatFun> spec{{Var::x, -V(4)}, {Var::t, -V(4)}};
  for (int64_t k = 0; k <= 3; ++k) {
    RatFun p2 = daha_poly_torus(a, 2, word_2k1_2(k, 4));
    RatFun val = p2.substituted(spec);
    RatFun expect = one - V(16 * k) - V(16 * k + 8) - V(16 * k + 16);
    CHECK(val == expect);
  }
}

TEST_CASE("three-term recursion reproduces the torus DAHA polynomials") {
  A1 a = build_a1_standard();
  for (int64_t k = 0; k <= 1; ++k) {
    OreOp mhat = mhat0_2k1(a, k);
    OpWord w = word_2k1_2(k, 4);
    RatFun p1 = daha_poly_torus(a, 1, w);
    RatFun p2 = daha_poly_torus(a, 2, w);
    CHECK(p1 == one);
    for (int64_t n = 2; n <= 4; ++n) {
      RatFun p3 = mhat.apply(p2) - macdonald_three_term_b(n - 1, 4) * p1;
      CHECK(p3 == daha_poly_torus(a, n + 1, w));
      p1 = p2;
      p2 = p3;
    }
  }
}

TEST_CASE("M-hat(+/-) reproduce the sh-factored twist images, k <= 2") {
  A1 a = build_a1_standard();
  RatFun t = T(), ti = T(-1);
  OreOp shx_ti = OreOp::scalar(a.cfg, ti * RatFun::var(Var::x) - t * RatFun::var(Var::x, -1));
  for (int64_t k = 0; k <= 2; ++k) {
    OpWord w = word_2k1_2(k, 4);
    OreOp o = eval_word(a, w);
    OreOp oi = eval_word(a, w.inverse());
    // sh(t O) sh(t^-1 X) = -M-hat(+), as symmetric-space operators
    OreOp lhs_p = (t * o - ti * oi) * shx_ti;
    OreOp mp = mhat_plus_2k1(a, k);
    // (1/sh(t^-1 X)) sh(t^-1 O) = M-hat(-)
    OreOp lhs_m = OreOp::scalar(a.cfg, (ti * RatFun::var(Var::x) -
                                        t * RatFun::var(Var::x, -1)).inv()) *
                  (ti * o - t * oi);
    OreOp mm = mhat_minus_2k1(a, k);
    for (int64_t m = 0; m <= 3; ++m) {
      RatFun f = macdonald_a1(m, 4, Var::x);
      CHECK(lhs_p.apply(f) == -mp.apply(f));
      CHECK(lhs_m.apply(f) == mm.apply(f));
    }
  }
}
