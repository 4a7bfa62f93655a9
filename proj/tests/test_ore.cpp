#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "daha/ore.hpp"

using namespace daha;

namespace {

AlgebraConfig cfg_std() {
  AlgebraConfig c;
  c.shift_vpow = {4, 2, 2, 4};
  return c;
}

RatFun V(int64_t k) { return RatFun::vpow(k); }
RatFun X(int64_t k = 1) { return RatFun::var(Var::x, k); }

std::mt19937_64 rng(416);

OreOp rand_op(const AlgebraConfig& cfg) {
  std::uniform_int_distribution<int> nt(1, 3), sh(-2, 2), iv(0, 1), cf(-3, 3);
  OreOp op(cfg);
  int n = nt(rng);
  for (int i = 0; i < n; ++i) {
    OpKey k;
    k.sh[0] = sh(rng);
    k.sh[3] = sh(rng);
    k.inv = static_cast<uint8_t>(iv(rng));
    int c0 = cf(rng);
    RatFun coeff = RatFun(c0 == 0 ? 1 : c0) * X(sh(rng)) +
                   RatFun(cf(rng)) * RatFun::var(Var::t, sh(rng));
    op.add_term(k, coeff);
  }
  return op;
}

RatFun rand_fun() {
  std::uniform_int_distribution<int> sh(-2, 2), cf(-3, 3);
  Laurent num, den;
  num.add_term(exp_of(Var::x, sh(rng)), GCoeff(cf(rng)));
  num.add_term(exp_of(Var::t, sh(rng)), GCoeff(2));
  den.add_term(exp_of(Var::x, sh(rng)), GCoeff(1));
  den.add_term(Exp{}, GCoeff(cf(rng)));
  if (den.is_zero()) den = Laurent(1);
  return RatFun(num, den);
}

}  // namespace

TEST_CASE("shift rewrite: Dx . x = q x Dx") {
  auto cfg = cfg_std();
  OreOp dx = OreOp::shift(cfg, Site::X, 1);
  OreOp xop = OreOp::scalar(cfg, X());
  OreOp lhs = dx * xop;
  OreOp rhs = OreOp::shift(cfg, Site::X, 1, V(4) * X());
  CHECK(equal(lhs, rhs));
}

TEST_CASE("s . Dx = Dx^-1 . s, checked also by application") {
  auto cfg = cfg_std();
  OreOp s = OreOp::involution(cfg, Site::X);
  OreOp dx = OreOp::shift(cfg, Site::X, 1);
  OreOp lhs = s * dx;
  OreOp rhs = OreOp::shift(cfg, Site::X, -1) * s;
  CHECK(equal(lhs, rhs));
  // both send f(x)=x to q x^-1: first f(qx) = qx, then x -> 1/x
  CHECK(lhs.apply(X()) == V(4) * X(-1));
  CHECK(rhs.apply(X()) == V(4) * X(-1));
}

TEST_CASE("involution squares to the identity") {
  auto cfg = cfg_std();
  OreOp s = OreOp::involution(cfg, Site::X);
  CHECK(equal(s * s, OreOp::identity(cfg)));
}

TEST_CASE("monomial application: Dx x^3 = q^3 x^3") {
  auto cfg = cfg_std();
  OreOp dx = OreOp::shift(cfg, Site::X, 1);
  CHECK(dx.apply(X(3)) == V(12) * X(3));
}

TEST_CASE("s fixes symmetric input") {
  auto cfg = cfg_std();
  OreOp s = OreOp::involution(cfg, Site::X);
  CHECK(s.apply(X() + X(-1)) == X() + X(-1));
}

TEST_CASE("noncommutativity: Dx x != x Dx") {
  auto cfg = cfg_std();
  OreOp dx = OreOp::shift(cfg, Site::X, 1);
  OreOp xop = OreOp::scalar(cfg, X());
  CHECK(!equal(dx * xop, xop * dx));
}

TEST_CASE("ore associativity and apply/compose compatibility, randomized") {
  auto cfg = cfg_std();
  int cases = 0;
  for (int iter = 0; iter < 35; ++iter) {
    OreOp a = rand_op(cfg), b = rand_op(cfg), c = rand_op(cfg);
    CHECK(equal((a * b) * c, a * (b * c)));
    RatFun f = rand_fun();
    CHECK((a * b).apply(f) == a.apply(b.apply(f)));
    // distributivity of composition over addition
    CHECK(equal(a * (b + c), a * b + a * c));
    cases += 3;
  }
  CHECK(cases >= 100);
}

TEST_CASE("dt coefficient projection and reconstruction") {
  auto cfg = cfg_std();
  RatFun f = X() + RatFun(1), g = RatFun::var(Var::t), h = X(-1);
  OreOp a = OreOp::shift(cfg, Site::T, 1, f) + OreOp::scalar(cfg, g) +
            OreOp::shift(cfg, Site::T, -1, h);
  CHECK(equal(a.dt_coefficient(0), OreOp::scalar(cfg, g)));
  CHECK(equal(a.dt_coefficient(1), OreOp::scalar(cfg, f)));
  OreOp rebuilt(cfg);
  for (int64_t k = a.dt_min(); k <= a.dt_max(); ++k)
    rebuilt += a.dt_coefficient(k) * OreOp::shift(cfg, Site::T, k);
  CHECK(equal(rebuilt, a));
}

TEST_CASE("dt-degree ranges add under composition") {
  auto cfg = cfg_std();
  for (int iter = 0; iter < 10; ++iter) {
    OreOp a = rand_op(cfg), b = rand_op(cfg);
    OreOp ab = a * b;
    if (ab.is_zero()) continue;
    CHECK(ab.dt_min() >= a.dt_min() + b.dt_min());
    CHECK(ab.dt_max() <= a.dt_max() + b.dt_max());
  }
}

TEST_CASE("operators in disjoint variables commute") {
  AlgebraConfig cfg;
  cfg.shift_vpow = {4, 2, 2, 2};
  OreOp au = OreOp::shift(cfg, Site::Xu, 1, RatFun::var(Var::xu) + RatFun(1)) +
             OreOp::involution(cfg, Site::Xu, RatFun::var(Var::xu, -1));
  OreOp ad = OreOp::shift(cfg, Site::Xd, -1, RatFun::var(Var::xd, 2)) +
             OreOp::involution(cfg, Site::Xd, RatFun(3));
  CHECK(equal(au * ad, ad * au));
}

TEST_CASE("op_poly: identity, scalars, and squares") {
  auto cfg = cfg_std();
  OreOp a = rand_op(cfg);
  // p = z
  CHECK(equal(OreOp::op_poly({RatFun(0), RatFun(1)}, a), a));
  // p = z^2 - 1 on a scalar c gives (c^2-1) id
  RatFun c = RatFun::var(Var::t) + RatFun(2);
  OreOp cs = OreOp::scalar(cfg, c);
  OreOp s2 = OreOp::op_poly({RatFun(-1), RatFun(0), RatFun(1)}, cs);
  CHECK(equal(s2, OreOp::scalar(cfg, c * c - RatFun(1))));
}

TEST_CASE("operator text rendering is deterministic and sorted") {
  auto cfg = cfg_std();
  OreOp a = OreOp::shift(cfg, Site::X, 1, X()) +
            OreOp::involution(cfg, Site::X, RatFun(2));
  CHECK(a.str() == a.str());
  CHECK(a.str().find("Dx^1") != std::string::npos);
}
