#include "daha/a1.hpp"

#include "daha/orthopoly.hpp"
#include "daha/qseries.hpp"

namespace daha {

A1 build_a1(Site site, AlgebraConfig cfg) {
  A1 a;
  a.cfg = cfg;
  a.site = site;
  a.q_vpow = cfg.shift_vpow[static_cast<int>(site)];
  Var z = site_var(site);

  RatFun one(1);
  RatFun t = RatFun::var(Var::t);
  RatFun tinv = RatFun::var(Var::t, -1);
  RatFun zz = RatFun::var(z);
  RatFun c = (tinv - t) / (zz * zz - one);

  a.one = OreOp::identity(cfg);
  a.s = OreOp::involution(cfg, site);
  a.sh = OreOp::shift(cfg, site, 1);
  a.shinv = OreOp::shift(cfg, site, -1);

  a.T = OreOp::involution(cfg, site, tinv + c) + OreOp::scalar(cfg, -c);
  a.Tinv = a.T + OreOp::scalar(cfg, t - tinv);
  a.X = OreOp::scalar(cfg, zz);
  a.Xinv = OreOp::scalar(cfg, zz.inv());
  a.Y = a.sh * a.s * a.T;
  a.Yinv = a.Tinv * a.s * a.shinv;
  a.e = (RatFun(1) / (t + tinv)) * (a.T + OreOp::scalar(cfg, t));
  return a;
}

A1 build_a1_standard() {
  AlgebraConfig cfg;
  cfg.shift_vpow = {4, 2, 2, 4};  // ð_t t = q t ð_t in the torus chapter
  return build_a1(Site::X, cfg);
}

OreOp eval_word(const A1& a, const OpWord& w) {
  OreOp r = OreOp::scalar(a.cfg, RatFun::vpow(w.scalar_vpow));
  for (const auto& l : w.letters) {
    const OreOp* g = nullptr;
    switch (l.g) {
      case GenSym::T: g = l.pw > 0 ? &a.T : &a.Tinv; break;
      case GenSym::X: g = l.pw > 0 ? &a.X : &a.Xinv; break;
      case GenSym::Y: g = l.pw > 0 ? &a.Y : &a.Yinv; break;
      default: throw std::logic_error("eval_word: CC1 letter in A1 word");
    }
    r = r * *g;
  }
  return r;
}

OreOp ch_word(const A1& a, const OpWord& w) {
  return eval_word(a, w) + eval_word(a, w.inverse());
}

OpWord word_x() { return OpWord::gen(GenSym::X); }
OpWord word_y() { return OpWord::gen(GenSym::Y); }

OpWord word_slope11(int64_t q_vpow) {
  return OpWord{q_vpow / 2, {{GenSym::X, 1}, {GenSym::Y, 1}}};
}

OpWord word_slope1m1(int64_t q_vpow) {
  return OpWord{-q_vpow / 2, {{GenSym::X, -1}, {GenSym::Y, 1}}};
}

OpWord word_n1(int64_t n, int64_t q_vpow) {
  OpWord w;
  w.scalar_vpow = (n - 2) * (q_vpow / 2);
  for (int64_t i = 0; i < n - 1; ++i) w.letters.push_back({GenSym::X, 1});
  w.letters.push_back({GenSym::Y, 1});
  w.letters.push_back({GenSym::X, 1});
  return w;
}

OpWord word_1n(int64_t n, int64_t q_vpow) {
  OpWord w;
  w.scalar_vpow = (2 - n) * (q_vpow / 2);
  for (int64_t i = 0; i < n - 1; ++i) w.letters.push_back({GenSym::Y, 1});
  w.letters.push_back({GenSym::X, 1});
  w.letters.push_back({GenSym::Y, 1});
  return w;
}

OpWord word_2k1_2(int64_t k, int64_t q_vpow) {
  // (tau_R^k tau_L^2)(X) = q^(k-1) (X^k Y)^2 X
  std::vector<A1Twist> tws;
  for (int64_t i = 0; i < k; ++i) tws.push_back(A1Twist::TauR);
  tws.push_back(A1Twist::TauL);
  tws.push_back(A1Twist::TauL);
  return apply_a1_twists(tws, word_x(), q_vpow);
}

namespace {

RatFun tvar() { return RatFun::var(Var::t); }

}  // namespace

OreOp macdonald_operator(const A1& a) {
  RatFun z = RatFun::var(a.zvar());
  RatFun zi = z.inv();
  RatFun t = tvar(), ti = t.inv();
  RatFun d = z - zi;
  return OreOp::shift(a.cfg, a.site, 1, (t * z - ti * zi) / d) +
         OreOp::shift(a.cfg, a.site, -1, (ti * z - t * zi) / d);
}

OreOp slope11_operator_sym(const A1& a) {
  RatFun z = RatFun::var(a.zvar());
  RatFun zi = z.inv();
  RatFun t = tvar(), ti = t.inv();
  RatFun d = z - zi;
  RatFun qh = a.qhalf();
  return OreOp::shift(a.cfg, a.site, 1, qh * z * (t * z - ti * zi) / d) +
         OreOp::shift(a.cfg, a.site, -1, qh * zi * (ti * z - t * zi) / d);
}

OreOp mhat0_2k1(const A1& a, int64_t k) {
  RatFun one(1);
  RatFun z = RatFun::var(a.zvar());
  RatFun zi = z.inv();
  RatFun t2 = RatFun::var(Var::t, 2);
  RatFun q = a.q(), q2 = q * q;
  RatFun z2 = z * z, zi2 = zi * zi;

  RatFun cp = (q * z);
  RatFun cm = (q * zi);
  RatFun up = one, um = one;
  for (int64_t i = 0; i < 2 * k + 1; ++i) {
    up = up * cp;
    um = um * cm;
  }
  RatFun plus = up * (one - t2 * z2) * (one - q2 * t2 * z2) /
                (t2 * (one - z2) * (one - q2 * z2));
  RatFun minus = um * (t2 - z2) * (q2 * t2 - z2) /
                 (t2 * (one - z2) * (q2 - z2));
  RatFun mid = -q * t2.inv() * (q2 - t2) * (one - t2) * z * (one + z2) /
               ((q2 - z2) * (one - q2 * z2));
  return OreOp::shift(a.cfg, a.site, 2, plus) +
         OreOp::shift(a.cfg, a.site, -2, minus) + OreOp::scalar(a.cfg, mid);
}

OreOp mhat_plus_2k1(const A1& a, int64_t k) {
  RatFun one(1);
  RatFun z = RatFun::var(a.zvar());
  RatFun t2 = RatFun::var(Var::t, 2);
  RatFun t4 = t2 * t2;
  RatFun q = a.q(), q2 = q * q, q4 = q2 * q2;
  auto coeff = [&](const RatFun& x) {
    RatFun x2 = x * x;
    RatFun qx = q * x;
    RatFun pw = one;
    for (int64_t i = 0; i < 2 * k; ++i) pw = pw * qx;
    return pw * (one - t2 * x2) * (one - q2 * t2 * x2) * (one - q4 * t2 * x2) /
           (q * t4 * (one - x2) * (one - q2 * x2));
  };
  RatFun z2 = z * z;
  RatFun mid = q * (one + q2) * (one - t2) * (t2 - z2) * (one - t2 * z2) /
               (t4 * (q2 - z2) * (one - q2 * z2));
  return OreOp::shift(a.cfg, a.site, 2, coeff(z)) +
         OreOp::shift(a.cfg, a.site, -2, coeff(z.inv())) +
         OreOp::scalar(a.cfg, mid);
}

OreOp mhat_minus_2k1(const A1& a, int64_t k) {
  RatFun one(1);
  RatFun z = RatFun::var(a.zvar());
  RatFun t2 = RatFun::var(Var::t, 2);
  RatFun q = a.q(), q2 = q * q;
  auto coeff = [&](const RatFun& x) {
    RatFun x2 = x * x;
    RatFun qx = q * x;
    RatFun pw = one;
    for (int64_t i = 0; i < 2 * k; ++i) pw = pw * qx;
    return pw * q * x2 * (q2 * t2 * x2 - one) / ((one - x2) * (one - q2 * x2));
  };
  RatFun z2 = z * z;
  RatFun mid = q * (one + q2) * (one - t2) * z2 / ((q2 - z2) * (one - q2 * z2));
  return OreOp::shift(a.cfg, a.site, 2, coeff(z)) +
         OreOp::shift(a.cfg, a.site, -2, coeff(z.inv())) +
         OreOp::scalar(a.cfg, mid);
}

OreOp raising_operator(const A1& a) {
  RatFun one(1);
  RatFun z = RatFun::var(a.zvar());
  RatFun z2 = z * z;
  RatFun t2 = RatFun::var(Var::t, 2);
  RatFun q = a.q(), q2 = q * q;
  RatFun den = q * t2 * z * (z2 - one);
  return OreOp::shift(a.cfg, a.site, 1,
                      (one - t2 * z2) * (one - q2 * t2 * z2) / den) -
         OreOp::shift(a.cfg, a.site, -1, (t2 - z2) * (t2 * q2 - z2) / den);
}

OreOp lowering_operator(const A1& a) {
  RatFun z = RatFun::var(a.zvar());
  RatFun c = z / (z * z - RatFun(1));
  return OreOp::shift(a.cfg, a.site, 1, c) - OreOp::shift(a.cfg, a.site, -1, c);
}

RatFun daha_poly_torus(const A1& a, int64_t n, const OpWord& w) {
  RatFun m = macdonald_a1(n - 1, a.q_vpow, a.zvar());
  auto coeffs = power_sum_expand(m, a.zvar());
  OreOp o = eval_word(a, w);
  OreOp oi = eval_word(a, w.inverse());
  RatFun out;
  RatFun fwd(1), bwd(1);
  int64_t reached = 0;
  for (const auto& [k, c] : coeffs) {
    if (k == 0) {
      out += c;
      continue;
    }
    for (; reached < k; ++reached) {
      fwd = o.apply(fwd);
      bwd = oi.apply(bwd);
    }
    out += c * (fwd + bwd);
  }
  return out;
}

}  // namespace daha
