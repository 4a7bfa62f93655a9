#include "daha/cc1.hpp"

#include "daha/qseries.hpp"

namespace daha {

CC1 build_cc1(const AWParams& params) {
  for (const auto& t : params.t)
    if (t.is_zero()) throw SpecializationSingular("CC1 parameter is zero");
  CC1 c;
  c.cfg = AlgebraConfig{};  // x-shift q = v^4
  c.params = params;
  const RatFun one(1);
  const RatFun x = RatFun::var(Var::x);
  const RatFun q = RatFun::vpow(4), qh = RatFun::vpow(2);
  const RatFun &t0 = params.t[0], &t1 = params.t[1], &t2 = params.t[2],
               &t3 = params.t[3];

  c.one = OreOp::identity(c.cfg);

  // T0 = t0^-1 s ð - b0(x) (1 - s ð), with s ð = ð^-1 s in normal form.
  RatFun b0 = (q.inv() * (t0.inv() - t0) * x * x + qh.inv() * (t2.inv() - t2) * x) /
              (one - q.inv() * x * x);
  OreOp sd = OreOp::shift(c.cfg, Site::X, -1) * OreOp::involution(c.cfg, Site::X);
  c.T0 = (t0.inv() + b0) * sd + OreOp::scalar(c.cfg, -b0);

  // T1 = t1^-1 s + b1(x) (s - 1)
  RatFun b1 = ((t1.inv() - t1) + (t3.inv() - t3) * x) / (x * x - one);
  c.T1 = OreOp::involution(c.cfg, Site::X, t1.inv() + b1) +
         OreOp::scalar(c.cfg, -b1);

  c.T0i = c.T0 + OreOp::scalar(c.cfg, t0 - t0.inv());
  c.T1i = c.T1 + OreOp::scalar(c.cfg, t1 - t1.inv());

  OreOp xop = OreOp::scalar(c.cfg, x);
  c.T0v = qh.inv() * (c.T0i * xop);
  c.T1v = OreOp::scalar(c.cfg, x.inv()) * c.T1i;
  c.T0vi = c.T0v + OreOp::scalar(c.cfg, t2 - t2.inv());
  c.T1vi = c.T1v + OreOp::scalar(c.cfg, t3 - t3.inv());

  c.X = c.T1i * c.T1vi;  // (T1v T1)^-1
  c.Xinv = c.T1v * c.T1;
  c.Y = c.T1 * c.T0;
  c.Yinv = c.T0i * c.T1i;
  c.e = (one / (t1 + t1.inv())) * (c.T1 + OreOp::scalar(c.cfg, t1));
  return c;
}

AWParams params_t_natural() {
  RatFun i = RatFun::i();
  return AWParams{{i * RatFun::var(Var::xu),
                   i * RatFun::vpow(-2) * RatFun::var(Var::xl),
                   i * RatFun::var(Var::xu), i * RatFun::var(Var::xr)}};
}

AWParams params_t_star() {
  RatFun i = RatFun::i();
  return AWParams{{i * RatFun::var(Var::xu),
                   i * RatFun::vpow(-2) * RatFun::var(Var::xd),
                   i * RatFun::var(Var::xu), i * RatFun::var(Var::xd)}};
}

OreOp eval_word(const CC1& c, const OpWord& w) {
  OreOp r = OreOp::scalar(c.cfg, RatFun::vpow(w.scalar_vpow));
  for (const auto& l : w.letters) {
    const OreOp* g = nullptr;
    switch (l.g) {
      case GenSym::T0: g = l.pw > 0 ? &c.T0 : &c.T0i; break;
      case GenSym::T1: g = l.pw > 0 ? &c.T1 : &c.T1i; break;
      case GenSym::T0v: g = l.pw > 0 ? &c.T0v : &c.T0vi; break;
      case GenSym::T1v: g = l.pw > 0 ? &c.T1v : &c.T1vi; break;
      case GenSym::X: g = l.pw > 0 ? &c.X : &c.Xinv; break;
      case GenSym::Y: g = l.pw > 0 ? &c.Y : &c.Yinv; break;
      default: throw std::logic_error("eval_word: A1 letter in CC1 word");
    }
    r = r * *g;
  }
  return r;
}

OreOp ch_word(const CC1& c, const OpWord& w) {
  return eval_word(c, w) + eval_word(c, w.inverse());
}

TwistedWord apply_sigma(const std::vector<CC1Twist>& tws, const OpWord& w,
                        const AWParams& params) {
  TwistedWord r{w, params};
  for (auto it = tws.rbegin(); it != tws.rend(); ++it) {
    r.word = apply_cc1_twist(*it, r.word);
    auto perm = cc1_param_perm(*it);
    AWParams np;
    for (int i = 0; i < 4; ++i) np.t[i] = r.params.t[perm[i]];
    r.params = np;
  }
  return r;
}

OpWord cc1_word_10() { return OpWord{0, {{GenSym::T1v, 1}, {GenSym::T1, 1}}}; }
OpWord cc1_word_01() { return OpWord{0, {{GenSym::T1, 1}, {GenSym::T0, 1}}}; }
OpWord cc1_word_11() { return OpWord{0, {{GenSym::T1, 1}, {GenSym::T0v, 1}}}; }
OpWord cc1_word_1m1() { return OpWord{2, {{GenSym::T0, 1}, {GenSym::T1v, 1}}}; }
OpWord cc1_word_12() {
  return OpWord{0, {{GenSym::T1, 1}, {GenSym::T0v, 1}, {GenSym::T1v, 1}, {GenSym::T0v, -1}}};
}
OpWord cc1_word_21() {
  return OpWord{0, {{GenSym::T1, 1}, {GenSym::T0v, -1}, {GenSym::T0, 1}, {GenSym::T0v, 1}}};
}

OpWord cc1_word_1_2k(int64_t k) {
  OpWord w;
  for (int64_t i = 0; i < k; ++i) w.letters.push_back({GenSym::Y, -1});
  w.letters.push_back({GenSym::X, -1});
  w.letters.push_back({GenSym::T1, -1});
  for (int64_t i = 0; i < k; ++i) w.letters.push_back({GenSym::Y, 1});
  w.letters.push_back({GenSym::T1, 1});
  return w;
}

OpWord cc1_word_1_2k1(int64_t k) {
  OpWord w;
  w.scalar_vpow = -2;
  for (int64_t i = 0; i < k + 1; ++i) w.letters.push_back({GenSym::Y, -1});
  w.letters.push_back({GenSym::T1, 1});
  w.letters.push_back({GenSym::X, 1});
  for (int64_t i = 0; i < k; ++i) w.letters.push_back({GenSym::Y, 1});
  w.letters.push_back({GenSym::T1, 1});
  return w;
}

OpWord cc1_word_2k_1(int64_t k) {
  OpWord w;
  w.letters.push_back({GenSym::T1, 1});
  for (int64_t i = 0; i < k; ++i) w.letters.push_back({GenSym::X, -1});
  w.letters.push_back({GenSym::T1, -1});
  w.letters.push_back({GenSym::Y, 1});
  for (int64_t i = 0; i < k; ++i) w.letters.push_back({GenSym::X, 1});
  return w;
}

OpWord cc1_word_2k1_1(int64_t k) {
  OpWord w;
  w.scalar_vpow = -2;
  w.letters.push_back({GenSym::T1, 1});
  for (int64_t i = 0; i < k; ++i) w.letters.push_back({GenSym::X, -1});
  w.letters.push_back({GenSym::Y, -1});
  w.letters.push_back({GenSym::T1, 1});
  for (int64_t i = 0; i < k + 1; ++i) w.letters.push_back({GenSym::X, 1});
  return w;
}

namespace {
RatFun sh_of(const RatFun& y) { return y - y.inv(); }
}  // namespace

RatFun t_const_03_12(const AWParams& p) {
  RatFun qh = RatFun::vpow(2);
  return sh_of(qh * p.t[1]) * sh_of(p.t[2]) + sh_of(p.t[0]) * sh_of(p.t[3]);
}
RatFun t_const_02_13(const AWParams& p) {
  RatFun qh = RatFun::vpow(2);
  return sh_of(qh * p.t[1]) * sh_of(p.t[3]) + sh_of(p.t[0]) * sh_of(p.t[2]);
}
RatFun t_const_01_23(const AWParams& p) {
  RatFun qh = RatFun::vpow(2);
  return sh_of(p.t[2]) * sh_of(p.t[3]) + sh_of(p.t[0]) * sh_of(qh * p.t[1]);
}

RatFun daha_poly_sphere(const CC1& c, int64_t n, const OpWord& w) {
  // M_{n-1}(O; q, q)(1) with M at t=q, i.e. S_{n-1} in the power basis.
  RatFun m = macdonald_a1(n - 1, 4, Var::x)
                 .substituted({{Var::t, RatFun::vpow(4)}});
  auto coeffs = power_sum_expand(m, Var::x);
  OreOp o = eval_word(c, w);
  OreOp oi = eval_word(c, w.inverse());
  RatFun out;
  RatFun fwd(1), bwd(1);
  int64_t reached = 0;
  for (const auto& [k, coeff] : coeffs) {
    if (k == 0) {
      out += coeff;
      continue;
    }
    for (; reached < k; ++reached) {
      fwd = o.apply(fwd);
      bwd = oi.apply(bwd);
    }
    out += coeff * (fwd + bwd);
  }
  return out;
}

}  // namespace daha
