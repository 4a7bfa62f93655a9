#include "daha/ore.hpp"

#include <sstream>
#include <stdexcept>

namespace daha {

Var site_var(Site s) {
  switch (s) {
    case Site::X: return Var::x;
    case Site::Xu: return Var::xu;
    case Site::Xd: return Var::xd;
    case Site::T: return Var::t;
  }
  throw std::logic_error("site_var");
}

OreOp OreOp::scalar(AlgebraConfig cfg, const RatFun& f) {
  OreOp op(cfg);
  op.add_term(OpKey{}, f);
  return op;
}

OreOp OreOp::shift(AlgebraConfig cfg, Site z, int64_t k, const RatFun& coeff) {
  OreOp op(cfg);
  OpKey key;
  key.sh[static_cast<int>(z)] = k;
  op.add_term(key, coeff);
  return op;
}

OreOp OreOp::involution(AlgebraConfig cfg, Site z, const RatFun& coeff) {
  if (z == Site::T) throw std::logic_error("no involution on t");
  OreOp op(cfg);
  OpKey key;
  key.inv = static_cast<uint8_t>(1u << static_cast<int>(z));
  op.add_term(key, coeff);
  return op;
}

void OreOp::add_term(const OpKey& k, const RatFun& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

OreOp OreOp::operator-() const {
  OreOp r(cfg_);
  for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
  return r;
}

OreOp& OreOp::operator+=(const OreOp& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

OreOp& OreOp::operator-=(const OreOp& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

RatFun conjugate_through(const AlgebraConfig& cfg, const OpKey& k, const RatFun& f) {
  RatFun g = f;
  // involutions act first on the incoming coefficient
  for (int s = 0; s < kNumSites; ++s)
    if (k.inv & (1u << s)) g = g.invert_var(site_var(static_cast<Site>(s)));
  for (int s = 0; s < kNumSites; ++s)
    if (k.sh[s] != 0)
      g = g.shift_var(site_var(static_cast<Site>(s)), cfg.shift_vpow[s], k.sh[s]);
  return g;
}

OreOp operator*(const OreOp& a, const OreOp& b) {
  if (!(a.config() == b.config()))
    throw std::logic_error("OreOp: mixed algebra configurations");
  OreOp r(a.config());
  for (const auto& [ka, ca] : a.terms()) {
    for (const auto& [kb, cb] : b.terms()) {
      // coeff_a * D_a * s_a * coeff_b * D_b * s_b
      RatFun c = ca * conjugate_through(a.config(), ka, cb);
      OpKey k;
      // s_a flips the sign of D_b's exponent at involuted sites
      for (int s = 0; s < kNumSites; ++s) {
        int64_t shb = (ka.inv & (1u << s)) ? -kb.sh[s] : kb.sh[s];
        k.sh[s] = ka.sh[s] + shb;
      }
      k.inv = ka.inv ^ kb.inv;
      r.add_term(k, c);
    }
  }
  return r;
}

OreOp OreOp::scaled(const RatFun& f) const {
  OreOp r(cfg_);
  if (f.is_zero()) return r;
  for (const auto& [k, c] : terms_) r.add_term(k, f * c);
  return r;
}

RatFun OreOp::apply(const RatFun& f) const {
  RatFun out;
  for (const auto& [k, c] : terms_) out += c * conjugate_through(cfg_, k, f);
  return out;
}

bool equal(const OreOp& a, const OreOp& b) {
  if (!(a.config() == b.config())) return false;
  // Normal forms have no zero coefficients, so keys must agree.
  if (a.terms().size() != b.terms().size()) return false;
  auto ita = a.terms().begin();
  auto itb = b.terms().begin();
  for (; ita != a.terms().end(); ++ita, ++itb) {
    if (!(ita->first == itb->first)) return false;
    if (!(ita->second == itb->second)) return false;
  }
  return true;
}

OreOp OreOp::op_poly(const std::vector<RatFun>& coeffs, const OreOp& a) {
  OreOp out(a.config());
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    out = out * a;
    out += OreOp::scalar(a.config(), *it);
  }
  return out;
}

OreOp OreOp::dt_coefficient(int64_t k) const {
  OreOp r(cfg_);
  for (const auto& [key, c] : terms_) {
    if (key.sh[static_cast<int>(Site::T)] != k) continue;
    OpKey nk = key;
    nk.sh[static_cast<int>(Site::T)] = 0;
    r.add_term(nk, c);
  }
  return r;
}

int64_t OreOp::dt_min() const {
  int64_t m = 0;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    int64_t e = k.sh[static_cast<int>(Site::T)];
    if (first || e < m) m = e;
    first = false;
  }
  return m;
}

int64_t OreOp::dt_max() const {
  int64_t m = 0;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    int64_t e = k.sh[static_cast<int>(Site::T)];
    if (first || e > m) m = e;
    first = false;
  }
  return m;
}

OreOp OreOp::substituted(const std::map<Var, RatFun>& bindings) const {
  for (const auto& [k, c] : terms_) {
    for (int s = 0; s < kNumSites; ++s) {
      Var zv = site_var(static_cast<Site>(s));
      bool live = k.sh[s] != 0 || (k.inv & (1u << s));
      if (live && bindings.count(zv))
        throw std::logic_error("OreOp::substituted: binding a shifted variable");
    }
  }
  OreOp r(cfg_);
  for (const auto& [k, c] : terms_) r.add_term(k, c.substituted(bindings));
  return r;
}

std::string OreOp::str() const {
  if (terms_.empty()) return "0";
  static const char* dn[kNumSites] = {"Dx", "Du", "Dd", "Dt"};
  static const char* sn[kNumSites] = {"sx", "su", "sd", ""};
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")";
    for (int s = 0; s < kNumSites; ++s)
      if (k.sh[s] != 0) os << " " << dn[s] << "^" << k.sh[s];
    for (int s = 0; s < kNumSites; ++s)
      if (k.inv & (1u << s)) os << " " << sn[s];
  }
  return os.str();
}

}  // namespace daha
