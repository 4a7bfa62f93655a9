#include "daha/ratfun.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace daha {

namespace {

bool laurent_less(const Laurent& a, const Laurent& b) {
  auto ia = a.terms().begin(), ib = b.terms().begin();
  for (; ia != a.terms().end() && ib != b.terms().end(); ++ia, ++ib) {
    if (ia->first != ib->first) return ia->first < ib->first;
    if (!(ia->second == ib->second)) return ia->second < ib->second;
  }
  return ia == a.terms().end() && ib != b.terms().end();
}

}  // namespace

RatFun::RatFun(Laurent n, Laurent d) : num_(std::move(n)) {
  if (d.is_zero()) throw DivisionByZero();
  den_.push_back(std::move(d));
  normalize_factors();
  cancel_blocks();
}

void RatFun::normalize_factors() {
  if (num_.is_zero()) {
    den_.clear();
    return;
  }
  std::vector<Laurent> out;
  out.reserve(den_.size());
  GCoeff unit(1);
  Exp mono{};
  for (auto& f : den_) {
    if (f.is_zero()) throw DivisionByZero();
    Exp m = monomial_content(f);
    GCoeff u;
    Laurent p = make_primitive(f, &u);
    unit *= u;
    mono = mono.plus(m);
    if (p.is_constant())
      unit *= p.constant_value();  // complex units survive content stripping
    else
      out.push_back(std::move(p));
  }
  num_ = num_.mul_monomial(unit.inv(), mono.negated());
  std::sort(out.begin(), out.end(), laurent_less);
  den_ = std::move(out);
}

void RatFun::cancel_blocks() {
  if (num_.is_zero()) {
    den_.clear();
    return;
  }
  bool progress = true;
  while (progress && !den_.empty()) {
    progress = false;
    for (size_t i = 0; i < den_.size();) {
      if (auto q = poly_try_div(num_, den_[i])) {
        num_ = std::move(*q);
        den_.erase(den_.begin() + static_cast<long>(i));
        progress = true;
      } else {
        ++i;
      }
    }
  }
}

Laurent RatFun::den() const {
  Laurent d(1);
  for (const auto& f : den_) d = d * f;
  return d;
}

bool RatFun::depends_on(Var v) const {
  if (num_.depends_on(v)) return true;
  for (const auto& f : den_)
    if (f.depends_on(v)) return true;
  return false;
}

RatFun RatFun::reduced() const {
  RatFun r = *this;
  r.cancel_blocks();
  if (r.den_.empty()) return r;
  Laurent g = poly_gcd(r.num_, r.den());
  if (!g.is_constant()) {
    Laurent num0 = poly_divexact(r.num_, g);
    // Distribute g across the factor blocks; quotients may pick up
    // constants, which normalize_factors folds back into the numerator.
    std::vector<Laurent> nf;
    for (auto& f : r.den_) {
      if (g.is_constant()) {
        nf.push_back(std::move(f));
        continue;
      }
      Laurent gf = poly_gcd(f, g);
      if (gf.is_constant()) {
        nf.push_back(std::move(f));
        continue;
      }
      g = poly_divexact(g, gf);
      nf.push_back(poly_divexact(f, gf));  // may be a constant block
    }
    if (!g.is_constant())
      throw std::logic_error("reduced: gcd did not distribute over factors");
    // value bookkeeping: num/prod(f) = (num0 * g_residual) / prod(nf)
    r.num_ = num0.mul_monomial(g.constant_value(), Exp{});
    r.den_ = std::move(nf);
  }
  r.normalize_factors();
  r.cancel_blocks();
  return r;
}

Laurent RatFun::as_laurent() const {
  if (num_.is_zero()) return Laurent();
  if (den_.empty()) return num_;
  RatFun r = reduced();
  if (!r.den_.empty())
    throw std::domain_error("RatFun::as_laurent: denominator is not a unit");
  return r.num_;
}

RatFun RatFun::operator-() const {
  RatFun r = *this;
  r.num_ = -r.num_;
  return r;
}

namespace {

// Multiset difference and union on sorted factor vectors.
std::vector<Laurent> factor_diff(const std::vector<Laurent>& u,
                                 const std::vector<Laurent>& a) {
  std::vector<Laurent> out;
  size_t i = 0, j = 0;
  while (i < u.size()) {
    if (j < a.size() && u[i] == a[j]) {
      ++i;
      ++j;
    } else if (j < a.size() && laurent_less(a[j], u[i])) {
      ++j;
    } else {
      out.push_back(u[i]);
      ++i;
    }
  }
  return out;
}

std::vector<Laurent> factor_union(const std::vector<Laurent>& a,
                                  const std::vector<Laurent>& b) {
  std::vector<Laurent> out;
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size())
      out.push_back(a[i++]);
    else if (i == a.size())
      out.push_back(b[j++]);
    else if (a[i] == b[j]) {
      out.push_back(a[i]);
      ++i;
      ++j;
    } else if (laurent_less(a[i], b[j]))
      out.push_back(a[i++]);
    else
      out.push_back(b[j++]);
  }
  return out;
}

Laurent product_of(const std::vector<Laurent>& fs) {
  Laurent p(1);
  for (const auto& f : fs) p = p * f;
  return p;
}

}  // namespace

RatFun operator+(const RatFun& a, const RatFun& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  RatFun r;
  std::vector<Laurent> u = factor_union(a.den_, b.den_);
  Laurent cof_a = product_of(factor_diff(u, a.den_));
  Laurent cof_b = product_of(factor_diff(u, b.den_));
  r.num_ = a.num_ * cof_a + b.num_ * cof_b;
  r.den_ = std::move(u);
  r.normalize_factors();
  r.cancel_blocks();
  return r;
}

RatFun operator-(const RatFun& a, const RatFun& b) { return a + (-b); }

RatFun operator*(const RatFun& a, const RatFun& b) {
  if (a.is_zero() || b.is_zero()) return RatFun();
  RatFun r;
  // cross-cancel numerators against the opposite factor lists first
  Laurent na = a.num_, nb = b.num_;
  std::vector<Laurent> d;
  d.reserve(a.den_.size() + b.den_.size());
  for (const auto& f : b.den_) {
    if (auto q = poly_try_div(na, f))
      na = std::move(*q);
    else
      d.push_back(f);
  }
  for (const auto& f : a.den_) {
    if (auto q = poly_try_div(nb, f))
      nb = std::move(*q);
    else
      d.push_back(f);
  }
  r.num_ = na * nb;
  r.den_ = std::move(d);
  r.normalize_factors();
  r.cancel_blocks();
  return r;
}

RatFun RatFun::inv() const {
  if (is_zero()) throw DivisionByZero();
  RatFun r;
  r.num_ = product_of(den_);
  r.den_.push_back(num_);
  r.normalize_factors();
  r.cancel_blocks();
  return r;
}

RatFun operator/(const RatFun& a, const RatFun& b) { return a * b.inv(); }

bool operator==(const RatFun& a, const RatFun& b) {
  // cheap structural hit first
  if (a.num_ == b.num_ && a.den_ == b.den_) return true;
  return a.num_ * b.den() == b.num_ * a.den();
}

RatFun RatFun::shift_var(Var v, int64_t scale_vpow, int64_t k) const {
  RatFun r;
  r.num_ = num_.shift_var(v, scale_vpow, k);
  for (const auto& f : den_) r.den_.push_back(f.shift_var(v, scale_vpow, k));
  r.normalize_factors();
  return r;
}

RatFun RatFun::invert_var(Var v) const {
  RatFun r;
  r.num_ = num_.invert_var(v);
  for (const auto& f : den_) r.den_.push_back(f.invert_var(v));
  r.normalize_factors();
  return r;
}

RatFun substitute_laurent(const Laurent& f, const std::map<Var, RatFun>& b) {
  // Peel substituted variables one at a time via Horner on the collected
  // coefficients (exponents can be negative, so split the two directions).
  for (const auto& [v, val] : b) {
    if (!f.depends_on(v)) continue;
    auto coeffs = f.collect(v);
    RatFun out;
    RatFun pos;
    int64_t k = coeffs.rbegin()->first;
    if (k > 0) {
      for (auto it = coeffs.rbegin(); it != coeffs.rend() && it->first > 0;
           ++it) {
        for (; k > it->first; --k) pos = pos * val;
        pos = pos + substitute_laurent(it->second, b);
      }
      for (; k > 0; --k) pos = pos * val;
    }
    RatFun neg;
    k = coeffs.begin()->first;
    if (k < 0) {
      if (val.is_zero())
        throw SpecializationSingular("negative power of a zero binding");
      RatFun vinv = val.inv();
      for (auto it = coeffs.begin(); it != coeffs.end() && it->first < 0;
           ++it) {
        for (; k < it->first; ++k) neg = neg * vinv;
        neg = neg + substitute_laurent(it->second, b);
      }
      for (; k < 0; ++k) neg = neg * vinv;
    }
    out = pos + neg;
    if (auto it = coeffs.find(0); it != coeffs.end())
      out = out + substitute_laurent(it->second, b);
    return out;
  }
  return RatFun(f);
}

RatFun RatFun::substituted(const std::map<Var, RatFun>& bindings) const {
  RatFun out = substitute_laurent(num_, bindings);
  for (const auto& f : den_) {
    RatFun df = substitute_laurent(f, bindings);
    if (df.is_zero())
      throw SpecializationSingular("denominator vanishes under substitution");
    out = out / df;
  }
  return out;
}

std::string RatFun::str() const {
  if (den_.empty()) return num_.str();
  return "(" + num_.str() + ") / (" + den().str() + ")";
}

std::string to_json(const RatFun& f) {
  auto poly = [](const Laurent& p) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [e, c] : p.terms()) {
      nlohmann::json exps = nlohmann::json::object();
      for (int i = 0; i < kNumVars; ++i)
        if (e.e[i] != 0) exps[kVarNames[i]] = e.e[i];
      auto rat = [](const mpq_class& q) {
        std::string s = q.get_num().get_str();
        if (q.get_den() != 1) s += "/" + q.get_den().get_str();
        return s;
      };
      terms.push_back({{"coeff", {rat(c.re()), rat(c.im())}}, {"exps", exps}});
    }
    return nlohmann::json{{"terms", terms}};
  };
  nlohmann::json j = poly(f.num());
  if (!f.den_factors().empty()) j["den"] = poly(f.den());
  return j.dump();
}

}  // namespace daha
