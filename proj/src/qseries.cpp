#include "daha/qseries.hpp"

namespace daha {

RatFun q_pochhammer(const RatFun& a, const RatFun& q, int64_t n) {
  RatFun one(1);
  if (n >= 0) {
    RatFun prod = one;
    RatFun aq = a;
    for (int64_t j = 0; j < n; ++j) {
      prod = prod * (one - aq);
      aq = aq * q;
    }
    return prod;
  }
  // (a;q)_{-n} = 1/((a q^{-n};q)_n)
  RatFun prod = one;
  RatFun qinv = q.inv();
  RatFun aq = a * qinv;  // a q^{-1}, then a q^{-2}, ...
  for (int64_t j = 0; j < -n; ++j) {
    RatFun f = one - aq;
    if (f.is_zero())
      throw SpecializationSingular("vanishing factor in negative q-Pochhammer");
    prod = prod * f;
    aq = aq * qinv;
  }
  return prod.inv();
}

std::vector<RatFun> chebyshev(ChebKind kind, int64_t n) {
  if (kind == ChebKind::First && n < 0)
    throw std::domain_error("chebyshev: first kind needs n >= 0");
  bool negate = false;
  if (n < 0) {
    // S_{-1} = 0, S_{-n} = -S_{n-2}
    if (n == -1) return {};
    n = -n - 2;
    negate = true;
  }
  // z P_n = P_{n+1} + P_{n-1}; S_0 = 1, S_1 = z; T_0 = 2, T_1 = z.
  std::vector<RatFun> pm1{kind == ChebKind::First ? RatFun(2) : RatFun(1)};
  if (n == 0) {
    if (negate)
      for (auto& c : pm1) c = -c;
    return pm1;
  }
  std::vector<RatFun> p{RatFun(0), RatFun(1)};
  for (int64_t k = 1; k < n; ++k) {
    std::vector<RatFun> next(k + 2, RatFun(0));
    for (size_t j = 0; j < p.size(); ++j) next[j + 1] += p[j];
    for (size_t j = 0; j < pm1.size(); ++j) next[j] -= pm1[j];
    pm1 = std::move(p);
    p = std::move(next);
  }
  if (negate)
    for (auto& c : p) c = -c;
  return p;
}

RatFun cheb_in_var(ChebKind kind, int64_t n, Var z) {
  auto coeffs = chebyshev(kind, n);
  RatFun ch = RatFun::var(z) + RatFun::var(z, -1);
  RatFun out;
  // Horner from the top
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
    out = out * ch + *it;
  return out;
}

RatFun cheb_second_alt_negative(int64_t n, Var z) {
  if (n >= 0) return cheb_in_var(ChebKind::Second, n, z);
  return -cheb_in_var(ChebKind::Second, -n - 1, z);
}

std::map<int64_t, RatFun> s_basis_expand(const RatFun& f, Var z) {
  Laurent p = f.num();
  RatFun den = RatFun(f.den()).inv();
  if (f.den().depends_on(z))
    throw std::domain_error("s_basis_expand: denominator depends on the variable");
  std::map<int64_t, RatFun> out;
  // Peel from the top degree down; symmetry makes the two ends match.
  while (!p.is_zero()) {
    int64_t d = p.max_deg(z);
    if (d < 0 || -p.min_deg(z) != d)
      throw std::domain_error("s_basis_expand: polynomial is not symmetric");
    auto coeffs = p.collect(z);
    Laurent top = coeffs.rbegin()->second;
    if (d == 0) {
      out[0] = RatFun(top) * den;
      break;
    }
    if (!(coeffs.begin()->second == top))
      throw std::domain_error("s_basis_expand: polynomial is not symmetric");
    out[d] = RatFun(top) * den;
    // subtract top * S_d(ch z): S_d(ch z) = sum_{i=0..d} z^(d-2i)
    for (int64_t i = 0; i <= d; ++i)
      p -= top.mul_monomial(GCoeff(1), exp_of(z, d - 2 * i));
  }
  return out;
}

RatFun s_basis_build(const std::map<int64_t, RatFun>& coeffs, Var z) {
  RatFun out;
  for (const auto& [n, c] : coeffs) out = out + c * cheb_in_var(ChebKind::Second, n, z);
  return out;
}

std::map<int64_t, RatFun> power_sum_expand(const RatFun& f, Var z) {
  if (f.den().depends_on(z))
    throw std::domain_error("power_sum_expand: denominator depends on the variable");
  RatFun den = RatFun(f.den()).inv();
  std::map<int64_t, RatFun> out;
  auto coeffs = f.num().collect(z);
  for (const auto& [k, c] : coeffs) {
    if (k < 0) continue;
    RatFun val = RatFun(c) * den;
    if (k > 0) {
      auto it = coeffs.find(-k);
      if (it == coeffs.end() || !(it->second == c))
        throw std::domain_error("power_sum_expand: polynomial is not symmetric");
    }
    out[k] = val;
  }
  for (const auto& [k, c] : coeffs)
    if (k < 0 && coeffs.find(-k) == coeffs.end())
      throw std::domain_error("power_sum_expand: polynomial is not symmetric");
  return out;
}

}  // namespace daha
