#include "daha/orthopoly.hpp"

#include "daha/qseries.hpp"

namespace daha {

RatFun macdonald_a1(int64_t n, int64_t q_vpow, Var z) {
  // M_n = (q^2;q^2)_n/(t^2;q^2)_n sum_{j+k=n} (t^2;q^2)_j (t^2;q^2)_k /
  //       ((q^2;q^2)_j (q^2;q^2)_k) z^(j-k)
  RatFun q2 = RatFun::vpow(2 * q_vpow);
  RatFun t2 = RatFun::var(Var::t, 2);
  RatFun front = q_pochhammer(q2, q2, n) / q_pochhammer(t2, q2, n);
  RatFun sum;
  for (int64_t j = 0; j <= n; ++j) {
    int64_t k = n - j;
    RatFun c = q_pochhammer(t2, q2, j) * q_pochhammer(t2, q2, k) /
               (q_pochhammer(q2, q2, j) * q_pochhammer(q2, q2, k));
    sum += c * RatFun::var(z, j - k);
  }
  return front * sum;
}

RatFun macdonald_eigenvalue(int64_t n, int64_t q_vpow) {
  RatFun t = RatFun::var(Var::t);
  return t * RatFun::vpow(q_vpow * n) + t.inv() * RatFun::vpow(-q_vpow * n);
}

RatFun macdonald_three_term_b(int64_t n, int64_t q_vpow) {
  RatFun one(1);
  auto qp = [&](int64_t k) { return RatFun::vpow(q_vpow * k); };
  RatFun t2 = RatFun::var(Var::t, 2), t4 = RatFun::var(Var::t, 4);
  return (one - qp(2 * n)) * (one - qp(2 * n - 2) * t4) /
         ((one - qp(2 * n - 2) * t2) * (one - qp(2 * n) * t2));
}

std::vector<RatFun> kernel_vector(std::vector<std::vector<RatFun>> m,
                                  size_t normalize_index) {
  const size_t n = m.size();
  std::vector<size_t> pivot_col;
  size_t row = 0;
  std::vector<bool> col_used(n, false);
  for (size_t col = 0; col < n && row < n; ++col) {
    size_t p = row;
    while (p < n && m[p][col].is_zero()) ++p;
    if (p == n) continue;
    std::swap(m[p], m[row]);
    RatFun inv = m[row][col].inv();
    for (size_t j = 0; j < n; ++j) m[row][j] = m[row][j] * inv;
    for (size_t i = 0; i < n; ++i) {
      if (i == row || m[i][col].is_zero()) continue;
      RatFun f = m[i][col];
      for (size_t j = 0; j < n; ++j) m[i][j] = m[i][j] - f * m[row][j];
    }
    col_used[col] = true;
    pivot_col.push_back(col);
    ++row;
  }
  if (row + 1 != n) throw EigenDegenerate();
  // One free column; back-substitute with the free value 1.
  size_t free_col = 0;
  for (size_t c = 0; c < n; ++c)
    if (!col_used[c]) free_col = c;
  std::vector<RatFun> x(n);
  x[free_col] = RatFun(1);
  for (size_t r = 0; r < pivot_col.size(); ++r)
    x[pivot_col[r]] = -m[r][free_col];
  if (x[normalize_index].is_zero()) throw EigenDegenerate();
  RatFun scale = x[normalize_index].inv();
  for (auto& xi : x) xi = xi * scale;
  return x;
}

RatFun nonsym_macdonald_a1(const A1& a, int64_t m) {
  if (m == 0) return RatFun(1);
  int64_t mm = m > 0 ? m : -m;
  Var z = a.zvar();
  const size_t dim = static_cast<size_t>(2 * mm + 1);
  // Matrix of Y on the ordered basis z^-mm .. z^mm.
  std::vector<std::vector<RatFun>> mat(dim, std::vector<RatFun>(dim));
  for (int64_t j = -mm; j <= mm; ++j) {
    RatFun img = a.Y.apply(RatFun::var(z, j));
    auto rows = img.num().collect(z);
    RatFun dinv = RatFun(img.den()).inv();
    for (const auto& [deg, coeff] : rows) {
      if (deg < -mm || deg > mm)
        throw std::logic_error("Y does not preserve the truncation span");
      mat[static_cast<size_t>(deg + mm)][static_cast<size_t>(j + mm)] =
          RatFun(coeff) * dinv;
    }
  }
  // eigenvalue t q^m (m>0) or t^-1 q^m (m<0, with q^m = q^{-|m|})
  RatFun lam = (m > 0 ? RatFun::var(Var::t) : RatFun::var(Var::t, -1)) *
               RatFun::vpow(a.q_vpow * m);
  for (size_t i = 0; i < dim; ++i) mat[i][i] = mat[i][i] - lam;
  size_t lead = static_cast<size_t>(m + mm);  // z^m entry
  auto vec = kernel_vector(std::move(mat), lead);
  RatFun out;
  for (size_t i = 0; i < dim; ++i)
    out += vec[i] * RatFun::var(z, static_cast<int64_t>(i) - mm);
  return out;
}

AWParams AWParams::symbolic() {
  return AWParams{{RatFun::var(Var::t0), RatFun::var(Var::t1),
                   RatFun::var(Var::t2), RatFun::var(Var::t3)}};
}

namespace {

struct ABCD {
  RatFun a, b, c, d;
};

ABCD aw_abcd(const AWParams& p) {
  RatFun qh = RatFun::vpow(2);  // q^(1/2)
  ABCD r;
  r.a = (p.t[1] * p.t[3]).inv();
  r.b = -p.t[3] / p.t[1];
  r.c = qh / (p.t[0] * p.t[2]);
  r.d = -qh * p.t[2] / p.t[0];
  return r;
}

}  // namespace

RatFun askey_wilson(int64_t m, const AWParams& p) {
  RatFun one(1), q = RatFun::vpow(4);
  auto [a, b, c, d] = aw_abcd(p);
  RatFun x = RatFun::var(Var::x);
  RatFun abcd = a * b * c * d;
  // prefactor (ab,ac,ad;q)_m / (a^m (abcd q^(m-1);q)_m)
  RatFun am(1);
  for (int64_t i = 0; i < m; ++i) am = am * a;
  RatFun front = q_pochhammer(a * b, q, m) * q_pochhammer(a * c, q, m) *
                 q_pochhammer(a * d, q, m) /
                 (am * q_pochhammer(abcd * RatFun::vpow(4 * (m - 1)), q, m));
  // terminating 4phi3 with upper (q^-m, abcd q^(m-1), ax, a/x),
  // lower (ab, ac, ad), argument q
  RatFun sum;
  RatFun term(1);
  for (int64_t n = 0; n <= m; ++n) {
    sum += term;
    // ratio from n to n+1
    auto shiftq = [&](const RatFun& y) { return y * RatFun::vpow(4 * n); };
    RatFun num = (one - RatFun::vpow(-4 * m) * RatFun::vpow(4 * n)) *
                 (one - abcd * RatFun::vpow(4 * (m - 1)) * RatFun::vpow(4 * n)) *
                 (one - shiftq(a * x)) * (one - shiftq(a / x));
    RatFun den = (one - RatFun::vpow(4 * (n + 1))) * (one - shiftq(a * b)) *
                 (one - shiftq(a * c)) * (one - shiftq(a * d));
    term = term * q * num / den;
  }
  return front * sum;
}

RatFun aw_function_A(const RatFun& x, const AWParams& p) {
  RatFun one(1), qh = RatFun::vpow(2), q = RatFun::vpow(4);
  const RatFun &t0 = p.t[0], &t1 = p.t[1], &t2 = p.t[2], &t3 = p.t[3];
  return t0 * t1 * (one - x / (t1 * t3)) * (one + t3 * x / t1) *
         (one - qh * x / (t0 * t2)) * (one + qh * t2 * x / t0) /
         ((one - x * x) * (one - q * x * x));
}

OreOp aw_operator(const AWParams& p, const AlgebraConfig& cfg) {
  RatFun x = RatFun::var(Var::x);
  RatFun ax = aw_function_A(x, p);
  RatFun axi = aw_function_A(x.inv(), p);
  RatFun t01 = p.t[0] * p.t[1];
  return OreOp::shift(cfg, Site::X, 1, ax) +
         OreOp::shift(cfg, Site::X, -1, axi) +
         OreOp::scalar(cfg, t01 + t01.inv() - ax - axi);
}

RatFun aw_eigenvalue(int64_t m, const AWParams& p) {
  RatFun t01 = p.t[0] * p.t[1];
  return t01.inv() * RatFun::vpow(4 * m) + t01 * RatFun::vpow(-4 * m);
}

RatFun aw_three_term_C(int64_t m, const AWParams& p) {
  RatFun one(1);
  auto [a, b, c, d] = aw_abcd(p);
  RatFun abcd = a * b * c * d;
  auto qk = [&](int64_t k) { return RatFun::vpow(4 * k); };
  RatFun f1 = (one - abcd * qk(m - 2)) /
              ((one - abcd * qk(2 * m - 3)) * (one - abcd * qk(2 * m - 2)));
  RatFun f2 = (one - qk(m)) /
              ((one - abcd * qk(2 * m - 2)) * (one - abcd * qk(2 * m - 1)));
  RatFun f3 = (one - a * b * qk(m - 1)) * (one - a * c * qk(m - 1)) *
              (one - a * d * qk(m - 1)) * (one - b * c * qk(m - 1)) *
              (one - b * d * qk(m - 1)) * (one - c * d * qk(m - 1));
  return f1 * f2 * f3;
}

RatFun aw_three_term_B(int64_t m, const AWParams& p) {
  RatFun one(1);
  auto [a, b, c, d] = aw_abcd(p);
  RatFun abcd = a * b * c * d;
  auto qk = [&](int64_t k) { return RatFun::vpow(4 * k); };
  RatFun term1 = a + a.inv();
  RatFun term2 = (one - abcd * qk(m - 1)) /
                 ((one - abcd * qk(2 * m - 1)) * (one - abcd * qk(2 * m))) *
                 a.inv() * (one - a * b * qk(m)) * (one - a * c * qk(m)) *
                 (one - a * d * qk(m));
  RatFun term3 = aw_three_term_C(m, p) * (one - abcd * qk(2 * m - 3)) *
                 (one - abcd * qk(2 * m - 2)) / (one - abcd * qk(m - 2)) * a /
                 ((one - a * b * qk(m - 1)) * (one - a * c * qk(m - 1)) *
                  (one - a * d * qk(m - 1)));
  return term1 - term2 - term3;
}

bool gf_check(int64_t order) {
  // Left side: sum_n M_n (t^2;q^2)_n/(q^2;q^2)_n z^n.  Right side by the
  // q-binomial theorem applied to each infinite-product factor:
  // (t^2 u; q^2)_inf / (u; q^2)_inf = sum_k (t^2;q^2)_k/(q^2;q^2)_k u^k,
  // for u = x z and u = z/x, truncated at total order in z.
  RatFun q2 = RatFun::vpow(8);
  RatFun t2 = RatFun::var(Var::t, 2);
  std::vector<RatFun> binom(static_cast<size_t>(order) + 1);
  for (int64_t k = 0; k <= order; ++k)
    binom[static_cast<size_t>(k)] =
        q_pochhammer(t2, q2, k) / q_pochhammer(q2, q2, k);
  for (int64_t n = 0; n <= order; ++n) {
    RatFun lhs = macdonald_a1(n, 4, Var::x) * binom[static_cast<size_t>(n)];
    RatFun rhs;
    for (int64_t j = 0; j <= n; ++j)
      rhs += binom[static_cast<size_t>(j)] * binom[static_cast<size_t>(n - j)] *
             RatFun::var(Var::x, j - (n - j));
    if (!(lhs == rhs)) return false;
  }
  return true;
}

}  // namespace daha
