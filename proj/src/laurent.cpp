#include "daha/laurent.hpp"

#include <cstdio>
#include <cstdlib>
#include <sstream>

namespace daha {

const char* const kVarNames[kNumVars] = {"v",  "t",  "x",  "xu", "xd", "xl",
                                         "xr", "t0", "t1", "t2", "t3"};

std::optional<Var> var_from_name(const std::string& name) {
  for (int i = 0; i < kNumVars; ++i)
    if (name == kVarNames[i]) return static_cast<Var>(i);
  return std::nullopt;
}

namespace {
[[noreturn]] void exponent_overflow() {
  std::fprintf(stderr, "daha: exponent overflow in Laurent arithmetic\n");
  std::abort();
}
}  // namespace

Exp Exp::plus(const Exp& o) const {
  Exp r;
  for (int i = 0; i < kNumVars; ++i)
    if (__builtin_add_overflow(e[i], o.e[i], &r.e[i])) exponent_overflow();
  return r;
}

Exp Exp::minus(const Exp& o) const {
  Exp r;
  for (int i = 0; i < kNumVars; ++i)
    if (__builtin_sub_overflow(e[i], o.e[i], &r.e[i])) exponent_overflow();
  return r;
}

Exp Exp::negated() const {
  Exp r;
  for (int i = 0; i < kNumVars; ++i) r.e[i] = -e[i];
  return r;
}

Exp exp_of(Var v, int64_t k) {
  Exp e;
  e[v] = k;
  return e;
}

Laurent::Laurent(const GCoeff& c) {
  if (!c.is_zero()) terms_.emplace(Exp{}, c);
}

Laurent Laurent::var(Var v, int64_t k) {
  return monomial(GCoeff(1), exp_of(v, k));
}

Laurent Laurent::monomial(const GCoeff& c, const Exp& e) {
  Laurent p;
  if (!c.is_zero()) p.terms_.emplace(e, c);
  return p;
}

bool Laurent::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_zero());
}

GCoeff Laurent::constant_value() const {
  if (terms_.empty()) return GCoeff(0);
  return terms_.begin()->second;
}

void Laurent::add_term(const Exp& e, const GCoeff& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Laurent Laurent::operator-() const {
  Laurent r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

Laurent& Laurent::operator+=(const Laurent& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Laurent operator*(const Laurent& a, const Laurent& b) {
  Laurent r;
  if (a.is_zero() || b.is_zero()) return r;
  // Iterate the smaller factor outside.
  const Laurent& s = a.size() <= b.size() ? a : b;
  const Laurent& l = a.size() <= b.size() ? b : a;
  for (const auto& [ea, ca] : s.terms_)
    for (const auto& [eb, cb] : l.terms_) r.add_term(ea.plus(eb), ca * cb);
  return r;
}

Laurent Laurent::mul_monomial(const GCoeff& c, const Exp& e) const {
  Laurent r;
  if (c.is_zero()) return r;
  for (const auto& [ea, ca] : terms_) r.terms_.emplace(ea.plus(e), ca * c);
  return r;
}

Laurent Laurent::shift_var(Var v, int64_t scale_vpow, int64_t k) const {
  if (scale_vpow == 0 || k == 0) return *this;
  Laurent r;
  for (const auto& [e, c] : terms_) {
    int64_t dv;
    if (__builtin_mul_overflow(e[v], scale_vpow * k, &dv)) exponent_overflow();
    Exp ne = e;
    if (__builtin_add_overflow(ne[Var::v], dv, &ne[Var::v])) exponent_overflow();
    r.terms_.emplace(ne, c);
  }
  return r;
}

Laurent Laurent::invert_var(Var v) const {
  Laurent r;
  for (const auto& [e, c] : terms_) {
    Exp ne = e;
    ne[v] = -ne[v];
    r.terms_.emplace(ne, c);
  }
  return r;
}

bool Laurent::depends_on(Var v) const {
  for (const auto& [e, c] : terms_)
    if (e[v] != 0) return true;
  return false;
}

int64_t Laurent::min_deg(Var v) const {
  int64_t m = 0;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (first || e[v] < m) m = e[v];
    first = false;
  }
  return m;
}

int64_t Laurent::max_deg(Var v) const {
  int64_t m = 0;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (first || e[v] > m) m = e[v];
    first = false;
  }
  return m;
}

std::map<int64_t, Laurent> Laurent::collect(Var v) const {
  std::map<int64_t, Laurent> out;
  for (const auto& [e, c] : terms_) {
    Exp ne = e;
    ne[v] = 0;
    out[e[v]].add_term(ne, c);
  }
  return out;
}

std::string Laurent::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")";
    for (int i = 0; i < kNumVars; ++i)
      if (e.e[i] != 0) os << " " << kVarNames[i] << "^" << e.e[i];
  }
  return os.str();
}

// --------------------------------------------------------------------------
// gcd machinery
// --------------------------------------------------------------------------

Exp monomial_content(const Laurent& p) {
  Exp m{};
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    if (first) {
      m = e;
      first = false;
    } else {
      for (int i = 0; i < kNumVars; ++i)
        if (e.e[i] < m.e[i]) m.e[i] = e.e[i];
    }
  }
  return m;
}

namespace {

// Positive rational r such that p/r has coprime integer parts.
mpq_class numeric_content(const Laurent& p) {
  mpz_class num_gcd = 0, den_lcm = 1;
  for (const auto& [e, c] : p.terms()) {
    if (sgn(c.re()) != 0) {
      mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(),
              c.re().get_num().get_mpz_t());
      mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(),
              c.re().get_den().get_mpz_t());
    }
    if (sgn(c.im()) != 0) {
      mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(),
              c.im().get_num().get_mpz_t());
      mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(),
              c.im().get_den().get_mpz_t());
    }
  }
  if (num_gcd == 0) return mpq_class(1);
  mpq_class r(abs(num_gcd), den_lcm);
  r.canonicalize();
  return r;
}

Laurent divide_numeric(const Laurent& p, const mpq_class& r) {
  GCoeff inv(mpq_class(1) / r, mpq_class(0));
  return p.mul_monomial(inv, Exp{});
}

const GCoeff& leading_coeff(const Laurent& p) { return p.terms().rbegin()->second; }

// Is there a variable both polynomials depend on? Pick the one minimizing
// the smaller of the two degrees.
std::optional<Var> pick_main_var(const Laurent& a, const Laurent& b) {
  std::optional<Var> best;
  int64_t best_deg = 0;
  for (int i = 0; i < kNumVars; ++i) {
    Var v = static_cast<Var>(i);
    if (!a.depends_on(v) || !b.depends_on(v)) continue;
    int64_t d = std::min(a.max_deg(v), b.max_deg(v));
    if (!best || d < best_deg) {
      best = v;
      best_deg = d;
    }
  }
  return best;
}

Laurent gcd_list(const std::map<int64_t, Laurent>& coeffs) {
  Laurent g;
  for (const auto& [k, c] : coeffs) {
    g = poly_gcd(g, c);
    if (g.is_constant() && !g.is_zero()) return Laurent(1);
  }
  return g;
}

// Exact pseudo-remainder: lc(b)^(deg a - deg b + 1) * a = q*b + R.
Laurent pseudo_rem(const Laurent& a, const Laurent& b, Var z) {
  auto bc = b.collect(z);
  int64_t db = bc.rbegin()->first;
  Laurent lb = bc.rbegin()->second;
  int64_t da = a.max_deg(z);
  int64_t mults_left = da - db + 1;
  Laurent r = a;
  while (!r.is_zero()) {
    auto rc = r.collect(z);
    int64_t dr = rc.rbegin()->first;
    if (dr < db) break;
    Laurent lr = rc.rbegin()->second;
    r = lb * r - (lr * b).mul_monomial(GCoeff(1), exp_of(z, dr - db));
    --mults_left;
  }
  for (; mults_left > 0; --mults_left) r = lb * r;
  return r;
}

Laurent coeff_pow(Laurent base, int64_t n) {
  Laurent r(1);
  for (int64_t i = 0; i < n; ++i) r = r * base;
  return r;
}

Laurent primitive_part(const Laurent& p, Var z) {
  auto pc = p.collect(z);
  Laurent cont = gcd_list(pc);
  if (cont.is_constant()) return divide_numeric(p, numeric_content(p));
  return poly_divexact(p, cont);
}

// Evaluates all variables but z at the given nonzero integer point.
// Returns false when the evaluation is unusable (zero image).
bool eval_uni(const Laurent& p, Var z, const std::array<long, kNumVars>& pt,
              std::map<int64_t, GCoeff>& out) {
  out.clear();
  for (const auto& [e, c] : p.terms()) {
    mpq_class scale(1);
    for (int i = 0; i < kNumVars; ++i) {
      if (static_cast<Var>(i) == z || e.e[i] == 0) continue;
      mpz_class base(pt[i]);
      mpz_class pw;
      mpz_pow_ui(pw.get_mpz_t(), base.get_mpz_t(),
                 static_cast<unsigned long>(e.e[i] > 0 ? e.e[i] : -e.e[i]));
      if (e.e[i] > 0)
        scale *= mpq_class(pw);
      else
        scale *= mpq_class(mpz_class(1), pw);
    }
    GCoeff add(c.re() * scale, c.im() * scale);
    auto [it, inserted] = out.try_emplace(e[z], add);
    if (!inserted) {
      it->second += add;
      if (it->second.is_zero()) out.erase(it);
    }
  }
  return !out.empty();
}

// Degree of the univariate polynomial gcd over Q(i); inputs as sparse
// degree->coefficient maps with nonnegative degrees.
int64_t uni_gcd_degree(std::map<int64_t, GCoeff> a, std::map<int64_t, GCoeff> b) {
  if (a.rbegin()->first < b.rbegin()->first) std::swap(a, b);
  while (!b.empty() && b.rbegin()->first > 0) {
    GCoeff lb_inv = b.rbegin()->second.inv();
    int64_t db = b.rbegin()->first;
    while (!a.empty() && a.rbegin()->first >= db) {
      GCoeff f = a.rbegin()->second * lb_inv;
      int64_t off = a.rbegin()->first - db;
      for (const auto& [d, c] : b) {
        GCoeff sub = f * c;
        auto [it, inserted] = a.try_emplace(d + off, -sub);
        if (!inserted) {
          it->second -= sub;
          if (it->second.is_zero()) a.erase(it);
        }
      }
    }
    std::swap(a, b);
  }
  if (!b.empty()) return 0;  // nonzero constant divides both: coprime
  return a.rbegin()->first;
}

// Certified coprimality of the z-primitive parts via a projection to one
// variable.  A trivial projected gcd plus a surviving leading coefficient
// proves gcd(pp_a, pp_b) is z-free; the only failure mode is a retry.
enum class Projection { Coprime, Unknown };

Projection project_coprime(const Laurent& a, const Laurent& b, Var z) {
  static const std::array<long, 4> kSeeds[] = {
      {3, 5, 7, 11}, {5, 9, 2, 13}, {7, 3, 10, 17}, {2, 11, 3, 5}};
  Laurent lca = a.collect(z).rbegin()->second;
  Laurent lcb = b.collect(z).rbegin()->second;
  for (const auto& seed : kSeeds) {
    std::array<long, kNumVars> pt{};
    for (int i = 0; i < kNumVars; ++i) pt[i] = seed[i % 4] + (i / 4) * 6;
    std::map<int64_t, GCoeff> ua, ub, ulca, ulcb;
    if (!eval_uni(lca, z, pt, ulca) || !eval_uni(lcb, z, pt, ulcb)) continue;
    if (!eval_uni(a, z, pt, ua) || !eval_uni(b, z, pt, ub)) continue;
    if (uni_gcd_degree(std::move(ua), std::move(ub)) == 0)
      return Projection::Coprime;
    return Projection::Unknown;  // plausible common factor: run the PRS
  }
  return Projection::Unknown;
}

}  // namespace

Laurent make_primitive(const Laurent& p, GCoeff* unit_out) {
  if (p.is_zero()) {
    if (unit_out) *unit_out = GCoeff(1);
    return p;
  }
  Exp mc = monomial_content(p);
  mpq_class nc = numeric_content(p);
  Laurent q = p.mul_monomial(GCoeff(mpq_class(1) / nc, mpq_class(0)), mc.negated());
  const GCoeff& lc = leading_coeff(q);
  bool flip = sgn(lc.re()) < 0 || (sgn(lc.re()) == 0 && sgn(lc.im()) < 0);
  if (flip) q = -q;
  if (unit_out) *unit_out = GCoeff(flip ? -nc : nc, mpq_class(0));
  return q;
}

Laurent poly_gcd(const Laurent& a_in, const Laurent& b_in) {
  if (a_in.is_zero()) return make_primitive(b_in);
  if (b_in.is_zero()) return make_primitive(a_in);
  if (a_in.is_monomial() || b_in.is_monomial()) return Laurent(1);

  // Work on monomial-free, content-free copies.
  Laurent a = make_primitive(a_in);
  Laurent b = make_primitive(b_in);
  if (a == b) return a;
  // Denominators in this domain are usually products of a few binomials;
  // exact-divisor hits are frequent enough that probing pays off.
  if (a.size() <= b.size()) {
    if (poly_try_div(b, a)) return a;
  } else {
    if (poly_try_div(a, b)) return b;
  }

  auto mv = pick_main_var(a, b);
  if (!mv) return Laurent(1);
  Var z = *mv;

  bool pp_coprime = project_coprime(a, b, z) == Projection::Coprime;

  auto ac = a.collect(z);
  auto bc = b.collect(z);
  Laurent cont_a = gcd_list(ac);
  Laurent cont_b = gcd_list(bc);
  Laurent g_cont = poly_gcd(cont_a, cont_b);
  if (pp_coprime) return make_primitive(g_cont);

  Laurent pa = cont_a.is_constant() ? a : poly_divexact(a, cont_a);
  Laurent pb = cont_b.is_constant() ? b : poly_divexact(b, cont_b);
  if (pa.max_deg(z) < pb.max_deg(z)) std::swap(pa, pb);

  // Subresultant PRS: growth stays polynomial because each remainder is
  // divided by the known factor g*h^delta, exactly.
  Laurent g(1), h(1);
  while (true) {
    if (pb.is_zero()) break;
    if (pb.max_deg(z) == 0) {
      pa = Laurent(1);
      break;
    }
    int64_t delta = pa.max_deg(z) - pb.max_deg(z);
    Laurent r = pseudo_rem(pa, pb, z);
    pa = pb;
    if (r.is_zero()) {
      pb = r;
      break;
    }
    pb = poly_divexact(r, g * coeff_pow(h, delta));
    g = pa.collect(z).rbegin()->second;
    h = delta == 0 ? h : poly_divexact(coeff_pow(g, delta), coeff_pow(h, delta - 1));
  }
  Laurent g_pp = primitive_part(pa, z);
  return make_primitive(g_cont * g_pp);
}

std::optional<Laurent> poly_try_div(const Laurent& a_in, const Laurent& b_in) {
  if (a_in.is_zero()) return a_in;
  if (b_in.is_zero()) return std::nullopt;
  if (b_in.is_monomial()) {
    const auto& [e, c] = *b_in.terms().begin();
    return a_in.mul_monomial(c.inv(), e.negated());
  }
  // Strip monomial contents so lex division runs over true polynomials.
  Exp ma = monomial_content(a_in), mb = monomial_content(b_in);
  Laurent a = a_in.mul_monomial(GCoeff(1), ma.negated());
  Laurent b = b_in.mul_monomial(GCoeff(1), mb.negated());
  const Exp lb = b.terms().rbegin()->first;
  const GCoeff lbc_inv = b.terms().rbegin()->second.inv();

  Laurent q;
  while (!a.is_zero()) {
    const Exp& la = a.terms().rbegin()->first;
    Exp d = la.minus(lb);
    for (int i = 0; i < kNumVars; ++i)
      if (d.e[i] < 0) return std::nullopt;
    GCoeff qc = a.terms().rbegin()->second * lbc_inv;
    q.add_term(d, qc);
    a -= b.mul_monomial(qc, d);
  }
  return q.mul_monomial(GCoeff(1), ma.minus(mb));
}

Laurent poly_divexact(const Laurent& a_in, const Laurent& b_in) {
  auto q = poly_try_div(a_in, b_in);
  if (!q) {
    std::fprintf(stderr, "daha: poly_divexact: not divisible\n");
    std::abort();
  }
  return *q;
}

}  // namespace daha
