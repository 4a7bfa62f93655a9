#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "daha/gcoeff.hpp"

namespace daha {

// Fixed variable universe. The root variable v encodes q = v^4,
// q^(1/2) = v^2, q_u = v^2, q_u^(1/2) = v, so every exponent that shows
// up in this algebra is an integer.
enum class Var : int {
  v = 0,
  t = 1,
  x = 2,
  xu = 3,
  xd = 4,
  xl = 5,
  xr = 6,
  t0 = 7,
  t1 = 8,
  t2 = 9,
  t3 = 10,
};
inline constexpr int kNumVars = 11;
extern const char* const kVarNames[kNumVars];
std::optional<Var> var_from_name(const std::string& name);

// Exponent vector, lexicographically ordered over the fixed variable order.
struct Exp {
  std::array<int64_t, kNumVars> e{};

  int64_t operator[](Var v) const { return e[static_cast<int>(v)]; }
  int64_t& operator[](Var v) { return e[static_cast<int>(v)]; }
  bool is_zero() const {
    for (auto x : e)
      if (x != 0) return false;
    return true;
  }
  friend bool operator==(const Exp&, const Exp&) = default;
  friend auto operator<=>(const Exp&, const Exp&) = default;

  // Overflow aborts with a diagnostic; degrees at desk scale stay far below
  // the 64-bit range, so any overflow is a bug, not an input problem.
  Exp plus(const Exp& o) const;
  Exp minus(const Exp& o) const;
  Exp negated() const;
};

Exp exp_of(Var v, int64_t k);

/// Multivariate Laurent polynomial over Gaussian rationals.
/// Invariant: no stored zero coefficients.
class Laurent {
 public:
  using Terms = std::map<Exp, GCoeff>;

  Laurent() = default;
  explicit Laurent(const GCoeff& c);
  explicit Laurent(long n) : Laurent(GCoeff(n)) {}

  static Laurent var(Var v, int64_t k = 1);
  static Laurent monomial(const GCoeff& c, const Exp& e);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  GCoeff constant_value() const;  // requires is_constant()

  std::size_t size() const { return terms_.size(); }

  void add_term(const Exp& e, const GCoeff& c);

  Laurent operator-() const;
  Laurent& operator+=(const Laurent& o);
  Laurent& operator-=(const Laurent& o);
  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator*(const Laurent& a, const Laurent& b);
  Laurent& operator*=(const Laurent& o) { return *this = *this * o; }

  friend bool operator==(const Laurent& a, const Laurent& b) {
    return a.terms_ == b.terms_;
  }

  Laurent mul_monomial(const GCoeff& c, const Exp& e) const;

  /// Multiplies the coefficient of every term by scale^(k * e[v]).
  /// This realizes the shift rewrite ð_z f(z) = f(c z) ð_z for c a
  /// v-monomial: scale_vpow is the v-power of c, k the shift power.
  Laurent shift_var(Var v, int64_t scale_vpow, int64_t k) const;

  /// z -> z^-1 on variable z (used by the involutions).
  Laurent invert_var(Var v) const;

  bool depends_on(Var v) const;
  int64_t min_deg(Var v) const;  // 0 on zero polynomial
  int64_t max_deg(Var v) const;

  /// Coefficient-of-z^k decomposition (z-degree -> polynomial without z).
  std::map<int64_t, Laurent> collect(Var v) const;

  std::string str() const;

 private:
  Terms terms_;
};

// --- polynomial gcd machinery (exact-core normalization) ---

/// Smallest exponent per variable (the common monomial factor).
Exp monomial_content(const Laurent& p);

/// gcd over Q(i)[vars] of Laurent polynomials, up to a unit; both monomial
/// content and Gaussian-integer content are split off first.  Returns 1 for
/// coprime inputs.  gcd(0, p) = p.
Laurent poly_gcd(const Laurent& a, const Laurent& b);

/// Exact division; aborts if `b` does not divide `a`.
Laurent poly_divexact(const Laurent& a, const Laurent& b);

/// Exact division that reports failure instead of aborting.
std::optional<Laurent> poly_try_div(const Laurent& a, const Laurent& b);

/// Divides out integer content and the common monomial factor, and fixes
/// the sign/phase of the leading coefficient. Used to canonicalize
/// num/den pairs.
Laurent make_primitive(const Laurent& p, GCoeff* unit_out = nullptr);

}  // namespace daha
