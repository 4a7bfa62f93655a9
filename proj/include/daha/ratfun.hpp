#pragma once

#include <map>
#include <string>
#include <vector>

#include "daha/laurent.hpp"

namespace daha {

struct SpecializationSingular : std::domain_error {
  explicit SpecializationSingular(const std::string& what)
      : std::domain_error(what) {}
};

/// Rational function num/den over the Laurent ring.  Equality is defined by
/// cross-multiplication.  The denominator is held as a multiset of
/// primitive factor blocks: the coefficients of this algebra are built by
/// multiplying small displayed factors, so cancellation is almost always a
/// block match plus a trial division, and the subresultant gcd only runs
/// inside reduced().
class RatFun {
 public:
  RatFun() : num_() {}
  RatFun(long n) : num_(n) {}
  explicit RatFun(Laurent n) : num_(std::move(n)) {}
  RatFun(Laurent n, Laurent d);

  static RatFun var(Var v, int64_t k = 1) { return RatFun(Laurent::var(v, k)); }
  /// v^k, i.e. q^(k/4) in paper terms.
  static RatFun vpow(int64_t k) { return RatFun(Laurent::var(Var::v, k)); }
  static RatFun i() { return RatFun(Laurent(GCoeff::i())); }

  const Laurent& num() const { return num_; }
  /// Product of the denominator factor blocks.
  Laurent den() const;
  const std::vector<Laurent>& den_factors() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_laurent() const { return den_.empty(); }
  /// Clears the denominator; requires the function to be a Laurent
  /// polynomial in value (reduces first when factors remain).
  Laurent as_laurent() const;

  RatFun operator-() const;
  friend RatFun operator+(const RatFun& a, const RatFun& b);
  friend RatFun operator-(const RatFun& a, const RatFun& b);
  friend RatFun operator*(const RatFun& a, const RatFun& b);
  friend RatFun operator/(const RatFun& a, const RatFun& b);
  RatFun& operator+=(const RatFun& o) { return *this = *this + o; }
  RatFun& operator-=(const RatFun& o) { return *this = *this - o; }
  RatFun& operator*=(const RatFun& o) { return *this = *this * o; }
  RatFun& operator/=(const RatFun& o) { return *this = *this / o; }

  RatFun inv() const;

  /// Definitional equality: a*d == c*b as Laurent polynomials.
  friend bool operator==(const RatFun& a, const RatFun& b);
  friend bool operator!=(const RatFun& a, const RatFun& b) { return !(a == b); }

  /// Full gcd reduction: afterwards gcd(num, den) is a unit.  Block
  /// cancellation happens in every operation; this is the policy hook the
  /// composition-heavy genus-two code calls between compositions.
  RatFun reduced() const;

  /// Shift/involution rewrites used by the operator algebra.
  RatFun shift_var(Var v, int64_t scale_vpow, int64_t k) const;
  RatFun invert_var(Var v) const;

  /// Exact simultaneous substitution.  Throws SpecializationSingular when a
  /// denominator vanishes identically under the binding.
  RatFun substituted(const std::map<Var, RatFun>& bindings) const;

  bool depends_on(Var v) const;

  std::string str() const;

 private:
  void normalize_factors();
  void cancel_blocks();
  Laurent num_;
  std::vector<Laurent> den_;
};

RatFun substitute_laurent(const Laurent& f, const std::map<Var, RatFun>& b);

/// q-shifted monomial helpers (q = v^4): q^(k/2) = v^(2k).
inline RatFun qpow_half(int64_t k) { return RatFun::vpow(2 * k); }
inline RatFun qpow(int64_t k) { return RatFun::vpow(4 * k); }

std::string to_json(const RatFun& f);

}  // namespace daha
