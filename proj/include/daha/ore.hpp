#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>

#include "daha/ratfun.hpp"

namespace daha {

// Shiftable sites of the skew algebra, in normal-form order.
enum class Site : int { X = 0, Xu = 1, Xd = 2, T = 3 };
inline constexpr int kNumSites = 4;
Var site_var(Site s);

/// Per-instance shift constants: v-power of c in ð_z f(z) = f(c z) ð_z.
/// The standalone A_1 algebra uses c = q = v^4 on x; the glued surface
/// algebras use q_u = v^2 on x_u, x_d, t.
struct AlgebraConfig {
  std::array<int64_t, kNumSites> shift_vpow{4, 2, 2, 2};
  friend bool operator==(const AlgebraConfig&, const AlgebraConfig&) = default;
};

struct OpKey {
  std::array<int64_t, kNumSites> sh{};  // ð_x^a ð_u^b ð_d^c ð_t^e
  uint8_t inv = 0;                      // bit0 s_x, bit1 s_u, bit2 s_d
  friend bool operator==(const OpKey&, const OpKey&) = default;
  friend auto operator<=>(const OpKey&, const OpKey&) = default;
};

/// Skew operator in normal form: sum of coeff * ð_x^a ð_u^b ð_d^c ð_t^e * s^eps
/// with the coefficient on the left.  Rewriting rules:
///   ð_z f = f(c_z z) ð_z,   s_z f = f(z -> 1/z) s_z,
///   s_z ð_z = ð_z^{-1} s_z,  s_z ð_w = ð_w s_z (w != z),  s_z^2 = 1.
class OreOp {
 public:
  OreOp() = default;
  explicit OreOp(AlgebraConfig cfg) : cfg_(cfg) {}

  static OreOp scalar(AlgebraConfig cfg, const RatFun& f);
  static OreOp identity(AlgebraConfig cfg) { return scalar(cfg, RatFun(1)); }
  static OreOp shift(AlgebraConfig cfg, Site z, int64_t k,
                     const RatFun& coeff = RatFun(1));
  static OreOp involution(AlgebraConfig cfg, Site z,
                          const RatFun& coeff = RatFun(1));

  const AlgebraConfig& config() const { return cfg_; }
  const std::map<OpKey, RatFun>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const OpKey& k, const RatFun& c);

  OreOp operator-() const;
  OreOp& operator+=(const OreOp& o);
  OreOp& operator-=(const OreOp& o);
  friend OreOp operator+(OreOp a, const OreOp& b) { return a += b; }
  friend OreOp operator-(OreOp a, const OreOp& b) { return a -= b; }
  friend OreOp operator*(const OreOp& a, const OreOp& b);  // composition
  OreOp scaled(const RatFun& f) const;                     // f * this
  friend OreOp operator*(const RatFun& f, const OreOp& a) { return a.scaled(f); }

  RatFun apply(const RatFun& f) const;

  /// Exact equality of normal forms (cross-multiplied per coefficient).
  friend bool equal(const OreOp& a, const OreOp& b);

  /// Evaluates p(A) with p given by coefficients c[0..n] (p = sum c_k z^k).
  static OreOp op_poly(const std::vector<RatFun>& coeffs, const OreOp& a);

  /// Sub-operator multiplying ð_t^k, with the ð_t factor stripped.
  OreOp dt_coefficient(int64_t k) const;
  int64_t dt_min() const;
  int64_t dt_max() const;

  /// Applies a substitution to every coefficient (parameters only; the
  /// bindings must not touch shifted/involuted variables of live terms).
  OreOp substituted(const std::map<Var, RatFun>& bindings) const;

  std::string str() const;

 private:
  AlgebraConfig cfg_;
  std::map<OpKey, RatFun> terms_;
};

/// Coefficient conjugated through the shift/involution part of `k`:
/// (shifts then involutions applied to f, as when moving f from the right
/// of the term's difference part to its left).
RatFun conjugate_through(const AlgebraConfig& cfg, const OpKey& k, const RatFun& f);

}  // namespace daha
