#pragma once

#include <vector>

#include "daha/ratfun.hpp"

namespace daha {

/// (a;q)_n = prod_{j=1..n} (1 - a q^(j-1)); (a;q)_0 = 1; negative index by
/// (a;q)_{-n} = 1/((a q^{-n};q)_n).  Throws SpecializationSingular when a
/// factor of the negative-index product vanishes identically.
RatFun q_pochhammer(const RatFun& a, const RatFun& q, int64_t n);

enum class ChebKind { First, Second };

/// Chebyshev polynomial in the abstract variable z, returned as its
/// coefficient list c[0..n] (P = sum c_k z^k).  Second kind accepts negative
/// n with S_{-1} = 0 and S_{-n} = -S_{n-2}, the convention forced by
/// S_n(x+1/x) = (x^{n+1}-x^{-n-1})/(x-1/x).
std::vector<RatFun> chebyshev(ChebKind kind, int64_t n);

/// P(ch z) as a Laurent-symmetric RatFun in the chosen variable.
RatFun cheb_in_var(ChebKind kind, int64_t n, Var z);

/// S_{-n} = -S_{n-1}: the convention Appendix A states; kept only so the
/// empirical resolution can test both.
RatFun cheb_second_alt_negative(int64_t n, Var z);

/// Expands a z-symmetric Laurent polynomial in the S-basis
/// {S_n(z + z^-1)}: f = sum_n out[n] * S_n(ch z).  The coefficients are
/// free of z.  Throws std::domain_error when f is not z-symmetric.
std::map<int64_t, RatFun> s_basis_expand(const RatFun& f, Var z);

/// Inverse of s_basis_expand.
RatFun s_basis_build(const std::map<int64_t, RatFun>& coeffs, Var z);

/// Power-sum expansion of a z-symmetric Laurent polynomial:
/// f = out[0] + sum_{n>0} out[n] * (z^n + z^-n).
std::map<int64_t, RatFun> power_sum_expand(const RatFun& f, Var z);

}  // namespace daha
