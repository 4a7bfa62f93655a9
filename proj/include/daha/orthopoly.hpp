#pragma once

#include <array>

#include "daha/a1.hpp"
#include "daha/ore.hpp"

namespace daha {

struct EigenDegenerate : std::domain_error {
  EigenDegenerate() : std::domain_error("degenerate eigenvalue in eigen-solve") {}
};

/// A_1 Macdonald (Rogers / q-ultraspherical) polynomial M_n(z; q, t) with
/// q = v^q_vpow and the symbolic parameter t, normalized so that
/// M_n = z^n + z^-n + lower and M_0 = 1.  Computed from its explicit
/// double-sum form.
RatFun macdonald_a1(int64_t n, int64_t q_vpow, Var z);

/// Eigenvalue of Y + Y^-1 on M_n: t q^n + t^-1 q^-n.
RatFun macdonald_eigenvalue(int64_t n, int64_t q_vpow);

/// Ratio in the three-term recurrence:
/// (1-q^2n)(1-q^(2n-2)t^4) / ((1-q^(2n-2)t^2)(1-q^2n t^2)).
RatFun macdonald_three_term_b(int64_t n, int64_t q_vpow);

/// Nonsymmetric Macdonald polynomial E_m as the eigenvector of the
/// instance's Y restricted to span{z^-|m|..z^|m|}, normalized by its
/// stated leading term.  Throws EigenDegenerate when the eigenvalue is not
/// simple on that span.
RatFun nonsym_macdonald_a1(const A1& a, int64_t m);

/// Askey-Wilson four-parameter machinery.  Parameters are RatFun values
/// (symbolic t0..t3 by default); q = v^4.
struct AWParams {
  std::array<RatFun, 4> t;
  static AWParams symbolic();
};

/// Monic-symmetric Askey-Wilson polynomial P_m(x; q, t0..t3) from the
/// normalized terminating 4phi3 sum.
RatFun askey_wilson(int64_t m, const AWParams& p);

/// A(x; t) of the Askey-Wilson operator.
RatFun aw_function_A(const RatFun& x, const AWParams& p);

/// The Askey-Wilson q-difference operator A(x)(ð-1) + A(1/x)(ð^-1-1)
/// + t0 t1 + (t0 t1)^-1 acting on C[x + 1/x].
OreOp aw_operator(const AWParams& p, const AlgebraConfig& cfg);

/// Y-eigenvalue on P_m: (t0 t1)^-1 q^m + t0 t1 q^-m.
RatFun aw_eigenvalue(int64_t m, const AWParams& p);

/// Recurrence coefficients B_m, C_m of (X + X^-1) P_m = P_{m+1} + B_m P_m
/// + C_m P_{m-1}.
RatFun aw_three_term_B(int64_t m, const AWParams& p);
RatFun aw_three_term_C(int64_t m, const AWParams& p);

/// Both sides of the Macdonald generating function identity as series in z
/// through z^order; true when all coefficients agree.
bool gf_check(int64_t order);

// Small exact linear-algebra helper shared by the eigen-solves: solves
// M x = 0 for a one-dimensional kernel; returns the kernel vector with the
// requested pivot entry normalized to 1.
std::vector<RatFun> kernel_vector(std::vector<std::vector<RatFun>> m,
                                  size_t normalize_index);

}  // namespace daha
