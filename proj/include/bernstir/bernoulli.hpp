#pragma once

/// Higher-order Bernoulli polynomials of both kinds at integer arguments.
///
/// Two independent routes exist for every value: the generating-function
/// oracle (oracle_eval, built on the series module) and the closed forms
/// built from r-Stirling data (special_neg_order, eval_prop1/eval_prop2,
/// expansion_high_order). The closed forms are the artifact; the oracle is
/// ground truth.

#include <functional>

#include "bernstir/rational.hpp"

namespace bernstir {

/// FirstKind: EGF (t/(exp(t)-1))^alpha exp(xt), symbol B.
/// SecondKind: EGF (t/log(1+t))^alpha (1+t)^x, symbol b.
/// (The source literature's prose labels for B and b are inconsistent; we
/// follow the symbols and generating functions.)
enum class BernoulliFamily { FirstKind, SecondKind };

/// Request for one value: degree n, order alpha, integer argument x, and the
/// interpolation parameters p (degree bound, p >= n) and q (shift).
struct EvalSpec {
    unsigned n = 0;
    Rational alpha = 1;
    long x = 0;
    unsigned p = 0;
    unsigned q = 0;
};

/// n! [t^n] of the defining generating function, truncated at order n+1.
Rational oracle_eval(BernoulliFamily family, unsigned n, const Rational& alpha, long x);

/// Negative-order special values from r-Stirling data:
///   FirstKind:  B_n^(-k)(r)   =        binom(n+k,k)^-1 {n+r+k, k+r}_r
///   SecondKind: b_n^(-k)(-r)  = (-1)^n binom(n+k,k)^-1 [n+r+k, k+r]_r
Rational special_neg_order(BernoulliFamily family, unsigned n, unsigned k, unsigned r);

/// Finite-sum reconstruction of a degree-<=p polynomial f at alpha from its
/// samples values(j) = f(-j-q), j = 0..p:
///   (alpha+q) binom(alpha+q+p, p) sum (-1)^j binom(p,j) values(j)/(alpha+q+j)
/// Throws PoleAtSampledPoint when some alpha+q+j = 0.
Rational melzak_eval(const std::function<Rational(unsigned)>& values, const Rational& alpha,
                     unsigned p, unsigned q);

/// Value at x = -r (r = -spec.x >= 0) via the first-kind r-Stirling sums.
/// Requires spec.p >= spec.n and spec.x <= 0.
Rational eval_prop1(BernoulliFamily family, const EvalSpec& spec);

/// Value at x = r (r = spec.x >= 0) via the second-kind r-Stirling sums.
/// Requires spec.p >= spec.n and spec.x >= 0.
Rational eval_prop2(BernoulliFamily family, const EvalSpec& spec);

/// Classical (alpha = 1) polynomials at any integer, p = n, q = 0. Pole-free.
Rational classical_B_at_int(unsigned n, long m);
Rational classical_b_at_int(unsigned n, long m);

/// The three computation routes for G_n = 2(1-2^(2n)) B_2n: the defining
/// product (B_2n from the series oracle) and the two Stirling sums.
struct GenocchiRoutes {
    Rational product;
    Rational first_kind_sum;
    Rational second_kind_sum;
    bool agree() const { return product == first_kind_sum && product == second_kind_sum; }
};
GenocchiRoutes genocchi_routes(unsigned n);

/// G_n, n >= 1; throws InternalMismatch if the three routes disagree or the
/// value is not an integer.
Int genocchi(unsigned n);

/// E_{n-1}(m) for even m, via E_{n-1}(2x) = (2/n)(B_n(2x) - 2^n B_n(x)).
/// Throws OddArgument for odd m.
Rational euler_at_even(unsigned n, long m);

/// B_n(r) = sum_{j=0}^{n} (-1)^j j!/(j+1) {n+r, j+r}_r.
Rational remark2_B(unsigned n, unsigned r);

/// Order n+k+1 via ordinary Stirling numbers:
///   B_n^(n+k+1)(x) = binom(n+k,k)^-1 sum (-1)^j binom(n+k,j+k) [j+k,k] falling(x-1, n-j)
///   b_n^(n+k+1)(x) = binom(n+k,k)^-1 sum        binom(n+k,j+k) {j+k,k} (x+1)^(n-j)
Rational expansion_high_order(BernoulliFamily family, unsigned n, unsigned k, long x);

}  // namespace bernstir
