#include "bernstir/bernoulli.hpp"

#include <cassert>
#include <stdexcept>

#include "bernstir/errors.hpp"
#include "bernstir/rstirling.hpp"
#include "bernstir/series.hpp"

namespace bernstir {

Rational oracle_eval(BernoulliFamily family, unsigned n, const Rational& alpha, long x) {
    std::size_t order = n + 1;
    Series gf(order);
    if (family == BernoulliFamily::FirstKind) {
        // (t/(exp(t)-1))^alpha exp(xt)
        Series base = series_pow(series_expm1_over_t(order), -alpha);
        gf = series_mul(base, series_exp_ct(rat(x), order));
    } else {
        // (t/log(1+t))^alpha (1+t)^x
        Series base = series_pow(series_log1p_over_t(order), -alpha);
        gf = series_mul(base, series_pow(series_one_plus_ct(1, order), rat(x)));
    }
    return egf_coeff(gf, n);
}

Rational special_neg_order(BernoulliFamily family, unsigned n, unsigned k, unsigned r) {
    Rational inv_binom = rat(1) / rat(binom_int(n + k, k));
    if (family == BernoulliFamily::FirstKind)
        return inv_binom * rat(rstir(StirlingKind::SecondKind, n + r + k, k + r, r));
    Rational v = inv_binom * rat(rstir(StirlingKind::FirstKindUnsigned, n + r + k, k + r, r));
    return n % 2 == 0 ? v : -v;
}

Rational melzak_eval(const std::function<Rational(unsigned)>& values, const Rational& alpha,
                     unsigned p, unsigned q) {
    Rational shifted = alpha + rat(static_cast<long>(q));
    for (unsigned j = 0; j <= p; ++j)
        if (shifted + rat(static_cast<long>(j)) == 0) throw PoleAtSampledPoint(j);
    Rational sum = 0;
    for (unsigned j = 0; j <= p; ++j) {
        Rational term = rat(binom_int(p, j)) * values(j) / (shifted + rat(static_cast<long>(j)));
        sum += j % 2 == 0 ? term : -term;
    }
    return shifted * binom_rat(shifted + rat(static_cast<long>(p)), p) * sum;
}

// Both propositions are Melzak reconstructions from negative-order samples.
// The B-at-(-r) and b-at-(+r) variants go through the Carlitz identity
// B_n^(a)(x) = b_n^(n+1-a)(x-1), which shifts r by one and replaces the
// order by n+1-alpha.

Rational eval_prop1(BernoulliFamily family, const EvalSpec& spec) {
    if (spec.p < spec.n) throw std::invalid_argument("eval_prop1 requires p >= n");
    if (spec.x > 0) throw std::invalid_argument("eval_prop1 requires x <= 0");
    unsigned n = spec.n, q = spec.q;
    unsigned r = static_cast<unsigned>(-spec.x);
    if (family == BernoulliFamily::SecondKind)
        return melzak_eval(
            [&](unsigned j) { return special_neg_order(BernoulliFamily::SecondKind, n, j + q, r); },
            spec.alpha, spec.p, q);
    Rational dual_alpha = rat(static_cast<long>(n + 1)) - spec.alpha;
    return melzak_eval(
        [&](unsigned j) { return special_neg_order(BernoulliFamily::SecondKind, n, j + q, r + 1); },
        dual_alpha, spec.p, q);
}

Rational eval_prop2(BernoulliFamily family, const EvalSpec& spec) {
    if (spec.p < spec.n) throw std::invalid_argument("eval_prop2 requires p >= n");
    if (spec.x < 0) throw std::invalid_argument("eval_prop2 requires x >= 0");
    unsigned n = spec.n, q = spec.q;
    unsigned r = static_cast<unsigned>(spec.x);
    if (family == BernoulliFamily::FirstKind)
        return melzak_eval(
            [&](unsigned j) { return special_neg_order(BernoulliFamily::FirstKind, n, j + q, r); },
            spec.alpha, spec.p, q);
    Rational dual_alpha = rat(static_cast<long>(n + 1)) - spec.alpha;
    return melzak_eval(
        [&](unsigned j) { return special_neg_order(BernoulliFamily::FirstKind, n, j + q, r + 1); },
        dual_alpha, spec.p, q);
}

namespace {

// q-retry wrapper: the propositions hold for every q >= 0, so a sampled pole
// (only possible here at n = 0, where the dual order n+1-alpha vanishes) is
// sidestepped by bumping q once.
Rational classical_at_int(BernoulliFamily family, unsigned n, long m) {
    for (unsigned q = 0;; ++q) {
        EvalSpec spec{n, 1, m, n, q};
        try {
            return m >= 0 ? eval_prop2(family, spec) : eval_prop1(family, spec);
        } catch (const PoleAtSampledPoint&) {
            if (q > n + 1) throw;
        }
    }
}

}  // namespace

Rational classical_B_at_int(unsigned n, long m) {
    return classical_at_int(BernoulliFamily::FirstKind, n, m);
}

Rational classical_b_at_int(unsigned n, long m) {
    return classical_at_int(BernoulliFamily::SecondKind, n, m);
}

GenocchiRoutes genocchi_routes(unsigned n) {
    if (n < 1) throw std::invalid_argument("genocchi requires n >= 1");
    Rational scale = rat(2) * (rat(1) - rat(pow_int(2, 2 * n)));
    Rational product = scale * oracle_eval(BernoulliFamily::FirstKind, 2 * n, 1, 0);

    // G_n = 4n(1-2^(2n)) sum (-1)^j/(2n+j) binom(4n, 2n+j) [2n+j+1, j+1]
    Rational sum1 = 0;
    for (unsigned j = 0; j <= 2 * n; ++j) {
        Rational term = rat(binom_int(4 * n, 2 * n + j)) *
                        rat(rstir(StirlingKind::FirstKindUnsigned, 2 * n + j + 1, j + 1, 0)) /
                        rat(static_cast<long>(2 * n + j));
        sum1 += j % 2 == 0 ? term : -term;
    }
    Rational first_kind_route = rat(static_cast<long>(2 * n)) * scale * sum1;

    // G_n = 2(2n+1)(1-2^(2n)) binom(4n,2n)^-1 sum (-1)^j/(j+1) binom(4n, 2n+j) {2n+j, j}
    Rational sum2 = 0;
    for (unsigned j = 0; j <= 2 * n; ++j) {
        Rational term = rat(binom_int(4 * n, 2 * n + j)) *
                        rat(rstir(StirlingKind::SecondKind, 2 * n + j, j, 0)) /
                        rat(static_cast<long>(j + 1));
        sum2 += j % 2 == 0 ? term : -term;
    }
    Rational second_kind_route =
        rat(static_cast<long>(2 * n + 1)) * scale * sum2 / rat(binom_int(4 * n, 2 * n));

    return {product, first_kind_route, second_kind_route};
}

Int genocchi(unsigned n) {
    GenocchiRoutes routes = genocchi_routes(n);
    if (!routes.agree())
        throw InternalMismatch("genocchi routes disagree at n = " + std::to_string(n) + ": " +
                               to_string(routes.product) + ", " +
                               to_string(routes.first_kind_sum) + ", " +
                               to_string(routes.second_kind_sum));
    if (!is_integer(routes.product))
        throw InternalMismatch("genocchi value is not an integer: " + to_string(routes.product));
    return routes.product.get_num();
}

Rational euler_at_even(unsigned n, long m) {
    if (n < 1) throw std::invalid_argument("euler_at_even requires n >= 1");
    if (m % 2 != 0) throw OddArgument();
    Rational whole = classical_B_at_int(n, m);
    Rational half = classical_B_at_int(n, m / 2);
    return rat(2, static_cast<long>(n)) * (whole - rat(pow_int(2, n)) * half);
}

Rational remark2_B(unsigned n, unsigned r) {
    Rational sum = 0;
    for (unsigned j = 0; j <= n; ++j) {
        Rational term = rat(factorial(j)) * rat(rstir(StirlingKind::SecondKind, n + r, j + r, r)) /
                        rat(static_cast<long>(j + 1));
        sum += j % 2 == 0 ? term : -term;
    }
    return sum;
}

Rational expansion_high_order(BernoulliFamily family, unsigned n, unsigned k, long x) {
    Rational sum = 0;
    if (family == BernoulliFamily::FirstKind) {
        for (unsigned j = 0; j <= n; ++j) {
            Rational term = rat(binom_int(n + k, j + k)) *
                            rat(rstir(StirlingKind::FirstKindUnsigned, j + k, k, 0)) *
                            falling(rat(x - 1), n - j);
            sum += j % 2 == 0 ? term : -term;
        }
    } else {
        for (unsigned j = 0; j <= n; ++j)
            sum += rat(binom_int(n + k, j + k)) * rat(rstir(StirlingKind::SecondKind, j + k, k, 0)) *
                   rat(pow_int(Int(x + 1), n - j));
    }
    return sum / rat(binom_int(n + k, k));
}

}  // namespace bernstir
