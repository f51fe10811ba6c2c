#include "bernstir/series.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "bernstir/errors.hpp"

namespace bernstir {

std::size_t max_series_order() {
    static const std::size_t cap = [] {
        if (const char* env = std::getenv("BERNSTIR_MAX_ORDER")) {
            char* end = nullptr;
            unsigned long v = std::strtoul(env, &end, 10);
            if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
        }
        return static_cast<std::size_t>(256);
    }();
    return cap;
}

Series::Series(std::size_t order) : coeffs_(order, Rational(0)) {
    if (order > max_series_order())
        throw std::length_error("series order " + std::to_string(order) +
                                " exceeds BERNSTIR_MAX_ORDER cap " +
                                std::to_string(max_series_order()));
}

void Series::set_coeff(std::size_t i, const Rational& value) {
    if (i >= coeffs_.size()) throw OrderExceeded(i, coeffs_.size());
    coeffs_[i] = value;
    coeffs_[i].canonicalize();
}

Series series_add(const Series& a, const Series& b) {
    Series c(std::min(a.order(), b.order()));
    for (std::size_t i = 0; i < c.order(); ++i) c.set_coeff(i, a.coeff(i) + b.coeff(i));
    return c;
}

Series series_sub(const Series& a, const Series& b) {
    Series c(std::min(a.order(), b.order()));
    for (std::size_t i = 0; i < c.order(); ++i) c.set_coeff(i, a.coeff(i) - b.coeff(i));
    return c;
}

Series series_scale(const Rational& c, const Series& a) {
    Series s(a.order());
    for (std::size_t i = 0; i < s.order(); ++i) s.set_coeff(i, c * a.coeff(i));
    return s;
}

Series series_mul(const Series& a, const Series& b) {
    Series c(std::min(a.order(), b.order()));
    for (std::size_t n = 0; n < c.order(); ++n) {
        Rational sum = 0;
        for (std::size_t i = 0; i <= n; ++i) sum += a.coeff(i) * b.coeff(n - i);
        c.set_coeff(n, sum);
    }
    return c;
}

Series series_div(const Series& a, const Series& b) {
    if (b.order() == 0 || b.coeff(0) == 0) throw DivisionByZeroConstantTerm();
    Series q(std::min(a.order(), b.order()));
    for (std::size_t n = 0; n < q.order(); ++n) {
        Rational sum = a.coeff(n);
        for (std::size_t i = 0; i < n; ++i) sum -= q.coeff(i) * b.coeff(n - i);
        q.set_coeff(n, sum / b.coeff(0));
    }
    return q;
}

// n*L_n = n*a_n - sum_{k=1}^{n-1} k*L_k*a_{n-k}, from a*L' = a' with a_0 = 1.
Series series_log(const Series& a) {
    if (a.order() == 0 || a.coeff(0) != 1) throw ConstantTermNotOne("series_log");
    Series l(a.order());
    for (std::size_t n = 1; n < a.order(); ++n) {
        Rational sum = rat(static_cast<long>(n)) * a.coeff(n);
        for (std::size_t k = 1; k < n; ++k)
            sum -= rat(static_cast<long>(k)) * l.coeff(k) * a.coeff(n - k);
        l.set_coeff(n, sum / rat(static_cast<long>(n)));
    }
    return l;
}

// n*E_n = sum_{k=1}^{n} k*a_k*E_{n-k}, from E' = a'*E with E_0 = 1.
Series series_exp(const Series& a) {
    if (a.order() == 0 || a.coeff(0) != 0) throw NonzeroConstantTerm();
    Series e(a.order());
    e.set_coeff(0, 1);
    for (std::size_t n = 1; n < a.order(); ++n) {
        Rational sum = 0;
        for (std::size_t k = 1; k <= n; ++k)
            sum += rat(static_cast<long>(k)) * a.coeff(k) * e.coeff(n - k);
        e.set_coeff(n, sum / rat(static_cast<long>(n)));
    }
    return e;
}

Series series_pow(const Series& a, const Rational& alpha) {
    if (a.order() == 0 || a.coeff(0) != 1) throw ConstantTermNotOne("series_pow");
    return series_exp(series_scale(alpha, series_log(a)));
}

Rational egf_coeff(const Series& a, std::size_t n) {
    if (n >= a.order()) throw OrderExceeded(n, a.order());
    return rat(factorial(n)) * a.coeff(n);
}

Series series_one(std::size_t order) {
    Series s(order);
    if (order > 0) s.set_coeff(0, 1);
    return s;
}

Series series_t(std::size_t order) {
    Series s(order);
    if (order > 1) s.set_coeff(1, 1);
    return s;
}

Series series_exp_ct(const Rational& c, std::size_t order) {
    Series s(order);
    Rational term = 1;
    for (std::size_t i = 0; i < order; ++i) {
        s.set_coeff(i, term);
        term = term * c / rat(static_cast<long>(i + 1));
    }
    return s;
}

Series series_expm1_over_t(std::size_t order) {
    Series s(order);
    for (std::size_t i = 0; i < order; ++i) s.set_coeff(i, rat(1, 1) / rat(factorial(i + 1)));
    return s;
}

Series series_log1p_over_t(std::size_t order) {
    Series s(order);
    for (std::size_t i = 0; i < order; ++i)
        s.set_coeff(i, rat(i % 2 == 0 ? 1 : -1, static_cast<long>(i + 1)));
    return s;
}

Series series_one_plus_ct(const Rational& c, std::size_t order) {
    Series s(order);
    if (order > 0) s.set_coeff(0, 1);
    if (order > 1) s.set_coeff(1, c);
    return s;
}

}  // namespace bernstir
