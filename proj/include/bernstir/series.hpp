#pragma once

/// Truncated formal power series over Rational. A Series of order N stores
/// coefficients of t^0 .. t^(N-1); every operation truncates to the shorter
/// operand. Values are immutable in practice: operations return new series.
///
/// This module is the generating-function oracle the rest of the project is
/// checked against, so it stays deliberately simple: O(N^2) convolutions and
/// the classical coefficient recurrences for log/exp.

#include <cstddef>
#include <vector>

#include "bernstir/rational.hpp"

namespace bernstir {

/// Truncation cap, read once from BERNSTIR_MAX_ORDER (default 256).
std::size_t max_series_order();

class Series {
public:
    /// Zero series of the given order. Throws std::length_error above the
    /// BERNSTIR_MAX_ORDER cap.
    explicit Series(std::size_t order);

    std::size_t order() const { return coeffs_.size(); }
    const Rational& coeff(std::size_t i) const { return coeffs_[i]; }
    void set_coeff(std::size_t i, const Rational& value);

    bool operator==(const Series& other) const = default;

private:
    std::vector<Rational> coeffs_;
};

Series series_add(const Series& a, const Series& b);
Series series_sub(const Series& a, const Series& b);
Series series_scale(const Rational& c, const Series& a);
Series series_mul(const Series& a, const Series& b);

/// Throws DivisionByZeroConstantTerm when b has zero constant term.
Series series_div(const Series& a, const Series& b);

/// Requires constant term 1; throws ConstantTermNotOne.
Series series_log(const Series& a);

/// Requires constant term 0; throws NonzeroConstantTerm.
Series series_exp(const Series& a);

/// a^alpha = exp(alpha * log(a)) for a unit series (constant term 1).
Series series_pow(const Series& a, const Rational& alpha);

/// n! * [t^n] a. Throws OrderExceeded when n >= a.order().
Rational egf_coeff(const Series& a, std::size_t n);

/// Common building blocks, all at the given order.
Series series_one(std::size_t order);
Series series_t(std::size_t order);

/// exp(c*t)
Series series_exp_ct(const Rational& c, std::size_t order);

/// (exp(t)-1)/t : coefficients 1/(i+1)!
Series series_expm1_over_t(std::size_t order);

/// log(1+t)/t : coefficients (-1)^i/(i+1)
Series series_log1p_over_t(std::size_t order);

/// 1 + c*t
Series series_one_plus_ct(const Rational& c, std::size_t order);

}  // namespace bernstir
