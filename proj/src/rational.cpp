#include "bernstir/rational.hpp"

#include <cctype>

namespace bernstir {

std::optional<Rational> parse_rational(const std::string& text) {
    auto digits = [](const std::string& s) {
        if (s.empty()) return false;
        std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
        return true;
    };
    std::string num = text, den = "1";
    if (auto slash = text.find('/'); slash != std::string::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
        if (!den.empty() && den[0] == '+') den = den.substr(1);
        // keep the denominator unsigned; sign belongs on the numerator
        if (den.empty() || den[0] == '-') return std::nullopt;
    }
    if (!digits(num) || !digits(den)) return std::nullopt;
    Int n(num), d(den);
    if (d == 0) return std::nullopt;
    return rat(n, d);
}

std::string to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Int factorial(unsigned long n) {
    Int f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

Int binom_int(unsigned long n, unsigned long k) {
    if (k > n) return 0;
    Int b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return b;
}

Rational binom_rat(const Rational& x, unsigned long k) {
    return falling(x, k) / factorial(k);
}

Rational falling(const Rational& x, unsigned long n) {
    Rational p = 1;
    for (unsigned long i = 0; i < n; ++i) p *= x - rat(static_cast<long>(i));
    return p;
}

Rational rising(const Rational& x, unsigned long n) {
    Rational p = 1;
    for (unsigned long i = 0; i < n; ++i) p *= x + rat(static_cast<long>(i));
    return p;
}

Int pow_int(const Int& base, unsigned long exp) {
    Int p;
    mpz_pow_ui(p.get_mpz_t(), base.get_mpz_t(), exp);
    return p;
}

}  // namespace bernstir
