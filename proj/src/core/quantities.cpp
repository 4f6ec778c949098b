#include "ldlab/core/quantities.hpp"

#include <cmath>

#include "ldlab/errors.hpp"

namespace ldlab {

BigInt binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    BigInt r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

BigInt ipow(const BigInt& base, std::uint64_t exp) {
    BigInt result = 1, b = base;
    while (exp > 0) {
        if (exp & 1) result *= b;
        exp >>= 1;
        if (exp) b *= b;
    }
    return result;
}

Rational rpow(const Rational& base, std::uint64_t exp) {
    return Rational(ipow(numerator(base), exp), ipow(denominator(base), exp));
}

BigInt floor_of(const Rational& r) {
    BigInt num = numerator(r), den = denominator(r);  // den > 0
    BigInt q = num / den;
    if (num < 0 && q * den != num) q -= 1;
    return q;
}

BigInt ceil_of(const Rational& r) {
    BigInt f = floor_of(r);
    return f * denominator(r) == numerator(r) ? f : f + 1;
}

BigInt ball_volume(std::uint32_t q, std::size_t n, std::size_t t) {
    if (t > n) throw ParameterError("ball radius exceeds length");
    BigInt total = 0;
    for (std::size_t i = 0; i <= t; ++i) total += binomial(n, i) * ipow(BigInt(q - 1), i);
    return total;
}

long double to_long_double(const Rational& r) {
    return numerator(r).convert_to<long double>() / denominator(r).convert_to<long double>();
}

long double log_base(long double base, const Rational& x) {
    return std::log(to_long_double(x)) / std::log(base);
}

double entropy_q(double q, const Rational& x) {
    if (x < 0 || x > 1) throw ParameterError("entropy argument outside [0, 1]");
    if (q <= 1.0) throw ParameterError("entropy base must exceed 1");
    const long double lq = std::log(static_cast<long double>(q));
    const long double xv = to_long_double(x);
    long double h = 0;
    if (xv > 0) h += xv * std::log(static_cast<long double>(q) - 1) / lq - xv * std::log(xv) / lq;
    if (xv < 1) h -= (1 - xv) * std::log(1 - xv) / lq;
    return static_cast<double>(h);
}

}  // namespace ldlab
