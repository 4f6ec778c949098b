#pragma once

#include <cstddef>
#include <cstdint>

#include <boost/multiprecision/cpp_int.hpp>

namespace ldlab {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

BigInt binomial(std::uint64_t n, std::uint64_t k);
BigInt ipow(const BigInt& base, std::uint64_t exp);
Rational rpow(const Rational& base, std::uint64_t exp);

BigInt floor_of(const Rational& r);
BigInt ceil_of(const Rational& r);

/// Number of words within Hamming distance t of a fixed word in [q]^n.
BigInt ball_volume(std::uint32_t q, std::size_t n, std::size_t t);

/// q-ary entropy h_q(x) with 0 log 0 = 0. Real-valued base q >= 2 is allowed
/// (list-recovery capacity evaluates h at q/ell).
double entropy_q(double q, const Rational& x);

/// log base `base` of a rational, in long double.
long double log_base(long double base, const Rational& x);

long double to_long_double(const Rational& r);

}  // namespace ldlab
