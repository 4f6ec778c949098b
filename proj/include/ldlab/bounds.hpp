#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "ldlab/core/json_io.hpp"
#include "ldlab/core/quantities.hpp"

namespace ldlab {

enum class BoundName {
    LdSingleton,
    LdRefined,
    LdLinearDim,
    LrSingleton,
    DistanceLinear,
};

const char* bound_name_str(BoundName name);

struct BoundParams {
    std::uint32_t q = 2;
    std::size_t n = 1;
    std::size_t t = 0;
    std::size_t L = 1;
    std::size_t ell = 1;
};

/// One evaluated bound. `value` is present iff `applicable`.
struct BoundReport {
    BoundName name = BoundName::LdSingleton;
    BoundParams params;
    bool applicable = false;
    std::string reason;             // why not applicable (empty otherwise)
    std::optional<BigInt> value;    // integer bound on |C|, or on k / d where that is the quantity
    std::optional<Rational> exact;  // exact rational value when it is not an integer
    std::map<std::string, Rational> aux;
    bool improves_on_singleton = false;  // refined bound only
};

Json rational_to_json(const Rational& r);
Json bigint_to_json(const BigInt& v);
Json bound_report_to_json(const BoundReport& r);

/// L * q^(n - floor((L+1)t/L)). Requires t(L+1) < nL.
BigInt bound_ld_singleton(std::uint32_t q, std::size_t n, std::size_t t, std::size_t L);
BoundReport bound_ld_singleton_report(std::uint32_t q, std::size_t n, std::size_t t, std::size_t L);

/// max{q + floor(f q), L} * q^(n-m) with b = t mod L, m = floor((L+1)t/L) + 1,
/// f = (L-b-1) / (2m - (L-b-1)). Applicable when floor(t/L) + 1 >= L.
/// Throws ParameterError outside the regime t(L+1) < nL.
BoundReport bound_ld_refined(std::uint32_t q, std::size_t n, std::size_t t, std::size_t L);

/// Dimension cap k <= n - ceil((L+1)t/L) for linear codes, applicable when
/// (n - ceil((L+1)t/L) + 1)(q-1) > (L-1)q, q is a prime power and L >= 2.
BoundReport bound_ld_linear_dim(std::uint32_t q, std::size_t n, std::size_t t, std::size_t L);

struct LrSingleton {
    Rational exact;  // L (q/ell)^e
    BigInt ceil;
    BigInt floor;  // |C| is an integer, so this is the usable bound
    std::size_t exponent = 0;
};

/// L * (q/ell)^(n - floor((L+1)t/(L+1-ell))). Requires ell <= L and
/// t(L+1) < n(L+1-ell).
LrSingleton bound_lr_singleton(std::uint32_t q, std::size_t n, std::size_t t, std::size_t ell, std::size_t L);
BoundReport bound_lr_singleton_report(std::uint32_t q, std::size_t n, std::size_t t, std::size_t ell, std::size_t L);

struct ListSizeLowerBound {
    Rational asymptotic;
    std::optional<std::size_t> finite_n;  // least L meeting the finite-n inequality, if any up to the scan cap
    std::size_t t = 0;
};

/// Lower bounds on L for codes of rate 1 - r - eps. r n must be an integer.
ListSizeLowerBound list_size_lb_ld(std::uint32_t q, std::size_t n, const Rational& r, const Rational& eps,
                                   std::size_t max_L = 100000);
ListSizeLowerBound list_size_lb_lr(std::uint32_t q, std::size_t n, const Rational& r, std::size_t ell,
                                   const Rational& eps, std::size_t max_L = 100000);

/// Exclusive lower bound t + floor(ell t / (L+1-ell)) on the distance of a
/// (t, ell, L) list-recoverable linear code of dimension >= 2.
std::size_t distance_lb_linear(std::size_t t, std::size_t ell, std::size_t L);
BoundReport distance_lb_linear_report(std::size_t n, std::size_t t, std::size_t ell, std::size_t L);

struct SubcodeGuarantee {
    std::size_t m = 0;
    std::size_t min_distance = 0;
    Rational removed_fraction_cap;  // L C(n, n-m) / q
    Rational min_size_fraction;     // max(0, 1 - removed_fraction_cap)
    BigInt q_threshold;             // least q with min_size_fraction >= gamma
};

/// Requires (L-1)(eps+1) <= floor(t/L), m <= n and 0 <= gamma < 1.
SubcodeGuarantee subcode_guarantee(std::size_t t, std::size_t L, std::size_t eps, std::size_t n, std::uint32_t q,
                                   const Rational& gamma);

/// 1 - h_q(r) for r in [0, 1 - 1/q].
double capacity_ld(std::uint32_t q, const Rational& r);
/// 1 - h_{q/ell}(r) - log_q(ell) for r in [0, 1 - ell/q].
double capacity_lr(std::uint32_t q, const Rational& r, std::size_t ell);

/// Integer t = r n, or ParameterError when r n is not an integer.
std::size_t radius_from_rate(const Rational& r, std::size_t n);

}  // namespace ldlab
