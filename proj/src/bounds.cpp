#include "ldlab/bounds.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "ldlab/core/field.hpp"
#include "ldlab/errors.hpp"

namespace ldlab {

namespace {

std::string str(std::size_t v) { return std::to_string(v); }

void require_ld_regime(std::size_t n, std::size_t t, std::size_t L) {
    if (L < 1) throw ParameterError("L must be at least 1");
    if (n < 1) throw ParameterError("n must be at least 1");
    if (t * (L + 1) >= n * L) {
        throw ParameterError("outside the list-decoding regime: need t(L+1) < nL, got t=" + str(t) + ", n=" + str(n) +
                             ", L=" + str(L));
    }
}

std::size_t floor_div(std::size_t a, std::size_t b) { return a / b; }
std::size_t ceil_div(std::size_t a, std::size_t b) { return (a + b - 1) / b; }

bool is_prime_power(std::uint32_t q) {
    if (q < 2) return false;
    std::uint32_t p = 2;
    while (q % p != 0) ++p;
    while (q % p == 0) q /= p;
    return q == 1;
}

// Least L >= from with X(L) <= log_q L, where X is rational.
template <typename F>
std::optional<std::size_t> scan_least(std::uint32_t q, std::size_t from, std::size_t max_L, F&& excess) {
    for (std::size_t L = from; L <= max_L; ++L) {
        const Rational x = excess(L);
        if (x <= 0) return L;
        // q^(p/s) <= L  <=>  q^p <= L^s
        const BigInt p = numerator(x), s = denominator(x);
        if (s > 64 || p > 4096) continue;  // q^p astronomically larger than L^s
        if (ipow(BigInt(q), p.convert_to<std::uint64_t>()) <= ipow(BigInt(L), s.convert_to<std::uint64_t>())) return L;
    }
    return std::nullopt;
}

}  // namespace

const char* bound_name_str(BoundName name) {
    switch (name) {
        case BoundName::LdSingleton: return "ld_singleton";
        case BoundName::LdRefined: return "ld_refined";
        case BoundName::LdLinearDim: return "ld_linear_dim";
        case BoundName::LrSingleton: return "lr_singleton";
        case BoundName::DistanceLinear: return "distance_linear";
    }
    return "unknown";
}

Json bigint_to_json(const BigInt& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
        return Json(v.convert_to<std::int64_t>());
    }
    return Json(v.str());
}

Json rational_to_json(const Rational& r) {
    if (denominator(r) == 1) return bigint_to_json(numerator(r));
    return Json(numerator(r).str() + "/" + denominator(r).str());
}

Json bound_report_to_json(const BoundReport& r) {
    Json j;
    j["bound"] = bound_name_str(r.name);
    j["params"] = Json{{"q", r.params.q}, {"n", r.params.n}, {"t", r.params.t}, {"L", r.params.L}, {"ell", r.params.ell}};
    j["applicable"] = r.applicable;
    if (!r.reason.empty()) j["reason"] = r.reason;
    if (r.value) j["value"] = bigint_to_json(*r.value);
    if (r.exact) j["exact"] = rational_to_json(*r.exact);
    Json aux = Json::object();
    for (const auto& [k, v] : r.aux) aux[k] = rational_to_json(v);
    j["aux"] = std::move(aux);
    if (r.name == BoundName::LdRefined) j["improves_on_singleton"] = r.improves_on_singleton;
    return j;
}

BigInt bound_ld_singleton(std::uint32_t q, std::size_t n, std::size_t t, std::size_t L) {
    require_ld_regime(n, t, L);
    return BigInt(L) * ipow(BigInt(q), n - floor_div((L + 1) * t, L));
}

BoundReport bound_ld_singleton_report(std::uint32_t q, std::size_t n, std::size_t t, std::size_t L) {
    BoundReport r;
    r.name = BoundName::LdSingleton;
    r.params = {q, n, t, L, 1};
    r.value = bound_ld_singleton(q, n, t, L);
    r.applicable = true;
    r.aux["floor_(L+1)t/L"] = Rational(floor_div((L + 1) * t, L));
    return r;
}

BoundReport bound_ld_refined(std::uint32_t q, std::size_t n, std::size_t t, std::size_t L) {
    require_ld_regime(n, t, L);
    BoundReport r;
    r.name = BoundName::LdRefined;
    r.params = {q, n, t, L, 1};
    const std::size_t a = t / L, b = t % L;
    const std::size_t m = floor_div((L + 1) * t, L) + 1;
    const std::size_t num = L - b - 1;
    const Rational f(num, 2 * m - num);
    const BigInt head = std::max(BigInt(q) + floor_of(f * q), BigInt(L));
    r.aux["a"] = a;
    r.aux["b"] = b;
    r.aux["m_ld"] = m;
    r.aux["f"] = f;
    r.aux["M"] = Rational(head + 1);
    if (a + 1 < L) {
        r.applicable = false;
        r.reason = "requires floor(t/L) + 1 >= L, got " + str(a + 1) + " < " + str(L);
        return r;
    }
    r.applicable = true;
    r.value = head * ipow(BigInt(q), n - m);
    r.improves_on_singleton = *r.value < bound_ld_singleton(q, n, t, L);
    return r;
}

BoundReport bound_ld_linear_dim(std::uint32_t q, std::size_t n, std::size_t t, std::size_t L) {
    require_ld_regime(n, t, L);
    BoundReport r;
    r.name = BoundName::LdLinearDim;
    r.params = {q, n, t, L, 1};
    const std::size_t c = ceil_div((L + 1) * t, L);
    const std::size_t k_max = n - c;
    r.aux["ceil_(L+1)t/L"] = c;
    r.aux["k_max"] = k_max;
    if (!is_prime_power(q)) {
        r.reason = "q is not a prime power";
        return r;
    }
    if (L < 2) {
        r.reason = "requires L >= 2";
        return r;
    }
    const BigInt lhs = BigInt(k_max + 1) * (q - 1), rhs = BigInt(L - 1) * q;
    if (lhs <= rhs) {
        r.reason = "hypothesis (n - ceil((L+1)t/L) + 1)(q-1) > (L-1)q fails: " + lhs.str() + " <= " + rhs.str();
        return r;
    }
    r.applicable = true;
    r.value = BigInt(k_max);
    return r;
}

LrSingleton bound_lr_singleton(std::uint32_t q, std::size_t n, std::size_t t, std::size_t ell, std::size_t L) {
    if (ell < 1 || ell > L) throw ParameterError("requires 1 <= ell <= L");
    if (n < 1) throw ParameterError("n must be at least 1");
    const std::size_t denom = L + 1 - ell;
    if (t * (L + 1) >= n * denom) {
        throw ParameterError("outside the list-recovery regime: need t(L+1) < n(L+1-ell)");
    }
    LrSingleton out;
    out.exponent = n - floor_div((L + 1) * t, denom);
    out.exact = Rational(L) * rpow(Rational(q, ell), out.exponent);
    out.ceil = ceil_of(out.exact);
    out.floor = floor_of(out.exact);
    return out;
}

BoundReport bound_lr_singleton_report(std::uint32_t q, std::size_t n, std::size_t t, std::size_t ell, std::size_t L) {
    const auto v = bound_lr_singleton(q, n, t, ell, L);
    BoundReport r;
    r.name = BoundName::LrSingleton;
    r.params = {q, n, t, L, ell};
    r.applicable = true;
    r.value = v.floor;
    r.exact = v.exact;
    r.aux["exponent"] = v.exponent;
    r.aux["ceil"] = Rational(v.ceil);
    r.aux["t_prime"] = floor_div(ell * t, L + 1 - ell);
    return r;
}

std::size_t radius_from_rate(const Rational& r, std::size_t n) {
    if (r < 0) throw ParameterError("radius fraction must be nonnegative");
    const Rational t = r * n;
    if (denominator(t) != 1) throw ParameterError("r n is not an integer");
    return numerator(t).convert_to<std::size_t>();
}

ListSizeLowerBound list_size_lb_ld(std::uint32_t q, std::size_t n, const Rational& r, const Rational& eps,
                                   std::size_t max_L) {
    if (eps <= 0) throw ParameterError("eps must be positive");
    ListSizeLowerBound out;
    out.t = radius_from_rate(r, n);
    out.asymptotic = r / eps;
    const Rational shift = (r + eps) * n;
    out.finite_n = scan_least(q, 1, max_L, [&](std::size_t L) {
        return Rational(floor_div((L + 1) * out.t, L)) - shift;
    });
    return out;
}

ListSizeLowerBound list_size_lb_lr(std::uint32_t q, std::size_t n, const Rational& r, std::size_t ell,
                                   const Rational& eps, std::size_t max_L) {
    if (eps <= 0) throw ParameterError("eps must be positive");
    if (ell < 1) throw ParameterError("ell must be at least 1");
    ListSizeLowerBound out;
    out.t = radius_from_rate(r, n);
    out.asymptotic = Rational(ell) * r / eps + ell - 1;
    out.finite_n = scan_least(q, ell, max_L, [&](std::size_t L) {
        const std::size_t d = L + 1 - ell;
        return Rational(ell * out.t, d) - eps * n - 1 - Rational(L + 1, d);
    });
    return out;
}

std::size_t distance_lb_linear(std::size_t t, std::size_t ell, std::size_t L) {
    if (ell < 1 || ell > L) throw ParameterError("requires 1 <= ell <= L");
    return t + floor_div(ell * t, L + 1 - ell);
}

BoundReport distance_lb_linear_report(std::size_t n, std::size_t t, std::size_t ell, std::size_t L) {
    BoundReport r;
    r.name = BoundName::DistanceLinear;
    r.params = {0, n, t, L, ell};
    r.applicable = true;
    r.value = BigInt(distance_lb_linear(t, ell, L));
    r.aux["t_prime"] = floor_div(ell * t, L + 1 - ell);
    return r;
}

SubcodeGuarantee subcode_guarantee(std::size_t t, std::size_t L, std::size_t eps, std::size_t n, std::uint32_t q,
                                   const Rational& gamma) {
    if (L < 1) throw ParameterError("L must be at least 1");
    if ((L - 1) * (eps + 1) > t / L) {
        throw PreconditionError("requires (L-1)(eps+1) <= floor(t/L), got " + str((L - 1) * (eps + 1)) + " > " +
                                str(t / L));
    }
    if (gamma < 0 || gamma >= 1) throw ParameterError("gamma must lie in [0, 1)");
    SubcodeGuarantee g;
    const std::size_t base = floor_div((L + 1) * t, L);
    g.m = base + eps + 1;
    if (g.m > n) throw PreconditionError("m = floor((L+1)t/L) + eps + 1 exceeds n");
    g.min_distance = base + 1 - (L - 1) * (eps + 1);
    const BigInt count = BigInt(L) * binomial(n, n - g.m);
    g.removed_fraction_cap = Rational(count, q);
    g.min_size_fraction = g.removed_fraction_cap >= 1 ? Rational(0) : Rational(1) - g.removed_fraction_cap;
    g.q_threshold = ceil_of(Rational(count) / (Rational(1) - gamma));
    return g;
}

double capacity_ld(std::uint32_t q, const Rational& r) {
    if (r < 0 || r > Rational(q - 1, q)) throw ParameterError("r outside [0, 1 - 1/q]");
    return 1.0 - entropy_q(q, r);
}

double capacity_lr(std::uint32_t q, const Rational& r, std::size_t ell) {
    if (ell < 1 || ell > q) throw ParameterError("ell must lie in [1, q]");
    if (r < 0 || r > Rational(q - ell, q)) throw ParameterError("r outside [0, 1 - ell/q]");
    const double base = static_cast<double>(q) / static_cast<double>(ell);
    const double h = ell == q ? 0.0 : entropy_q(base, r);
    return 1.0 - h - std::log(static_cast<double>(ell)) / std::log(static_cast<double>(q));
}

}  // namespace ldlab
