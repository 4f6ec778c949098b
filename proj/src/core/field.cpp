#include "ldlab/core/field.hpp"

#include <map>
#include <string>

#include "ldlab/errors.hpp"

namespace ldlab {

bool is_prime(std::uint32_t x) {
    if (x < 2) return false;
    for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= x; ++d) {
        if (x % d == 0) return false;
    }
    return true;
}

namespace {

constexpr std::uint32_t kMaxPrime = 1u << 16;

// One fixed monic irreducible polynomial per supported extension field,
// coefficients lowest degree first.
const std::map<std::uint32_t, std::vector<std::uint32_t>>& canonical_moduli() {
    static const std::map<std::uint32_t, std::vector<std::uint32_t>> table = {
        {4, {1, 1, 1}},                      // x^2 + x + 1
        {8, {1, 1, 0, 1}},                   // x^3 + x + 1
        {16, {1, 1, 0, 0, 1}},               // x^4 + x + 1
        {32, {1, 0, 1, 0, 0, 1}},            // x^5 + x^2 + 1
        {64, {1, 1, 0, 0, 0, 0, 1}},         // x^6 + x + 1
        {128, {1, 1, 0, 0, 0, 0, 0, 1}},     // x^7 + x + 1
        {9, {2, 2, 1}},                      // x^2 + 2x + 2
        {27, {1, 2, 0, 1}},                  // x^3 + 2x + 1
        {81, {2, 0, 0, 2, 1}},               // x^4 + 2x^3 + 2
        {25, {2, 4, 1}},                     // x^2 + 4x + 2
        {125, {3, 3, 0, 1}},                 // x^3 + 3x + 3
        {49, {3, 6, 1}},                     // x^2 + 6x + 3
        {121, {2, 7, 1}},                    // x^2 + 7x + 2
    };
    return table;
}

// Returns (p, m) with q = p^m, or (0, 0) if q is not a prime power.
std::pair<std::uint32_t, std::uint32_t> factor_prime_power(std::uint32_t q) {
    if (q < 2) return {0, 0};
    std::uint32_t p = 0;
    for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= q; ++d) {
        if (q % d == 0) {
            p = d;
            break;
        }
    }
    if (p == 0) return {q, 1};
    std::uint32_t m = 0;
    while (q % p == 0) {
        q /= p;
        ++m;
    }
    return q == 1 ? std::pair{p, m} : std::pair{0u, 0u};
}

}  // namespace

bool Field::is_supported(std::uint32_t q) {
    if (ldlab::is_prime(q)) return q <= kMaxPrime;
    return canonical_moduli().contains(q);
}

Field::Field(std::uint32_t q) : Field(q, ldlab::is_prime(q) ? std::vector<std::uint32_t>{q} : [&] {
                                         auto it = canonical_moduli().find(q);
                                         if (it == canonical_moduli().end()) {
                                             throw ParameterError("unsupported field size q=" + std::to_string(q));
                                         }
                                         return it->second;
                                     }()) {}

Field::Field(std::uint32_t q, const std::vector<std::uint32_t>& modulus) : q_(q) {
    auto [p, m] = factor_prime_power(q);
    if (p == 0) throw ParameterError("q=" + std::to_string(q) + " is not a prime power");
    if (!is_supported(q)) throw ParameterError("unsupported field size q=" + std::to_string(q));
    p_ = p;
    degree_ = m;
    if (m == 1) {
        if (modulus != std::vector<std::uint32_t>{q}) {
            throw ParameterError("prime field modulus must be the prime itself");
        }
        modulus_ = modulus;
        return;
    }
    if (modulus.size() != m + 1 || modulus.back() != 1) {
        throw ParameterError("modulus for q=" + std::to_string(q) + " must be a monic polynomial of degree " +
                             std::to_string(m));
    }
    for (auto c : modulus) {
        if (c >= p) throw ParameterError("modulus coefficient out of range for characteristic " + std::to_string(p));
    }
    modulus_ = modulus;
    build_tables();
}

void Field::build_tables() {
    const std::uint32_t q = q_, p = p_, m = degree_;
    auto digits = [&](Symbol a) {
        std::vector<std::uint32_t> d(m);
        for (std::uint32_t i = 0; i < m; ++i) {
            d[i] = a % p;
            a /= p;
        }
        return d;
    };
    auto encode = [&](const std::vector<std::uint32_t>& d) {
        Symbol a = 0;
        for (std::uint32_t i = m; i-- > 0;) a = a * p + d[i];
        return a;
    };

    auto add = std::make_shared<std::vector<Symbol>>(static_cast<std::size_t>(q) * q);
    auto mul = std::make_shared<std::vector<Symbol>>(static_cast<std::size_t>(q) * q);
    auto inv = std::make_shared<std::vector<Symbol>>(q, 0);

    std::vector<std::vector<std::uint32_t>> dig(q);
    for (Symbol a = 0; a < q; ++a) dig[a] = digits(a);

    for (Symbol a = 0; a < q; ++a) {
        for (Symbol b = 0; b < q; ++b) {
            std::vector<std::uint32_t> s(m);
            for (std::uint32_t i = 0; i < m; ++i) s[i] = (dig[a][i] + dig[b][i]) % p;
            (*add)[a * q + b] = encode(s);

            std::vector<std::uint32_t> prod(2 * m - 1, 0);
            for (std::uint32_t i = 0; i < m; ++i) {
                for (std::uint32_t j = 0; j < m; ++j) prod[i + j] = (prod[i + j] + dig[a][i] * dig[b][j]) % p;
            }
            // Reduce modulo the monic modulus, highest degree first.
            for (std::uint32_t deg = 2 * m - 1; deg-- > m;) {
                std::uint32_t c = prod[deg];
                if (c == 0) continue;
                for (std::uint32_t i = 0; i <= m; ++i) {
                    std::uint32_t idx = deg - m + i;
                    prod[idx] = (prod[idx] + (p - c) * modulus_[i]) % p;
                }
            }
            prod.resize(m);
            (*mul)[a * q + b] = encode(prod);
        }
    }
    for (Symbol a = 1; a < q; ++a) {
        for (Symbol b = 1; b < q; ++b) {
            if ((*mul)[a * q + b] == 1) {
                (*inv)[a] = b;
                break;
            }
        }
        if ((*inv)[a] == 0) throw ParameterError("modulus is not irreducible: element without inverse");
    }
    add_table_ = std::move(add);
    mul_table_ = std::move(mul);
    inv_table_ = std::move(inv);
}

Symbol Field::add(Symbol a, Symbol b) const {
    if (is_prime()) {
        std::uint32_t s = a + b;
        return s >= q_ ? s - q_ : s;
    }
    return (*add_table_)[a * q_ + b];
}

Symbol Field::neg(Symbol a) const {
    if (is_prime()) return a == 0 ? 0 : q_ - a;
    // Additive inverse digit-wise.
    Symbol r = 0, scale = 1;
    while (a > 0) {
        std::uint32_t d = a % p_;
        r += ((p_ - d) % p_) * scale;
        a /= p_;
        scale *= p_;
    }
    return r;
}

Symbol Field::sub(Symbol a, Symbol b) const { return add(a, neg(b)); }

Symbol Field::mul(Symbol a, Symbol b) const {
    if (is_prime()) return static_cast<Symbol>((static_cast<std::uint64_t>(a) * b) % q_);
    return (*mul_table_)[a * q_ + b];
}

Symbol Field::pow(Symbol a, std::uint64_t e) const {
    Symbol result = 1, base = a;
    while (e > 0) {
        if (e & 1) result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

Symbol Field::inv(Symbol a) const {
    if (a == 0) throw ParameterError("zero has no multiplicative inverse");
    if (is_prime()) return pow(a, q_ - 2);
    return (*inv_table_)[a];
}

}  // namespace ldlab
