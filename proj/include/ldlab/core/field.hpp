#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "ldlab/core/word.hpp"

namespace ldlab {

/// Finite field F_q. Prime fields use modular arithmetic directly; extension
/// fields (q = p^m, m > 1) use precomputed tables built from a fixed monic
/// irreducible polynomial. An element of an extension field is encoded as the
/// integer whose base-p digits are its polynomial coefficients (digit i is the
/// coefficient of x^i).
class Field {
  public:
    /// Builds F_q with the canonical modulus; throws ParameterError for an
    /// unsupported q.
    explicit Field(std::uint32_t q);

    /// Builds F_q from an explicit modulus: {p} for prime q, or the
    /// coefficient list (lowest degree first, leading 1 included) otherwise.
    Field(std::uint32_t q, const std::vector<std::uint32_t>& modulus);

    static bool is_supported(std::uint32_t q);

    std::uint32_t q() const { return q_; }
    std::uint32_t characteristic() const { return p_; }
    std::uint32_t degree() const { return degree_; }
    bool is_prime() const { return degree_ == 1; }

    /// {p} for prime fields, the polynomial coefficients otherwise.
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }

    Symbol add(Symbol a, Symbol b) const;
    Symbol sub(Symbol a, Symbol b) const;
    Symbol neg(Symbol a) const;
    Symbol mul(Symbol a, Symbol b) const;
    Symbol inv(Symbol a) const;  // throws ParameterError on 0
    Symbol div(Symbol a, Symbol b) const { return mul(a, inv(b)); }
    Symbol pow(Symbol a, std::uint64_t e) const;

    friend bool operator==(const Field& a, const Field& b) { return a.q_ == b.q_ && a.modulus_ == b.modulus_; }

  private:
    void build_tables();

    std::uint32_t q_;
    std::uint32_t p_;
    std::uint32_t degree_;
    std::vector<std::uint32_t> modulus_;
    // Extension fields only; shared so copies stay cheap.
    std::shared_ptr<const std::vector<Symbol>> add_table_;
    std::shared_ptr<const std::vector<Symbol>> mul_table_;
    std::shared_ptr<const std::vector<Symbol>> inv_table_;
};

bool is_prime(std::uint32_t x);

}  // namespace ldlab
