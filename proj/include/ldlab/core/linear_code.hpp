#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "ldlab/core/field.hpp"
#include "ldlab/core/word.hpp"

namespace ldlab {

using Matrix = std::vector<std::vector<Symbol>>;

struct EchelonForm {
    Matrix reduced;                   // reduced row echelon form, zero rows dropped
    std::vector<std::size_t> pivots;  // pivot column of each row, ascending
    std::size_t rank() const { return pivots.size(); }
};

/// Gauss-Jordan elimination over the field; pivots are the leftmost possible columns.
EchelonForm row_reduce(const Field& field, Matrix m);

/// Inverse of a square matrix; throws ParameterError when singular.
Matrix invert(const Field& field, const Matrix& m);

bool is_invertible(const Field& field, const Matrix& m);

/// Columns `cols` of `m`, in the given order.
Matrix select_columns(const Matrix& m, const std::vector<std::size_t>& cols);

Matrix multiply(const Field& field, const Matrix& a, const Matrix& b);

constexpr std::uint64_t kDefaultExpansionBudget = 1ull << 20;

/// An [n, k]_q code given by a full-rank k x n generator matrix.
class LinearCode {
  public:
    LinearCode(Field field, std::size_t n, Matrix generator);

    const Field& field() const { return field_; }
    std::uint32_t q() const { return field_.q(); }
    std::size_t n() const { return n_; }
    std::size_t k() const { return generator_.size(); }
    const Matrix& generator() const { return generator_; }

    /// m . G for a length-k message.
    Word encode(const std::vector<Symbol>& message) const;

    /// All q^k codewords, messages in lexicographic order (zero codeword first).
    /// Throws BudgetExceeded when q^k exceeds `budget`.
    Code expand(std::uint64_t budget = kDefaultExpansionBudget) const;

    /// Number of codewords as a 64-bit value, or 0 if it overflows.
    std::uint64_t size_or_zero() const;

  private:
    Field field_;
    std::size_t n_;
    Matrix generator_;
};

/// Reed-Solomon code: evaluations of polynomials of degree < k at alpha.
LinearCode rs_code(const Field& field, std::size_t n, std::size_t k, const std::vector<Symbol>& alpha);

/// k coordinates on which the generator restricts to an invertible matrix:
/// the pivot columns of the reduced row echelon form.
std::vector<std::size_t> find_information_set(const LinearCode& code);

}  // namespace ldlab
