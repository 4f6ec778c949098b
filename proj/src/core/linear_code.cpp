#include "ldlab/core/linear_code.hpp"

#include <algorithm>
#include <string>

#include "ldlab/errors.hpp"

namespace ldlab {

EchelonForm row_reduce(const Field& field, Matrix m) {
    EchelonForm out;
    if (m.empty()) return out;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = r;
        while (pivot < rows && m[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[r], m[pivot]);
        const Symbol scale = field.inv(m[r][c]);
        for (auto& x : m[r]) x = field.mul(x, scale);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            const Symbol f = m[i][c];
            for (std::size_t j = 0; j < cols; ++j) m[i][j] = field.sub(m[i][j], field.mul(f, m[r][j]));
        }
        out.pivots.push_back(c);
        ++r;
    }
    m.resize(r);
    out.reduced = std::move(m);
    return out;
}

bool is_invertible(const Field& field, const Matrix& m) {
    if (m.empty()) return true;
    if (m.size() != m[0].size()) return false;
    return row_reduce(field, m).rank() == m.size();
}

Matrix invert(const Field& field, const Matrix& m) {
    const std::size_t k = m.size();
    for (const auto& row : m) {
        if (row.size() != k) throw ParameterError("matrix is not square");
    }
    Matrix aug(k, std::vector<Symbol>(2 * k, 0));
    for (std::size_t i = 0; i < k; ++i) {
        std::copy(m[i].begin(), m[i].end(), aug[i].begin());
        aug[i][k + i] = 1;
    }
    auto ef = row_reduce(field, std::move(aug));
    if (ef.rank() < k || (k > 0 && ef.pivots[k - 1] >= k)) throw ParameterError("matrix is singular");
    Matrix inv(k);
    for (std::size_t i = 0; i < k; ++i) inv[i].assign(ef.reduced[i].begin() + k, ef.reduced[i].end());
    return inv;
}

Matrix select_columns(const Matrix& m, const std::vector<std::size_t>& cols) {
    Matrix out(m.size(), std::vector<Symbol>(cols.size()));
    for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t j = 0; j < cols.size(); ++j) out[i][j] = m[i].at(cols[j]);
    }
    return out;
}

Matrix multiply(const Field& field, const Matrix& a, const Matrix& b) {
    if (a.empty()) return {};
    const std::size_t inner = b.size();
    const std::size_t cols = inner == 0 ? 0 : b[0].size();
    Matrix out(a.size(), std::vector<Symbol>(cols, 0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].size() != inner) throw ParameterError("matrix dimensions do not match");
        for (std::size_t l = 0; l < inner; ++l) {
            if (a[i][l] == 0) continue;
            for (std::size_t j = 0; j < cols; ++j) out[i][j] = field.add(out[i][j], field.mul(a[i][l], b[l][j]));
        }
    }
    return out;
}

LinearCode::LinearCode(Field field, std::size_t n, Matrix generator)
    : field_(std::move(field)), n_(n), generator_(std::move(generator)) {
    for (const auto& row : generator_) {
        if (row.size() != n_) throw ParameterError("generator row length differs from n");
        for (auto x : row) {
            if (x >= field_.q()) throw ParameterError("generator entry out of field range");
        }
    }
    if (generator_.size() > n_) throw ParameterError("dimension exceeds length");
    if (row_reduce(field_, generator_).rank() != generator_.size()) {
        throw ParameterError("generator matrix is not full rank");
    }
}

Word LinearCode::encode(const std::vector<Symbol>& message) const {
    if (message.size() != k()) throw ParameterError("message length differs from dimension");
    std::vector<Symbol> out(n_, 0);
    for (std::size_t i = 0; i < message.size(); ++i) {
        if (message[i] == 0) continue;
        for (std::size_t j = 0; j < n_; ++j) out[j] = field_.add(out[j], field_.mul(message[i], generator_[i][j]));
    }
    return Word(q(), std::move(out));
}

std::uint64_t LinearCode::size_or_zero() const {
    std::uint64_t s = 1;
    for (std::size_t i = 0; i < k(); ++i) {
        if (s > (~0ull) / q()) return 0;
        s *= q();
    }
    return s;
}

Code LinearCode::expand(std::uint64_t budget) const {
    const std::uint64_t size = size_or_zero();
    if (size == 0 || size > budget) {
        throw BudgetExceeded("expansion of a q^k = " + std::to_string(q()) + "^" + std::to_string(k()) +
                             " code exceeds budget " + std::to_string(budget));
    }
    std::vector<Word> words;
    words.reserve(size);
    std::vector<Symbol> message(k(), 0);
    // Running codeword updated incrementally as the message counts up.
    std::vector<Symbol> current(n_, 0);
    for (std::uint64_t idx = 0; idx < size; ++idx) {
        words.emplace_back(q(), current);
        // Increment the message, last digit least significant.
        for (std::size_t pos = k(); pos-- > 0;) {
            if (message[pos] + 1 < q()) {
                const Symbol from = message[pos];
                const Symbol to = from + 1;
                const Symbol delta = field_.sub(to, from);
                for (std::size_t j = 0; j < n_; ++j) current[j] = field_.add(current[j], field_.mul(delta, generator_[pos][j]));
                message[pos] = to;
                break;
            }
            // Wrap this digit back to zero.
            const Symbol from = message[pos];
            const Symbol delta = field_.neg(from);
            for (std::size_t j = 0; j < n_; ++j) current[j] = field_.add(current[j], field_.mul(delta, generator_[pos][j]));
            message[pos] = 0;
        }
    }
    return Code(q(), n_, std::move(words));
}

LinearCode rs_code(const Field& field, std::size_t n, std::size_t k, const std::vector<Symbol>& alpha) {
    if (k > n) throw ParameterError("RS dimension exceeds length");
    if (n > field.q()) throw ParameterError("RS length exceeds field size");
    if (alpha.size() != n) throw ParameterError("evaluation vector length differs from n");
    for (std::size_t i = 0; i < n; ++i) {
        if (alpha[i] >= field.q()) throw ParameterError("evaluation point out of field range");
        for (std::size_t j = 0; j < i; ++j) {
            if (alpha[i] == alpha[j]) throw ParameterError("repeated evaluation point");
        }
    }
    Matrix g(k, std::vector<Symbol>(n));
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < n; ++j) g[i][j] = field.pow(alpha[j], i);
    }
    return LinearCode(field, n, std::move(g));
}

std::vector<std::size_t> find_information_set(const LinearCode& code) {
    auto ef = row_reduce(code.field(), code.generator());
    if (ef.rank() != code.k()) throw ParameterError("generator matrix is rank deficient");
    return ef.pivots;
}

}  // namespace ldlab
