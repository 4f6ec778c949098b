#pragma once

#include <vector>

#include "ldlab/core/linear_code.hpp"
#include "ldlab/core/rng.hpp"
#include "ldlab/core/word.hpp"

namespace ldlab::testing {

inline Word random_word(Rng& rng, std::uint32_t q, std::size_t n) {
    std::vector<Symbol> s(n);
    for (auto& x : s) x = static_cast<Symbol>(rng.below(q));
    return Word(q, std::move(s));
}

inline Code full_space(std::uint32_t q, std::size_t n) {
    Code c(q, n);
    std::vector<Symbol> y(n, 0);
    while (true) {
        c.insert(Word(q, y));
        std::size_t pos = n;
        while (pos > 0 && y[pos - 1] + 1 == q) y[--pos] = 0;
        if (pos == 0) break;
        ++y[pos - 1];
    }
    return c;
}

inline Matrix random_full_rank(Rng& rng, const Field& f, std::size_t k, std::size_t n) {
    while (true) {
        Matrix g(k, std::vector<Symbol>(n));
        for (auto& row : g)
            for (auto& x : row) x = static_cast<Symbol>(rng.below(f.q()));
        if (row_reduce(f, g).rank() == k) return g;
    }
}

}  // namespace ldlab::testing
