#include "ldlab/core/word.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "ldlab/errors.hpp"

namespace ldlab {

Word::Word(std::uint32_t q, std::vector<Symbol> symbols) : q_(q), symbols_(std::move(symbols)) {
    if (q_ < 2) throw ParameterError("alphabet size must be at least 2");
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
        if (symbols_[i] >= q_) {
            throw ParameterError("symbol " + std::to_string(symbols_[i]) + " at position " + std::to_string(i) +
                                 " is not below q=" + std::to_string(q_));
        }
    }
}

Word::Word(std::uint32_t q, std::initializer_list<Symbol> symbols) : Word(q, std::vector<Symbol>(symbols)) {}

Word Word::zeros(std::uint32_t q, std::size_t n) { return Word(q, std::vector<Symbol>(n, 0)); }

Code::Code(std::uint32_t q, std::size_t n) : q_(q), n_(n) {
    if (q_ < 2) throw ParameterError("alphabet size must be at least 2");
}

Code::Code(std::uint32_t q, std::size_t n, std::vector<Word> words) : Code(q, n) {
    for (const auto& w : words) {
        if (w.q() != q_ || w.n() != n_) {
            throw ParameterError("word with (q,n)=(" + std::to_string(w.q()) + "," + std::to_string(w.n()) +
                                 ") does not match code (" + std::to_string(q_) + "," + std::to_string(n_) + ")");
        }
    }
    sorted_ = words;
    std::sort(sorted_.begin(), sorted_.end());
    if (std::adjacent_find(sorted_.begin(), sorted_.end()) != sorted_.end()) {
        throw ParameterError("duplicate word in code");
    }
    words_ = std::move(words);
}

void Code::insert(Word w) {
    if (w.q() != q_ || w.n() != n_) {
        throw ParameterError("word with (q,n)=(" + std::to_string(w.q()) + "," + std::to_string(w.n()) +
                             ") does not match code (" + std::to_string(q_) + "," + std::to_string(n_) + ")");
    }
    auto it = std::lower_bound(sorted_.begin(), sorted_.end(), w);
    if (it != sorted_.end() && *it == w) throw ParameterError("duplicate word in code");
    sorted_.insert(it, w);
    words_.push_back(std::move(w));
}

bool Code::contains(const Word& w) const { return std::binary_search(sorted_.begin(), sorted_.end(), w); }

namespace {

void require_same_shape(const Word& x, const Word& y) {
    if (x.q() != y.q() || x.n() != y.n()) throw ParameterError("words have different (q, n)");
}

}  // namespace

std::size_t hamming_distance(const Word& x, const Word& y) {
    require_same_shape(x, y);
    std::size_t d = 0;
    for (std::size_t i = 0; i < x.n(); ++i) d += x[i] != y[i];
    return d;
}

Agreement agreement(const Word& x, const Word& y) {
    require_same_shape(x, y);
    Agreement a;
    for (std::size_t i = 0; i < x.n(); ++i) {
        if (x[i] == y[i]) a.indices.push_back(i);
    }
    a.count = a.indices.size();
    return a;
}

std::size_t agreement_count(const Word& x, const Word& y) { return x.n() - hamming_distance(x, y); }

std::size_t min_distance(const Code& code) {
    if (code.size() < 2) throw PreconditionError("minimum distance is undefined for codes with fewer than 2 words");
    std::size_t best = std::numeric_limits<std::size_t>::max();
    for (std::size_t i = 0; i < code.size(); ++i) {
        for (std::size_t j = i + 1; j < code.size(); ++j) best = std::min(best, hamming_distance(code[i], code[j]));
    }
    return best;
}

}  // namespace ldlab
