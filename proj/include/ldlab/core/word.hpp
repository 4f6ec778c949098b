#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace ldlab {

using Symbol = std::uint32_t;

/// A vector in [q]^n. Symbols are 0-based.
class Word {
  public:
    Word() = default;
    Word(std::uint32_t q, std::vector<Symbol> symbols);
    Word(std::uint32_t q, std::initializer_list<Symbol> symbols);

    /// The all-zero word of length n.
    static Word zeros(std::uint32_t q, std::size_t n);

    std::uint32_t q() const { return q_; }
    std::size_t n() const { return symbols_.size(); }
    Symbol operator[](std::size_t i) const { return symbols_[i]; }
    std::span<const Symbol> symbols() const { return symbols_; }
    auto begin() const { return symbols_.begin(); }
    auto end() const { return symbols_.end(); }

    friend bool operator==(const Word&, const Word&) = default;
    friend auto operator<=>(const Word& a, const Word& b) {
        if (auto c = a.q_ <=> b.q_; c != 0) return c;
        return a.symbols_ <=> b.symbols_;
    }

  private:
    std::uint32_t q_ = 2;
    std::vector<Symbol> symbols_;
};

/// A finite set of distinct words sharing (q, n). Insertion order is kept so
/// that certificates can refer to words by index.
class Code {
  public:
    Code() = default;  // empty binary code of length 0
    Code(std::uint32_t q, std::size_t n);
    Code(std::uint32_t q, std::size_t n, std::vector<Word> words);

    std::uint32_t q() const { return q_; }
    std::size_t n() const { return n_; }
    std::size_t size() const { return words_.size(); }
    bool empty() const { return words_.empty(); }
    const Word& operator[](std::size_t i) const { return words_[i]; }
    const std::vector<Word>& words() const { return words_; }
    auto begin() const { return words_.begin(); }
    auto end() const { return words_.end(); }

    /// Adds a word; throws ParameterError on a (q, n) mismatch or a duplicate.
    void insert(Word w);
    bool contains(const Word& w) const;

    friend bool operator==(const Code&, const Code&) = default;

  private:
    std::uint32_t q_ = 2;
    std::size_t n_ = 0;
    std::vector<Word> words_;
    std::vector<Word> sorted_;  // lookup index
};

struct Agreement {
    std::size_t count = 0;
    std::vector<std::size_t> indices;  // I(x,y), ascending
};

std::size_t hamming_distance(const Word& x, const Word& y);
Agreement agreement(const Word& x, const Word& y);
std::size_t agreement_count(const Word& x, const Word& y);

/// Minimum pairwise distance; throws PreconditionError when |C| < 2.
std::size_t min_distance(const Code& code);

}  // namespace ldlab
