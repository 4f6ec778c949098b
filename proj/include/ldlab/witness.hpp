#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "ldlab/core/json_io.hpp"
#include "ldlab/core/linear_code.hpp"
#include "ldlab/core/word.hpp"
#include "ldlab/verify.hpp"

namespace ldlab {

/// L+1 words inside one radius-t ball.
struct CenterWitness {
    Word center;
    std::vector<Word> captured;
    std::vector<std::size_t> captured_indices;  // into the input list / expansion order
    std::size_t t = 0;
    std::vector<std::string> notes;
};

/// L+1 words each missing a box in at most t coordinates.
struct BoxWitness {
    Box box;
    std::vector<Word> captured;
    std::vector<std::size_t> captured_indices;
    std::vector<std::vector<std::size_t>> contributors;  // per free coordinate: captured-word positions whose symbol was placed
    std::vector<std::size_t> free_coordinates;
    std::size_t t = 0;
    std::size_t ell = 1;
};

/// Recount check: every captured word within t of the center and pairwise distinct.
bool witness_holds(const CenterWitness& w);
bool witness_holds(const BoxWitness& w);

Json witness_to_json(const CenterWitness& w);
Json witness_to_json(const BoxWitness& w);

/// Given M words that agree on their last n-m coordinates, m = floor((L+1)t/L) + 1,
/// builds a center capturing L+1 of them. Vertex, subset and partition
/// choices break ties by lowest index. Requires floor(t/L) + 1 >= L, M >= L+1
/// and a vertex of agreement degree >= L - (t mod L); M >= 1 + max{q + floor(fq), L}
/// guarantees the last.
CenterWitness refute_center_from_cluster(std::span<const Word> words, std::size_t t, std::size_t L);

/// For an [n, n - ceil((L+1)t/L) + 1] code with k(q-1) > (L-1)q and L >= 2,
/// returns a center capturing the zero codeword and L weight-one-message
/// codewords. Throws HypothesisFailure naming the failed inequality.
CenterWitness refute_linear(const LinearCode& code, std::size_t t, std::size_t L);

/// Box capturing L+1 words that share per-coordinate lists of size <= ell on
/// the last n-m coordinates, m = t + floor(ell t / (L+1-ell)). Requires
/// (L+1) t' <= ell m. Symbols are placed on an ell x m slot grid filled row by
/// row; word j takes the j-th run of t' slots.
BoxWitness refute_recovery_box(std::span<const Word> words, std::size_t t, std::size_t ell);

/// For a linear code with dimension >= 2 (>= 1 when ell = 1), ell <= L < ell q,
/// ell <= q and a nonzero codeword of weight <= t + floor(ell t/(L+1-ell)),
/// returns a box capturing L+1 codewords of the form lambda c + c^j.
BoxWitness refute_linear_distance(const LinearCode& code, std::size_t t, std::size_t ell, std::size_t L);

struct SubcodeResult {
    Code subcode;
    std::vector<std::size_t> removed;  // indices into the input code
    std::size_t m = 0;
    std::size_t guaranteed_distance = 0;
    std::size_t bad_pairs = 0;
};

/// Removes every codeword c for which some pair (c1, c2) with
/// |I(c1,c2)| >= (n-m) + L(eps+1) has |I(c,c1) & I(c1,c2)| >= n-m, where
/// m = floor((L+1)t/L) + eps + 1. The result has minimum distance at least
/// m - L(eps+1) + 1 (checked before returning).
SubcodeResult subcode_extract(const Code& code, std::size_t t, std::size_t L, std::size_t eps);

/// True when two distinct words of the code agree on at least k coordinates.
/// Buckets the words by their projection onto every k-subset.
bool has_pair_agreeing_on(const Code& code, std::size_t k);

/// The center from the bad-vector argument: c1 and c2 agree on the last n-m
/// coordinates (shared with every cluster word) and on at least L(eps+1) of
/// the first m. Coordinates where c1 = c2 are used first.
CenterWitness pair_center(const Word& c1, const Word& c2, std::span<const Word> cluster, std::size_t t,
                          std::size_t L, std::size_t eps);

}  // namespace ldlab
