#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ldlab/core/json_io.hpp"
#include "ldlab/core/linear_code.hpp"
#include "ldlab/core/word.hpp"

namespace ldlab {

/// Per-coordinate symbol lists S_1 x ... x S_n; each list sorted ascending.
using Box = std::vector<std::vector<Symbol>>;

constexpr std::size_t kMaxDpWords = 8;

/// Number of coordinates where `w` falls outside the box.
std::size_t box_misses(const Word& w, const Box& box);

/// A center y with d(y, w) <= t for every given word, or nullopt. Dynamic
/// program over coordinates whose state is the vector of per-word
/// disagreement counts; candidate symbols at a coordinate are the symbols
/// present there plus one fresh symbol when q allows it. The returned center
/// is the first one in lexicographic option order.
std::optional<Word> common_center_exists(std::span<const Word> words, std::size_t t);

/// Reference implementation by full enumeration of [q]^n (q^n <= budget).
/// Returns the lexicographically smallest valid center.
std::optional<Word> common_center_exhaustive(std::span<const Word> words, std::size_t t,
                                             std::uint64_t budget = 10'000'000);

/// A box with lists of size <= ell such that every word misses it in at most
/// t coordinates, or nullopt. Same dynamic program as the center search; the
/// candidate lists at a coordinate are the maximal-size subsets of the
/// symbols present there.
std::optional<Box> common_box_exists(std::span<const Word> words, std::size_t t, std::size_t ell);

/// Reference implementation enumerating every box whose lists are
/// min(ell, q)-subsets of [q]. Every admissible box is contained in one of
/// these and containment can only reduce misses.
std::optional<Box> common_box_exhaustive(std::span<const Word> words, std::size_t t, std::size_t ell,
                                         std::uint64_t budget = 10'000'000);

enum class Verdict { Pass, Fail };

struct Certificate {
    Verdict verdict = Verdict::Pass;
    std::size_t t = 0;
    std::size_t ell = 1;
    std::size_t list_size = 1;
    std::vector<std::size_t> witness_indices;  // into the code's word order
    std::vector<Word> witness_words;
    std::optional<Word> center;  // list-decoding failure
    std::optional<Box> box;      // list-recovery failure

    bool passed() const { return verdict == Verdict::Pass; }
};

struct VerifyOptions {
    std::uint64_t node_budget = 2'000'000'000;  // partial subsets visited before giving up
    unsigned threads = 1;
};

/// Decides (t, L) list-decodability: pass iff no (L+1)-subset lies in a
/// radius-t ball. Subsets are scanned in lexicographic index order, so the
/// failure certificate is the first violating subset. Throws BudgetExceeded
/// rather than returning a verdict when the node budget runs out.
Certificate is_list_decodable(const Code& code, std::size_t t, std::size_t L, const VerifyOptions& opts = {});

/// Decides (t, ell, L) list-recoverability.
Certificate is_list_recoverable(const Code& code, std::size_t t, std::size_t ell, std::size_t L,
                                const VerifyOptions& opts = {});

/// Linear-code variants. A violating subset can be translated to contain the
/// zero codeword, so only subsets through zero are scanned. Witness indices
/// refer to the expansion order of LinearCode::expand.
Certificate is_list_decodable(const LinearCode& code, std::size_t t, std::size_t L, const VerifyOptions& opts = {});
Certificate is_list_recoverable(const LinearCode& code, std::size_t t, std::size_t ell, std::size_t L,
                                const VerifyOptions& opts = {});

/// Scans only the (L+1)-subsets that contain `anchor`. Used for incremental
/// checks after adding a word to a code already known to pass.
Certificate check_subsets_through(const Code& code, std::size_t anchor, std::size_t t, std::size_t ell, std::size_t L,
                                  const VerifyOptions& opts = {});

/// Largest number of codewords sharing a common center (ell = 1) or box,
/// i.e. the least L for which the code is list-decodable/recoverable.
std::size_t minimal_list_size(const Code& code, std::size_t t, std::size_t ell = 1, const VerifyOptions& opts = {});

/// Independent recheck of a certificate using only distance and box-membership
/// recounts. For a failure: L+1 distinct code words, all within t of the
/// center (or missing the box in at most t coordinates, lists of size <= ell).
bool certificate_holds(const Code& code, const Certificate& cert);

Json certificate_to_json(const Certificate& cert);

}  // namespace ldlab
