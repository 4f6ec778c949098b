#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ldlab/core/json_io.hpp"
#include "ldlab/core/linear_code.hpp"
#include "ldlab/core/quantities.hpp"
#include "ldlab/core/word.hpp"
#include "ldlab/verify.hpp"

namespace ldlab {

enum class SearchMode { Exact, Budgeted };

struct SearchOptions {
    std::uint64_t exact_limit = 19683;  // 3^9 words
    std::uint64_t node_budget = 50'000'000;
    std::vector<Code> incumbents;  // verified lower bounds to start from
};

struct SearchResult {
    std::size_t size = 0;
    Code witness;
    bool exact = false;  // false: lower bound only
    std::uint64_t nodes = 0;
};

/// Largest (t, L)-list-decodable code in [q]^n by branch and bound over words
/// in lexicographic order. The first word is pinned to 0^n and each coordinate
/// introduces symbols in increasing order. Exact mode throws ParameterError
/// above `exact_limit` words and BudgetExceeded when the budget runs out;
/// budgeted mode returns the best code found, flagged inexact.
SearchResult max_code_search(std::uint32_t q, std::size_t n, std::size_t t, std::size_t L, SearchMode mode,
                             const SearchOptions& opts = {});

struct LinearSearchResult {
    std::size_t k = 0;
    std::optional<LinearCode> witness;  // none for k = 0
    std::uint64_t codes_checked = 0;
};

/// Largest dimension of a (t, ell, L) list-recoverable linear code, scanning
/// reduced echelon generator matrices by descending k. Throws BudgetExceeded
/// when a dimension holds more than `budget` subspaces.
LinearSearchResult max_linear_search(const Field& field, std::size_t n, std::size_t t, std::size_t L,
                                     std::size_t ell = 1, std::uint64_t budget = 2'000'000);

/// Calls `f` on every k-dimensional subspace of F_q^n once, as its reduced
/// echelon generator. Stops early when `f` returns false; returns false then.
bool for_each_linear_code(const Field& field, std::size_t n, std::size_t k,
                          const std::function<bool(const LinearCode&)>& f);

/// Number of k-dimensional subspaces of F_q^n.
BigInt gaussian_binomial(std::uint32_t q, std::size_t n, std::size_t k);

struct SeparationReport {
    std::uint32_t q = 0;
    std::size_t n = 0, t = 0, L = 0;
    std::size_t max_linear = 0;
    std::size_t linear_k = 0;
    std::size_t max_nonlinear = 0;
    bool nonlinear_exact = false;
    double theta = 0;  // log_q(max_nonlinear / max_linear)
    bool strict_separation = false;
    std::optional<LinearCode> linear_witness;
    Code nonlinear_witness;
    bool linear_certified = false;
    bool nonlinear_certified = false;
    std::vector<std::string> warnings;
};

struct SeparationOptions {
    std::uint64_t node_budget = 2'000'000;
    std::size_t pipeline_seeds = 8;
    std::uint64_t seed = 1;
};

std::vector<SeparationReport> separation_experiment(const std::vector<std::uint32_t>& q_list, std::size_t n,
                                                    std::size_t t, std::size_t L,
                                                    const SeparationOptions& opts = {});

enum class RsSearchStatus { Found, NoneExists, Incomplete };

struct RsSearchResult {
    RsSearchStatus status = RsSearchStatus::Incomplete;
    std::vector<Symbol> alpha;
    std::uint64_t candidates = 0;
    std::optional<Certificate> certificate;
};

/// Evaluation sets {0, 1} + increasing tail, in lexicographic order; the first
/// set whose RS code is (t, L)-list-decodable wins. Affine maps and coordinate
/// permutations preserve the code's list-decoding behaviour, so this covers
/// every evaluation vector.
RsSearchResult rs_ld_search(const Field& field, std::size_t n, std::size_t k, std::size_t t, std::size_t L,
                            std::uint64_t budget = 1'000'000);

const char* rs_status_str(RsSearchStatus s);

Json search_result_to_json(const SearchResult& r);
Json separation_report_to_json(const SeparationReport& r);

}  // namespace ldlab
