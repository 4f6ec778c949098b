#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "ldlab/core/json_io.hpp"
#include "ldlab/core/word.hpp"
#include "ldlab/verify.hpp"

namespace ldlab {

/// Vertex (i, x): symbol x of part i.
using Vertex = std::pair<std::size_t, Symbol>;
using Edge = std::vector<Vertex>;

/// n-partite n-uniform hypergraph with parts of size q. An edge is stored as
/// the word of its vertices, so it meets every part exactly once.
class PartiteHypergraph {
  public:
    PartiteHypergraph(std::uint32_t q, std::size_t n);
    /// Throws ParameterError on shape mismatch or repeated edges.
    PartiteHypergraph(std::uint32_t q, std::size_t n, std::vector<Word> edges);

    std::uint32_t q() const { return q_; }
    std::size_t n() const { return n_; }
    std::size_t size() const { return edges_.size(); }
    const std::vector<Word>& edges() const { return edges_; }
    const Word& operator[](std::size_t i) const { return edges_[i]; }

    /// Returns false (and leaves the graph unchanged) if the edge is present.
    bool add_edge(const Word& e);

  private:
    std::uint32_t q_;
    std::size_t n_;
    std::vector<Word> edges_;
};

Word psi(const Edge& edge, std::uint32_t q);
Edge psi_inv(const Word& w);

/// Number of distinct vertices covered by the given edges.
std::size_t union_size(std::span<const Word> edges);

struct SparsityResult {
    bool sparse = true;
    std::vector<std::size_t> violating;  // first lexicographic e-subset spanning <= v vertices
    std::uint64_t nodes = 0;
};

constexpr std::uint64_t kDefaultSparsityBudget = 1ull << 30;

/// (v,e)-sparse: any e distinct edges cover more than v vertices. Throws
/// BudgetExceeded after `node_budget` search nodes.
SparsityResult is_sparse(const PartiteHypergraph& h, std::size_t v, std::size_t e,
                         std::uint64_t node_budget = kDefaultSparsityBudget);

Code code_from_hypergraph(const PartiteHypergraph& h);
PartiteHypergraph hypergraph_from_code(const Code& code);

struct TaggedCode {
    Code code;
    std::optional<std::pair<std::size_t, std::size_t>> guaranteed;  // (t, L) when H is (n+(L+1)t, L+1)-sparse
};

/// Converts H and tags the code as (t, L)-list-decodable when the sparsity
/// condition certifies it.
TaggedCode code_from_hypergraph(const PartiteHypergraph& h, std::size_t t, std::size_t L,
                                std::uint64_t node_budget = kDefaultSparsityBudget);

/// Arbitrary e-uniform hypergraph on vertices 0..vertices-1.
struct Hypergraph {
    std::size_t vertices = 0;
    std::size_t uniformity = 0;
    std::vector<std::vector<std::size_t>> edges;
};

struct PartitionResult {
    PartiteHypergraph graph;
    std::vector<std::size_t> part_of;    // part of every (padded) vertex
    std::vector<std::size_t> index_of;   // position inside its part
    std::vector<std::size_t> retained;   // indices of edges that hit every part once
    std::size_t padded_vertices = 0;
};

/// Uniformly random partition into `uniformity` equal classes (padding with
/// isolated vertices); keeps the edges meeting every class exactly once.
PartitionResult erdos_kleitman_partition(const Hypergraph& h, std::uint64_t seed);

Hypergraph complete_hypergraph(std::size_t vertices, std::size_t uniformity);

struct SparseOptions {
    double c = 0.5;
    std::uint64_t node_budget = kDefaultSparsityBudget;
};

struct SparseResult {
    PartiteHypergraph graph;
    double p = 0;
    std::size_t sampled = 0;
    std::size_t deleted = 0;
};

/// Alteration method: keep each of the q^n potential edges with probability
/// p = c q^((en - v)/(e-1) - n), then drop the lowest edge of every violating
/// e-subset in one lexicographic pass. The output is certified sparse.
SparseResult random_sparse_hypergraph(std::size_t n, std::uint32_t q, std::size_t v, std::size_t e,
                                      std::uint64_t seed, const SparseOptions& opts = {});

struct PipelineResult {
    Code code;
    Certificate certificate;
    std::size_t v = 0, e = 0;
    double p = 0;
    double benchmark = 0;        // q^(n - t(L+1)/L)
    double size_ratio = 0;       // |C| / benchmark
    bool log_factor_regime = false;  // gcd(L, t) = 1
};

PipelineResult pipeline_sparse_to_code(std::size_t n, std::uint32_t q, std::size_t t, std::size_t L,
                                       std::uint64_t seed, const SparseOptions& opts = {},
                                       const VerifyOptions& verify = {});

// {"n": int, "q": int, "edges": [[int, ...], ...]}
Json hypergraph_to_json(const PartiteHypergraph& h);
PartiteHypergraph hypergraph_from_json(const Json& j);

}  // namespace ldlab
