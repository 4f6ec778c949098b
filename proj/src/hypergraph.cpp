#include "ldlab/hypergraph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "ldlab/core/rng.hpp"
#include "ldlab/errors.hpp"

namespace ldlab {

namespace {

// Depth-first scan of e-subsets of the live edges in lexicographic order,
// tracking the vertex union incrementally. A partial union above v can only
// grow, so that subtree holds no violation.
class UnionScan {
  public:
    UnionScan(const PartiteHypergraph& h, std::size_t v, std::size_t e, std::uint64_t budget)
        : h_(h), v_(v), e_(e), budget_(budget), counts_(h.n() * h.q(), 0), alive_(h.size(), 1) {}

    // First violating subset among live edges rooted at `root`, or empty.
    std::vector<std::size_t> scan_root(std::size_t root) {
        chosen_.clear();
        push(root);
        const bool hit = dfs(root + 1, 1);
        pop(root);
        std::vector<std::size_t> out;
        if (hit) {
            out.push_back(root);
            out.insert(out.end(), chosen_.rbegin(), chosen_.rend());
        }
        return out;
    }

    void kill(std::size_t i) { alive_[i] = 0; }
    bool alive(std::size_t i) const { return alive_[i] != 0; }
    std::uint64_t nodes() const { return nodes_; }

  private:
    void count_node() {
        if (++nodes_ > budget_) throw BudgetExceeded("sparsity scan exceeded its node budget");
    }

    void push(std::size_t i) {
        count_node();
        const Word& w = h_[i];
        for (std::size_t c = 0; c < w.n(); ++c) union_ += counts_[c * h_.q() + w[c]]++ == 0;
    }

    void pop(std::size_t i) {
        const Word& w = h_[i];
        for (std::size_t c = 0; c < w.n(); ++c) union_ -= --counts_[c * h_.q() + w[c]] == 0;
    }

    // chosen_ collects the deeper members in reverse on success.
    bool dfs(std::size_t start, std::size_t depth) {
        if (union_ > v_) return false;
        if (depth == e_) return true;
        for (std::size_t j = start; j + (e_ - depth) <= h_.size(); ++j) {
            if (!alive_[j]) continue;
            push(j);
            const bool hit = dfs(j + 1, depth + 1);
            pop(j);
            if (hit) {
                chosen_.push_back(j);
                return true;
            }
        }
        return false;
    }

    const PartiteHypergraph& h_;
    std::size_t v_, e_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    std::vector<std::uint32_t> counts_;
    std::vector<char> alive_;
    std::size_t union_ = 0;
    std::vector<std::size_t> chosen_;
};

std::uint64_t checked_power(std::uint32_t q, std::size_t n, std::uint64_t limit) {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (total > limit / q) throw ParameterError("q^n exceeds the sampling limit");
        total *= q;
    }
    return total;
}

}  // namespace

PartiteHypergraph::PartiteHypergraph(std::uint32_t q, std::size_t n) : q_(q), n_(n) {
    if (q < 1) throw ParameterError("part size q must be positive");
}

PartiteHypergraph::PartiteHypergraph(std::uint32_t q, std::size_t n, std::vector<Word> edges)
    : PartiteHypergraph(q, n) {
    for (const auto& e : edges) {
        if (e.q() != q || e.n() != n) throw ParameterError("edge shape does not match (q, n)");
    }
    std::vector<Word> sorted = edges;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) throw ParameterError("repeated edge");
    edges_ = std::move(edges);
}

bool PartiteHypergraph::add_edge(const Word& e) {
    if (e.q() != q_ || e.n() != n_) throw ParameterError("edge shape does not match (q, n)");
    if (std::find(edges_.begin(), edges_.end(), e) != edges_.end()) return false;
    edges_.push_back(e);
    return true;
}

Word psi(const Edge& edge, std::uint32_t q) {
    const std::size_t n = edge.size();
    std::vector<Symbol> s(n);
    std::vector<char> seen(n, 0);
    for (const auto& [part, x] : edge) {
        if (part >= n) throw ParameterError("vertex part " + std::to_string(part) + " out of range");
        if (seen[part]) throw ParameterError("edge meets part " + std::to_string(part) + " twice");
        if (x >= q) throw ParameterError("vertex symbol out of range");
        seen[part] = 1;
        s[part] = x;
    }
    return Word(q, std::move(s));
}

Edge psi_inv(const Word& w) {
    Edge e;
    e.reserve(w.n());
    for (std::size_t i = 0; i < w.n(); ++i) e.emplace_back(i, w[i]);
    return e;
}

std::size_t union_size(std::span<const Word> edges) {
    if (edges.empty()) return 0;
    std::size_t total = 0;
    for (std::size_t c = 0; c < edges[0].n(); ++c) {
        std::vector<Symbol> col;
        for (const auto& e : edges) col.push_back(e[c]);
        std::sort(col.begin(), col.end());
        total += static_cast<std::size_t>(std::unique(col.begin(), col.end()) - col.begin());
    }
    return total;
}

SparsityResult is_sparse(const PartiteHypergraph& h, std::size_t v, std::size_t e, std::uint64_t node_budget) {
    if (e < 2) throw ParameterError("sparsity needs e >= 2");
    SparsityResult out;
    UnionScan scan(h, v, e, node_budget);
    for (std::size_t r = 0; r + e <= h.size(); ++r) {
        auto hit = scan.scan_root(r);
        if (!hit.empty()) {
            out.sparse = false;
            out.violating = std::move(hit);
            break;
        }
    }
    out.nodes = scan.nodes();
    return out;
}

Code code_from_hypergraph(const PartiteHypergraph& h) { return Code(h.q(), h.n(), h.edges()); }

PartiteHypergraph hypergraph_from_code(const Code& code) { return PartiteHypergraph(code.q(), code.n(), code.words()); }

TaggedCode code_from_hypergraph(const PartiteHypergraph& h, std::size_t t, std::size_t L, std::uint64_t node_budget) {
    if (L < 1) throw ParameterError("L must be at least 1");
    TaggedCode out{code_from_hypergraph(h), std::nullopt};
    if (is_sparse(h, h.n() + (L + 1) * t, L + 1, node_budget).sparse) out.guaranteed = std::make_pair(t, L);
    return out;
}

Hypergraph complete_hypergraph(std::size_t vertices, std::size_t uniformity) {
    Hypergraph h;
    h.vertices = vertices;
    h.uniformity = uniformity;
    if (uniformity == 0 || uniformity > vertices) return h;
    std::vector<std::size_t> idx(uniformity);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        h.edges.push_back(idx);
        std::size_t i = uniformity;
        while (i > 0 && idx[i - 1] == vertices - uniformity + i - 1) --i;
        if (i == 0) break;
        ++idx[i - 1];
        for (std::size_t j = i; j < uniformity; ++j) idx[j] = idx[j - 1] + 1;
    }
    return h;
}

PartitionResult erdos_kleitman_partition(const Hypergraph& h, std::uint64_t seed) {
    const std::size_t n = h.uniformity;
    if (n < 1) throw ParameterError("uniformity must be positive");
    const std::size_t padded = std::max<std::size_t>(n, (h.vertices + n - 1) / n * n);
    const std::size_t q = padded / n;
    std::vector<std::size_t> order(padded);
    std::iota(order.begin(), order.end(), 0);
    Rng rng(seed);
    rng.shuffle(order);

    PartitionResult out{PartiteHypergraph(static_cast<std::uint32_t>(q), n), std::vector<std::size_t>(padded),
                        std::vector<std::size_t>(padded), {}, padded};
    for (std::size_t p = 0; p < padded; ++p) {
        out.part_of[order[p]] = p / q;
        out.index_of[order[p]] = p % q;
    }
    for (std::size_t i = 0; i < h.edges.size(); ++i) {
        const auto& edge = h.edges[i];
        if (edge.size() != n) throw ParameterError("edge " + std::to_string(i) + " has the wrong size");
        Edge mapped;
        std::vector<char> hit(n, 0);
        bool ok = true;
        for (auto x : edge) {
            if (x >= h.vertices) throw ParameterError("edge " + std::to_string(i) + " names a missing vertex");
            const std::size_t part = out.part_of[x];
            if (hit[part]) {
                ok = false;
                break;
            }
            hit[part] = 1;
            mapped.emplace_back(part, static_cast<Symbol>(out.index_of[x]));
        }
        if (ok && out.graph.add_edge(psi(mapped, static_cast<std::uint32_t>(q)))) out.retained.push_back(i);
    }
    return out;
}

SparseResult random_sparse_hypergraph(std::size_t n, std::uint32_t q, std::size_t v, std::size_t e,
                                      std::uint64_t seed, const SparseOptions& opts) {
    if (e < 2) throw ParameterError("sparsity needs e >= 2");
    if (n < 1 || q < 1) throw ParameterError("n and q must be positive");
    const double exponent = (static_cast<double>(e * n) - static_cast<double>(v)) / static_cast<double>(e - 1) -
                            static_cast<double>(n);
    const double p = opts.c * std::pow(static_cast<double>(q), exponent);
    if (p > 1.0) throw ParameterError("density infeasible: p = " + std::to_string(p) + " > 1");
    const std::uint64_t total = checked_power(q, n, 1ull << 28);

    SparseResult out{PartiteHypergraph(q, n), p, 0, 0};
    Rng rng(seed);
    std::vector<Word> sampled;
    std::vector<Symbol> y(n, 0);
    for (std::uint64_t i = 0; i < total; ++i) {
        if (rng.uniform01() < p) sampled.emplace_back(q, y);
        for (std::size_t pos = n; pos > 0; --pos) {
            if (++y[pos - 1] < q) break;
            y[pos - 1] = 0;
        }
    }
    out.sampled = sampled.size();
    PartiteHypergraph raw(q, n, sampled);

    UnionScan scan(raw, v, e, opts.node_budget);
    for (std::size_t r = 0; r < raw.size(); ++r) {
        if (!scan.scan_root(r).empty()) {
            scan.kill(r);
            ++out.deleted;
        }
    }
    std::vector<Word> kept;
    for (std::size_t r = 0; r < raw.size(); ++r) {
        if (scan.alive(r)) kept.push_back(raw[r]);
    }
    out.graph = PartiteHypergraph(q, n, std::move(kept));
    if (!is_sparse(out.graph, v, e, opts.node_budget).sparse) {
        throw std::logic_error("internal: deletion pass left a violating subset");
    }
    return out;
}

PipelineResult pipeline_sparse_to_code(std::size_t n, std::uint32_t q, std::size_t t, std::size_t L,
                                       std::uint64_t seed, const SparseOptions& opts, const VerifyOptions& verify) {
    if (L < 1) throw ParameterError("L must be at least 1");
    if (t * (L + 1) >= n * L) throw ParameterError("outside the list-decoding regime: need t(L+1) < nL");
    const std::size_t v = n + (L + 1) * t, e = L + 1;
    auto sparse = random_sparse_hypergraph(n, q, v, e, seed, opts);
    PipelineResult out{code_from_hypergraph(sparse.graph), {}, v, e, sparse.p};
    out.certificate = is_list_decodable(out.code, t, L, verify);
    out.benchmark = std::pow(static_cast<double>(q), static_cast<double>(n) - static_cast<double>(t * (L + 1)) / L);
    out.size_ratio = static_cast<double>(out.code.size()) / out.benchmark;
    out.log_factor_regime = std::gcd(L, t) == 1;
    return out;
}

Json hypergraph_to_json(const PartiteHypergraph& h) {
    Json edges = Json::array();
    for (const auto& e : h.edges()) edges.push_back(word_to_json(e));
    return Json{{"n", h.n()}, {"q", h.q()}, {"edges", std::move(edges)}};
}

PartiteHypergraph hypergraph_from_json(const Json& j) {
    if (!j.is_object()) throw ParameterError("expected a JSON object at top level");
    for (const char* key : {"n", "q", "edges"}) {
        if (!j.contains(key)) throw ParameterError(std::string("missing key \"") + key + "\"");
    }
    // Same row format as a code's word list.
    Json as_code{{"q", j["q"]}, {"n", j["n"]}, {"words", j["edges"]}};
    try {
        const Code c = code_from_json(as_code);
        return PartiteHypergraph(c.q(), c.n(), c.words());
    } catch (const ParameterError& e) {
        std::string msg = e.what();
        for (std::size_t pos; (pos = msg.find("words")) != std::string::npos;) msg.replace(pos, 5, "edges");
        throw ParameterError(msg);
    }
}

}  // namespace ldlab
