#include <functional>
#include "ldlab/search.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "ldlab/errors.hpp"
#include "ldlab/hypergraph.hpp"

namespace ldlab {

namespace {

struct StopSearch {};

// Words of [q]^n indexed in lexicographic order; each word's neighbourhood is
// the radius-t ball around it, which doubles as the set of centers it feeds.
class PackingSearch {
  public:
    PackingSearch(std::uint32_t q, std::size_t n, std::size_t t, std::size_t L, std::uint64_t budget)
        : q_(q), n_(n), L_(L), budget_(budget) {
        std::size_t total = 1;
        for (std::size_t i = 0; i < n; ++i) total *= q;
        words_.reserve(total);
        std::vector<Symbol> y(n, 0);
        for (std::size_t i = 0; i < total; ++i) {
            words_.push_back(y);
            for (std::size_t pos = n; pos > 0; --pos) {
                if (++y[pos - 1] < q) break;
                y[pos - 1] = 0;
            }
        }
        weight_.assign(n, 1);
        for (std::size_t c = n - 1; c > 0; --c) weight_[c - 1] = weight_[c] * q;
        nbr_.assign(total, {});
        for (std::size_t a = 0; a < total; ++a) collect_ball(a, a, 0, t, nbr_[a]);
        occ_.assign(total, 0);
        blocked_.assign(total, 0);
        assigned_.assign(total, 0);
        max_sym_.assign(n, -1);
    }

    std::size_t space() const { return words_.size(); }
    const std::vector<Symbol>& word(std::size_t i) const { return words_[i]; }

    std::size_t index_of(const Word& w) const {
        std::size_t idx = 0;
        for (auto s : w) idx = idx * q_ + s;
        return idx;
    }

    // Greedy lexicode: every word that keeps all occupancies <= L.
    std::vector<std::size_t> greedy() {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < space(); ++i) {
            if (!blocked_[i]) {
                add(i);
                out.push_back(i);
            }
        }
        for (auto it = out.rbegin(); it != out.rend(); ++it) remove(*it);
        return out;
    }

    void seed(std::size_t size, std::vector<std::size_t> words) {
        if (size > best_size_) {
            best_size_ = size;
            best_ = std::move(words);
        }
    }

    // Returns true when the whole tree was explored.
    bool run() {
        try {
            add(0);
            update_symbols(0);
            chosen_.push_back(0);
            dfs(1);
            return true;
        } catch (const StopSearch&) {
            return false;
        }
    }

    std::uint64_t nodes() const { return nodes_; }
    const std::vector<std::size_t>& best() const { return best_; }
    std::size_t best_size() const { return best_size_; }

  private:
    // Indices within `left` substitutions of word `a`, changing coordinates >= from.
    void collect_ball(std::size_t a, std::size_t idx, std::size_t from, std::size_t left,
                      std::vector<std::uint32_t>& out) const {
        out.push_back(static_cast<std::uint32_t>(idx));
        if (left == 0) return;
        for (std::size_t c = from; c < n_; ++c) {
            const std::size_t base = idx - words_[a][c] * weight_[c];
            for (Symbol s = 0; s < q_; ++s) {
                if (s != words_[a][c]) collect_ball(a, base + s * weight_[c], c + 1, left - 1, out);
            }
        }
    }

    void add(std::size_t w) {
        for (auto y : nbr_[w]) {
            if (++occ_[y] == L_) {
                for (auto z : nbr_[y]) ++blocked_[z];
            }
        }
    }

    void remove(std::size_t w) {
        for (auto y : nbr_[w]) {
            if (occ_[y]-- == L_) {
                for (auto z : nbr_[y]) --blocked_[z];
            }
        }
    }

    bool canonical(std::size_t w) const {
        for (std::size_t c = 0; c < n_; ++c) {
            if (static_cast<int>(words_[w][c]) > max_sym_[c] + 1) return false;
        }
        return true;
    }

    void update_symbols(std::size_t w) {
        for (std::size_t c = 0; c < n_; ++c) max_sym_[c] = std::max(max_sym_[c], static_cast<int>(words_[w][c]));
    }

    // Upper bound on how many live words >= from can still be added: live
    // words are grouped greedily by the ball around the first unassigned one,
    // and a ball around center y takes at most L - occ(y) more. Stops early
    // once the bound exceeds `need`.
    std::size_t cover_bound(std::size_t from, std::size_t need) {
        std::size_t bound = 0;
        ++stamp_;
        for (std::size_t j = from; j < space() && bound <= need; ++j) {
            if (blocked_[j] || assigned_[j] == stamp_) continue;
            std::size_t group = 0;
            for (auto z : nbr_[j]) {
                if (z >= from && !blocked_[z] && assigned_[z] != stamp_) {
                    assigned_[z] = stamp_;
                    ++group;
                }
            }
            bound += std::min<std::size_t>(group, L_ - occ_[j]);
        }
        return bound;
    }

    // Every added word w >= from feeds all |B| centers of its ball, and center
    // y can absorb at most min(L - occ(y), live words >= from in its ball).
    std::size_t capacity_bound(std::size_t from) const {
        std::size_t total = 0;
        for (std::size_t y = 0; y < space(); ++y) {
            const std::size_t room = L_ - occ_[y];
            if (room == 0) continue;
            std::size_t live = 0;
            for (auto z : nbr_[y]) {
                if (z >= from && !blocked_[z] && ++live == room) break;
            }
            total += live;
        }
        return total / nbr_[0].size();
    }

    void dfs(std::size_t start) {
        if (++nodes_ > budget_) throw StopSearch{};
        if (chosen_.size() > best_size_) {
            best_size_ = chosen_.size();
            best_ = chosen_;
        }
        for (std::size_t i = start; i < space(); ++i) {
            if (blocked_[i] || !canonical(i)) continue;
            const std::size_t need = best_size_ - chosen_.size();
            if (cover_bound(i, need) <= need || capacity_bound(i) <= need) return;
            const auto saved = max_sym_;
            add(i);
            update_symbols(i);
            chosen_.push_back(i);
            dfs(i + 1);
            chosen_.pop_back();
            remove(i);
            max_sym_ = saved;
        }
    }

    std::uint32_t q_;
    std::size_t n_, L_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    std::vector<std::vector<Symbol>> words_;
    std::vector<std::size_t> weight_;
    std::vector<std::vector<std::uint32_t>> nbr_;
    std::vector<std::uint32_t> occ_, blocked_, assigned_;
    std::uint32_t stamp_ = 0;
    std::vector<int> max_sym_;
    std::vector<std::size_t> chosen_, best_;
    std::size_t best_size_ = 0;
};

template <typename F>
void for_each_increasing(std::size_t lo, std::size_t hi, std::size_t k, F&& f) {
    if (k > hi - lo) return;
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), lo);
    while (true) {
        if (!f(idx)) return;
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == hi - k + i - 1) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

Certificate check_linear(const LinearCode& code, std::size_t t, std::size_t ell, std::size_t L) {
    return ell == 1 ? is_list_decodable(code, t, L) : is_list_recoverable(code, t, ell, L);
}

}  // namespace

SearchResult max_code_search(std::uint32_t q, std::size_t n, std::size_t t, std::size_t L, SearchMode mode,
                             const SearchOptions& opts) {
    if (L < 1) throw ParameterError("L must be at least 1");
    if (n < 1) throw ParameterError("n must be at least 1");
    const BigInt space = ipow(BigInt(q), n);
    const std::uint64_t hard_cap = 1u << 16;
    if (mode == SearchMode::Exact && space > opts.exact_limit) {
        throw ParameterError("exact search limited to " + std::to_string(opts.exact_limit) + " words, q^n = " +
                             space.str());
    }
    if (space > hard_cap) throw ParameterError("search space q^n = " + space.str() + " is too large");

    PackingSearch search(q, n, t, L, opts.node_budget);
    auto greedy = search.greedy();
    search.seed(greedy.size(), greedy);
    std::optional<Code> incumbent;
    for (const auto& c : opts.incumbents) {
        if (c.q() != q || c.n() != n) throw ParameterError("incumbent code has the wrong (q, n)");
        if (c.size() <= search.best_size()) continue;
        if (!is_list_decodable(c, t, L).passed()) throw ParameterError("incumbent code is not list-decodable");
        std::vector<std::size_t> idx;
        for (const auto& w : c) idx.push_back(search.index_of(w));
        search.seed(c.size(), idx);
    }
    const bool complete = search.run();
    if (!complete && mode == SearchMode::Exact) {
        throw BudgetExceeded("exact search exceeded its node budget of " + std::to_string(opts.node_budget));
    }

    auto idx = search.best();
    std::sort(idx.begin(), idx.end());
    std::vector<Word> words;
    for (auto i : idx) words.emplace_back(q, search.word(i));
    SearchResult out{search.best_size(), Code(q, n, std::move(words)), complete, search.nodes()};
    if (!is_list_decodable(out.witness, t, L).passed()) throw std::logic_error("internal: search witness fails");
    return out;
}

BigInt gaussian_binomial(std::uint32_t q, std::size_t n, std::size_t k) {
    if (k > n) return 0;
    BigInt num = 1, den = 1;
    for (std::size_t i = 0; i < k; ++i) {
        num *= ipow(BigInt(q), n - i) - 1;
        den *= ipow(BigInt(q), i + 1) - 1;
    }
    return num / den;
}

bool for_each_linear_code(const Field& field, std::size_t n, std::size_t k,
                          const std::function<bool(const LinearCode&)>& f) {
    const std::uint32_t q = field.q();
    bool more = true;
    for_each_increasing(0, n, k, [&](const std::vector<std::size_t>& pivots) {
        std::vector<char> is_pivot(n, 0);
        for (auto p : pivots) is_pivot[p] = 1;
        std::vector<std::pair<std::size_t, std::size_t>> free;
        for (std::size_t r = 0; r < k; ++r) {
            for (std::size_t c = pivots[r] + 1; c < n; ++c) {
                if (!is_pivot[c]) free.emplace_back(r, c);
            }
        }
        Matrix g(k, std::vector<Symbol>(n, 0));
        for (std::size_t r = 0; r < k; ++r) g[r][pivots[r]] = 1;
        while (true) {
            if (!f(LinearCode(field, n, g))) return more = false;
            std::size_t pos = free.size();
            while (pos > 0) {
                auto& x = g[free[pos - 1].first][free[pos - 1].second];
                if (++x < q) break;
                x = 0;
                --pos;
            }
            if (pos == 0) return true;
        }
    });
    return more;
}

LinearSearchResult max_linear_search(const Field& field, std::size_t n, std::size_t t, std::size_t L, std::size_t ell,
                                     std::uint64_t budget) {
    if (L < 1 || ell < 1) throw ParameterError("L and ell must be at least 1");
    const std::uint32_t q = field.q();
    LinearSearchResult out;
    for (std::size_t k = n; k >= 1; --k) {
        if (gaussian_binomial(q, n, k) > budget) {
            throw BudgetExceeded("dimension " + std::to_string(k) + " has more than " + std::to_string(budget) +
                                 " subspaces");
        }
        std::optional<LinearCode> found;
        for_each_linear_code(field, n, k, [&](const LinearCode& code) {
            ++out.codes_checked;
            if (!check_linear(code, t, ell, L).passed()) return true;
            found.emplace(code);
            return false;
        });
        if (found) {
            out.k = k;
            out.witness = std::move(found);
            return out;
        }
    }
    return out;
}

std::vector<SeparationReport> separation_experiment(const std::vector<std::uint32_t>& q_list, std::size_t n,
                                                    std::size_t t, std::size_t L, const SeparationOptions& opts) {
    std::vector<SeparationReport> out;
    for (auto q : q_list) {
        Field field(q);
        SeparationReport r;
        r.q = q;
        r.n = n;
        r.t = t;
        r.L = L;
        if (t % L == 0) r.warnings.push_back("L divides t: no separation is expected in this regime");

        auto lin = max_linear_search(field, n, t, L);
        r.linear_k = lin.k;
        r.max_linear = ipow(BigInt(q), lin.k).convert_to<std::size_t>();
        r.linear_witness = lin.witness;
        r.linear_certified = !lin.witness || is_list_decodable(*lin.witness, t, L).passed();

        SearchOptions so;
        so.node_budget = opts.node_budget;
        if (lin.witness) so.incumbents.push_back(lin.witness->expand());
        for (std::size_t s = 0; s < opts.pipeline_seeds; ++s) {
            auto p = pipeline_sparse_to_code(n, q, t, L, opts.seed + s);
            if (p.certificate.passed()) so.incumbents.push_back(std::move(p.code));
        }
        auto nl = max_code_search(q, n, t, L, SearchMode::Budgeted, so);
        r.max_nonlinear = nl.size;
        r.nonlinear_exact = nl.exact;
        r.nonlinear_witness = std::move(nl.witness);
        r.nonlinear_certified = is_list_decodable(r.nonlinear_witness, t, L).passed();
        r.theta = std::log(static_cast<double>(r.max_nonlinear) / static_cast<double>(r.max_linear)) /
                  std::log(static_cast<double>(q));
        r.strict_separation = r.max_nonlinear > r.max_linear;
        out.push_back(std::move(r));
    }
    return out;
}

const char* rs_status_str(RsSearchStatus s) {
    switch (s) {
        case RsSearchStatus::Found: return "found";
        case RsSearchStatus::NoneExists: return "none_exists";
        case RsSearchStatus::Incomplete: return "incomplete";
    }
    return "unknown";
}

RsSearchResult rs_ld_search(const Field& field, std::size_t n, std::size_t k, std::size_t t, std::size_t L,
                            std::uint64_t budget) {
    const std::uint32_t q = field.q();
    if (n > q) throw ParameterError("RS codes need n <= q");
    if (k < 1 || k > n) throw ParameterError("need 1 <= k <= n");
    RsSearchResult out;
    out.status = RsSearchStatus::NoneExists;
    const std::size_t fixed = std::min<std::size_t>(n, 2);
    for_each_increasing(2, q, n - fixed, [&](const std::vector<std::size_t>& tail) {
        if (out.candidates >= budget) {
            out.status = RsSearchStatus::Incomplete;
            return false;
        }
        ++out.candidates;
        std::vector<Symbol> alpha{0, 1};
        alpha.resize(fixed);
        for (auto a : tail) alpha.push_back(static_cast<Symbol>(a));
        auto cert = is_list_decodable(rs_code(field, n, k, alpha), t, L);
        if (cert.passed()) {
            out.status = RsSearchStatus::Found;
            out.alpha = alpha;
            out.certificate = std::move(cert);
            return false;
        }
        return true;
    });
    return out;
}

Json search_result_to_json(const SearchResult& r) {
    return Json{{"size", r.size}, {"exact", r.exact}, {"nodes", r.nodes}, {"witness", code_to_json(r.witness)}};
}

Json separation_report_to_json(const SeparationReport& r) {
    Json j{{"q", r.q},
           {"n", r.n},
           {"t", r.t},
           {"L", r.L},
           {"max_linear", r.max_linear},
           {"linear_k", r.linear_k},
           {"max_nonlinear", r.max_nonlinear},
           {"nonlinear_exact", r.nonlinear_exact},
           {"theta", r.theta},
           {"strict_separation", r.strict_separation},
           {"linear_certified", r.linear_certified},
           {"nonlinear_certified", r.nonlinear_certified},
           {"nonlinear_witness", code_to_json(r.nonlinear_witness)},
           {"warnings", r.warnings}};
    j["linear_witness"] = r.linear_witness ? linear_code_to_json(*r.linear_witness) : Json(nullptr);
    return j;
}

}  // namespace ldlab
