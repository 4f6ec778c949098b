#include "ldlab/verify.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <string>
#include <thread>

#include "ldlab/core/quantities.hpp"
#include "ldlab/errors.hpp"

namespace ldlab {

namespace {

constexpr std::uint64_t kLaneHigh = 0x8080808080808080ull;
constexpr std::uint64_t kLaneOnes = 0x0101010101010101ull;

// Set of (coordinate, state) pairs already shown to be dead ends. Cleared in
// O(1) by bumping a generation counter so one instance serves many calls.
class DeadStateSet {
  public:
    void reset() {
        if (++generation_ == 0) {
            std::fill(slots_.begin(), slots_.end(), Slot{});
            generation_ = 1;
        }
        used_ = 0;
        if (slots_.empty()) slots_.resize(1024);
    }

    bool contains(std::uint32_t coord, std::uint64_t state) const {
        const std::size_t mask = slots_.size() - 1;
        for (std::size_t i = hash(coord, state) & mask;; i = (i + 1) & mask) {
            const Slot& s = slots_[i];
            if (s.generation != generation_) return false;
            if (s.coord == coord && s.state == state) return true;
        }
    }

    void insert(std::uint32_t coord, std::uint64_t state) {
        if (2 * (used_ + 1) > slots_.size()) grow();
        place(coord, state);
        ++used_;
    }

  private:
    struct Slot {
        std::uint64_t state = 0;
        std::uint32_t coord = 0;
        std::uint32_t generation = 0;
    };

    static std::size_t hash(std::uint32_t coord, std::uint64_t state) {
        std::uint64_t h = state * 0x9E3779B97F4A7C15ull ^ (static_cast<std::uint64_t>(coord) + 0x632BE59BD9B4E019ull);
        h ^= h >> 29;
        h *= 0xBF58476D1CE4E5B9ull;
        return static_cast<std::size_t>(h ^ (h >> 32));
    }

    void place(std::uint32_t coord, std::uint64_t state) {
        const std::size_t mask = slots_.size() - 1;
        for (std::size_t i = hash(coord, state) & mask;; i = (i + 1) & mask) {
            if (slots_[i].generation != generation_) {
                slots_[i] = Slot{state, coord, generation_};
                return;
            }
        }
    }

    void grow() {
        std::vector<Slot> old;
        old.swap(slots_);
        slots_.assign(old.size() * 2, Slot{});
        const std::uint32_t live = generation_;
        generation_ = 1;
        for (const auto& s : old) {
            if (s.generation == live) place(s.coord, s.state);
        }
    }

    std::vector<Slot> slots_;
    std::uint32_t generation_ = 0;
    std::size_t used_ = 0;
};

// Depth-first search over coordinates. options[c][k] is the per-word miss
// increment (one 8-bit lane per word) of option k at coordinate c. Finds the
// lexicographically first option sequence keeping every lane <= t.
class MissCountSearch {
  public:
    bool run(const std::vector<std::vector<std::uint64_t>>& options, std::size_t s, std::size_t t,
             std::vector<std::uint32_t>& choice) {
        options_ = &options;
        n_ = options.size();
        t_ = t;
        lanes_ = s == 8 ? ~0ull : ((1ull << (8 * s)) - 1);
        bias_ = t <= 127 ? (127 - t) * kLaneOnes & lanes_ : 0;
        choice.assign(n_, 0);
        choice_ = &choice;
        dead_.reset();
        return descend(0, 0);
    }

  private:
    bool exceeds(std::uint64_t state) const {
        if (t_ <= 127) return ((state + bias_) & kLaneHigh & lanes_) != 0;
        for (std::size_t i = 0; i < 8; ++i) {
            if (((state >> (8 * i)) & 0xFF) > t_) return true;
        }
        return false;
    }

    bool descend(std::uint32_t coord, std::uint64_t state) {
        if (coord == n_) return true;
        if (dead_.contains(coord, state)) return false;
        const auto& opts = (*options_)[coord];
        for (std::uint32_t k = 0; k < opts.size(); ++k) {
            const std::uint64_t next = state + opts[k];
            if (exceeds(next)) continue;
            (*choice_)[coord] = k;
            if (descend(coord + 1, next)) return true;
        }
        dead_.insert(coord, state);
        return false;
    }

    const std::vector<std::vector<std::uint64_t>>* options_ = nullptr;
    std::vector<std::uint32_t>* choice_ = nullptr;
    std::size_t n_ = 0, t_ = 0;
    std::uint64_t lanes_ = 0, bias_ = 0;
    DeadStateSet dead_;
};

MissCountSearch& thread_search() {
    thread_local MissCountSearch search;
    return search;
}

struct Shape {
    std::uint32_t q;
    std::size_t n;
};

Shape check_words(std::span<const Word> words) {
    if (words.empty()) throw ParameterError("at least one word is required");
    if (words.size() > kMaxDpWords) {
        throw ParameterError("at most " + std::to_string(kMaxDpWords) + " words are supported, got " +
                             std::to_string(words.size()));
    }
    const Shape shape{words[0].q(), words[0].n()};
    for (const auto& w : words) {
        if (w.q() != shape.q || w.n() != shape.n) throw ParameterError("words have inconsistent (q, n)");
    }
    return shape;
}

std::uint64_t miss_increment(std::uint32_t match_mask, std::size_t s) {
    std::uint64_t inc = 0;
    for (std::size_t i = 0; i < s; ++i) {
        if (!((match_mask >> i) & 1u)) inc |= 1ull << (8 * i);
    }
    return inc;
}

// Distinct symbols at coordinate c (ascending) and the mask of words holding each.
void symbols_at(std::span<const Word> words, std::size_t c, std::vector<Symbol>& syms, std::vector<std::uint32_t>& masks) {
    syms.clear();
    masks.clear();
    for (std::size_t i = 0; i < words.size(); ++i) {
        const Symbol x = words[i][c];
        auto it = std::lower_bound(syms.begin(), syms.end(), x);
        const auto pos = static_cast<std::size_t>(it - syms.begin());
        if (it == syms.end() || *it != x) {
            syms.insert(it, x);
            masks.insert(masks.begin() + static_cast<std::ptrdiff_t>(pos), 0u);
        }
        masks[pos] |= 1u << i;
    }
}

Symbol fresh_symbol(const std::vector<Symbol>& present) {
    Symbol s = 0;
    for (Symbol x : present) {
        if (x != s) break;
        ++s;
    }
    return s;
}

std::size_t effective_radius(std::size_t t, std::size_t n) {
    const std::size_t eff = std::min(t, n);
    if (eff > 254) throw ParameterError("radius too large for the disagreement-count search");
    return eff;
}

// Calls f(indices) for each r-subset of [0, d) in lexicographic order.
template <typename F>
void for_each_combination(std::size_t d, std::size_t r, F&& f) {
    std::vector<std::size_t> idx(r);
    for (std::size_t i = 0; i < r; ++i) idx[i] = i;
    while (true) {
        f(idx);
        std::size_t i = r;
        while (i > 0 && idx[i - 1] == d - r + i - 1) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t j = i; j < r; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace

std::size_t box_misses(const Word& w, const Box& box) {
    if (box.size() != w.n()) throw ParameterError("box length differs from word length");
    std::size_t misses = 0;
    for (std::size_t i = 0; i < w.n(); ++i) misses += !std::binary_search(box[i].begin(), box[i].end(), w[i]);
    return misses;
}

std::optional<Word> common_center_exists(std::span<const Word> words, std::size_t t) {
    const Shape shape = check_words(words);
    const std::size_t s = words.size();
    const std::size_t radius = effective_radius(t, shape.n);

    std::vector<std::vector<std::uint64_t>> options(shape.n);
    std::vector<std::vector<Symbol>> option_symbols(shape.n);
    std::vector<Symbol> syms;
    std::vector<std::uint32_t> masks;
    for (std::size_t c = 0; c < shape.n; ++c) {
        symbols_at(words, c, syms, masks);
        for (std::size_t k = 0; k < syms.size(); ++k) {
            options[c].push_back(miss_increment(masks[k], s));
            option_symbols[c].push_back(syms[k]);
        }
        if (shape.q > syms.size()) {
            options[c].push_back(miss_increment(0, s));
            option_symbols[c].push_back(fresh_symbol(syms));
        }
    }
    std::vector<std::uint32_t> choice;
    if (!thread_search().run(options, s, radius, choice)) return std::nullopt;
    std::vector<Symbol> center(shape.n);
    for (std::size_t c = 0; c < shape.n; ++c) center[c] = option_symbols[c][choice[c]];
    return Word(shape.q, std::move(center));
}

std::optional<Box> common_box_exists(std::span<const Word> words, std::size_t t, std::size_t ell) {
    const Shape shape = check_words(words);
    if (ell == 0) throw ParameterError("list size ell must be at least 1");
    if (ell > shape.q) throw ParameterError("ell exceeds the alphabet size");
    const std::size_t s = words.size();
    const std::size_t radius = effective_radius(t, shape.n);

    std::vector<std::vector<std::uint64_t>> options(shape.n);
    std::vector<std::vector<std::vector<Symbol>>> option_sets(shape.n);
    std::vector<Symbol> syms;
    std::vector<std::uint32_t> masks;
    for (std::size_t c = 0; c < shape.n; ++c) {
        symbols_at(words, c, syms, masks);
        const std::size_t r = std::min(ell, syms.size());
        for_each_combination(syms.size(), r, [&](const std::vector<std::size_t>& idx) {
            std::uint32_t mask = 0;
            std::vector<Symbol> set;
            for (auto i : idx) {
                mask |= masks[i];
                set.push_back(syms[i]);
            }
            options[c].push_back(miss_increment(mask, s));
            option_sets[c].push_back(std::move(set));
        });
    }
    std::vector<std::uint32_t> choice;
    if (!thread_search().run(options, s, radius, choice)) return std::nullopt;
    Box box(shape.n);
    for (std::size_t c = 0; c < shape.n; ++c) box[c] = option_sets[c][choice[c]];
    return box;
}

std::optional<Word> common_center_exhaustive(std::span<const Word> words, std::size_t t, std::uint64_t budget) {
    if (words.empty()) throw ParameterError("at least one word is required");
    const std::uint32_t q = words[0].q();
    const std::size_t n = words[0].n();
    for (const auto& w : words) {
        if (w.q() != q || w.n() != n) throw ParameterError("words have inconsistent (q, n)");
    }
    long double total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= q;
    if (total > static_cast<long double>(budget)) throw BudgetExceeded("q^n exceeds the exhaustive center budget");

    std::vector<Symbol> y(n, 0);
    while (true) {
        bool ok = true;
        for (const auto& w : words) {
            std::size_t d = 0;
            for (std::size_t i = 0; i < n && d <= t; ++i) d += y[i] != w[i];
            if (d > t) {
                ok = false;
                break;
            }
        }
        if (ok) return Word(q, y);
        std::size_t pos = n;
        while (pos > 0 && y[pos - 1] + 1 == q) y[--pos] = 0;
        if (pos == 0) return std::nullopt;
        ++y[pos - 1];
    }
}

std::optional<Box> common_box_exhaustive(std::span<const Word> words, std::size_t t, std::size_t ell,
                                         std::uint64_t budget) {
    if (words.empty()) throw ParameterError("at least one word is required");
    const std::uint32_t q = words[0].q();
    const std::size_t n = words[0].n();
    if (ell == 0) throw ParameterError("list size ell must be at least 1");
    const std::size_t r = std::min<std::size_t>(ell, q);
    std::vector<std::vector<Symbol>> lists;
    for_each_combination(q, r, [&](const std::vector<std::size_t>& idx) {
        lists.emplace_back(idx.begin(), idx.end());
    });
    long double total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= static_cast<long double>(lists.size());
    if (total > static_cast<long double>(budget)) throw BudgetExceeded("box count exceeds the exhaustive budget");

    std::vector<std::size_t> pick(n, 0);
    Box box(n);
    while (true) {
        for (std::size_t i = 0; i < n; ++i) box[i] = lists[pick[i]];
        bool ok = true;
        for (const auto& w : words) {
            if (box_misses(w, box) > t) {
                ok = false;
                break;
            }
        }
        if (ok) return box;
        std::size_t pos = n;
        while (pos > 0 && pick[pos - 1] + 1 == lists.size()) pick[--pos] = 0;
        if (pos == 0) return std::nullopt;
        ++pick[pos - 1];
    }
}

namespace {

// Lexicographic scan of (L+1)-subsets with incremental pruning.
class SubsetScanner {
  public:
    SubsetScanner(const Code& code, std::size_t t, std::size_t ell, std::size_t target, const VerifyOptions& opts)
        : code_(code), t_(t), ell_(ell), target_(target), opts_(opts) {}

    // Scans subsets that contain every index in `fixed` plus target-|fixed|
    // indices drawn from `pool` (ascending). Returns the first violation.
    Certificate scan(const std::vector<std::size_t>& fixed, const std::vector<std::size_t>& pool) {
        Certificate cert;
        cert.t = t_;
        cert.ell = ell_;
        cert.list_size = target_ - 1;
        if (target_ > kMaxDpWords) {
            throw ParameterError("list size too large: subsets of more than " + std::to_string(kMaxDpWords) +
                                 " words are not supported");
        }
        if (fixed.size() > target_ || code_.size() < target_) return cert;

        std::vector<std::size_t> roots;
        for (auto i : pool) {
            if (compatible_with(fixed, i)) roots.push_back(i);
        }
        if (fixed.size() == target_) {
            Found f;
            if (final_check(fixed, f)) fill(cert, f);
            return cert;
        }

        const unsigned workers = std::max(1u, opts_.threads);
        std::vector<Found> results(workers);
        std::atomic<std::size_t> best_root{roots.size()};
        auto work = [&](unsigned w) {
            for (std::size_t r = w; r < roots.size(); r += workers) {
                if (r > best_root.load()) return;
                std::vector<std::size_t> chosen = fixed;
                chosen.push_back(roots[r]);
                std::vector<std::size_t> cands;
                for (std::size_t j = r + 1; j < roots.size(); ++j) {
                    if (compatible(roots[r], roots[j])) cands.push_back(roots[j]);
                }
                if (extend(chosen, cands, results[w])) {
                    results[w].rank = r;
                    std::size_t cur = best_root.load();
                    while (r < cur && !best_root.compare_exchange_weak(cur, r)) {
                    }
                    return;
                }
            }
        };
        if (workers == 1) {
            work(0);
        } else {
            std::vector<std::thread> pool_threads;
            for (unsigned w = 0; w < workers; ++w) pool_threads.emplace_back(work, w);
            for (auto& th : pool_threads) th.join();
        }
        const Found* winner = nullptr;
        for (const auto& f : results) {
            if (f.found && (!winner || f.rank < winner->rank)) winner = &f;
        }
        if (winner) fill(cert, *winner);
        return cert;
    }

  private:
    struct Found {
        bool found = false;
        std::size_t rank = 0;
        std::vector<std::size_t> indices;
        std::optional<Word> center;
        std::optional<Box> box;
    };

    bool compatible(std::size_t a, std::size_t b) const {
        return ell_ > 1 || hamming_distance(code_[a], code_[b]) <= 2 * t_;
    }

    bool compatible_with(const std::vector<std::size_t>& fixed, std::size_t i) const {
        for (auto f : fixed) {
            if (f == i || !compatible(f, i)) return false;
        }
        return true;
    }

    void count_node() {
        if (nodes_.fetch_add(1, std::memory_order_relaxed) >= opts_.node_budget) {
            throw BudgetExceeded("undecided at budget: more than " + std::to_string(opts_.node_budget) +
                                 " subsets examined");
        }
    }

    bool needs_check(std::size_t size) const {
        if (size == target_) return true;
        return ell_ == 1 ? size >= 3 : size > ell_;
    }

    std::vector<Word> words_of(const std::vector<std::size_t>& idx) const {
        std::vector<Word> ws;
        ws.reserve(idx.size());
        for (auto i : idx) ws.push_back(code_[i]);
        return ws;
    }

    bool feasible(const std::vector<std::size_t>& idx) const {
        auto ws = words_of(idx);
        return ell_ == 1 ? common_center_exists(ws, t_).has_value() : common_box_exists(ws, t_, ell_).has_value();
    }

    bool final_check(const std::vector<std::size_t>& idx, Found& out) const {
        auto ws = words_of(idx);
        if (ell_ == 1) {
            auto c = common_center_exists(ws, t_);
            if (!c) return false;
            out.center = std::move(c);
        } else {
            auto b = common_box_exists(ws, t_, ell_);
            if (!b) return false;
            out.box = std::move(b);
        }
        out.found = true;
        out.indices = idx;
        return true;
    }

    bool extend(std::vector<std::size_t>& chosen, const std::vector<std::size_t>& cands, Found& out) {
        count_node();
        if (chosen.size() == target_) return final_check(chosen, out);
        if (needs_check(chosen.size()) && !feasible(chosen)) return false;
        const std::size_t need = target_ - chosen.size();
        for (std::size_t k = 0; k + need <= cands.size(); ++k) {
            chosen.push_back(cands[k]);
            std::vector<std::size_t> next;
            next.reserve(cands.size() - k);
            for (std::size_t j = k + 1; j < cands.size(); ++j) {
                if (compatible(cands[k], cands[j])) next.push_back(cands[j]);
            }
            const bool hit = extend(chosen, next, out);
            chosen.pop_back();
            if (hit) return true;
        }
        return false;
    }

    void fill(Certificate& cert, const Found& f) const {
        cert.verdict = Verdict::Fail;
        cert.witness_indices = f.indices;
        std::sort(cert.witness_indices.begin(), cert.witness_indices.end());
        cert.witness_words = words_of(cert.witness_indices);
        cert.center = f.center;
        cert.box = f.box;
    }

    const Code& code_;
    std::size_t t_, ell_, target_;
    VerifyOptions opts_;
    std::atomic<std::uint64_t> nodes_{0};
};

void check_params(const Code& code, std::size_t t, std::size_t ell, std::size_t L) {
    if (L < 1) throw ParameterError("list size L must be at least 1");
    if (ell < 1) throw ParameterError("ell must be at least 1");
    if (ell > code.q()) throw ParameterError("ell exceeds the alphabet size");
    (void)t;
}

std::vector<std::size_t> all_indices(std::size_t n) {
    std::vector<std::size_t> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = i;
    return v;
}

}  // namespace

Certificate is_list_recoverable(const Code& code, std::size_t t, std::size_t ell, std::size_t L,
                                const VerifyOptions& opts) {
    check_params(code, t, ell, L);
    SubsetScanner scanner(code, t, ell, L + 1, opts);
    return scanner.scan({}, all_indices(code.size()));
}

Certificate is_list_decodable(const Code& code, std::size_t t, std::size_t L, const VerifyOptions& opts) {
    return is_list_recoverable(code, t, 1, L, opts);
}

Certificate check_subsets_through(const Code& code, std::size_t anchor, std::size_t t, std::size_t ell, std::size_t L,
                                  const VerifyOptions& opts) {
    check_params(code, t, ell, L);
    if (anchor >= code.size()) throw ParameterError("anchor index out of range");
    std::vector<std::size_t> pool;
    pool.reserve(code.size());
    for (std::size_t i = 0; i < code.size(); ++i) {
        if (i != anchor) pool.push_back(i);
    }
    SubsetScanner scanner(code, t, ell, L + 1, opts);
    return scanner.scan({anchor}, pool);
}

Certificate is_list_recoverable(const LinearCode& code, std::size_t t, std::size_t ell, std::size_t L,
                                const VerifyOptions& opts) {
    const Code expanded = code.expand();
    return check_subsets_through(expanded, 0, t, ell, L, opts);
}

Certificate is_list_decodable(const LinearCode& code, std::size_t t, std::size_t L, const VerifyOptions& opts) {
    return is_list_recoverable(code, t, 1, L, opts);
}

namespace {

// Max occupancy by enumerating every center (ell = 1) or maximal box.
std::size_t occupancy_by_enumeration(const Code& code, std::size_t t, std::size_t ell) {
    const std::uint32_t q = code.q();
    const std::size_t n = code.n();
    const std::size_t r = std::min<std::size_t>(ell, q);
    std::vector<std::vector<Symbol>> lists;
    for_each_combination(q, r, [&](const std::vector<std::size_t>& idx) { lists.emplace_back(idx.begin(), idx.end()); });
    std::vector<std::size_t> pick(n, 0);
    std::size_t best = 0;
    Box box(n);
    while (true) {
        for (std::size_t i = 0; i < n; ++i) box[i] = lists[pick[i]];
        std::size_t count = 0;
        for (const auto& w : code) count += box_misses(w, box) <= t;
        best = std::max(best, count);
        std::size_t pos = n;
        while (pos > 0 && pick[pos - 1] + 1 == lists.size()) pick[--pos] = 0;
        if (pos == 0) break;
        ++pick[pos - 1];
    }
    return best;
}

class OccupancySearch {
  public:
    OccupancySearch(const Code& code, std::size_t t, std::size_t ell, const VerifyOptions& opts)
        : code_(code), t_(t), ell_(ell), opts_(opts) {}

    std::size_t run() {
        std::vector<std::size_t> chosen;
        std::vector<std::size_t> cands(code_.size());
        for (std::size_t i = 0; i < cands.size(); ++i) cands[i] = i;
        best_ = code_.empty() ? 0 : 1;
        grow(chosen, cands);
        return best_;
    }

  private:
    bool compatible(std::size_t a, std::size_t b) const {
        return ell_ > 1 || hamming_distance(code_[a], code_[b]) <= 2 * t_;
    }

    bool feasible(const std::vector<std::size_t>& idx) {
        if (idx.size() > kMaxDpWords) {
            throw BudgetExceeded("occupancy exceeds " + std::to_string(kMaxDpWords) +
                                 " words and the space is too large to enumerate centers");
        }
        std::vector<Word> ws;
        for (auto i : idx) ws.push_back(code_[i]);
        return ell_ == 1 ? common_center_exists(ws, t_).has_value() : common_box_exists(ws, t_, ell_).has_value();
    }

    void grow(std::vector<std::size_t>& chosen, const std::vector<std::size_t>& cands) {
        if (++nodes_ > opts_.node_budget) throw BudgetExceeded("undecided at budget in list-size search");
        best_ = std::max(best_, chosen.size());
        for (std::size_t k = 0; k < cands.size(); ++k) {
            if (chosen.size() + (cands.size() - k) <= best_) return;
            chosen.push_back(cands[k]);
            const bool trivially_ok = ell_ == 1 ? chosen.size() <= 2 : chosen.size() <= ell_;
            if (trivially_ok || feasible(chosen)) {
                std::vector<std::size_t> next;
                for (std::size_t j = k + 1; j < cands.size(); ++j) {
                    if (compatible(cands[k], cands[j])) next.push_back(cands[j]);
                }
                grow(chosen, next);
            }
            chosen.pop_back();
        }
    }

    const Code& code_;
    std::size_t t_, ell_;
    VerifyOptions opts_;
    std::size_t best_ = 0;
    std::uint64_t nodes_ = 0;
};

}  // namespace

std::size_t minimal_list_size(const Code& code, std::size_t t, std::size_t ell, const VerifyOptions& opts) {
    check_params(code, t, ell, 1);
    if (code.empty()) return 0;
    long double boxes = 1;
    const auto per = binomial(code.q(), std::min<std::size_t>(ell, code.q())).convert_to<long double>();
    for (std::size_t i = 0; i < code.n(); ++i) boxes *= per;
    if (boxes * static_cast<long double>(code.size()) <= 5e7L) return occupancy_by_enumeration(code, t, ell);
    return OccupancySearch(code, t, ell, opts).run();
}

bool certificate_holds(const Code& code, const Certificate& cert) {
    if (cert.verdict == Verdict::Pass) return !cert.center && !cert.box && cert.witness_indices.empty();
    if (cert.witness_indices.size() != cert.list_size + 1) return false;
    if (cert.witness_words.size() != cert.witness_indices.size()) return false;
    for (std::size_t i = 0; i < cert.witness_indices.size(); ++i) {
        const auto idx = cert.witness_indices[i];
        if (idx >= code.size() || code[idx] != cert.witness_words[i]) return false;
        for (std::size_t j = 0; j < i; ++j) {
            if (cert.witness_indices[j] == idx) return false;
        }
    }
    if (cert.center) {
        for (const auto& w : cert.witness_words) {
            if (hamming_distance(*cert.center, w) > cert.t) return false;
        }
        return true;
    }
    if (cert.box) {
        for (const auto& list : *cert.box) {
            if (list.size() > cert.ell) return false;
            for (auto s : list) {
                if (s >= code.q()) return false;
            }
        }
        for (const auto& w : cert.witness_words) {
            if (box_misses(w, *cert.box) > cert.t) return false;
        }
        return true;
    }
    return false;
}

Json certificate_to_json(const Certificate& cert) {
    Json j;
    j["verdict"] = cert.passed() ? "pass" : "fail";
    j["t"] = cert.t;
    j["L"] = cert.list_size;
    j["ell"] = cert.ell;
    j["witness_indices"] = cert.witness_indices;
    Json words = Json::array();
    for (const auto& w : cert.witness_words) words.push_back(word_to_json(w));
    j["witness_words"] = std::move(words);
    if (cert.center) j["center"] = word_to_json(*cert.center);
    if (cert.box) j["box"] = *cert.box;
    return j;
}

}  // namespace ldlab
