#include "ldlab/witness.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

#include "ldlab/errors.hpp"

namespace ldlab {

namespace {

std::string str(std::size_t v) { return std::to_string(v); }

void same_shape(std::span<const Word> words) {
    for (const auto& w : words) {
        if (w.q() != words[0].q() || w.n() != words[0].n()) throw ParameterError("words have inconsistent (q, n)");
    }
}

void require_distinct(std::span<const Word> words) {
    std::vector<Word> sorted(words.begin(), words.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw PreconditionError("input words must be distinct");
    }
}

void require_common_suffix(std::span<const Word> words, std::size_t from) {
    for (const auto& w : words) {
        for (std::size_t c = from; c < w.n(); ++c) {
            if (w[c] != words[0][c]) {
                throw PreconditionError("words do not agree on coordinates " + str(from) + ".." + str(w.n() - 1));
            }
        }
    }
}

void check_center(const CenterWitness& w) {
    if (!witness_holds(w)) throw std::logic_error("internal: constructed center does not capture every word");
}

void check_box(const BoxWitness& w) {
    if (!witness_holds(w)) throw std::logic_error("internal: constructed box does not capture every word");
}

// Places symbols of words[j] on an ell x |coords| slot grid, row by row; word
// j owns slots [j t', (j+1) t') and slot s lands on coordinate coords[s mod m].
void fill_slots(std::span<const Word> words, const std::vector<std::size_t>& coords, std::size_t t_prime,
                std::size_t ell, Box& box, std::vector<std::vector<std::size_t>>& contributors) {
    const std::size_t m = coords.size();
    if (words.size() * t_prime > ell * m) {
        throw PreconditionError("counting condition (L+1)t' <= ell m fails: " + str(words.size() * t_prime) + " > " +
                                str(ell * m));
    }
    contributors.assign(m, {});
    for (std::size_t j = 0; j < words.size(); ++j) {
        for (std::size_t s = j * t_prime; s < (j + 1) * t_prime; ++s) {
            const std::size_t pos = s % m;
            const std::size_t c = coords[pos];
            auto& list = box[c];
            const Symbol x = words[j][c];
            if (!std::binary_search(list.begin(), list.end(), x)) list.insert(std::upper_bound(list.begin(), list.end(), x), x);
            contributors[pos].push_back(j);
        }
    }
}

std::size_t expansion_index(const Code& expanded, const Word& w) {
    for (std::size_t i = 0; i < expanded.size(); ++i) {
        if (expanded[i] == w) return i;
    }
    throw std::logic_error("internal: word is not a codeword");
}

// Calls f(subset) for every k-subset of [0, n), lexicographically.
template <typename F>
void for_each_subset(std::size_t n, std::size_t k, F&& f) {
    if (k > n) return;
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        f(idx);
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

std::uint64_t projection_hash(const Word& w, const std::vector<std::size_t>& cols) {
    std::uint64_t h = 0x84222325CBF29CE4ull;
    for (auto c : cols) {
        h ^= w[c] + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2);
        h *= 0x100000001B3ull;
    }
    return h;
}

bool agree_on(const Word& x, const Word& y, const std::vector<std::size_t>& cols) {
    for (auto c : cols) {
        if (x[c] != y[c]) return false;
    }
    return true;
}

// Calls f(i, j) for every pair of words (i < j) equal on `cols`.
template <typename F>
void for_each_colliding_pair(const Code& code, const std::vector<std::size_t>& cols, F&& f) {
    std::vector<std::pair<std::uint64_t, std::size_t>> keyed(code.size());
    for (std::size_t i = 0; i < code.size(); ++i) keyed[i] = {projection_hash(code[i], cols), i};
    std::sort(keyed.begin(), keyed.end());
    for (std::size_t lo = 0; lo < keyed.size();) {
        std::size_t hi = lo + 1;
        while (hi < keyed.size() && keyed[hi].first == keyed[lo].first) ++hi;
        for (std::size_t a = lo; a < hi; ++a) {
            for (std::size_t b = a + 1; b < hi; ++b) {
                const auto i = std::min(keyed[a].second, keyed[b].second);
                const auto j = std::max(keyed[a].second, keyed[b].second);
                if (agree_on(code[i], code[j], cols) && !f(i, j)) return;
            }
        }
        lo = hi;
    }
}

}  // namespace

bool witness_holds(const CenterWitness& w) {
    for (std::size_t i = 0; i < w.captured.size(); ++i) {
        if (w.captured[i].n() != w.center.n() || w.captured[i].q() != w.center.q()) return false;
        if (hamming_distance(w.center, w.captured[i]) > w.t) return false;
        for (std::size_t j = 0; j < i; ++j) {
            if (w.captured[i] == w.captured[j]) return false;
        }
    }
    return true;
}

bool witness_holds(const BoxWitness& w) {
    for (const auto& list : w.box) {
        if (list.size() > w.ell) return false;
    }
    for (std::size_t i = 0; i < w.captured.size(); ++i) {
        if (w.captured[i].n() != w.box.size()) return false;
        if (box_misses(w.captured[i], w.box) > w.t) return false;
        for (std::size_t j = 0; j < i; ++j) {
            if (w.captured[i] == w.captured[j]) return false;
        }
    }
    return true;
}

Json witness_to_json(const CenterWitness& w) {
    Json words = Json::array();
    for (const auto& c : w.captured) words.push_back(word_to_json(c));
    Json j{{"kind", "center"},
           {"t", w.t},
           {"center", word_to_json(w.center)},
           {"captured", std::move(words)},
           {"captured_indices", w.captured_indices}};
    if (!w.notes.empty()) j["notes"] = w.notes;
    return j;
}

Json witness_to_json(const BoxWitness& w) {
    Json words = Json::array();
    for (const auto& c : w.captured) words.push_back(word_to_json(c));
    return Json{{"kind", "box"},
                {"t", w.t},
                {"ell", w.ell},
                {"box", w.box},
                {"captured", std::move(words)},
                {"captured_indices", w.captured_indices},
                {"free_coordinates", w.free_coordinates},
                {"contributors", w.contributors}};
}

CenterWitness refute_center_from_cluster(std::span<const Word> words, std::size_t t, std::size_t L) {
    if (L < 1) throw ParameterError("L must be at least 1");
    if (words.size() < L + 1) throw PreconditionError("need at least L+1 words, got " + str(words.size()));
    same_shape(words);
    require_distinct(words);
    const std::size_t n = words[0].n();
    const std::size_t a = t / L, b = t % L;
    const std::size_t m = (L + 1) * t / L + 1;
    if (m > n) throw PreconditionError("m = floor((L+1)t/L) + 1 = " + str(m) + " exceeds n = " + str(n));
    if (a + 1 < L) throw PreconditionError("requires floor(t/L) + 1 >= L");
    require_common_suffix(words, m);

    const std::size_t M = words.size();
    std::vector<std::vector<std::size_t>> agree(M, std::vector<std::size_t>(M, 0));
    for (std::size_t i = 0; i < M; ++i) {
        for (std::size_t j = i + 1; j < M; ++j) {
            std::size_t cnt = 0;
            for (std::size_t c = 0; c < m; ++c) cnt += words[i][c] == words[j][c];
            agree[i][j] = agree[j][i] = cnt;
        }
    }
    std::size_t v = M;
    for (std::size_t i = 0; i < M && v == M; ++i) {
        std::size_t deg = 0;
        for (std::size_t j = 0; j < M; ++j) deg += agree[i][j];
        if (deg >= L - b) v = i;
    }
    if (v == M) throw PreconditionError("no word has agreement degree >= L - (t mod L); the cluster is too small");

    std::vector<std::size_t> others;
    for (std::size_t j = 0; j < M; ++j) {
        if (j != v) others.push_back(j);
    }
    std::stable_sort(others.begin(), others.end(),
                     [&](std::size_t x, std::size_t y) { return agree[v][x] > agree[v][y]; });
    others.resize(L);
    std::sort(others.begin(), others.end());

    std::vector<std::size_t> hits(m, 0);
    for (auto u : others) {
        for (std::size_t c = 0; c < m; ++c) hits[c] += words[u][c] == words[v][c];
    }
    std::vector<std::size_t> order(m);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return hits[x] > hits[y]; });
    std::vector<char> in_a(m, 0);
    std::size_t sum_a = 0;
    for (std::size_t i = 0; i < a + 1; ++i) {
        in_a[order[i]] = 1;
        sum_a += hits[order[i]];
    }
    if (sum_a < L - b) throw std::logic_error("internal: chosen coordinate set has too few agreements");

    std::vector<Symbol> y(words[v].begin(), words[v].end());
    std::vector<std::size_t> rest;
    for (std::size_t c = 0; c < m; ++c) {
        if (!in_a[c]) rest.push_back(c);
    }
    std::size_t pos = 0;
    for (std::size_t i = 0; i < L; ++i) {
        const auto u = others[i];
        std::size_t overlap = 0;
        for (std::size_t c = 0; c < m; ++c) overlap += in_a[c] && words[u][c] == words[v][c];
        const std::size_t need = a + 1 > overlap ? a + 1 - overlap : 0;
        const std::size_t end = i + 1 == L ? rest.size() : pos + need;
        if (end > rest.size()) throw std::logic_error("internal: partition of the remaining coordinates overflows");
        for (; pos < end; ++pos) y[rest[pos]] = words[u][rest[pos]];
    }

    CenterWitness w;
    w.center = Word(words[0].q(), std::move(y));
    w.t = t;
    w.captured_indices.push_back(v);
    w.captured.push_back(words[v]);
    for (auto u : others) {
        w.captured_indices.push_back(u);
        w.captured.push_back(words[u]);
    }
    check_center(w);
    return w;
}

CenterWitness refute_linear(const LinearCode& code, std::size_t t, std::size_t L) {
    const std::size_t n = code.n(), k = code.k();
    const std::uint32_t q = code.q();
    if (L < 2) throw HypothesisFailure("requires L >= 2");
    if (t * (L + 1) >= n * L) throw HypothesisFailure("requires t(L+1) < nL");
    const std::size_t c = ((L + 1) * t + L - 1) / L;
    if (k + c != n + 1) {
        throw HypothesisFailure("dimension must equal n - ceil((L+1)t/L) + 1 = " + str(n + 1 - c) + ", got k = " + str(k));
    }
    if (k * (q - 1) <= (L - 1) * q) {
        throw HypothesisFailure("k(q-1) > (L-1)q fails: " + str(k * (q - 1)) + " <= " + str((L - 1) * q));
    }
    const Field& f = code.field();
    const auto info = find_information_set(code);
    const Matrix inv = invert(f, select_columns(code.generator(), info));
    const Matrix sys = multiply(f, inv, code.generator());
    std::vector<char> is_info(n, 0);
    for (auto i : info) is_info[i] = 1;
    std::vector<std::size_t> non_info;
    for (std::size_t i = 0; i < n; ++i) {
        if (!is_info[i]) non_info.push_back(i);
    }
    const std::size_t pivot = non_info[0];

    // Pigeonhole over the k(q-1) weight-one-message codewords, ordered by (row, scalar).
    struct Entry {
        std::size_t row;
        Symbol scalar;
    };
    std::vector<std::vector<Entry>> bucket(q);
    std::vector<Entry> chosen;
    for (std::size_t r = 0; r < k && chosen.empty(); ++r) {
        for (Symbol lam = 1; lam < q; ++lam) {
            auto& bk = bucket[f.mul(lam, sys[r][pivot])];
            bk.push_back({r, lam});
            if (bk.size() == L) {
                chosen = bk;
                break;
            }
        }
    }
    if (chosen.empty()) throw std::logic_error("internal: pigeonhole found no L agreeing codewords");

    std::vector<std::vector<Symbol>> cw;
    std::vector<std::vector<Symbol>> msg;
    for (const auto& e : chosen) {
        std::vector<Symbol> word(n), m(k);
        for (std::size_t i = 0; i < n; ++i) word[i] = f.mul(e.scalar, sys[e.row][i]);
        for (std::size_t i = 0; i < k; ++i) m[i] = f.mul(e.scalar, inv[e.row][i]);
        cw.push_back(std::move(word));
        msg.push_back(std::move(m));
    }

    const std::size_t a = t / L, b = t % L;
    const std::size_t block = b != 0 ? a : a - 1;
    const std::vector<std::size_t> rest(non_info.begin() + 1, non_info.end());
    if (rest.size() < (L + 1) * block) throw std::logic_error("internal: too few coordinates for the partition");

    std::vector<Symbol> y(n, 0);
    y[pivot] = cw[0][pivot];
    for (std::size_t j = 0; j < L; ++j) {
        for (std::size_t p = j * block; p < (j + 1) * block; ++p) y[rest[p]] = cw[j][rest[p]];
    }

    CenterWitness w;
    w.center = Word(q, std::move(y));
    w.t = t;
    w.captured.push_back(Word::zeros(q, n));
    w.captured_indices.push_back(0);
    for (std::size_t j = 0; j < L; ++j) {
        std::size_t index = 0;
        for (auto s : msg[j]) index = index * q + s;
        w.captured.push_back(Word(q, cw[j]));
        w.captured_indices.push_back(index);
    }
    if (b == 0) w.notes.push_back("L divides t: the last partition block is set to zero");
    check_center(w);
    return w;
}

BoxWitness refute_recovery_box(std::span<const Word> words, std::size_t t, std::size_t ell) {
    if (words.size() < 2) throw PreconditionError("need at least two words");
    same_shape(words);
    require_distinct(words);
    const std::size_t L = words.size() - 1;
    if (ell < 1 || ell > L) throw PreconditionError("requires 1 <= ell <= L");
    const std::size_t n = words[0].n();
    const std::size_t t_prime = ell * t / (L + 1 - ell);
    const std::size_t m = t + t_prime;
    if (m > n) throw PreconditionError("m = t + t' = " + str(m) + " exceeds n = " + str(n));

    BoxWitness w;
    w.t = t;
    w.ell = ell;
    w.box.assign(n, {});
    for (std::size_t c = m; c < n; ++c) {
        auto& list = w.box[c];
        for (const auto& x : words) list.push_back(x[c]);
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
        if (list.size() > ell) {
            throw PreconditionError("words take more than ell symbols at suffix coordinate " + str(c));
        }
    }
    w.free_coordinates.resize(m);
    std::iota(w.free_coordinates.begin(), w.free_coordinates.end(), 0);
    fill_slots(words, w.free_coordinates, t_prime, ell, w.box, w.contributors);
    for (std::size_t j = 0; j < words.size(); ++j) {
        w.captured.push_back(words[j]);
        w.captured_indices.push_back(j);
    }
    check_box(w);
    return w;
}

BoxWitness refute_linear_distance(const LinearCode& code, std::size_t t, std::size_t ell, std::size_t L) {
    const std::size_t n = code.n(), k = code.k();
    const std::uint32_t q = code.q();
    if (ell < 1 || ell > q) throw HypothesisFailure("requires 1 <= ell <= q");
    if (L < ell || L >= ell * q) throw HypothesisFailure("requires ell <= L < ell q");
    if (k < 1 || (ell >= 2 && k < 2)) throw HypothesisFailure("dimension too small: need k >= 2 when ell >= 2");
    const std::size_t t_prime = ell * t / (L + 1 - ell);
    const std::size_t m = t + t_prime;
    if (m > n) throw HypothesisFailure("m = t + floor(ell t/(L+1-ell)) exceeds n");

    const Code words = code.expand();
    std::size_t best = 0, best_weight = n + 1;
    for (std::size_t i = 1; i < words.size(); ++i) {
        const std::size_t wt = hamming_distance(words[i], words[0]);
        if (wt < best_weight) {
            best_weight = wt;
            best = i;
        }
    }
    if (best_weight > m) {
        throw HypothesisFailure("minimum distance " + str(best_weight) + " exceeds t + floor(ell t/(L+1-ell)) = " +
                                str(m));
    }
    const Field& f = code.field();
    const Word& c = words[best];
    auto scale = [&](Symbol lam, const Word& x) {
        std::vector<Symbol> out(n);
        for (std::size_t i = 0; i < n; ++i) out[i] = f.mul(lam, x[i]);
        return out;
    };

    std::vector<std::vector<Symbol>> shifts;  // c^1 .. c^{ell-1}, then zero
    if (ell >= 2) {
        std::set<Word> span_c;
        for (Symbol lam = 0; lam < q; ++lam) span_c.insert(Word(q, scale(lam, c)));
        std::size_t other = 0;
        for (std::size_t i = 1; i < words.size() && other == 0; ++i) {
            if (!span_c.count(words[i])) other = i;
        }
        for (Symbol j = 1; j < ell; ++j) shifts.push_back(scale(j, words[other]));
    }
    shifts.push_back(std::vector<Symbol>(n, 0));

    std::vector<Word> chosen;
    for (const auto& s : shifts) {
        for (Symbol lam = 0; lam < q && chosen.size() < L + 1; ++lam) {
            std::vector<Symbol> v(n);
            for (std::size_t i = 0; i < n; ++i) v[i] = f.add(f.mul(lam, c[i]), s[i]);
            chosen.emplace_back(q, std::move(v));
        }
    }

    BoxWitness w;
    w.t = t;
    w.ell = ell;
    w.box.assign(n, {});
    std::vector<char> is_free(n, 0);
    for (std::size_t i = 0; i < n; ++i) is_free[i] = c[i] != 0;
    for (std::size_t i = 0, count = best_weight; i < n && count < m; ++i) {
        if (!is_free[i]) {
            is_free[i] = 1;
            ++count;
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (is_free[i]) {
            w.free_coordinates.push_back(i);
            continue;
        }
        auto& list = w.box[i];
        for (const auto& s : shifts) list.push_back(s[i]);
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
    }
    fill_slots(chosen, w.free_coordinates, t_prime, ell, w.box, w.contributors);
    for (const auto& x : chosen) {
        w.captured_indices.push_back(expansion_index(words, x));
        w.captured.push_back(x);
    }
    check_box(w);
    return w;
}

bool has_pair_agreeing_on(const Code& code, std::size_t k) {
    if (code.size() < 2) return false;
    if (k == 0) return true;
    bool found = false;
    for_each_subset(code.n(), k, [&](const std::vector<std::size_t>& cols) {
        if (found) return;
        for_each_colliding_pair(code, cols, [&](std::size_t, std::size_t) {
            found = true;
            return false;
        });
    });
    return found;
}

SubcodeResult subcode_extract(const Code& code, std::size_t t, std::size_t L, std::size_t eps) {
    if (L < 1) throw ParameterError("L must be at least 1");
    if ((L - 1) * (eps + 1) > t / L) throw PreconditionError("requires (L-1)(eps+1) <= floor(t/L)");
    const std::size_t n = code.n();
    SubcodeResult out{Code(code.q(), n), {}, 0, 0, 0};
    out.m = (L + 1) * t / L + eps + 1;
    if (out.m > n) throw PreconditionError("m = floor((L+1)t/L) + eps + 1 exceeds n");
    const std::size_t free = n - out.m;
    const std::size_t threshold = free + L * (eps + 1);
    out.guaranteed_distance = out.m + 1 - L * (eps + 1);

    // Bad pairs: words agreeing on at least `threshold` coordinates.
    std::set<std::pair<std::size_t, std::size_t>> bad;
    if (threshold <= n) {
        for_each_subset(n, threshold, [&](const std::vector<std::size_t>& cols) {
            for_each_colliding_pair(code, cols, [&](std::size_t i, std::size_t j) {
                bad.insert({i, j});
                return true;
            });
        });
    }
    out.bad_pairs = bad.size();

    // Index the (n-m)-subsets; mark every projection c1_I with I inside I(c1,c2).
    std::vector<std::vector<std::size_t>> subsets;
    for_each_subset(n, free, [&](const std::vector<std::size_t>& cols) { subsets.push_back(cols); });
    std::vector<std::set<std::vector<Symbol>>> marked(subsets.size());
    for (const auto& [i, j] : bad) {
        const auto agree = agreement(code[i], code[j]).indices;
        for (std::size_t s = 0; s < subsets.size(); ++s) {
            const auto& cols = subsets[s];
            if (!std::includes(agree.begin(), agree.end(), cols.begin(), cols.end())) continue;
            std::vector<Symbol> proj;
            for (auto col : cols) proj.push_back(code[i][col]);
            marked[s].insert(std::move(proj));
        }
    }

    std::vector<Word> kept;
    std::vector<Symbol> buf;
    for (std::size_t w = 0; w < code.size(); ++w) {
        bool remove = false;
        for (std::size_t s = 0; s < subsets.size() && !remove; ++s) {
            if (marked[s].empty()) continue;
            buf.clear();
            for (auto col : subsets[s]) buf.push_back(code[w][col]);
            remove = marked[s].count(buf) > 0;
        }
        if (remove) {
            out.removed.push_back(w);
        } else {
            kept.push_back(code[w]);
        }
    }
    out.subcode = Code(code.q(), n, std::move(kept));
    if (has_pair_agreeing_on(out.subcode, threshold)) {
        throw std::logic_error("internal: extracted subcode violates its distance guarantee");
    }
    return out;
}

CenterWitness pair_center(const Word& c1, const Word& c2, std::span<const Word> cluster, std::size_t t,
                          std::size_t L, std::size_t eps) {
    if (L < 1) throw ParameterError("L must be at least 1");
    if (cluster.size() + 1 != L) throw PreconditionError("cluster must hold exactly L-1 words");
    std::vector<Word> all{c1, c2};
    all.insert(all.end(), cluster.begin(), cluster.end());
    same_shape(all);
    require_distinct(all);
    const std::size_t n = c1.n();
    const std::size_t a = t / L, b = t % L;
    const std::size_t m = (L + 1) * a + b + eps + 1;
    if (m > n) throw PreconditionError("m exceeds n");
    if ((L - 1) * (eps + 1) > a) throw PreconditionError("requires (L-1)(eps+1) <= floor(t/L)");
    require_common_suffix(all, m);

    const std::size_t shared = L * (eps + 1);
    std::vector<std::size_t> perm;
    std::vector<char> used(m, 0);
    for (std::size_t c = 0; c < m && perm.size() < shared; ++c) {
        if (c1[c] == c2[c]) {
            perm.push_back(c);
            used[c] = 1;
        }
    }
    if (perm.size() < shared) {
        throw PreconditionError("c1 and c2 agree on fewer than L(eps+1) of the first m coordinates");
    }
    for (std::size_t c = 0; c < m; ++c) {
        if (!used[c]) perm.push_back(c);
    }

    const std::size_t seg = a + eps + 1;
    std::vector<Symbol> y(c1.begin(), c1.end());
    for (std::size_t p = 0; p < m; ++p) {
        const std::size_t c = perm[p];
        if (p < seg) {
            y[c] = c1[c];
        } else if (p < 2 * seg - shared) {
            y[c] = c2[c];
        } else {
            // blocks I_3..I_{L+1} of size seg, remainder to the last
            const std::size_t blk = std::min((p - (2 * seg - shared)) / seg, L - 2);
            y[c] = cluster[blk][c];
        }
    }
    CenterWitness w;
    w.center = Word(c1.q(), std::move(y));
    w.t = t;
    for (std::size_t i = 0; i < all.size(); ++i) {
        w.captured.push_back(all[i]);
        w.captured_indices.push_back(i);
    }
    check_center(w);
    return w;
}

}  // namespace ldlab
