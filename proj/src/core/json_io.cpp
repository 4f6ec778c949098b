#include <optional>
#include "ldlab/core/json_io.hpp"

#include <string>

#include "ldlab/errors.hpp"

namespace ldlab {

namespace {

std::uint64_t require_uint(const Json& j, const std::string& where) {
    if (!j.is_number_integer() || j.get<long long>() < 0) {
        throw ParameterError(where + ": expected a nonnegative integer");
    }
    return j.get<std::uint64_t>();
}

const Json& require_key(const Json& j, const char* key) {
    if (!j.is_object()) throw ParameterError("expected a JSON object at top level");
    auto it = j.find(key);
    if (it == j.end()) throw ParameterError(std::string("missing key \"") + key + "\"");
    return *it;
}

std::vector<Symbol> read_row(const Json& row, std::size_t len, std::uint32_t q, const std::string& where) {
    if (!row.is_array()) throw ParameterError(where + ": expected an array");
    if (row.size() != len) {
        throw ParameterError(where + ": expected length " + std::to_string(len) + ", got " + std::to_string(row.size()));
    }
    std::vector<Symbol> out(len);
    for (std::size_t i = 0; i < len; ++i) {
        const std::string at = where + "[" + std::to_string(i) + "]";
        auto v = require_uint(row[i], at);
        if (v >= q) throw ParameterError(at + ": symbol " + std::to_string(v) + " not below q=" + std::to_string(q));
        out[i] = static_cast<Symbol>(v);
    }
    return out;
}

}  // namespace

Json word_to_json(const Word& w) { return Json(std::vector<Symbol>(w.begin(), w.end())); }

Json code_to_json(const Code& code) {
    Json words = Json::array();
    for (const auto& w : code) words.push_back(word_to_json(w));
    return Json{{"q", code.q()}, {"n", code.n()}, {"words", std::move(words)}};
}

Code code_from_json(const Json& j) {
    const auto q = require_uint(require_key(j, "q"), "q");
    const auto n = require_uint(require_key(j, "n"), "n");
    if (q < 2 || q > (1ull << 32) - 1) throw ParameterError("q: must be at least 2");
    const auto& words = require_key(j, "words");
    if (!words.is_array()) throw ParameterError("words: expected an array");
    std::vector<Word> out;
    out.reserve(words.size());
    for (std::size_t i = 0; i < words.size(); ++i) {
        out.emplace_back(static_cast<std::uint32_t>(q),
                         read_row(words[i], n, static_cast<std::uint32_t>(q), "words[" + std::to_string(i) + "]"));
    }
    try {
        return Code(static_cast<std::uint32_t>(q), n, std::move(out));
    } catch (const ParameterError& e) {
        throw ParameterError(std::string("words: ") + e.what());
    }
}

Json linear_code_to_json(const LinearCode& code) {
    const Field& f = code.field();
    Json modulus = f.is_prime() ? Json(f.q()) : Json(f.modulus());
    Json gen = Json::array();
    for (const auto& row : code.generator()) gen.push_back(row);
    return Json{{"q", f.q()}, {"modulus", std::move(modulus)}, {"n", code.n()}, {"k", code.k()}, {"generator", std::move(gen)}};
}

LinearCode linear_code_from_json(const Json& j) {
    const auto q = static_cast<std::uint32_t>(require_uint(require_key(j, "q"), "q"));
    const auto n = require_uint(require_key(j, "n"), "n");
    const auto k = require_uint(require_key(j, "k"), "k");
    std::optional<Field> field;
    if (!j.contains("modulus")) {
        field.emplace(q);
    } else {
        const auto& mod = j["modulus"];
        std::vector<std::uint32_t> modulus;
        if (mod.is_array()) {
            for (std::size_t i = 0; i < mod.size(); ++i) {
                modulus.push_back(static_cast<std::uint32_t>(require_uint(mod[i], "modulus[" + std::to_string(i) + "]")));
            }
        } else {
            modulus.push_back(static_cast<std::uint32_t>(require_uint(mod, "modulus")));
        }
        field.emplace(q, modulus);
    }
    const auto& gen = require_key(j, "generator");
    if (!gen.is_array() || gen.size() != k) throw ParameterError("generator: expected " + std::to_string(k) + " rows");
    Matrix g;
    for (std::size_t i = 0; i < k; ++i) g.push_back(read_row(gen[i], n, q, "generator[" + std::to_string(i) + "]"));
    return LinearCode(std::move(*field), n, std::move(g));
}

}  // namespace ldlab
