#pragma once

#include "json.hpp"

#include "ldlab/core/linear_code.hpp"
#include "ldlab/core/word.hpp"

namespace ldlab {

using Json = nlohmann::json;

Json word_to_json(const Word& w);

// {"q": int, "n": int, "words": [[int, ...], ...]}
Json code_to_json(const Code& code);
Code code_from_json(const Json& j);

// {"q": int, "modulus": int | [coeff, ...], "n": int, "k": int, "generator": [[int, ...], ...]}
Json linear_code_to_json(const LinearCode& code);
LinearCode linear_code_from_json(const Json& j);

}  // namespace ldlab
