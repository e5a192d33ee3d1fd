#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "qplane/factorization.hpp"
#include "qplane/primality.hpp"

namespace qplane {

using Json = nlohmann::ordered_json;

// {"q": ..., "field": ..., "terms": [{"i": .., "j": .., "c": ..}, ...]} in canonical order.
Json to_json(const QPoly& f);
Json to_json(const Factorization& f);
Json to_json(const PrimeVerdict& verdict);

namespace exit_code {
inline constexpr int kOk = 0;
inline constexpr int kInputError = 2;
inline constexpr int kUndecided = 3;
}  // namespace exit_code

// Runs one command line (args[0] is the program name). Results go to `out`,
// diagnostics and usage text to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qplane
