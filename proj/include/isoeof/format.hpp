// Deterministic text rendering for the CLI: every number is serialized with
// 12 significant digits so identical runs produce byte-identical output.
#pragma once

#include <string>
#include <utility>
#include <vector>

namespace isoeof {

/// %.12g rendering of a double.
std::string g12(double v);

std::string json_quote(const std::string& s);

/// One-line JSON object; values must already be rendered (g12, quoted, bools).
std::string json_object(const std::vector<std::pair<std::string, std::string>>& fields);

}  // namespace isoeof
