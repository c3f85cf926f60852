#pragma once

// JSON state files: {"levels": [E_1, ...], "probs": [p_1, ...]}

#include <filesystem>
#include <string_view>

#include "virtemp/core.hpp"

namespace virtemp {

/// Throws ParseError for malformed JSON or missing/ill-typed fields, and
/// the first violated invariant (NonIncreasingLevels, NormalizationViolated,
/// ...) otherwise.
DiagonalState parse_state_json(std::string_view text);

/// As parse_state_json, plus IoError when the file cannot be read.
DiagonalState load_state_file(const std::filesystem::path& path);

}  // namespace virtemp
