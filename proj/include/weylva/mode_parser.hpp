#pragma once

#include "weylva/mode_algebra.hpp"

#include <string_view>

namespace weylva {

// Words: "a(-3) a*(2)"; elements: "c1 * w1 + c2 * w2" with coefficients p/q.
// Throws std::invalid_argument with the offending position.
ModeWord parse_mode_word(std::string_view text);
ModeElement parse_mode_element(std::string_view text);

}  // namespace weylva
