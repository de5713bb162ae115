#pragma once

#include <string>

#include "json.hpp"

namespace qcoh {

// Fixed 12-significant-digit decimal rendering (locale independent).  Every
// number the CLI emits flows through here so repeated runs on identical input
// are byte-identical.  Infinities render as "inf"/"-inf".
std::string fmt12(double value);

// JSON value holding `value` rounded to the same 12 significant digits.
// Non-finite values are mapped to the strings "inf"/"-inf"/"nan" because JSON
// has no literal for them.
nlohmann::ordered_json json12(double value);

}  // namespace qcoh
